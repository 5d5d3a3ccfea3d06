#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sirev/catalog.hpp"

using namespace sirev;

TEST_CASE("catalog listing") {
    const auto& entries = catalog_list();
    CHECK(entries.size() == 13);
    CHECK(catalog_id_from_string("KOENIGS3").has_value());
    CHECK(catalog_id_from_string("NOGO").has_value());
    CHECK_FALSE(catalog_id_from_string("NOPE").has_value());
    for (const auto& e : entries) CHECK_FALSE(e.description.empty());
}

TEST_CASE("every globally defined example passes its grid checks") {
    for (const auto& e : catalog_list()) {
        if (e.id == CatalogId::NOGO) continue;
        auto b = build_catalog(e.id, {}, 2001);
        for (const auto& c : b.checks) {
            INFO(e.name, ": ", c.name, " value=", c.value, " ", c.detail);
            CHECK(c.pass);
        }
        CHECK(b.system.has_value());
        CHECK((b.manifold == "H2" || b.manifold == "R2"));
    }
}

TEST_CASE("NOGO: curvature blow-up under refinement toward theta = pi/2") {
    auto b = build_catalog(CatalogId::NOGO);
    CHECK(b.manifold == "NONE");
    CHECK_FALSE(b.system.has_value());
    bool found = false;
    for (const auto& c : b.checks)
        if (c.name.find("blow-up") != std::string::npos) {
            found = true;
            CHECK(c.pass);
            CHECK(c.value >= 2.0);
        }
    CHECK(found);
}

TEST_CASE("constraint violations carry the failing inequality") {
    CatalogParams p;
    p.a1 = 2.0;
    CHECK_THROWS_WITH_AS(build_catalog(CatalogId::CUBIC_MP, p), "a1 in (0, 1)",
                         ConstraintViolated);
    p.a1 = -0.5;
    CHECK_THROWS_AS(build_catalog(CatalogId::CUBIC_PP, p), ConstraintViolated);
    CatalogParams q;  // sum constraint of the PP extension
    q.a1 = -1.1;
    q.roots = {-1.2};
    q.xi = {3.0};
    CHECK_THROWS_AS(build_catalog(CatalogId::ODD_H2_PP, q), ConstraintViolated);
}

TEST_CASE("CUBIC_PP with a1 = -2: mu stays positive") {
    CatalogParams p;
    p.a1 = -2.0;
    auto b = build_catalog(CatalogId::CUBIC_PP, p);
    // mu(u) = 1 - (u^2+2)^{-3/2} via 2 xdot(u^2)
    for (double u : {0.1, 0.7, 2.0, 9.0}) {
        const double mu = 2.0 * b.model.profile.xdot(u * u);
        CHECK(mu == doctest::Approx(1.0 - std::pow(u * u + 2.0, -1.5)).epsilon(1e-12));
        CHECK(mu > 0.0);
    }
}

TEST_CASE("Koenigs: conformal data and chart") {
    auto b = build_catalog(CatalogId::KOENIGS3);
    // t = u and factor = 1 + u^2
    for (double u : {0.2, 1.0, 3.0}) {
        CHECK(b.t_of_w(u) == doctest::Approx(u));
        CHECK(b.factor_of_w(u) == doctest::Approx(1 + u * u));
        CHECK(conformal_factor(b, u) == doctest::Approx(1 + u * u).epsilon(1e-9));
    }
    // metric in the u chart equals (1+u^2)(du^2+dy^2)/u^2
    for (double u : {0.4, 1.3, 2.2}) {
        const double a = b.chart.a_of_w(u);
        const double g_uu = metric_ww(b.model, b.chart, u);
        CHECK(g_uu == doctest::Approx((1 + u * u) / (u * u)).epsilon(1e-12));
        CHECK(1.0 / a == doctest::Approx((1 + u * u) / (u * u)).epsilon(1e-12));
    }
}

TEST_CASE("round-trip through the conformal coordinate") {
    for (auto id : {CatalogId::H2_EVEN, CatalogId::CUBIC_PP, CatalogId::CUBIC_MP,
                    CatalogId::ODD_H2_PM, CatalogId::R2_EVEN}) {
        auto b = build_catalog(id, {}, 501);
        for (double f : {0.2, 0.5, 0.8}) {
            const double w = b.w_grid.at(f);
            const double t = b.t_of_w(w);
            const double w_back = invert_t(b, t);
            CHECK(std::abs(w_back - w) <= 1e-10 * std::max(1.0, std::abs(w)));
        }
    }
}

TEST_CASE("conformal factor limits at the boundary") {
    // CUBIC_PP: Omega -> 1 - 1/|a1|^{3/2} as t -> 0+
    CatalogParams p;
    p.a1 = -2.0;
    auto b = build_catalog(CatalogId::CUBIC_PP, p);
    const double omega0 = 1.0 - std::pow(2.0, -1.5);
    CHECK(conformal_factor(b, 1e-7) == doctest::Approx(omega0 * omega0).epsilon(1e-4));
    CHECK_THROWS_AS(invert_t(b, 1e9), InversionFailure);
}

TEST_CASE("defaults satisfy their own constraints and carry integrals") {
    for (const auto& e : catalog_list()) {
        auto b = build_catalog(e.id, {}, 301);
        if (e.id == CatalogId::NOGO) continue;
        REQUIRE(b.system.has_value());
        // conserved-quantity sanity at one phase point
        const double a = b.model.domain.at(0.4);
        PhasePoint z{a, 0.3, 0.2, 0.5};
        const Jet h = b.system->H_jet(z), s1 = b.system->S1_jet(z);
        const double sc = std::max(poisson_scale(h, s1), 1e-30);
        CHECK(std::abs(poisson(h, s1)) / sc < 1e-9);
    }
}
