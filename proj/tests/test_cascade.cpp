#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sirev/cascade.hpp"

using namespace sirev;

namespace {

// lower even system with the given rational roots, all to the left of 0
IntegralSystem lower_system(const std::vector<Rational>& roots, double leading = 1.0) {
    StructurePoly F;
    F.leading = leading;
    for (size_t i = 0; i < roots.size(); ++i)
        F.simple.push_back({roots[i], +1, 0.4 + 0.2 * double(i)});
    return build_system(make_model(Parity::Even, F, 0.0, {0.05, 3.0}));
}

}  // namespace

TEST_CASE("worked sigma limit: F = eps a^2 + a - 2") {
    // lower: F = a - 2 (root 2, right of the working interval)
    StructurePoly F;
    F.simple.push_back({Rational(2), -1, 0.9});
    auto lower = build_system(make_model(Parity::Even, F, 0.0, {0.05, 1.9}));
    auto pair = make_cascade_pair(lower);

    double prev_resid = std::numeric_limits<double>::infinity();
    for (double eps : {1e-3, 1e-4, 1e-5, 1e-6, 1e-7}) {
        auto up = upper_at(pair, eps, eps);
        CHECK(up.runaway_root < -0.5 / eps);  // escapes like -1/eps
        auto s = sigma_limit_sample(pair, up, 0, 1);
        CHECK(s.rhs == doctest::Approx(-1.0));
        CHECK(s.residual < prev_resid);
        // linear in eps: residual ~ 2 eps
        CHECK(s.residual < 5.0 * eps);
        prev_resid = s.residual;
        if (eps <= 1e-7) CHECK(std::abs(s.lhs - (-1.0)) < 1e-6);
    }
}

TEST_CASE("phase-space cascade residuals shrink linearly in eps") {
    auto lower = lower_system({Rational(-1), Rational(-2)});
    auto pair = make_cascade_pair(lower);
    const PhasePoint z{0.9, 0.2, 0.5, 0.8};
    auto rep = cascade_check(pair, z, {1e-3, 1e-4, 1e-5});
    REQUIRE(rep.rows.size() == 3);
    CHECK(rep.ratios_ok(0.5, 2.0));
    CHECK(rep.order_q1 == doctest::Approx(1.0).epsilon(0.1));
    CHECK(rep.order_q2 == doctest::Approx(1.0).epsilon(0.1));

    // the first upper coefficients vanish in the limit
    for (double eps : {1e-3, 1e-5}) {
        auto up = upper_at(pair, eps, eps);
        CHECK(std::abs(up.sys.btilde(1, z.a)) < 10.0 * eps);
        CHECK(std::abs(up.sys.ctilde(1, z.a)) < 10.0 * eps);
    }
}

TEST_CASE("exact coefficient-table cascade for n = 2, 3, 4") {
    using R = Rational;
    const std::vector<std::vector<R>> lowers = {
        {R(-1)},                              // upper n = 2
        {R(-1), R(-5, 2)},                    // upper n = 3
        {R(-1), R(-5, 2), R(-13, 3)},         // upper n = 4
    };
    for (const auto& roots : lowers) {
        for (const R& lead : {R(1), R(7, 5)}) {
            auto chk = cascade_exact_check(roots, lead);
            INFO("upper n = ", chk.upper_n);
            CHECK(chk.pass());
            CHECK(chk.entries_checked > 0);
            CHECK(chk.mismatches == 0);
        }
    }
}
