#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sirev/rational.hpp"
#include "sirev/sampling.hpp"
#include "sirev/symfun.hpp"

#include "oracles.hpp"

using namespace sirev;

namespace {
RootSet<Rational> rs(std::initializer_list<int> roots) {
    RootSet<Rational> r;
    for (int v : roots) r.roots.push_back(Rational(v));
    return r;
}
}  // namespace

TEST_CASE("elementary symmetric functions of small root sets") {
    auto s = elementary_sym(rs({1, 2}));
    CHECK(s == std::vector<Rational>{1, 3, 2});

    auto s1 = elementary_sym(RootSet<Rational>{{Rational(7, 3)}});
    CHECK(s1 == std::vector<Rational>{1, Rational(7, 3)});

    auto sm = elementary_sym(rs({-1, -2}));
    CHECK(sm == std::vector<Rational>{1, -3, 2});
}

TEST_CASE("monic expansion matches the subset-sum definition") {
    Rng rng(7);
    for (int n = 1; n <= 10; ++n) {
        RootSet<Rational> r{random_distinct_rationals(rng, n)};
        auto fast = elementary_sym(r);
        auto slow = oracle::subset_sigma(r.roots);
        CHECK(fast == slow);
    }
}

TEST_CASE("excluded rows: division, recurrence and worked values") {
    auto row = excluded_sym(rs({1, 2}), 0);
    CHECK(row[0 + 1] == Rational(1));
    CHECK(row[1 + 1] == Rational(2));

    auto rowm = excluded_sym(rs({-1, -2}), 0);
    CHECK(rowm[0 + 1] == Rational(1));
    CHECK(rowm[1 + 1] == Rational(-2));
    // sigma_1 = sigma^1_1 + a_1 sigma^1_0:  -3 = -2 + (-1)(1)
    CHECK(Rational(-3) == rowm[1 + 1] + Rational(-1) * rowm[0 + 1]);

    // leading entry is always 1, boundaries are stored zeros
    Rng rng(11);
    for (int n = 1; n <= 8; ++n) {
        RootSet<Rational> r{random_distinct_rationals(rng, n)};
        auto sigma = elementary_sym(r);
        for (int i = 0; i < n; ++i) {
            auto div = excluded_sym(r, i);
            auto rec = excluded_sym_recurrence(sigma, r.roots[size_t(i)]);
            CHECK(div == rec);
            CHECK(div[0 + 1] == Rational(1));
            CHECK(div[-1 + 1] == Rational(0));
            CHECK(div[size_t(n) + 1] == Rational(0));
        }
    }
}

TEST_CASE("doubly excluded rows and their identities") {
    auto r = rs({1, 2});
    auto row = doubly_excluded_sym(r, 0, 1);
    CHECK(row[0 + 2] == Rational(1));  // P/((a-1)(a-2)) = 1

    // id3sfr on {1,2}: -(2-1)/(1-2) = 1 = sigma^12_0
    auto t = build_sym_table(r);
    CHECK(-(t.sig_i(0, 1) - t.sig_i(1, 1)) / (Rational(1) - Rational(2)) == t.sig_ij(0, 1, 0));

    // symmetric in (i, j)
    Rng rng(13);
    RootSet<Rational> q{random_distinct_rationals(rng, 6)};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (i != j) CHECK(doubly_excluded_sym(q, i, j) == doubly_excluded_sym(q, j, i));
}

TEST_CASE("quadratic identity report") {
    auto t2 = build_sym_table(rs({1, 2}));
    auto lines = verify_quadratic_identity(t2, 0, 1);
    REQUIRE(lines.size() == 2 * 2 - 1);
    // s = 2: sigma^1_0 sigma^2_0 = 1 = sigma_1 sigma^12_{-1} + sigma^12_0
    CHECK(lines[0].lhs == Rational(1));
    CHECK(lines[0].rhs == Rational(1));
    for (const auto& l : lines) CHECK(l.pass());

    auto t3 = build_sym_table(rs({1, 2, 5}));
    for (const auto& l : verify_quadratic_identity(t3, 0, 2)) CHECK(l.pass());
}

TEST_CASE("all identities hold exactly for random rational roots") {
    Rng rng(42);
    for (int n = 1; n <= 10; ++n) {
        RootSet<Rational> r{random_distinct_rationals(rng, n)};
        for (const auto& line : verify_all_identities(r)) {
            INFO("n=", n, " line ", line.name);
            CHECK(line.pass());
        }
    }
}

TEST_CASE("error paths") {
    RootSet<Rational> dup{{Rational(1), Rational(1)}};
    CHECK_THROWS_AS(excluded_sym(dup, 0), DuplicateRoot);
    CHECK_THROWS_AS(doubly_excluded_sym(rs({1, 2}), 1, 1), SameIndex);
    auto t = build_sym_table(rs({1, 2}));
    CHECK_THROWS_AS(verify_quadratic_identity(t, 0, 0), SameIndex);
}
