#pragma once

#include <string>
#include <vector>

#include "sirev/errors.hpp"
#include "sirev/polynomial.hpp"

namespace sirev {

// Elementary symmetric functions of the roots of the monic P = prod(a - a_k),
// together with the one- and two-root excluded variants sigma^i, sigma^ij.
// Roots are 0-based internally; reports print them 1-based.
//
// Conventions, stored explicitly so downstream index arithmetic never has to
// special-case the boundaries:
//   sigma_0 = 1
//   sigma^i_{-1} = sigma^i_n = 0
//   sigma^ij_{-2} = sigma^ij_{-1} = sigma^ij_{n-1} = sigma^ij_n = 0

template <class S>
struct RootSet {
    std::vector<S> roots;

    int n() const { return int(roots.size()); }

    bool pairwise_distinct() const {
        for (size_t i = 0; i < roots.size(); ++i)
            for (size_t j = i + 1; j < roots.size(); ++j)
                if (roots[i] == roots[j]) return false;
        return true;
    }

    void require_distinct() const {
        if (!pairwise_distinct()) throw DuplicateRoot("root set has a repeated root");
    }
};

template <class S>
struct SymTable {
    int n = 0;
    std::vector<S> sigma;                         // sigma[k], k = 0..n
    std::vector<std::vector<S>> ex;               // ex[i][k+1], k = -1..n
    std::vector<std::vector<std::vector<S>>> ex2; // ex2[i][j][k+2], k = -2..n (i != j)

    const S& sig(int k) const { return sigma.at(size_t(k)); }

    // sigma^i_k with the stored boundary zeros; i is 0-based.
    const S& sig_i(int i, int k) const { return ex.at(size_t(i)).at(size_t(k + 1)); }

    const S& sig_ij(int i, int j, int k) const {
        if (i == j) throw SameIndex("sigma^ij needs i != j");
        return ex2.at(size_t(i)).at(size_t(j)).at(size_t(k + 2));
    }
};

// Coefficients of the monic expansion; sigma_k = (-1)^k [a^{n-k}] P.
template <class S>
std::vector<S> elementary_sym(const RootSet<S>& rs) {
    auto p = poly::from_roots(rs.roots);
    const int n = rs.n();
    std::vector<S> sigma(size_t(n) + 1);
    S sign(1);
    for (int k = 0; k <= n; ++k) {
        sigma[size_t(k)] = sign * p[size_t(n - k)];
        sign = -sign;
    }
    return sigma;
}

// Row sigma^i_k, k = -1..n (offset +1), read off the quotient P/(a - a_i).
template <class S>
std::vector<S> excluded_sym(const RootSet<S>& rs, int i) {
    rs.require_distinct();
    const int n = rs.n();
    auto p = poly::from_roots(rs.roots);
    auto [q, rem] = poly::divide_linear(p, rs.roots[size_t(i)]);
    (void)rem;  // zero by construction: a_i is a root
    std::vector<S> row(size_t(n) + 2, S(0));
    S sign(1);
    for (int m = 0; m <= n - 1; ++m) {
        row[size_t(m) + 1] = sign * q[size_t(n - 1 - m)];
        sign = -sign;
    }
    return row;
}

// Same row built from the recurrence sigma^i_k = sigma_k - a_i sigma^i_{k-1}.
template <class S>
std::vector<S> excluded_sym_recurrence(const std::vector<S>& sigma, const S& root) {
    const int n = int(sigma.size()) - 1;
    std::vector<S> row(size_t(n) + 2, S(0));
    row[1] = S(1);
    for (int k = 1; k <= n - 1; ++k)
        row[size_t(k) + 1] = sigma[size_t(k)] - root * row[size_t(k)];
    return row;
}

// Row sigma^ij_k, k = -2..n (offset +2), from P/((a - a_i)(a - a_j)).
template <class S>
std::vector<S> doubly_excluded_sym(const RootSet<S>& rs, int i, int j) {
    if (i == j) throw SameIndex("doubly excluded row needs i != j");
    rs.require_distinct();
    const int n = rs.n();
    auto p = poly::from_roots(rs.roots);
    auto q = poly::divide_linear(p, rs.roots[size_t(i)]).first;
    auto q2 = poly::divide_linear(q, rs.roots[size_t(j)]).first;
    std::vector<S> row(size_t(n) + 3, S(0));
    S sign(1);
    for (int m = 0; m <= n - 2; ++m) {
        row[size_t(m) + 2] = sign * q2[size_t(n - 2 - m)];
        sign = -sign;
    }
    return row;
}

template <class S>
SymTable<S> build_sym_table(const RootSet<S>& rs, bool with_pairs = true) {
    const int n = rs.n();
    SymTable<S> t;
    t.n = n;
    t.sigma = elementary_sym(rs);
    t.ex.resize(size_t(n));
    for (int i = 0; i < n; ++i) t.ex[size_t(i)] = excluded_sym(rs, i);
    if (with_pairs && n >= 2) {
        t.ex2.assign(size_t(n), std::vector<std::vector<S>>(size_t(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) t.ex2[size_t(i)][size_t(j)] = doubly_excluded_sym(rs, i, j);
    }
    return t;
}

// One line of an identity check; residual kept exact in S.
template <class S>
struct IdentityLine {
    std::string name;
    S lhs, rhs;
    bool pass() const { return lhs == rhs; }
};

// Quadratic relations between sigma^i sigma^j and sigma, sigma^ij, one line
// per power s of the product expansion.
template <class S>
std::vector<IdentityLine<S>> verify_quadratic_identity(const SymTable<S>& t, int i, int j) {
    if (i == j) throw SameIndex("quadratic identity needs i != j");
    const int n = t.n;
    std::vector<IdentityLine<S>> lines;
    for (int s = 2; s <= n; ++s) {
        S lhs(0), rhs(0);
        for (int k = 1; k <= s - 1; ++k) {
            lhs += t.sig_i(i, k - 1) * t.sig_i(j, s - k - 1);
            rhs += t.sig(k) * t.sig_ij(i, j, s - k - 2);
        }
        rhs += t.sig_ij(i, j, s - 2);
        lines.push_back({"s=" + std::to_string(s), lhs, rhs});
    }
    for (int s = n + 1; s <= 2 * n; ++s) {
        S lhs(0), rhs(0);
        for (int k = s - n; k <= n; ++k) {
            lhs += t.sig_i(i, k - 1) * t.sig_i(j, s - k - 1);
            rhs += t.sig(k) * t.sig_ij(i, j, s - k - 2);
        }
        lines.push_back({"s=" + std::to_string(s), lhs, rhs});
    }
    return lines;
}

// All per-root-set identity lines consumed by the identity suite:
// the monic expansion cross-check, the excluded-row relations and the
// quadratic relations, every one an exact equality in S.
template <class S>
std::vector<IdentityLine<S>> verify_all_identities(const RootSet<S>& rs) {
    const int n = rs.n();
    auto t = build_sym_table(rs);
    std::vector<IdentityLine<S>> lines;

    // (-1)^k sigma_k equals the coefficient A_{n-k} of the monic product.
    auto p = poly::from_roots(rs.roots);
    S sign(1);
    for (int k = 0; k <= n; ++k) {
        lines.push_back({"coeff k=" + std::to_string(k), sign * t.sig(k), p[size_t(n - k)]});
        sign = -sign;
    }

    for (int i = 0; i < n; ++i) {
        // sigma_k = sigma^i_k + a_i sigma^i_{k-1}
        for (int k = 0; k <= n; ++k)
            lines.push_back({"split i=" + std::to_string(i + 1) + " k=" + std::to_string(k),
                             t.sig(k),
                             t.sig_i(i, k) + rs.roots[size_t(i)] * t.sig_i(i, k - 1)});
        // recurrence row equals the division row
        auto rec = excluded_sym_recurrence(t.sigma, rs.roots[size_t(i)]);
        for (int k = -1; k <= n; ++k)
            lines.push_back({"rec i=" + std::to_string(i + 1) + " k=" + std::to_string(k),
                             t.sig_i(i, k), rec[size_t(k + 1)]});
    }

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            // sigma^i_{k-1} = sigma^ij_{k-1} + a_j sigma^ij_{k-2}
            for (int k = 0; k <= n; ++k)
                lines.push_back({"split2 k=" + std::to_string(k), t.sig_i(i, k - 1),
                                 t.sig_ij(i, j, k - 1) +
                                     rs.roots[size_t(j)] * t.sig_ij(i, j, k - 2)});
            // sigma^ij_{k-2} = -(sigma^i_{k-1} - sigma^j_{k-1}) / (a_i - a_j)
            for (int k = 0; k <= n; ++k)
                lines.push_back({"diff2 k=" + std::to_string(k), t.sig_ij(i, j, k - 2),
                                 -(t.sig_i(i, k - 1) - t.sig_i(j, k - 1)) /
                                     (rs.roots[size_t(i)] - rs.roots[size_t(j)])});
            auto quad = verify_quadratic_identity(t, i, j);
            lines.insert(lines.end(), quad.begin(), quad.end());
        }
    }
    return lines;
}

}  // namespace sirev
