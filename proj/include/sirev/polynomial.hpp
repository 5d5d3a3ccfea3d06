#pragma once

#include <vector>

namespace sirev {

// Dense univariate polynomials as ascending coefficient vectors c[0] + c[1]a + ...
// Templated on the scalar so the same code runs exact (Rational) and floating.
namespace poly {

template <class S>
std::vector<S> mul(const std::vector<S>& p, const std::vector<S>& q) {
    std::vector<S> r(p.size() + q.size() - 1, S(0));
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    return r;
}

template <class S>
std::vector<S> from_roots(const std::vector<S>& roots) {
    std::vector<S> p{S(1)};
    for (const S& r : roots) p = mul(p, std::vector<S>{-r, S(1)});
    return p;
}

template <class S>
std::vector<S> derivative(const std::vector<S>& p) {
    if (p.size() <= 1) return {S(0)};
    std::vector<S> d(p.size() - 1);
    for (size_t j = 1; j < p.size(); ++j) d[j - 1] = p[j] * S(int(j));
    return d;
}

template <class S>
S eval(const std::vector<S>& p, const S& a) {
    S v(0);
    for (size_t j = p.size(); j-- > 0;) v = v * a + p[j];
    return v;
}

// Quotient and remainder of p / (a - root); remainder is p(root).
template <class S>
std::pair<std::vector<S>, S> divide_linear(const std::vector<S>& p, const S& root) {
    const size_t n = p.size() - 1;
    std::vector<S> q(n, S(0));
    S carry = p[n];
    for (size_t j = n; j-- > 0;) {
        q[j] = carry;
        carry = p[j] + root * carry;
    }
    return {q, carry};
}

}  // namespace poly
}  // namespace sirev
