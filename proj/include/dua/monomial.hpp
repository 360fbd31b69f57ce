#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "dua/errors.hpp"

namespace dua {

/// Exponent vector of a normally ordered word x_0^{e_0} ... x_{n-1}^{e_{n-1}},
/// generators listed from lowest to highest precedence.
struct Monomial {
    std::vector<int> e;

    explicit Monomial(size_t ngens = 0) : e(ngens, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_unit() const {
        for (int x : e)
            if (x) return false;
        return true;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    friend Monomial operator*(const Monomial& x, const Monomial& y) {
        if (x.e.size() != y.e.size()) throw PreconditionViolated("monomial arity mismatch");
        Monomial r = x;
        for (size_t i = 0; i < r.e.size(); ++i) r.e[i] += y.e[i];
        return r;
    }

    bool divides(const Monomial& m) const {
        if (e.size() != m.e.size()) return false;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    Monomial quotient(const Monomial& d) const {
        Monomial r = *this;
        for (size_t i = 0; i < r.e.size(); ++i) {
            r.e[i] -= d.e[i];
            if (r.e[i] < 0) throw PreconditionViolated("monomial quotient undefined");
        }
        return r;
    }
};

/// Degree-lexicographic order: total degree first, ties broken by comparing
/// the exponent of the highest-precedence generator first.
inline int deglex_cmp(const Monomial& x, const Monomial& y) {
    int dx = x.degree(), dy = y.degree();
    if (dx != dy) return dx < dy ? -1 : 1;
    for (size_t i = x.e.size(); i-- > 0;) {
        if (x.e[i] != y.e[i]) return x.e[i] < y.e[i] ? -1 : 1;
    }
    return 0;
}

struct DeglexLess {
    bool operator()(const Monomial& x, const Monomial& y) const { return deglex_cmp(x, y) < 0; }
};

/// All monomials of total degree <= bound in ngens generators, ascending in
/// deglex order.
inline std::vector<Monomial> monomials_up_to(size_t ngens, int bound) {
    std::vector<Monomial> out;
    Monomial m(ngens);
    // enumerate exponent vectors by recursion, then sort
    std::vector<int> cur(ngens, 0);
    auto rec = [&](auto&& self, size_t idx, int remaining) -> void {
        if (idx == ngens) {
            out.push_back(Monomial(cur));
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            cur[idx] = k;
            self(self, idx + 1, remaining - k);
        }
        cur[idx] = 0;
    };
    rec(rec, 0, bound);
    std::sort(out.begin(), out.end(), DeglexLess{});
    return out;
}

} // namespace dua
