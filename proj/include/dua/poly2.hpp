#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <climits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dua/errors.hpp"
#include "dua/rat_util.hpp"

namespace dua {

/// Monomial lambda^a * mu^b.
struct Mono2 {
    int a = 0;
    int b = 0;
    friend bool operator==(const Mono2&, const Mono2&) = default;
};

/// Graded lexicographic order with lambda before mu. Returns <0, 0, >0.
inline int m2_cmp(const Mono2& x, const Mono2& y) {
    int dx = x.a + x.b, dy = y.a + y.b;
    if (dx != dy) return dx < dy ? -1 : 1;
    if (x.a != y.a) return x.a < y.a ? -1 : 1;
    return 0;
}

namespace detail {

/// Dense univariate polynomial over Q; back() is nonzero unless empty.
using P1 = std::vector<mpq_class>;

inline void p1_trim(P1& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int p1_deg(const P1& p) { return static_cast<int>(p.size()) - 1; }

inline P1 p1_sub(const P1& x, const P1& y) {
    P1 r(std::max(x.size(), y.size()), mpq_class(0));
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i];
    for (size_t i = 0; i < y.size(); ++i) r[i] -= y[i];
    p1_trim(r);
    return r;
}

inline P1 p1_mul(const P1& x, const P1& y) {
    if (x.empty() || y.empty()) return {};
    P1 r(x.size() + y.size() - 1, mpq_class(0));
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    p1_trim(r);
    return r;
}

inline P1 p1_scale(const P1& x, const mpq_class& c) {
    if (c == 0) return {};
    P1 r = x;
    for (auto& e : r) e *= c;
    return r;
}

inline P1 p1_rem(P1 a, const P1& b) {
    while (p1_deg(a) >= p1_deg(b) && !a.empty()) {
        mpq_class c = a.back() / b.back();
        int shift = p1_deg(a) - p1_deg(b);
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        p1_trim(a);
    }
    return a;
}

/// Monic gcd over Q[x].
inline P1 p1_gcd(P1 a, P1 b) {
    while (!b.empty()) {
        P1 r = p1_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        mpq_class inv = 1 / a.back();
        for (auto& e : a) e *= inv;
    }
    return a;
}

inline P1 p1_divexact(const P1& a, const P1& b) {
    if (b.empty()) throw DivisionByZero();
    P1 rem = a, q(a.size(), mpq_class(0));
    while (!rem.empty() && p1_deg(rem) >= p1_deg(b)) {
        mpq_class c = rem.back() / b.back();
        int shift = p1_deg(rem) - p1_deg(b);
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) rem[i + shift] -= c * b[i];
        p1_trim(rem);
    }
    if (!rem.empty()) throw Error("p1_divexact: division not exact");
    p1_trim(q);
    return q;
}

} // namespace detail

/// Polynomial in Q[lambda, mu]; terms kept strictly descending in graded lex.
class Poly2 {
public:
    using Term = std::pair<Mono2, mpq_class>;

    Poly2() = default;
    explicit Poly2(const mpq_class& c) {
        if (c != 0) t_.push_back({Mono2{0, 0}, c});
    }

    static Poly2 constant(const mpq_class& c) { return Poly2(c); }
    static Poly2 monomial(int a, int b, const mpq_class& c) {
        Poly2 p;
        if (c != 0) p.t_.push_back({Mono2{a, b}, c});
        return p;
    }
    static Poly2 lambda() { return monomial(1, 0, 1); }
    static Poly2 mu() { return monomial(0, 1, 1); }

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && t_[0].first == Mono2{0, 0});
    }
    mpq_class constant_value() const {
        if (t_.empty()) return 0;
        if (!is_constant()) throw Error("Poly2: not a constant");
        return t_[0].second;
    }
    bool is_monomial_term() const { return t_.size() == 1; }

    int total_degree() const {
        int d = -1;
        for (auto& [m, c] : t_) d = std::max(d, m.a + m.b);
        return d;
    }
    int deg_mu() const {
        int d = -1;
        for (auto& [m, c] : t_) d = std::max(d, m.b);
        return d;
    }

    const std::vector<Term>& terms() const { return t_; }
    const Term& leading() const {
        if (t_.empty()) throw ZeroPolynomial();
        return t_.front();
    }

    friend bool operator==(const Poly2& x, const Poly2& y) { return x.t_ == y.t_; }

    friend Poly2 operator+(const Poly2& x, const Poly2& y) {
        Poly2 r;
        size_t i = 0, j = 0;
        while (i < x.t_.size() || j < y.t_.size()) {
            int c = i == x.t_.size()   ? -1
                    : j == y.t_.size() ? 1
                                       : m2_cmp(x.t_[i].first, y.t_[j].first);
            if (c > 0) {
                r.t_.push_back(x.t_[i++]);
            } else if (c < 0) {
                r.t_.push_back(y.t_[j++]);
            } else {
                mpq_class s = x.t_[i].second + y.t_[j].second;
                if (s != 0) r.t_.push_back({x.t_[i].first, s});
                ++i, ++j;
            }
        }
        return r;
    }

    Poly2 operator-() const {
        Poly2 r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    friend Poly2 operator-(const Poly2& x, const Poly2& y) { return x + (-y); }

    friend Poly2 operator*(const Poly2& x, const Poly2& y) {
        std::map<std::pair<int, int>, mpq_class> acc;
        for (auto& [mx, cx] : x.t_)
            for (auto& [my, cy] : y.t_) acc[{mx.a + my.a, mx.b + my.b}] += cx * cy;
        Poly2 r;
        for (auto& [m, c] : acc)
            if (c != 0) r.t_.push_back({Mono2{m.first, m.second}, c});
        std::sort(r.t_.begin(), r.t_.end(),
                  [](const Term& s, const Term& t) { return m2_cmp(s.first, t.first) > 0; });
        return r;
    }

    Poly2 scaled(const mpq_class& c) const {
        if (c == 0) return {};
        Poly2 r = *this;
        for (auto& [m, k] : r.t_) k *= c;
        return r;
    }
    Poly2 shifted(int da, int db) const {
        Poly2 r = *this;
        for (auto& [m, c] : r.t_) {
            m.a += da;
            m.b += db;
            if (m.a < 0 || m.b < 0) throw Error("Poly2: negative exponent");
        }
        return r;
    }

    /// Exact division; throws if divisor does not divide exactly.
    friend Poly2 divexact(const Poly2& p, const Poly2& d) {
        if (d.is_zero()) throw DivisionByZero();
        Poly2 rem = p, q;
        while (!rem.is_zero()) {
            const Term& lr = rem.leading();
            const Term& ld = d.leading();
            int da = lr.first.a - ld.first.a, db = lr.first.b - ld.first.b;
            if (da < 0 || db < 0) throw Error("Poly2 divexact: not divisible");
            mpq_class c = lr.second / ld.second;
            q.t_.push_back({Mono2{da, db}, c});
            rem = rem - d.shifted(da, db).scaled(c);
        }
        return q;
    }

    /// Scale factor c > 0 making c*this integer with coprime coefficients.
    mpq_class integer_primitive_scale() const {
        if (t_.empty()) return 1;
        mpz_class lcm_den = 1, gcd_num = 0;
        for (auto& [m, c] : t_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
        for (auto& [m, c] : t_) {
            mpz_class n = c.get_num() * (lcm_den / c.get_den());
            mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), n.get_mpz_t());
        }
        return make_q(lcm_den, gcd_num);
    }

    /// Integer-primitive associate with positive leading coefficient.
    Poly2 normalized_primitive() const {
        if (t_.empty()) return {};
        mpq_class c = integer_primitive_scale();
        if (t_.front().second < 0) c = -c;
        return scaled(c);
    }

    friend Poly2 gcd(const Poly2& x, const Poly2& y) {
        if (x.is_zero()) return y.normalized_primitive();
        if (y.is_zero()) return x.normalized_primitive();
        if (x.is_monomial_term() || y.is_monomial_term()) {
            int ma = INT_MAX, mb = INT_MAX;
            for (auto& [m, c] : x.t_) ma = std::min(ma, m.a), mb = std::min(mb, m.b);
            for (auto& [m, c] : y.t_) ma = std::min(ma, m.a), mb = std::min(mb, m.b);
            return monomial(ma, mb, 1);
        }
        return gcd_general(x, y);
    }

    std::string to_string() const;

private:
    // recursive view: coefficient of mu^i as a polynomial in lambda
    std::vector<detail::P1> by_mu() const {
        std::vector<detail::P1> r(static_cast<size_t>(std::max(deg_mu(), -1) + 1));
        for (auto& [m, c] : t_) {
            auto& p = r[static_cast<size_t>(m.b)];
            if (static_cast<int>(p.size()) <= m.a) p.resize(static_cast<size_t>(m.a) + 1, mpq_class(0));
            p[static_cast<size_t>(m.a)] = c;
        }
        return r;
    }

    static Poly2 from_mu(const std::vector<detail::P1>& v) {
        Poly2 r;
        for (int b = static_cast<int>(v.size()) - 1; b >= 0; --b)
            for (int a = detail::p1_deg(v[static_cast<size_t>(b)]); a >= 0; --a)
                if (v[static_cast<size_t>(b)][static_cast<size_t>(a)] != 0)
                    r.t_.push_back({Mono2{a, b}, v[static_cast<size_t>(b)][static_cast<size_t>(a)]});
        std::sort(r.t_.begin(), r.t_.end(),
                  [](const Term& s, const Term& t) { return m2_cmp(s.first, t.first) > 0; });
        return r;
    }

    static int rdeg(const std::vector<detail::P1>& v) {
        int d = static_cast<int>(v.size()) - 1;
        while (d >= 0 && v[static_cast<size_t>(d)].empty()) --d;
        return d;
    }

    static detail::P1 lambda_content(const std::vector<detail::P1>& v) {
        detail::P1 g;
        for (auto& p : v)
            if (!p.empty()) g = detail::p1_gcd(g, p);
        return g;
    }

    static std::vector<detail::P1> divide_coeffs(std::vector<detail::P1> v, const detail::P1& g) {
        for (auto& p : v)
            if (!p.empty()) p = detail::p1_divexact(p, g);
        return v;
    }

    // pseudo-remainder sequence in mu with primitive-part reduction each step
    static Poly2 gcd_general(const Poly2& x, const Poly2& y) {
        auto A = x.by_mu(), B = y.by_mu();
        detail::P1 contA = lambda_content(A), contB = lambda_content(B);
        detail::P1 cont_gcd = detail::p1_gcd(contA, contB);
        A = divide_coeffs(std::move(A), contA);
        B = divide_coeffs(std::move(B), contB);
        if (rdeg(A) < rdeg(B)) std::swap(A, B);

        std::vector<detail::P1> g;
        while (true) {
            int db = rdeg(B);
            if (db < 0) {
                g = A;
                break;
            }
            if (db == 0) {
                // a nonzero mu-free remainder of primitive inputs forces a trivial gcd
                g = {detail::P1{mpq_class(1)}};
                break;
            }
            // R = pseudo-remainder of A by B in mu
            auto R = A;
            const detail::P1& lcB = B[static_cast<size_t>(db)];
            while (true) {
                int dr = rdeg(R);
                if (dr < db) break;
                detail::P1 lcR = R[static_cast<size_t>(dr)];
                for (auto& p : R) p = detail::p1_mul(p, lcB);
                for (int i = 0; i <= db; ++i) {
                    size_t k = static_cast<size_t>(dr - db + i);
                    R[k] = detail::p1_sub(R[k], detail::p1_mul(lcR, B[static_cast<size_t>(i)]));
                }
            }
            A = std::move(B);
            if (rdeg(R) < 0) {
                g = A;
                break;
            }
            detail::P1 cr = lambda_content(R);
            B = divide_coeffs(std::move(R), cr);
        }
        detail::P1 cg = lambda_content(g);
        if (!cg.empty()) g = divide_coeffs(std::move(g), cg);

        Poly2 result = from_mu(g);
        if (!cont_gcd.empty() && detail::p1_deg(cont_gcd) > 0) {
            Poly2 lift;
            for (int a = detail::p1_deg(cont_gcd); a >= 0; --a)
                if (cont_gcd[static_cast<size_t>(a)] != 0)
                    lift.t_.push_back({Mono2{a, 0}, cont_gcd[static_cast<size_t>(a)]});
            result = result * lift;
        }
        return result.normalized_primitive();
    }

    std::vector<Term> t_;
};

inline std::string Poly2::to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : t_) {
        mpq_class a = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mono;
        if (m.a > 0) mono += m.a == 1 ? "lambda" : "lambda^" + std::to_string(m.a);
        if (m.b > 0) {
            if (!mono.empty()) mono += "*";
            mono += m.b == 1 ? "mu" : "mu^" + std::to_string(m.b);
        }
        if (mono.empty()) {
            out += q_to_string(a);
        } else if (a == 1) {
            out += mono;
        } else {
            out += q_to_string(a) + "*" + mono;
        }
    }
    return out;
}

} // namespace dua
