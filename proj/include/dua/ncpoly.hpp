#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dua/errors.hpp"
#include "dua/presentation.hpp"

namespace dua {

namespace detail {

// forward declaration: right_mul_gen and word products are mutually recursive
inline TermMap mono_mul(const PresentationPtr& p, const Monomial& a, const Monomial& b);

/// Normal form of word(m) * x_gen. Every output monomial is deglex <= m + e_gen
/// and the bound is attained exactly once (leading exponent additivity).
inline TermMap right_mul_gen(const PresentationPtr& p, const Monomial& m, int gen) {
    size_t n = p->ngens();
    int top = -1;
    for (size_t j = n; j-- > 0;) {
        if (m.e[j] > 0 && static_cast<int>(j) > gen) {
            top = static_cast<int>(j);
            break;
        }
    }
    Monomial lead = m;
    lead.e[static_cast<size_t>(gen)] += 1;
    if (top < 0) return {{lead, Scalar::one_in(p->context())}};

    TermMap cached;
    if (p->cache_lookup(gen, m, cached)) return cached;

    Monomial rest = m;
    rest.e[static_cast<size_t>(top)] -= 1;
    const RewriteRule& rule = p->rule(top, gen);

    TermMap out;
    for (auto& [mm, cc] : right_mul_gen(p, rest, gen)) {
        Monomial shifted = mm;
        shifted.e[static_cast<size_t>(top)] += 1;
        Scalar v = cc * rule.coeff;
        auto [it, fresh] = out.try_emplace(shifted, v);
        if (!fresh) it->second = it->second + v;
    }
    for (auto& [tm, tc] : rule.tail) {
        for (auto& [mm, cc] : mono_mul(p, rest, tm)) {
            Scalar v = cc * tc;
            auto [it, fresh] = out.try_emplace(mm, v);
            if (!fresh) {
                it->second = it->second + v;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    // rewriting must strictly descend below the leading word
    auto leadit = out.rbegin();
    if (leadit == out.rend() || !(leadit->first == lead))
        throw Error("rewrite step lost the leading word");
    p->cache_store(gen, m, out);
    return out;
}

inline TermMap mono_mul(const PresentationPtr& p, const Monomial& a, const Monomial& b) {
    TermMap cur = {{a, Scalar::one_in(p->context())}};
    for (size_t i = 0; i < p->ngens(); ++i) {
        for (int rep = 0; rep < b.e[i]; ++rep) {
            TermMap next;
            for (auto& [m, c] : cur) {
                for (auto& [m2, c2] : right_mul_gen(p, m, static_cast<int>(i))) {
                    Scalar v = c * c2;
                    auto [it, fresh] = next.try_emplace(m2, v);
                    if (!fresh) {
                        it->second = it->second + v;
                        if (it->second.is_zero()) next.erase(it);
                    }
                }
            }
            cur = std::move(next);
        }
    }
    return cur;
}

} // namespace detail

/// Element of an iterated skew polynomial algebra in PBW normal form: a
/// finite sum of ordered words with scalar coefficients. All arithmetic
/// returns normal forms.
class NcPoly {
public:
    explicit NcPoly(PresentationPtr p) : p_(std::move(p)) {}

    static NcPoly zero(PresentationPtr p) { return NcPoly(std::move(p)); }
    static NcPoly one(PresentationPtr p) {
        NcPoly r(std::move(p));
        r.t_[Monomial(r.p_->ngens())] = Scalar::one_in(r.p_->context());
        return r;
    }
    static NcPoly monomial(PresentationPtr p, const Monomial& m, const Scalar& c) {
        NcPoly r(std::move(p));
        if (m.e.size() != r.p_->ngens()) throw PreconditionViolated("monomial arity mismatch");
        Scalar cc = c.promoted(r.p_->context());
        if (!cc.is_zero()) r.t_[m] = cc;
        return r;
    }
    static NcPoly gen(const PresentationPtr& p, int i) {
        if (i < 0 || i >= static_cast<int>(p->ngens()))
            throw PreconditionViolated("generator index out of range");
        Monomial m(p->ngens());
        m.e[static_cast<size_t>(i)] = 1;
        return monomial(p, m, Scalar::one_in(p->context()));
    }
    static NcPoly gen(const PresentationPtr& p, const std::string& name) {
        int i = p->gen_index(name);
        if (i < 0) throw PresentationMismatch("generator '" + name + "' not in " + p->name());
        return gen(p, i);
    }
    static NcPoly scalar(PresentationPtr p, const Scalar& c) {
        Monomial unit(p->ngens());
        return monomial(std::move(p), unit, c);
    }

    const PresentationPtr& pres() const { return p_; }
    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    int degree() const {
        int d = -1;
        for (auto& [m, c] : t_) d = std::max(d, m.degree());
        return d;
    }

    std::pair<Monomial, Scalar> leading() const {
        if (t_.empty()) throw ZeroPolynomial();
        auto it = t_.rbegin();
        return {it->first, it->second};
    }

    friend bool operator==(const NcPoly& x, const NcPoly& y) {
        return x.p_ == y.p_ && x.t_ == y.t_;
    }

    friend NcPoly operator+(const NcPoly& x, const NcPoly& y) {
        check_same(x, y);
        NcPoly r = x;
        for (auto& [m, c] : y.t_) r.add_term(m, c);
        return r;
    }
    friend NcPoly operator-(const NcPoly& x, const NcPoly& y) {
        check_same(x, y);
        NcPoly r = x;
        for (auto& [m, c] : y.t_) r.add_term(m, -c);
        return r;
    }
    NcPoly operator-() const {
        NcPoly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }

    friend NcPoly operator*(const Scalar& c, const NcPoly& x) {
        NcPoly r(x.p_);
        Scalar cc = c.promoted(x.p_->context());
        if (cc.is_zero()) return r;
        for (auto& [m, k] : x.t_) r.t_[m] = cc * k;
        return r;
    }
    friend NcPoly operator*(const NcPoly& x, const Scalar& c) { return c * x; }

    friend NcPoly operator*(const NcPoly& x, const NcPoly& y) {
        check_same(x, y);
        NcPoly r(x.p_);
        for (auto& [mx, cx] : x.t_) {
            for (auto& [my, cy] : y.t_) {
                Scalar c = cx * cy;
                for (auto& [m, k] : detail::mono_mul(x.p_, mx, my)) r.add_term(m, c * k);
            }
        }
        return r;
    }

    NcPoly pow(unsigned e) const {
        NcPoly r = NcPoly::one(p_), base = *this;
        while (e) {
            if (e & 1) r = r * base;
            if (e >>= 1) base = base * base;
        }
        return r;
    }

    /// Degree in one generator (the filtration degree when the generator is
    /// the top variable of the tower).
    int degree_in(int gen) const {
        int d = 0;
        for (auto& [m, c] : t_) d = std::max(d, m.e[static_cast<size_t>(gen)]);
        return d;
    }

    std::string to_string() const;

private:
    static void check_same(const NcPoly& x, const NcPoly& y) {
        if (x.p_ != y.p_)
            throw PresentationMismatch("operands over '" + x.p_->name() + "' and '" + y.p_->name() + "'");
    }

    void add_term(const Monomial& m, const Scalar& c) {
        auto [it, fresh] = t_.try_emplace(m, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    PresentationPtr p_;
    TermMap t_;
};

inline NcPoly nc_mul(const NcPoly& x, const NcPoly& y) { return x * y; }

inline std::string NcPoly::to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const Monomial& m = it->first;
        const Scalar& c = it->second;
        int sign = c.print_sign();
        Scalar mag = sign < 0 ? -c : c;
        if (first) {
            if (sign < 0) out += "-";
            first = false;
        } else {
            out += sign < 0 ? " - " : " + ";
        }
        std::string mono;
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += p_->gens()[i];
            if (m.e[i] > 1) mono += "^" + std::to_string(m.e[i]);
        }
        if (mono.empty()) {
            std::string s = mag.to_string();
            out += s.find(' ') != std::string::npos ? "(" + s + ")" : s;
        } else if (mag.is_one()) {
            out += mono;
        } else {
            std::string s = mag.to_string();
            if (s.find_first_of("+/ ") != std::string::npos) s = "(" + s + ")";
            out += s + "*" + mono;
        }
    }
    return out;
}

} // namespace dua
