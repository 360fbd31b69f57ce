#pragma once

#include <map>
#include <string>
#include <utility>

#include "dua/errors.hpp"
#include "dua/scalar.hpp"

namespace dua {

/// Commutative polynomial in x, y with Scalar coefficients sharing one field
/// context. Used for the base ring of the generalized Weyl realization and
/// the orbit computations on its maximal spectrum.
class CommPoly2 {
public:
    explicit CommPoly2(FieldContext ctx = {}) : ctx_(ctx) {}

    static CommPoly2 constant(const Scalar& c) {
        CommPoly2 r(c.context());
        if (!c.is_zero()) r.t_[{0, 0}] = c;
        return r;
    }
    static CommPoly2 x(FieldContext ctx) {
        CommPoly2 r(ctx);
        r.t_[{1, 0}] = Scalar::one_in(ctx);
        return r;
    }
    static CommPoly2 y(FieldContext ctx) {
        CommPoly2 r(ctx);
        r.t_[{0, 1}] = Scalar::one_in(ctx);
        return r;
    }
    static CommPoly2 monomial(int i, int j, const Scalar& c) {
        if (i < 0 || j < 0) throw PreconditionViolated("negative exponent");
        CommPoly2 r(c.context());
        if (!c.is_zero()) r.t_[{i, j}] = c;
        return r;
    }

    const FieldContext& context() const { return ctx_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<std::pair<int, int>, Scalar>& terms() const { return t_; }

    friend bool operator==(const CommPoly2& a, const CommPoly2& b) {
        return a.ctx_ == b.ctx_ && a.t_ == b.t_;
    }

    friend CommPoly2 operator+(const CommPoly2& a, const CommPoly2& b) {
        CommPoly2 r = a;
        for (auto& [m, c] : b.t_) r.add(m.first, m.second, c);
        return r;
    }
    friend CommPoly2 operator-(const CommPoly2& a, const CommPoly2& b) {
        CommPoly2 r = a;
        for (auto& [m, c] : b.t_) r.add(m.first, m.second, -c);
        return r;
    }
    CommPoly2 operator-() const {
        CommPoly2 r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    friend CommPoly2 operator*(const CommPoly2& a, const CommPoly2& b) {
        CommPoly2 r(a.ctx_);
        for (auto& [ma, ca] : a.t_)
            for (auto& [mb, cb] : b.t_) r.add(ma.first + mb.first, ma.second + mb.second, ca * cb);
        return r;
    }
    friend CommPoly2 operator*(const Scalar& c, const CommPoly2& a) {
        return CommPoly2::constant(c) * a;
    }

    Scalar eval(const Scalar& x0, const Scalar& y0) const {
        Scalar acc = Scalar::zero_in(ctx_);
        for (auto& [m, c] : t_) acc = acc + c * x0.pow(m.first) * y0.pow(m.second);
        return acc;
    }

    CommPoly2 substitute(const CommPoly2& px, const CommPoly2& py) const {
        CommPoly2 acc(ctx_);
        for (auto& [m, c] : t_) {
            CommPoly2 term = constant(c);
            for (int i = 0; i < m.first; ++i) term = term * px;
            for (int j = 0; j < m.second; ++j) term = term * py;
            acc = acc + term;
        }
        return acc;
    }

    std::string to_string() const {
        if (t_.empty()) return "0";
        std::string out;
        // descending degree-lex for readability
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            auto [i, j] = it->first;
            std::string mono;
            if (i) mono += i == 1 ? "x" : "x^" + std::to_string(i);
            if (j) {
                if (!mono.empty()) mono += "*";
                mono += j == 1 ? "y" : "y^" + std::to_string(j);
            }
            std::string cs = it->second.to_string();
            if (cs.find_first_of("+/ ") != std::string::npos) cs = "(" + cs + ")";
            if (!out.empty()) out += " + ";
            out += mono.empty() ? cs : (it->second.is_one() ? mono : cs + "*" + mono);
        }
        return out;
    }

private:
    void add(int i, int j, const Scalar& c) {
        if (!(c.context() == ctx_)) throw FieldMismatch("coefficient context differs");
        auto [it, fresh] = t_.try_emplace({i, j}, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    FieldContext ctx_;
    std::map<std::pair<int, int>, Scalar> t_;
};

} // namespace dua
