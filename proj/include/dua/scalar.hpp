#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <variant>

#include "dua/errors.hpp"
#include "dua/quadext.hpp"
#include "dua/rat_util.hpp"
#include "dua/ratfunc.hpp"

namespace dua {

enum class FieldKind { Rational, Quadratic, Functions };

/// Identifies which exact field a Scalar lives in; d is the radicand for
/// quadratic extensions and ignored otherwise.
struct FieldContext {
    FieldKind kind = FieldKind::Rational;
    long d = 0;

    friend bool operator==(const FieldContext& x, const FieldContext& y) {
        return x.kind == y.kind && (x.kind != FieldKind::Quadratic || x.d == y.d);
    }

    std::string to_string() const {
        switch (kind) {
            case FieldKind::Rational: return "Q";
            case FieldKind::Quadratic: return "Q(sqrt(" + std::to_string(d) + "))";
            case FieldKind::Functions: return "Q(lambda,mu)";
        }
        return "?";
    }
};

/// Exact field element: a rational, an element of Q(sqrt(d)), or an element
/// of Q(lambda, mu). Arithmetic requires matching contexts; callers promote
/// rationals explicitly (or via unify_scalars) before mixing.
class Scalar {
public:
    Scalar() : v_(mpq_class(0)) {}
    explicit Scalar(mpq_class q) : v_(std::move(q)) {}
    explicit Scalar(QuadExt q) : v_(std::move(q)) {}
    explicit Scalar(RatFunc f) : v_(std::move(f)) {}

    static Scalar integer(long n) { return Scalar(mpq_class(n)); }
    static Scalar rational(long num, long den) { return Scalar(make_q(num, den)); }
    static Scalar lambda() { return Scalar(RatFunc::lambda()); }
    static Scalar mu() { return Scalar(RatFunc::mu()); }

    /// sqrt of an integer as an exact scalar; perfect squares stay rational.
    static Scalar sqrt_int(long n) {
        if (n == 0) return integer(0);
        auto [d, f] = squarefree_split(mpz_class(n));
        if (d == 1) return Scalar(mpq_class(f));
        if (!d.fits_slong_p()) throw UnsupportedField("radicand too large");
        return Scalar(QuadExt(0, mpq_class(f), d.get_si()));
    }

    FieldContext context() const {
        if (std::holds_alternative<mpq_class>(v_)) return {FieldKind::Rational, 0};
        if (auto* q = std::get_if<QuadExt>(&v_)) return {FieldKind::Quadratic, q->d};
        return {FieldKind::Functions, 0};
    }

    bool is_rational_repr() const { return std::holds_alternative<mpq_class>(v_); }
    const mpq_class& as_rational() const { return std::get<mpq_class>(v_); }
    const QuadExt& as_quad() const { return std::get<QuadExt>(v_); }
    const RatFunc& as_func() const { return std::get<RatFunc>(v_); }

    bool is_zero() const {
        return std::visit([](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, mpq_class>) return x == 0;
            else return x.is_zero();
        }, v_);
    }
    bool is_one() const { return *this == one_like(*this); }

    static Scalar zero_in(const FieldContext& ctx) { return Scalar(mpq_class(0)).promoted(ctx); }
    static Scalar one_in(const FieldContext& ctx) { return Scalar(mpq_class(1)).promoted(ctx); }
    static Scalar one_like(const Scalar& s) { return one_in(s.context()); }

    /// Embeds into a larger context; only Q -> Q(sqrt(d)) and Q -> Q(lambda,mu)
    /// embeddings exist here.
    Scalar promoted(const FieldContext& ctx) const {
        if (context() == ctx) return *this;
        if (!is_rational_repr())
            throw FieldMismatch("cannot promote " + context().to_string() + " to " + ctx.to_string());
        const mpq_class& q = as_rational();
        switch (ctx.kind) {
            case FieldKind::Rational: return *this;
            case FieldKind::Quadratic: return Scalar(QuadExt(q, 0, ctx.d));
            case FieldKind::Functions: return Scalar(RatFunc(q));
        }
        throw FieldMismatch();
    }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        if (!(x.context() == y.context())) return false;
        return x.v_ == y.v_;
    }

    friend Scalar operator+(const Scalar& x, const Scalar& y) { return apply(x, y, std::plus<>{}); }
    friend Scalar operator-(const Scalar& x, const Scalar& y) { return apply(x, y, std::minus<>{}); }
    friend Scalar operator*(const Scalar& x, const Scalar& y) { return apply(x, y, std::multiplies<>{}); }
    friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

    Scalar operator-() const {
        return std::visit([](const auto& x) { return Scalar(-x); }, v_);
    }

    Scalar inverse() const {
        return std::visit([](const auto& x) -> Scalar {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, mpq_class>) {
                if (x == 0) throw DivisionByZero();
                return Scalar(mpq_class(1 / x));
            } else {
                return Scalar(x.inverse());
            }
        }, v_);
    }

    Scalar pow(long e) const {
        Scalar base = e < 0 ? inverse() : *this;
        unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
        Scalar r = one_like(*this);
        while (k) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    /// Sign used only for pretty-printing term joins; RatFunc uses the sign of
    /// the numerator's leading coefficient.
    int print_sign() const {
        return std::visit([](const auto& x) -> int {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, mpq_class>) {
                return sgn(x);
            } else if constexpr (std::is_same_v<T, QuadExt>) {
                if (x.a != 0) return sgn(x.a);
                return sgn(x.b);
            } else {
                if (x.is_zero()) return 0;
                return sgn(x.num().leading().second);
            }
        }, v_);
    }

    std::string to_string() const {
        return std::visit([](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, mpq_class>) return q_to_string(x);
            else return x.to_string();
        }, v_);
    }

private:
    template <class Op>
    static Scalar apply(const Scalar& x, const Scalar& y, Op op) {
        if (!(x.context() == y.context()))
            throw FieldMismatch("scalar contexts differ: " + x.context().to_string() + " vs " +
                                y.context().to_string());
        return std::visit([&](const auto& a) -> Scalar {
            using T = std::decay_t<decltype(a)>;
            return Scalar(op(a, std::get<T>(y.v_)));
        }, x.v_);
    }

    std::variant<mpq_class, QuadExt, RatFunc> v_;
};

/// Promotes rational operands so the pair shares a field context.
inline std::pair<Scalar, Scalar> unify_scalars(const Scalar& x, const Scalar& y) {
    if (x.context() == y.context()) return {x, y};
    if (x.is_rational_repr()) return {x.promoted(y.context()), y};
    if (y.is_rational_repr()) return {x, y.promoted(x.context())};
    throw FieldMismatch("cannot mix " + x.context().to_string() + " with " + y.context().to_string());
}

} // namespace dua
