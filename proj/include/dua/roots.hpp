#pragma once

#include <optional>
#include <utility>

#include "dua/errors.hpp"
#include "dua/scalar.hpp"

namespace dua {

/// Exact square root within Q or Q(sqrt(d)) if one exists there.
inline std::optional<Scalar> field_sqrt(const Scalar& x) {
    if (x.is_zero()) return Scalar::integer(0).promoted(x.context());
    switch (x.context().kind) {
        case FieldKind::Rational: {
            auto r = rational_sqrt(x.as_rational());
            if (!r) return std::nullopt;
            return Scalar(*r);
        }
        case FieldKind::Quadratic: {
            const QuadExt& q = x.as_quad();
            const long D = q.d;
            if (q.b == 0) {
                // sqrt(a): either rational, or a rational multiple of sqrt(D)
                if (auto r = rational_sqrt(q.a)) return Scalar(QuadExt(*r, 0, D));
                if (auto r = rational_sqrt(q.a / D)) return Scalar(QuadExt(0, *r, D));
                return std::nullopt;
            }
            // (x + y sqrt(D))^2 = a + b sqrt(D): x^2 + D y^2 = a, 2xy = b.
            // x^2 is a root of t^2 - a t + D b^2 / 4.
            mpq_class disc = q.a * q.a - mpq_class(D) * q.b * q.b;
            auto e = rational_sqrt(disc);
            if (!e) return std::nullopt;
            for (int sign : {1, -1}) {
                mpq_class t = (q.a + mpq_class(sign) * *e) / 2;
                if (auto xr = rational_sqrt(t)) {
                    if (*xr == 0) continue;
                    mpq_class y = q.b / (2 * *xr);
                    return Scalar(QuadExt(*xr, y, D));
                }
            }
            return std::nullopt;
        }
        case FieldKind::Functions:
            throw UnsupportedField("square roots over Q(lambda,mu) are not supported");
    }
    return std::nullopt;
}

struct CharRoots {
    Scalar lambda;
    Scalar mu;
    FieldContext field;
    bool double_root = false;
};

/// Roots of t^2 = alpha t + beta in Q or a quadratic extension.
///
/// Ordering convention: when alpha + beta = 1 the root 1 is reported as
/// lambda; otherwise lambda receives the root with the positive sqrt term
/// (or the larger rational root). Throws UnsupportedField when the inputs
/// already span a quadratic extension whose discriminant is not a square
/// there, and for symbolic inputs.
inline CharRoots char_roots(const Scalar& alpha_in, const Scalar& beta_in) {
    auto [alpha, beta] = unify_scalars(alpha_in, beta_in);
    if (alpha.context().kind == FieldKind::Functions)
        throw UnsupportedField("char_roots over Q(lambda,mu)");

    Scalar disc = alpha * alpha + Scalar::integer(4).promoted(alpha.context()) * beta;
    Scalar two = Scalar::integer(2).promoted(alpha.context());

    if (disc.is_zero()) {
        Scalar r = alpha / two;
        return {r, r, alpha.context(), true};
    }

    Scalar root = [&]() -> Scalar {
        if (auto s = field_sqrt(disc)) return *s;
        if (alpha.context().kind == FieldKind::Quadratic)
            throw UnsupportedField("characteristic roots leave " + alpha.context().to_string());
        // extend Q by sqrt of the squarefree part of the discriminant
        auto [d, f] = sqrt_decompose(disc.as_rational());
        if (!d.fits_slong_p()) throw UnsupportedField("discriminant radicand too large");
        long dl = d.get_si();
        return Scalar(QuadExt(0, f, dl));
    }();

    FieldContext ctx = root.context();
    Scalar a2 = alpha.promoted(ctx), r2 = root;
    Scalar lam = (a2 + r2) / two.promoted(ctx);
    Scalar mu = (a2 - r2) / two.promoted(ctx);

    // canonical sign: lambda takes the + branch; prefer b > 0, then a > 0
    if (ctx.kind == FieldKind::Quadratic) {
        const QuadExt& q = root.as_quad();
        if (q.b < 0 || (q.b == 0 && q.a < 0)) std::swap(lam, mu);
    } else if (root.as_rational() < 0) {
        std::swap(lam, mu);
    }

    Scalar one = Scalar::integer(1).promoted(ctx);
    if ((alpha + beta) == Scalar::integer(1).promoted(alpha.context())) {
        // normalization: the root 1 is always reported first
        if (mu == one) std::swap(lam, mu);
        if (!(lam == one)) throw Error("char_roots: alpha+beta=1 but no root equals 1");
    }
    return {lam, mu, ctx, false};
}

/// Multiplicative order of x among {1,2,3,4,6}, the only finite orders a
/// degree <= 2 algebraic number can have; nullopt means not a root of unity.
inline std::optional<int> is_root_of_unity(const Scalar& x) {
    if (x.context().kind == FieldKind::Functions)
        throw UnsupportedField("root-of-unity test over Q(lambda,mu)");
    if (x.is_zero()) throw PreconditionViolated("is_root_of_unity: zero input");
    Scalar one = Scalar::one_like(x);
    for (int n : {1, 2, 3, 4, 6}) {
        if (x.pow(n) == one) return n;
    }
    return std::nullopt;
}

} // namespace dua
