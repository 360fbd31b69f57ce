#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dua/commpoly2.hpp"
#include "dua/ncpoly.hpp"
#include "dua/roots.hpp"

namespace dua {

/// The affine automorphism of K[x,y] carried by the down-up parameters:
/// phi(x) = y, phi(y) = alpha*y + beta*x + gamma. Invertible iff beta != 0.
struct AffineAuto {
    Scalar alpha, beta, gamma;

    FieldContext context() const { return alpha.context(); }

    CommPoly2 phi_x() const { return CommPoly2::y(context()); }
    CommPoly2 phi_y() const {
        return alpha * CommPoly2::y(context()) + beta * CommPoly2::x(context()) +
               CommPoly2::constant(gamma);
    }
    CommPoly2 phi_inv_x() const {
        if (beta.is_zero()) throw NotInvertible("beta = 0: the affine map is not invertible");
        Scalar binv = beta.inverse();
        return binv * CommPoly2::y(context()) - (binv * alpha) * CommPoly2::x(context()) -
               CommPoly2::constant(binv * gamma);
    }
    CommPoly2 phi_inv_y() const {
        if (beta.is_zero()) throw NotInvertible("beta = 0: the affine map is not invertible");
        return CommPoly2::x(context());
    }
};

inline AffineAuto make_affine(const Scalar& alpha, const Scalar& beta, const Scalar& gamma) {
    auto [a, b] = unify_scalars(alpha, beta);
    auto [a2, g] = unify_scalars(a, gamma);
    auto [b2, g2] = unify_scalars(b.promoted(a2.context()), g);
    return {a2, b2, g2};
}

/// f |-> phi^power(f) by iterated substitution; negative powers use the
/// inverse map and require beta != 0.
inline CommPoly2 phi_apply(const AffineAuto& phi, const CommPoly2& f, long power) {
    CommPoly2 r = f;
    if (power >= 0) {
        for (long k = 0; k < power; ++k) r = r.substitute(phi.phi_x(), phi.phi_y());
    } else {
        for (long k = 0; k < -power; ++k) r = r.substitute(phi.phi_inv_x(), phi.phi_inv_y());
    }
    return r;
}

struct SeqParams {
    Scalar alpha, beta, gamma;
    Scalar s0, s1;
};

/// The scalar recurrence s_{n+1} = alpha*s_n + beta*s_{n-1} + gamma driven by
/// the same parameters; returns s_0 .. s_n.
inline std::vector<Scalar> s_seq(const SeqParams& p, int n) {
    if (n < 0) throw PreconditionViolated("s_seq: negative index");
    std::vector<Scalar> s;
    s.push_back(p.s0);
    if (n >= 1) s.push_back(p.s1);
    for (int k = 2; k <= n; ++k)
        s.push_back(p.alpha * s[static_cast<size_t>(k - 1)] + p.beta * s[static_cast<size_t>(k - 2)] + p.gamma);
    return s;
}

/// Closed form s_n = c1*lambda^n + c2*mu^n + gamma*n/(2 - alpha), valid as a
/// solution of the recurrence exactly when gamma = 0 or alpha + beta = 1 (the
/// linear drift term needs alpha + beta = 1 to satisfy the inhomogeneous
/// step). Construction requires distinct roots and alpha != 2.
struct ClosedForm {
    Scalar lam, mu, c1, c2, drift; // drift = gamma / (2 - alpha)
    FieldContext field;
};

inline ClosedForm fit_closed_form(const SeqParams& p) {
    CharRoots roots = char_roots(p.alpha, p.beta);
    if (roots.double_root || roots.lambda == roots.mu)
        throw DegenerateRoots("repeated characteristic root");
    FieldContext ctx = roots.field;
    Scalar two = Scalar::integer(2).promoted(p.alpha.context());
    if (p.alpha == two) throw DegenerateRoots("alpha = 2 makes the drift term undefined");
    Scalar drift = p.gamma.promoted(p.alpha.context()) / (two - p.alpha);
    Scalar dr = drift.promoted(ctx);
    Scalar s0 = p.s0.promoted(ctx), s1 = p.s1.promoted(ctx);
    // c1 + c2 = s0, c1*lam + c2*mu = s1 - drift
    Scalar rhs1 = s1 - dr;
    Scalar c2 = (rhs1 - s0 * roots.lambda) / (roots.mu - roots.lambda);
    Scalar c1 = s0 - c2;
    return {roots.lambda, roots.mu, c1, c2, dr, ctx};
}

inline Scalar s_closed(const ClosedForm& cf, int n) {
    Scalar nn = Scalar::integer(n).promoted(cf.field);
    return cf.c1 * cf.lam.pow(n) + cf.c2 * cf.mu.pow(n) + cf.drift * nn;
}

/// A point of the affine plane; orbit points are (s_n, s_{n+1}).
struct Point2 {
    Scalar x, y;
};

/// phi^n carries the maximal ideal at the n-th orbit point back to the start:
/// checks phi^n(x - s_n) and phi^n(y - s_{n+1}) vanish at (s_0, s_1).
inline bool ideal_orbit_check(const AffineAuto& phi, const Point2& p, int n) {
    FieldContext ctx = phi.context();
    auto s = s_seq({phi.alpha, phi.beta, phi.gamma, p.x.promoted(ctx), p.y.promoted(ctx)}, n + 1);
    CommPoly2 f1 = CommPoly2::x(ctx) - CommPoly2::constant(s[static_cast<size_t>(n)]);
    CommPoly2 f2 = CommPoly2::y(ctx) - CommPoly2::constant(s[static_cast<size_t>(n + 1)]);
    CommPoly2 g1 = phi_apply(phi, f1, n), g2 = phi_apply(phi, f2, n);
    Scalar x0 = p.x.promoted(ctx), y0 = p.y.promoted(ctx);
    return g1.eval(x0, y0).is_zero() && g2.eval(x0, y0).is_zero();
}

struct OrbitReport {
    std::optional<int> period;    // least n >= 1 with p_n = p_0, within horizon
    std::vector<int> zero_x_hits; // all n <= horizon with s_n = 0
};

inline OrbitReport orbit_analysis(const AffineAuto& phi, const Point2& p, int horizon) {
    OrbitReport rep;
    FieldContext ctx = phi.context();
    auto s = s_seq({phi.alpha, phi.beta, phi.gamma, p.x.promoted(ctx), p.y.promoted(ctx)},
                   horizon + 1);
    for (int n = 0; n <= horizon; ++n) {
        if (s[static_cast<size_t>(n)].is_zero()) rep.zero_x_hits.push_back(n);
        if (n >= 1 && !rep.period && s[static_cast<size_t>(n)] == s[0] &&
            s[static_cast<size_t>(n + 1)] == s[1])
            rep.period = n;
    }
    return rep;
}

/// For lambda = 1 and mu not a root of unity, the orbit leaving x = 0 with
/// speed s != 0 never returns to x = 0: checks s_n != 0 for 1 <= n <= N both
/// by iterating the recurrence and against the closed form s*(mu^n-1)/(mu-1).
inline bool orbit_nonrecurrence_check(const Scalar& mu, const Scalar& s, int N) {
    if (s.is_zero()) throw PreconditionViolated("zero initial speed");
    if (is_root_of_unity(mu))
        throw PreconditionViolated("mu is a root of unity; the orbit is periodic");
    FieldContext ctx = mu.context();
    Scalar one = Scalar::one_in(ctx);
    SeqParams p{one + mu, -mu, Scalar::zero_in(ctx), Scalar::zero_in(ctx), s.promoted(ctx)};
    auto seq = s_seq(p, N);
    Scalar ratio = s.promoted(ctx) / (mu - one);
    for (int n = 1; n <= N; ++n) {
        Scalar closed = ratio * (mu.pow(n) - one);
        if (!(seq[static_cast<size_t>(n)] == closed)) throw Error("orbit closed form mismatch");
        if (seq[static_cast<size_t>(n)].is_zero()) return false;
    }
    return true;
}

/// Images of the generalized Weyl generators inside the down-up algebra and
/// the relation set that realizes it: X+ = d, X- = u, x = ud, y = du.
struct GwaCheck {
    bool ok = true;
    std::vector<std::string> failures;
};

inline GwaCheck check_gwa_relations(const PresentationPtr& A, const Scalar& alpha,
                                    const Scalar& beta, const Scalar& gamma) {
    FieldContext ctx = A->context();
    Scalar a = alpha.promoted(ctx), b = beta.promoted(ctx), g = gamma.promoted(ctx);
    NcPoly u = NcPoly::gen(A, "u"), d = NcPoly::gen(A, "d");
    NcPoly x = u * d, y = d * u;
    NcPoly phi_x = y;
    NcPoly phi_y = a * y + b * x + NcPoly::scalar(A, g);

    GwaCheck out;
    auto expect = [&](bool okflag, const std::string& what) {
        if (!okflag) {
            out.ok = false;
            out.failures.push_back(what);
        }
    };
    expect(u * d == x, "X- X+ = x");
    expect(d * u == phi_x, "X+ X- = phi(x)");
    expect(x * y == y * x, "base ring is commutative");
    expect(d * x == phi_x * d, "X+ x = phi(x) X+");
    expect(d * y == phi_y * d, "X+ y = phi(y) X+");
    expect(u * phi_x == x * u, "X- phi(x) = x X-");
    expect(u * phi_y == y * u, "X- phi(y) = y X-");
    return out;
}

/// Evaluates a commutative polynomial at the base-ring images x = ud, y = du.
inline NcPoly eval_at_base(const PresentationPtr& A, const CommPoly2& h) {
    NcPoly u = NcPoly::gen(A, "u"), d = NcPoly::gen(A, "d");
    NcPoly x = u * d, y = d * u;
    NcPoly acc = NcPoly::zero(A);
    for (auto& [m, c] : h.terms()) {
        NcPoly term = NcPoly::scalar(A, c.promoted(A->context()));
        for (int i = 0; i < m.first; ++i) term = term * x;
        for (int j = 0; j < m.second; ++j) term = term * y;
        acc = acc + term;
    }
    return acc;
}

} // namespace dua
