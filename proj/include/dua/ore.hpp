#pragma once

#include <utility>
#include <vector>

#include "dua/ncpoly.hpp"

namespace dua {

/// Skew-polynomial data for the top generator x of a tower R[x; sigma, delta],
/// written with coefficients on the left: r*x = x*sigma(r) + delta(r).
/// sigma scales each lower generator by a unit; delta is the sigma-derivation
/// determined by the rewrite tails.
struct OreData {
    PresentationPtr pres;
    int top = 0;                     // index of the adjoined generator
    std::vector<Scalar> sigma_scale; // sigma(x_i) = sigma_scale[i] * x_i, i < top
    std::vector<NcPoly> delta_gen;   // delta(x_i), an element of the coefficient ring
};

/// Reads sigma and delta off the presentation's rules for its highest
/// generator. Fails when some tail involves the top generator, i.e. when the
/// top extension step is not of skew type over the lower subring.
inline OreData make_ore(const PresentationPtr& p) {
    int top = static_cast<int>(p->ngens()) - 1;
    if (top < 1) throw PreconditionViolated("tower needs at least two generators");
    OreData o{p, top, {}, {}};
    for (int i = 0; i < top; ++i) {
        const RewriteRule& r = p->rule(top, i);
        // x_top x_i = c x_i x_top + tail  =>  x_i x_top = c^{-1} x_top x_i - c^{-1} tail
        Scalar cinv = r.coeff.inverse();
        o.sigma_scale.push_back(cinv);
        NcPoly d = NcPoly::zero(p);
        for (auto& [m, c] : r.tail) {
            if (m.e[static_cast<size_t>(top)] != 0)
                throw NotInCoefficientRing("rule tail for '" + p->gens()[static_cast<size_t>(i)] +
                                           "' involves the top generator; no skew structure over "
                                           "the lower subring");
            d = d + NcPoly::monomial(p, m, -(cinv * c));
        }
        o.delta_gen.push_back(d);
    }
    return o;
}

inline bool in_coefficient_ring(const OreData& o, const NcPoly& f) {
    return f.degree_in(o.top) == 0;
}

/// sigma(f) for f in the coefficient ring: each word scales by the product of
/// the per-generator factors.
inline NcPoly sigma_apply(const OreData& o, const NcPoly& f) {
    if (!in_coefficient_ring(o, f))
        throw NotInCoefficientRing("sigma applies to the coefficient ring only");
    NcPoly r = NcPoly::zero(o.pres);
    for (auto& [m, c] : f.terms()) {
        Scalar s = c;
        for (int i = 0; i < o.top; ++i)
            for (int k = 0; k < m.e[static_cast<size_t>(i)]; ++k) s = s * o.sigma_scale[static_cast<size_t>(i)];
        r = r + NcPoly::monomial(o.pres, m, s);
    }
    return r;
}

/// delta(f) recovered from the algebra product: f*x - x*sigma(f). The result
/// must land back in the coefficient ring; anything else means the tower
/// structure was violated.
inline NcPoly delta_apply(const OreData& o, const NcPoly& f) {
    NcPoly x = NcPoly::gen(o.pres, o.top);
    NcPoly d = f * x - x * sigma_apply(o, f);
    if (!in_coefficient_ring(o, d))
        throw NotInCoefficientRing("delta left the coefficient ring");
    return d;
}

struct SigmaDelta {
    NcPoly sigma;
    NcPoly delta;
};

/// Both maps at once, with the defining identity f*x = x*sigma(f) + delta(f)
/// re-verified on the way out.
inline SigmaDelta sigma_delta_eval(const OreData& o, const NcPoly& f) {
    NcPoly s = sigma_apply(o, f);
    NcPoly d = delta_apply(o, f);
    NcPoly x = NcPoly::gen(o.pres, o.top);
    if (!(f * x == x * s + d)) throw Error("skew identity failed to close");
    return {s, d};
}

/// Sum of the first t powers of q: 1 + q + ... + q^{t-1}.
inline Scalar geometric_power_sum(const Scalar& q, int t) {
    Scalar acc = Scalar::zero_in(q.context());
    Scalar p = Scalar::one_like(q);
    for (int s = 0; s < t; ++s) {
        acc = acc + p;
        p = p * q;
    }
    return acc;
}

} // namespace dua
