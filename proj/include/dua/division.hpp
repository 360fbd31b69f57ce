#pragma once

#include <utility>
#include <vector>

#include "dua/ncpoly.hpp"

namespace dua {

struct ReductionResult {
    std::vector<NcPoly> quotients; // one per divisor, f = sum g_i * q_i + remainder
    NcPoly remainder;

    explicit ReductionResult(const PresentationPtr& p, size_t ndiv)
        : quotients(ndiv, NcPoly::zero(p)), remainder(NcPoly::zero(p)) {}
};

/// Division inside the right ideal generated by `divisors`: repeatedly cancels
/// the leading term of f against g_i * (scaled word), using the leading
/// exponent additivity of the product. Divisors with smaller index win ties.
/// Terminates because the working leading monomial strictly descends.
inline ReductionResult right_divide(const NcPoly& f, const std::vector<NcPoly>& divisors) {
    const PresentationPtr& p = f.pres();
    for (auto& g : divisors) {
        if (g.pres() != p) throw PresentationMismatch("divisor over a different presentation");
        if (g.is_zero()) throw DivisionByZero("zero divisor in right_divide");
    }
    ReductionResult out(p, divisors.size());
    NcPoly work = f;
    while (!work.is_zero()) {
        auto [lm, lc] = work.leading();
        bool reduced = false;
        for (size_t i = 0; i < divisors.size(); ++i) {
            auto [gm, gc] = divisors[i].leading();
            if (!gm.divides(lm)) continue;
            Monomial q = lm.quotient(gm);
            // leading coefficient of g * word(q) is gc times the rule factors
            NcPoly probe = divisors[i] * NcPoly::monomial(p, q, Scalar::one_in(p->context()));
            auto [pm, pc] = probe.leading();
            if (!(pm == lm)) throw Error("leading exponent additivity violated in division");
            Scalar c = lc / pc;
            out.quotients[i] = out.quotients[i] + NcPoly::monomial(p, q, c);
            work = work - c * probe;
            reduced = true;
            break;
        }
        if (!reduced) {
            NcPoly t = NcPoly::monomial(p, lm, lc);
            out.remainder = out.remainder + t;
            work = work - t;
        }
    }
    return out;
}

/// Membership in the right ideal g*S for a single divisor g: by leading
/// exponent additivity, f lies in g*S exactly when division by {g} leaves
/// no remainder.
inline bool in_principal_right_ideal(const NcPoly& f, const NcPoly& g) {
    return right_divide(f, {g}).remainder.is_zero();
}

} // namespace dua
