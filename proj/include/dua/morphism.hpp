#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dua/ncpoly.hpp"

namespace dua {

struct MorphismCheck {
    bool ok = true;
    std::optional<std::pair<int, int>> failed_rule; // (j, i) of the first bad relation
    std::string detail;
};

/// Evaluates a word over the source generators at the image polynomials.
inline NcPoly eval_word(const std::vector<NcPoly>& images, const Monomial& m,
                        const PresentationPtr& dst) {
    NcPoly r = NcPoly::one(dst);
    for (size_t i = 0; i < m.e.size(); ++i)
        for (int k = 0; k < m.e[i]; ++k) r = r * images[i];
    return r;
}

/// Checks that mapping the source generators to `images` respects every
/// rewrite rule of the source presentation, i.e. extends to an algebra map.
inline MorphismCheck verify_morphism(const PresentationPtr& src, const std::vector<NcPoly>& images,
                                     const PresentationPtr& dst) {
    if (images.size() != src->ngens())
        throw PreconditionViolated("one image per source generator required");
    for (auto& f : images)
        if (f.pres() != dst) throw PresentationMismatch("image not over the target presentation");
    if (!(src->context() == dst->context()))
        throw FieldMismatch("source and target coefficient fields differ");

    MorphismCheck out;
    size_t n = src->ngens();
    for (int j = 1; j < static_cast<int>(n); ++j) {
        for (int i = 0; i < j; ++i) {
            const RewriteRule& r = src->rule(j, i);
            NcPoly lhs = images[static_cast<size_t>(j)] * images[static_cast<size_t>(i)];
            NcPoly rhs = r.coeff * (images[static_cast<size_t>(i)] * images[static_cast<size_t>(j)]);
            for (auto& [m, c] : r.tail) rhs = rhs + c * eval_word(images, m, dst);
            if (!(lhs == rhs)) {
                out.ok = false;
                out.failed_rule = {j, i};
                out.detail = "relation for (" + src->gens()[static_cast<size_t>(j)] + "," +
                             src->gens()[static_cast<size_t>(i)] + "): lhs = " + lhs.to_string() +
                             ", rhs = " + rhs.to_string();
                return out;
            }
        }
    }
    return out;
}

} // namespace dua
