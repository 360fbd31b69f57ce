#pragma once

#include <random>
#include <string>

#include "dua/ncpoly.hpp"
#include "dua/presentation.hpp"

namespace dua {

/// Checks the overlap words x_k x_j x_i (k > j > i) reduce consistently and
/// spot-checks associativity on random low-degree words. A presentation that
/// passes has the PBW property for its ordered monomials (diamond lemma).
inline void validate_presentation(const PresentationPtr& p, int random_trials = 24) {
    size_t n = p->ngens();
    for (int k = 2; k < static_cast<int>(n); ++k)
        for (int j = 1; j < k; ++j)
            for (int i = 0; i < j; ++i) {
                NcPoly xk = NcPoly::gen(p, k), xj = NcPoly::gen(p, j), xi = NcPoly::gen(p, i);
                if (!((xk * xj) * xi == xk * (xj * xi)))
                    throw PreconditionViolated("presentation '" + p->name() +
                                               "' fails overlap confluence at generators " +
                                               std::to_string(i) + "," + std::to_string(j) + "," +
                                               std::to_string(k));
            }
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<int> expd(0, 2);
    for (int t = 0; t < random_trials; ++t) {
        Monomial a(n), b(n), c(n);
        for (size_t i = 0; i < n; ++i) a.e[i] = expd(rng), b.e[i] = expd(rng), c.e[i] = expd(rng);
        Scalar one = Scalar::one_in(p->context());
        NcPoly fa = NcPoly::monomial(p, a, one), fb = NcPoly::monomial(p, b, one),
               fc = NcPoly::monomial(p, c, one);
        if (!((fa * fb) * fc == fa * (fb * fc)))
            throw PreconditionViolated("presentation '" + p->name() + "' fails associativity");
    }
}

/// Down-up algebra in its PBW presentation: generators u < w < d where
/// w = du - lambda*ud, and lambda, mu are the roots of t^2 = alpha t + beta.
/// Rules: d*u = lambda*u*d + w, w*u = mu*u*w + gamma*u, d*w = mu*w*d + gamma*d.
/// Coefficients live in Q(lambda,mu); lam/mu arguments allow specializing.
inline PresentationPtr make_downup(int gamma, Scalar lam = Scalar::lambda(),
                                   Scalar mu = Scalar::mu()) {
    if (gamma != 0 && gamma != 1)
        throw PreconditionViolated("gamma must be 0 or 1 (nonzero gamma rescales to 1)");
    FieldContext ctx = lam.context();
    if (!(mu.context() == ctx)) throw FieldMismatch("lam and mu contexts differ");
    Scalar g = Scalar::integer(gamma).promoted(ctx);
    Scalar one = Scalar::one_in(ctx);

    Monomial mu_(3), mw(3), md(3);
    mu_.e[0] = 1;
    mw.e[1] = 1;
    md.e[2] = 1;

    std::map<std::pair<int, int>, RewriteRule> rules;
    rules[{2, 0}] = RewriteRule{lam, {{mw, one}}};
    TermMap wu_tail, dw_tail;
    if (gamma != 0) {
        wu_tail[mu_] = g;
        dw_tail[md] = g;
    }
    rules[{1, 0}] = RewriteRule{mu, wu_tail};
    rules[{2, 1}] = RewriteRule{mu, dw_tail};

    std::string name = "A(gamma=" + std::to_string(gamma) + ")";
    auto p = std::make_shared<const Presentation>(name, std::vector<std::string>{"u", "w", "d"},
                                                  ctx, std::move(rules));
    validate_presentation(p);
    return p;
}

/// The subalgebra generated by u and w alone: a single rule
/// w*u = mu*u*w + gamma*u. Same coefficient field as the full algebra.
inline PresentationPtr make_tilde(int gamma, Scalar lam = Scalar::lambda(),
                                  Scalar mu = Scalar::mu()) {
    if (gamma != 0 && gamma != 1) throw PreconditionViolated("gamma must be 0 or 1");
    FieldContext ctx = lam.context();
    if (!(mu.context() == ctx)) throw FieldMismatch("lam and mu contexts differ");
    Scalar g = Scalar::integer(gamma).promoted(ctx);

    Monomial mu_(2);
    mu_.e[0] = 1;
    TermMap tail;
    if (gamma != 0) tail[mu_] = g;

    std::map<std::pair<int, int>, RewriteRule> rules;
    rules[{1, 0}] = RewriteRule{mu, tail};
    std::string name = "tilde(gamma=" + std::to_string(gamma) + ")";
    auto p = std::make_shared<const Presentation>(name, std::vector<std::string>{"u", "w"}, ctx,
                                                  std::move(rules));
    validate_presentation(p);
    return p;
}

/// Convenience: parse-free element builders for the common generators.
inline NcPoly gen_u(const PresentationPtr& p) { return NcPoly::gen(p, "u"); }
inline NcPoly gen_w(const PresentationPtr& p) { return NcPoly::gen(p, "w"); }
inline NcPoly gen_d(const PresentationPtr& p) { return NcPoly::gen(p, "d"); }

} // namespace dua
