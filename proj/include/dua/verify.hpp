#pragma once
// Named machine checks over the exact engine, grouped into suites.  Each check
// re-derives one verified fact (an identity, a dimension table, a structural
// property) and reports pass/fail with a short witness string.  Citations name
// the classical results a check feeds into; theory-level steps are never
// claimed as machine-checked.

#include <array>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dua/algebras.hpp"
#include "dua/classify.hpp"
#include "dua/gwa.hpp"
#include "dua/ideals.hpp"
#include "dua/morphism.hpp"
#include "dua/ore.hpp"

namespace dua {

struct CheckOutcome {
    bool pass = false;
    std::string witness;
};

struct Check {
    std::string id;
    std::string suite; // external suite token
    std::string citation;
    std::function<CheckOutcome(int bound)> run;
};

struct CheckResult {
    std::string id;
    std::string suite;
    std::string citation;
    bool pass = false;
    std::string witness;
    long long ms = 0;
};

namespace detail {

inline std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << "]";
    return os.str();
}

inline NcPoly seeded_poly(const PresentationPtr& p, std::mt19937_64& rng, int maxdeg) {
    std::uniform_int_distribution<int> nterms(1, 3), expd(0, maxdeg), coef(-3, 3);
    NcPoly f = NcPoly::zero(p);
    for (int t = nterms(rng); t > 0; --t) {
        Monomial m(p->ngens());
        int budget = maxdeg;
        for (size_t i = 0; i < p->ngens(); ++i) {
            int e = expd(rng) % (budget + 1);
            m.e[i] = e;
            budget -= e;
        }
        int c = coef(rng);
        if (c == 0) c = 1;
        f = f + NcPoly::monomial(p, m, Scalar::integer(c).promoted(p->context()));
    }
    return f;
}

// --- suite "section3_1": the two-generator subalgebra at gamma = 1 ---------

inline CheckOutcome check_g1_skew(int) {
    auto T = make_tilde(1);
    auto o = make_ore(T);
    Scalar mu = Scalar::mu();
    bool sig = o.sigma_scale[0] == mu.inverse();
    bool del = o.delta_gen[0] == -(mu.inverse() * gen_u(T));
    // the full three-generator tower is *not* skew over its subalgebra
    bool refused = false;
    try {
        make_ore(make_downup(1));
    } catch (const NotInCoefficientRing&) {
        refused = true;
    }
    return {sig && del && refused,
            "sigma(u) = mu^-1 u, delta(u) = -mu^-1 u; three-generator tower at gamma=1 "
            "correctly refused as a skew extension"};
}

inline CheckOutcome check_g1_delta_shift(int) {
    auto T = make_tilde(1);
    auto o = make_ore(T);
    NcPoly one = NcPoly::one(T), r = one + gen_u(T);
    bool ok = (r + Scalar::mu() * delta_apply(o, r)) == one;
    return {ok, "r + mu*delta(r) = 1 for r = 1 + u"};
}

inline CheckOutcome check_g1_unimodular(int) {
    auto T = make_tilde(1);
    auto o = make_ore(T);
    Scalar mu = Scalar::mu();
    NcPoly one = NcPoly::one(T), u = gen_u(T), w = gen_w(T);
    NcPoly r = one + u;
    NcPoly s = one + mu * w;
    NcPoly t = -(mu * sigma_apply(o, r));
    auto cert = verify_unimodular({{r, s}, {w, t}});
    bool tform = t == -(mu * one) - u;
    return {cert.ok && tform, "r*(1 + mu w) + w*(-mu - u) = 1 with -mu - u = -mu sigma(r)"};
}

inline CheckOutcome check_g1_generators(int) {
    auto T = make_tilde(1);
    Scalar mu = Scalar::mu(), muinv = Scalar::mu().inverse();
    NcPoly one = NcPoly::one(T), u = gen_u(T), w = gen_w(T);
    NcPoly r = one + u;
    NcPoly a = (w + muinv * one) * (one + u) - muinv * one;
    NcPoly b = w * w + muinv * w;
    bool lead = a.leading().first == Monomial({1, 1}) && b.leading().first == Monomial({0, 2});
    bool ra = r * a == w * (u + one) * (muinv * u + one);
    bool rb = r * b == w * (w + muinv * (u * w) + muinv * one);
    bool nf = a == mu * NcPoly::monomial(T, Monomial({1, 1}), Scalar::one_in(mu.context())) + w +
                       (Scalar::one_in(mu.context()) + muinv) * u;
    return {lead && ra && rb && nf,
            "normal forms pinned; r a = w (u+1)(mu^-1 u + 1); r b = w (w + mu^-1 u w + mu^-1)"};
}

inline CheckOutcome check_g1_ideal(int bound) {
    auto T = make_tilde(1);
    Scalar muinv = Scalar::mu().inverse();
    NcPoly one = NcPoly::one(T), u = gen_u(T), w = gen_w(T);
    NcPoly r = one + u;
    NcPoly a = (w + muinv * one) * (one + u) - muinv * one;
    NcPoly b = w * w + muinv * w;
    if (bound < 2) bound = 2;
    auto rep = verify_stably_free_ideal(r, 1, {a, b}, bound);
    return {rep.ok(), "kernel dims " + join_ints(rep.kernel_dims) + " at bounds 2.." +
                          std::to_string(bound) + "; generators reduce every kernel element"};
}

inline CheckOutcome check_g1_extension(int bound) {
    auto A = make_downup(1);
    Scalar muinv = Scalar::mu().inverse();
    NcPoly one = NcPoly::one(A), u = gen_u(A), w = gen_w(A);
    NcPoly r = one + u;
    NcPoly a = (w + muinv * one) * (one + u) - muinv * one;
    NcPoly b = w * w + muinv * w;
    if (bound < 2) bound = 2;
    auto ext = extension_check(r, 1, {a, b}, bound);
    return {ext.ok && ext.kernel_dim > 0,
            "three-generator kernel dim " + std::to_string(ext.kernel_dim) + " at bound " +
                std::to_string(bound) + "; all elements reduce to zero against {a, b}"};
}

// --- suite "section3_2": the three-generator algebra at gamma = 0 ----------

inline CheckOutcome check_g0_skew(int) {
    auto A = make_downup(0);
    auto o = make_ore(A);
    Scalar lam = Scalar::lambda(), mu = Scalar::mu();
    bool ok = o.sigma_scale[0] == lam.inverse() && o.sigma_scale[1] == mu.inverse() &&
              o.delta_gen[0] == -(lam.inverse() * gen_w(A)) && o.delta_gen[1].is_zero();
    return {ok, "sigma(u) = lambda^-1 u, sigma(w) = mu^-1 w, delta(u) = -lambda^-1 w, delta(w) = 0"};
}

inline CheckOutcome check_g0_unimodular(int) {
    auto A = make_downup(0);
    auto o = make_ore(A);
    Scalar lam = Scalar::lambda(), mu = Scalar::mu();
    NcPoly one = NcPoly::one(A);
    NcPoly uw = NcPoly::monomial(A, Monomial({1, 1, 0}), Scalar::one_in(lam.context()));
    NcPoly r = one + uw;
    NcPoly mdr = -delta_apply(o, r);
    bool shape = mdr == NcPoly::monomial(A, Monomial({0, 2, 0}), lam.inverse() * mu.inverse());
    NcPoly t = NcPoly::monomial(A, Monomial({2, 0, 0}), lam * mu.pow(-2));
    auto cert = verify_unimodular({{r, one - uw}, {mdr, t}});
    return {cert.ok && shape,
            "r*(1 - uw) + (lambda^-1 mu^-1 w^2)*(lambda mu^-2 u^2) = 1 with "
            "-delta(r) = lambda^-1 mu^-1 w^2"};
}

inline CheckOutcome check_g0_delta_powers(int) {
    auto A = make_downup(0);
    auto o = make_ore(A);
    Scalar lam = Scalar::lambda(), mu = Scalar::mu();
    Scalar q = lam.inverse() * mu;
    NcPoly u = gen_u(A), w = gen_w(A);
    for (int t = 1; t <= 20; ++t) {
        Scalar pt = geometric_power_sum(q, t);
        NcPoly ut = u.pow(static_cast<unsigned>(t));
        NcPoly lhs1 = delta_apply(o, ut);
        NcPoly rhs1 = -(lam.inverse() * pt) * (u.pow(static_cast<unsigned>(t - 1)) * w);
        if (!(lhs1 == rhs1)) return {false, "power formula for delta(u^" + std::to_string(t) + ")"};
        NcPoly lhs2 = delta_apply(o, ut * w);
        NcPoly rhs2 =
            -(lam.inverse() * mu.inverse() * pt) * (u.pow(static_cast<unsigned>(t - 1)) * (w * w));
        if (!(lhs2 == rhs2))
            return {false, "power formula for delta(u^" + std::to_string(t) + " w)"};
    }
    return {true,
            "delta(u^t) = -lambda^-1 p_t u^(t-1) w and delta(u^t w) = -lambda^-1 mu^-1 p_t "
            "u^(t-1) w^2 for t <= 20, p_t the geometric sum in lambda^-1 mu"};
}

inline CheckOutcome check_g0_generators(int) {
    auto A = make_downup(0);
    Scalar lam = Scalar::lambda(), mu = Scalar::mu();
    NcPoly one = NcPoly::one(A), u = gen_u(A), w = gen_w(A), d = gen_d(A);
    auto m1 = [&](std::vector<int> e) {
        return NcPoly::monomial(A, Monomial(std::move(e)), Scalar::one_in(lam.context()));
    };
    NcPoly r = one + m1({1, 1, 0});
    NcPoly a = d * d;
    NcPoly b = d * u * w + lam.inverse() * mu * (w * w) + mu * mu * d;
    bool bnf = b == lam * mu * m1({1, 1, 1}) +
                        (Scalar::one_in(lam.context()) + lam.inverse() * mu) * m1({0, 2, 0}) +
                        mu * mu * m1({0, 0, 1});
    NcPoly display = lam.pow(-2) * mu.pow(-2) * (d * d * u * w) -
                     (lam.pow(-2) * mu.pow(-2) + lam.inverse() * mu.pow(-3)) * (d * w * w);
    bool ra = (m1({1, 1, 0}) * d * d == display) && (r * a == d * d + display);
    NcPoly q_expected = lam.inverse() * m1({2, 2, 0}) +
                        (lam.inverse() * mu + Scalar::one_in(lam.context())) * m1({1, 1, 0}) +
                        NcPoly::scalar(A, mu * mu);
    auto res = right_divide(r * b, {d});
    bool rb = res.remainder.is_zero() && res.quotients[0] == q_expected && r * b == d * q_expected;
    return {bnf && ra && rb,
            "r a = d^2 + lambda^-2 mu^-2 d^2 u w - (lambda^-2 mu^-2 + lambda^-1 mu^-3) d w^2; "
            "r b = d (lambda^-1 u^2 w^2 + (lambda^-1 mu + 1) u w + mu^2)"};
}

inline CheckOutcome check_g0_ideal(int bound) {
    auto A = make_downup(0);
    Scalar lam = Scalar::lambda(), mu = Scalar::mu();
    NcPoly one = NcPoly::one(A), u = gen_u(A), w = gen_w(A), d = gen_d(A);
    NcPoly r = one + NcPoly::monomial(A, Monomial({1, 1, 0}), Scalar::one_in(lam.context()));
    NcPoly a = d * d;
    NcPoly b = d * u * w + lam.inverse() * mu * (w * w) + mu * mu * d;
    if (bound < 2) bound = 2;
    auto rep = verify_stably_free_ideal(r, 2, {a, b}, bound);
    return {rep.ok(), "kernel dims " + join_ints(rep.kernel_dims) + " at bounds 2.." +
                          std::to_string(bound) + "; generators reduce every kernel element"};
}

inline CheckOutcome check_g0_normal(int) {
    auto A = make_downup(0);
    Scalar lam = Scalar::lambda(), mu = Scalar::mu();
    NcPoly u = gen_u(A), w = gen_w(A), d = gen_d(A);
    NcPoly z = d * u - mu * (u * d);
    auto cert = is_normal(z, 2);
    bool ok = cert.normal && cert.cofactors[0] == lam.inverse() * u && cert.cofactors[1] == w &&
              cert.cofactors[2] == lam * d;
    bool negative = !is_normal(gen_w(make_downup(1)), 3).normal;
    return {ok && negative,
            "z = (lambda - mu) u d + w is normal at gamma = 0 with certified cofactors; "
            "w is not normal at gamma = 1"};
}

// --- suite "section4": base dynamics of the Weyl presentation --------------

inline CheckOutcome check_dyn_gwa(int) {
    Scalar lam = Scalar::lambda(), mu = Scalar::mu();
    Scalar alpha = lam + mu, beta = -(lam * mu);
    for (int g : {0, 1}) {
        auto chk = check_gwa_relations(make_downup(g), alpha, beta,
                                       Scalar::integer(g).promoted(lam.context()));
        if (!chk.ok) return {false, "relation failed at gamma = " + std::to_string(g)};
    }
    return {true, "x = ud, y = du with phi(x) = y, phi(y) = alpha y + beta x + gamma satisfy "
                  "all seven ladder relations at gamma = 0 and gamma = 1"};
}

inline CheckOutcome check_dyn_conjugation(int) {
    Scalar lam = Scalar::lambda(), mu = Scalar::mu();
    FieldContext fc = lam.context();
    Scalar alpha = lam + mu, beta = -(lam * mu);
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<int> expd(0, 2), coef(-3, 3), nterms(1, 4);
    for (int g : {0, 1}) {
        auto A = make_downup(g);
        AffineAuto phi{alpha, beta, Scalar::integer(g).promoted(fc)};
        NcPoly u = gen_u(A), d = gen_d(A);
        for (int t = 0; t < 40; ++t) {
            CommPoly2 h(fc);
            for (int k = nterms(rng); k > 0; --k) {
                int c = coef(rng);
                if (c == 0) c = 1;
                h = h + CommPoly2::monomial(expd(rng), expd(rng),
                                            Scalar::integer(c).promoted(fc));
            }
            NcPoly h_img = eval_at_base(A, h);
            NcPoly phi_h = eval_at_base(A, phi_apply(phi, h, 1));
            if (!(d * h_img == phi_h * d) || !(u * phi_h == h_img * u))
                return {false, "conjugation failed at gamma = " + std::to_string(g)};
        }
    }
    return {true, "d h(x, y) = (phi h)(x, y) d and u (phi h)(x, y) = h(x, y) u for 80 random "
                  "base polynomials"};
}

inline CheckOutcome check_dyn_closed_form(int) {
    std::vector<std::array<long, 2>> roots = {{2, -1}, {3, 1}, {5, -2}, {4, 3}};
    for (auto [l, m] : roots) {
        Scalar L = Scalar::integer(l), M = Scalar::integer(m);
        SeqParams p{L + M, -(L * M), Scalar::integer(0), Scalar::integer(1), Scalar::integer(2)};
        auto cf = fit_closed_form(p);
        auto seq = s_seq(p, 40);
        for (int n = 0; n <= 40; ++n)
            if (!(s_closed(cf, n) == seq[static_cast<size_t>(n)].promoted(cf.field)))
                return {false, "closed form diverged from the recurrence"};
    }
    for (long m : {-1L, 3L, -4L}) {
        Scalar M = Scalar::integer(m);
        SeqParams p{Scalar::integer(1) + M, -M, Scalar::rational(1, 2), Scalar::integer(0),
                    Scalar::integer(1)};
        auto cf = fit_closed_form(p);
        auto seq = s_seq(p, 30);
        for (int n = 0; n <= 30; ++n)
            if (!(s_closed(cf, n) == seq[static_cast<size_t>(n)].promoted(cf.field)))
                return {false, "closed form diverged on the drift family"};
    }
    bool refused = false;
    try {
        fit_closed_form({Scalar::integer(2), Scalar::integer(-1), Scalar::integer(0),
                         Scalar::integer(0), Scalar::integer(1)});
    } catch (const DegenerateRoots&) {
        refused = true;
    }
    bool refused2 = false;
    try {
        fit_closed_form({Scalar::integer(2), Scalar::integer(1), Scalar::integer(1),
                         Scalar::integer(0), Scalar::integer(1)});
    } catch (const DegenerateRoots&) {
        refused2 = true;
    }
    return {refused && refused2,
            "s_n = c1 lambda^n + c2 mu^n + gamma n / (2 - alpha) matches the recurrence on 7 "
            "parameter sets (n <= 40); double roots and alpha = 2 are refused exactly"};
}

inline CheckOutcome check_dyn_orbit(int) {
    AffineAuto phi = make_affine(Scalar::integer(0), Scalar::integer(-1), Scalar::integer(0));
    auto rep = orbit_analysis(phi, {Scalar::integer(0), Scalar::integer(1)}, 12);
    bool ok = rep.period && *rep.period == 4 &&
              rep.zero_x_hits == std::vector<int>{0, 2, 4, 6, 8, 10, 12};
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> v(-4, 4), nd(0, 8);
    for (int t = 0; t < 15 && ok; ++t) {
        Scalar beta = Scalar::integer(0);
        while (beta.is_zero()) beta = Scalar::integer(v(rng));
        AffineAuto psi = make_affine(Scalar::integer(v(rng)), beta, Scalar::integer(v(rng)));
        ok = ideal_orbit_check(psi, {Scalar::integer(v(rng)), Scalar::integer(v(rng))}, nd(rng));
    }
    return {ok, "period-4 orbit of (x, y) -> (y, -x) from (0, 1) hits x = 0 exactly at even "
                "steps; phi^n pullbacks vanish on 15 random orbits"};
}

inline CheckOutcome check_dyn_nonrecurrence(int) {
    bool a = orbit_nonrecurrence_check(Scalar::integer(2), Scalar::integer(1), 50);
    bool b = orbit_nonrecurrence_check(Scalar::rational(1, 2), Scalar::integer(-3), 50);
    Scalar golden = Scalar(QuadExt(make_q(1, 2), make_q(1, 2), 5));
    bool c = orbit_nonrecurrence_check(golden, Scalar::one_like(golden), 30);
    bool refused = false;
    try {
        orbit_nonrecurrence_check(Scalar::integer(-1), Scalar::integer(1), 10);
    } catch (const PreconditionViolated&) {
        refused = true;
    }
    return {a && b && c && refused,
            "s_n = s (mu^n - 1)/(mu - 1) stays nonzero for n <= 50 at mu = 2, 1/2, and the "
            "golden ratio; root-of-unity mu is refused"};
}

// --- suite "engine": soundness of the rewriting engine itself --------------

inline CheckOutcome check_eng_confluence(int) {
    validate_presentation(make_downup(0));
    validate_presentation(make_downup(1));
    validate_presentation(make_tilde(1));
    return {true, "all generator-triple overlaps resolve to equal normal forms in the three "
                  "working presentations"};
}

inline CheckOutcome check_eng_assoc(int) {
    std::mt19937_64 rng(7);
    for (int g : {0, 1}) {
        auto A = make_downup(g);
        for (int t = 0; t < 70; ++t) {
            NcPoly x = seeded_poly(A, rng, 3), y = seeded_poly(A, rng, 3),
                   z = seeded_poly(A, rng, 3);
            if (!((x * y) * z == x * (y * z)))
                return {false, "associativity failed at gamma = " + std::to_string(g)};
        }
    }
    auto T = make_tilde(1);
    for (int t = 0; t < 60; ++t) {
        NcPoly x = seeded_poly(T, rng, 3), y = seeded_poly(T, rng, 3), z = seeded_poly(T, rng, 3);
        if (!((x * y) * z == x * (y * z))) return {false, "associativity failed in the subalgebra"};
    }
    return {true, "(x y) z = x (y z) for 200 random triples across the three presentations"};
}

inline CheckOutcome check_eng_lexp(int) {
    std::mt19937_64 rng(11);
    for (int g : {0, 1}) {
        auto A = make_downup(g);
        for (int t = 0; t < 100; ++t) {
            NcPoly x = seeded_poly(A, rng, 4), y = seeded_poly(A, rng, 4);
            if (x.is_zero() || y.is_zero()) continue;
            Monomial expect = x.leading().first * y.leading().first;
            if (!((x * y).leading().first == expect))
                return {false, "leading exponents did not add"};
        }
    }
    return {true, "leading exponents add under multiplication on 200 random pairs (domain "
                  "property of the filtered algebra)"};
}

inline CheckOutcome check_eng_basis(int bound) {
    if (bound > 4) bound = 4; // quartic growth beyond this adds nothing
    bool ok = left_basis_check(make_downup(1), bound, bound) &&
              left_basis_check(make_downup(0), bound, bound);
    return {ok, "words d^l m for d-free m stay independent up to degree " + std::to_string(bound) +
                    ": free left module over the two-generator subalgebra"};
}

inline CheckOutcome check_eng_filtration(int) {
    for (int g : {0, 1}) {
        auto A = make_downup(g);
        NcPoly u = gen_u(A), w = gen_w(A), d = gen_d(A);
        for (int p = 0; p <= 4; ++p)
            for (int q = 0; q <= 4; ++q) {
                NcPoly f = d.pow(static_cast<unsigned>(p)) * (u + w).pow(2);
                NcPoly h = d.pow(static_cast<unsigned>(q)) * (u * w + w);
                if (f.degree_in(2) + h.degree_in(2) < (f * h).degree_in(2))
                    return {false, "filtration violated"};
            }
    }
    return {true, "deg_d(f h) <= deg_d f + deg_d h on a (p, q) <= (4, 4) grid of witnesses"};
}

} // namespace detail

inline const std::vector<Check>& check_registry() {
    static const std::vector<Check> reg = {
        {"g1.skew", "section3_1", "iterated Ore presentation of the down-up family "
                                  "(Kirkman-Musson-Passman)",
         detail::check_g1_skew},
        {"g1.delta_shift", "section3_1", "identity r + mu delta(r) = 1 for r = 1 + u",
         detail::check_g1_delta_shift},
        {"g1.unimodular", "section3_1", "explicit unimodular row over the subalgebra "
                                        "(completion in the style of Suslin)",
         detail::check_g1_unimodular},
        {"g1.generators", "section3_1", "product identities for the two ideal generators",
         detail::check_g1_generators},
        {"g1.ideal", "section3_1", "two-generator stably free right ideal (Stafford-type "
                                   "construction; freeness complement is a theory input)",
         detail::check_g1_ideal},
        {"g1.extension", "section3_1", "kernel generation persists in the three-generator "
                                       "algebra",
         detail::check_g1_extension},

        {"g0.skew", "section3_2", "iterated Ore presentation at gamma = 0 "
                                  "(Kirkman-Musson-Passman)",
         detail::check_g0_skew},
        {"g0.unimodular", "section3_2", "explicit unimodular row at gamma = 0 (completion in "
                                        "the style of Suslin)",
         detail::check_g0_unimodular},
        {"g0.delta_powers", "section3_2", "closed form of delta on monomial powers via "
                                          "geometric sums",
         detail::check_g0_delta_powers},
        {"g0.generators", "section3_2", "product identities for the two ideal generators at "
                                        "gamma = 0",
         detail::check_g0_generators},
        {"g0.ideal", "section3_2", "two-generator stably free right ideal at gamma = 0 "
                                   "(Stafford-type construction; freeness complement is a "
                                   "theory input)",
         detail::check_g0_ideal},
        {"g0.normal", "section3_2", "normal-element certificate for the twisted commutator",
         detail::check_g0_normal},

        {"dyn.gwa", "section4", "down-up algebras as generalized Weyl algebras "
                                "(Bavula-Lenagan viewpoint)",
         detail::check_dyn_gwa},
        {"dyn.conjugation", "section4", "ladder generators conjugate the base polynomial ring "
                                        "by the affine map",
         detail::check_dyn_conjugation},
        {"dyn.closed_form", "section4", "closed form of the orbit recurrence over the exact "
                                        "splitting field",
         detail::check_dyn_closed_form},
        {"dyn.orbit", "section4", "orbit periodicity and pullback vanishing of the affine "
                                  "base map",
         detail::check_dyn_orbit},
        {"dyn.nonrecurrence", "section4", "orbits of non-root-of-unity multipliers never "
                                          "return to x = 0 (hypothesis feeding "
                                          "Bavula-Lenagan stable-rank exactness)",
         detail::check_dyn_nonrecurrence},

        {"eng.confluence", "engine", "overlap resolution of the rewrite system (diamond "
                                     "lemma)",
         detail::check_eng_confluence},
        {"eng.assoc", "engine", "associativity of normal-form multiplication",
         detail::check_eng_assoc},
        {"eng.lexp", "engine", "additivity of leading exponents (domain property)",
         detail::check_eng_lexp},
        {"eng.basis", "engine", "freeness of the algebra over its two-generator subalgebra",
         detail::check_eng_basis},
        {"eng.filtration", "engine", "submultiplicativity of the top-generator filtration",
         detail::check_eng_filtration},
    };
    return reg;
}

inline const std::vector<std::string>& verify_suite_tokens() {
    static const std::vector<std::string> t = {"section3_1", "section3_2", "section4", "engine"};
    return t;
}

/// Run one suite (or "all").  Unknown tokens throw PreconditionViolated; check
/// bodies that throw are reported as failures, never silently skipped.
inline std::vector<CheckResult> run_suite(const std::string& suite, int bound) {
    bool known = suite == "all";
    for (const auto& t : verify_suite_tokens()) known = known || suite == t;
    if (!known) throw PreconditionViolated("unknown suite '" + suite + "'");

    std::vector<CheckResult> out;
    for (const Check& c : check_registry()) {
        if (suite != "all" && c.suite != suite) continue;
        CheckResult r;
        r.id = c.id;
        r.suite = c.suite;
        r.citation = c.citation;
        auto t0 = std::chrono::steady_clock::now();
        try {
            CheckOutcome o = c.run(bound);
            r.pass = o.pass;
            r.witness = o.witness;
        } catch (const std::exception& e) {
            r.pass = false;
            r.witness = std::string("exception: ") + e.what();
        }
        auto t1 = std::chrono::steady_clock::now();
        r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        out.push_back(std::move(r));
    }
    return out;
}

inline bool all_passed(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return true;
}

} // namespace dua
