#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dua/algebras.hpp"
#include "dua/morphism.hpp"
#include "dua/ore.hpp"

using namespace dua;

namespace {

Scalar lam = Scalar::lambda();
Scalar mu = Scalar::mu();
FieldContext FC = lam.context();

NcPoly mono(const PresentationPtr& p, std::vector<int> e, Scalar c) {
    return NcPoly::monomial(p, Monomial(std::move(e)), c);
}

std::mt19937_64 rng(1234);

/// random element of the coefficient ring (no top generator)
NcPoly random_coeff_elt(const PresentationPtr& p, int top, int maxdeg) {
    std::uniform_int_distribution<int> nterms(1, 3), expd(0, maxdeg), coef(-3, 3);
    NcPoly f = NcPoly::zero(p);
    for (int t = nterms(rng); t > 0; --t) {
        Monomial m(p->ngens());
        for (int i = 0; i < top; ++i) m.e[static_cast<size_t>(i)] = expd(rng);
        int c = coef(rng);
        if (c == 0) c = 2;
        f = f + NcPoly::monomial(p, m, Scalar::integer(c).promoted(FC));
    }
    return f;
}

} // namespace

TEST_CASE("skew data read off the two-generator subalgebra") {
    auto T = make_tilde(1);
    auto o = make_ore(T);
    CHECK(o.top == 1);
    CHECK(o.sigma_scale[0] == mu.inverse());
    CHECK(o.delta_gen[0] == mono(T, {1, 0}, -mu.inverse()));
    // r = 1 + u: sigma(r) = 1 + u/mu, delta(r) = -u/mu
    NcPoly r = NcPoly::one(T) + gen_u(T);
    auto sd = sigma_delta_eval(o, r);
    CHECK(sd.sigma == NcPoly::one(T) + mono(T, {1, 0}, mu.inverse()));
    CHECK(sd.delta == mono(T, {1, 0}, -mu.inverse()));
}

TEST_CASE("skew data for the full gamma=0 tower") {
    auto A = make_downup(0);
    auto o = make_ore(A);
    CHECK(o.top == 2);
    CHECK(o.sigma_scale[0] == lam.inverse());
    CHECK(o.sigma_scale[1] == mu.inverse());
    CHECK(o.delta_gen[0] == mono(A, {0, 1, 0}, -lam.inverse()));
    CHECK(o.delta_gen[1].is_zero());
}

TEST_CASE("gamma=1 tower is not skew over the u,w subring") {
    // the d,w rule tail is gamma*d, which involves the top generator
    CHECK_THROWS_AS(make_ore(make_downup(1)), NotInCoefficientRing);
}

TEST_CASE("twisted Leibniz rule on 100 random pairs") {
    auto A = make_downup(0);
    auto o = make_ore(A);
    for (int t = 0; t < 100; ++t) {
        NcPoly f = random_coeff_elt(A, o.top, 3), g = random_coeff_elt(A, o.top, 3);
        NcPoly lhs = delta_apply(o, f * g);
        NcPoly rhs = delta_apply(o, f) * sigma_apply(o, g) + f * delta_apply(o, g);
        CHECK(lhs == rhs);
        // sigma is an endomorphism
        CHECK(sigma_apply(o, f * g) == sigma_apply(o, f) * sigma_apply(o, g));
    }
}

TEST_CASE("skew identity f*d = d*sigma(f) + delta(f) on 100 random f") {
    auto A = make_downup(0);
    auto o = make_ore(A);
    NcPoly d = gen_d(A);
    for (int t = 0; t < 100; ++t) {
        NcPoly f = random_coeff_elt(A, o.top, 4);
        auto sd = sigma_delta_eval(o, f); // re-verifies the identity internally
        CHECK(f * d == d * sd.sigma + sd.delta);
    }
}

TEST_CASE("derivation of powers of u follows the geometric sums") {
    auto A = make_downup(0);
    auto o = make_ore(A);
    Scalar q = lam.inverse() * mu;
    for (int t = 1; t <= 20; ++t) {
        Scalar pt = geometric_power_sum(q, t);
        NcPoly ut = gen_u(A).pow(static_cast<unsigned>(t));
        // delta(u^t) = -lambda^{-1} p_t u^{t-1} w
        NcPoly expect = mono(A, {t - 1, 1, 0}, -(lam.inverse() * pt));
        CHECK(delta_apply(o, ut) == expect);
        // delta(u^t w) = -lambda^{-1} mu^{-1} p_t u^{t-1} w^2
        NcPoly utw = ut * gen_w(A);
        NcPoly expect2 = mono(A, {t - 1, 2, 0}, -(lam.inverse() * mu.inverse() * pt));
        CHECK(delta_apply(o, utw) == expect2);
    }
}

TEST_CASE("geometric sum increments by one power per step") {
    Scalar q = lam.inverse() * mu;
    for (int t = 1; t <= 20; ++t) {
        Scalar diff = geometric_power_sum(q, t + 1) - geometric_power_sum(q, t);
        CHECK(diff == lam.pow(-t) * mu.pow(t));
    }
    CHECK(geometric_power_sum(q, 1) == Scalar::one_in(FC));
}

TEST_CASE("sigma and delta of the gamma=0 unimodular witness") {
    auto A = make_downup(0);
    auto o = make_ore(A);
    NcPoly r = NcPoly::one(A) + mono(A, {1, 1, 0}, Scalar::one_in(FC));
    auto sd = sigma_delta_eval(o, r);
    CHECK(sd.sigma == NcPoly::one(A) + mono(A, {1, 1, 0}, lam.inverse() * mu.inverse()));
    CHECK(sd.delta == mono(A, {0, 2, 0}, -(lam.inverse() * mu.inverse())));
}

TEST_CASE("generator embedding of the subalgebra is a morphism") {
    auto T = make_tilde(1), A = make_downup(1);
    std::vector<NcPoly> images = {gen_u(A), gen_w(A)};
    auto chk = verify_morphism(T, images, A);
    CHECK(chk.ok);
    // the embedded normal words coincide with the d-free normal words
    for (int i = 0; i + 0 <= 6; ++i) {
        for (int j = 0; i + j <= 6; ++j) {
            NcPoly img = eval_word(images, Monomial({i, j}), A);
            CHECK(img == mono(A, {i, j, 0}, Scalar::one_in(FC)));
        }
    }
    // a wrong image set is detected
    std::vector<NcPoly> bad = {gen_u(A), gen_d(A)};
    auto chk2 = verify_morphism(T, bad, A);
    CHECK(!chk2.ok);
    CHECK(chk2.failed_rule == std::pair<int, int>{1, 0});
}

TEST_CASE("lambda=1, gamma=0 algebras map onto the commutative plane") {
    // killing w leaves u, d commuting exactly when the d,u rule has coeff 1,
    // i.e. when 1 is a characteristic root (alpha + beta = 1)
    Scalar one = Scalar::one_in(FC);
    std::map<std::pair<int, int>, RewriteRule> comm;
    comm[{1, 0}] = RewriteRule{one, {}};
    auto P = std::make_shared<const Presentation>("K[x,y]", std::vector<std::string>{"x", "y"},
                                                  FC, std::move(comm));
    validate_presentation(P);
    NcPoly x = NcPoly::gen(P, 0), y = NcPoly::gen(P, 1);
    CHECK(y * x == x * y);

    auto A1roots = make_downup(0, one, mu); // lambda = 1 specialization
    std::vector<NcPoly> images = {x, NcPoly::zero(P), y};
    CHECK(verify_morphism(A1roots, images, P).ok);
    // without lambda = 1 the same images fail: d*u = lambda*u*d + w needs
    // lambda to act as 1 on the plane
    auto A = make_downup(0);
    CHECK(!verify_morphism(A, images, P).ok);
}
