#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dua/linalg.hpp"

using namespace dua;

namespace {

Matrix from_ints(const std::vector<std::vector<long>>& rows) {
    Matrix m;
    for (auto& r : rows) {
        Vector v;
        for (long e : r) v.push_back(Scalar::integer(e));
        m.push_back(v);
    }
    return m;
}

Vector vec_ints(const std::vector<long>& r) {
    Vector v;
    for (long e : r) v.push_back(Scalar::integer(e));
    return v;
}

} // namespace

TEST_CASE("identity system has the rhs as unique solution") {
    auto sol = solve_linear_system(from_ints({{1, 0}, {0, 1}}), vec_ints({3, -7}));
    CHECK(sol.consistent);
    CHECK(sol.rank == 2);
    CHECK(sol.nullspace.empty());
    CHECK(sol.particular == vec_ints({3, -7}));
}

TEST_CASE("zero matrix yields full nullspace") {
    auto sol = solve_linear_system(from_ints({{0, 0}}), vec_ints({0}));
    CHECK(sol.consistent);
    CHECK(sol.rank == 0);
    CHECK(sol.nullspace.size() == 2);
    auto bad = solve_linear_system(from_ints({{0, 0}}), vec_ints({1}));
    CHECK(!bad.consistent);
}

TEST_CASE("inconsistent and underdetermined systems") {
    auto sol = solve_linear_system(from_ints({{1, 1}, {2, 2}}), vec_ints({1, 3}));
    CHECK(!sol.consistent);
    sol = solve_linear_system(from_ints({{1, 1}, {2, 2}}), vec_ints({1, 2}));
    CHECK(sol.consistent);
    CHECK(sol.rank == 1);
    REQUIRE(sol.nullspace.size() == 1);
    // nullspace vector annihilates the matrix
    Scalar s = sol.nullspace[0][0] + sol.nullspace[0][1];
    CHECK(s.is_zero());
}

TEST_CASE("symbolic matrix over Q(lambda,mu)") {
    Scalar l = Scalar::lambda(), m = Scalar::mu();
    Matrix a = {{l, m}, {m, l}};
    Vector b = {l * l - m * m, Scalar::zero_in(l.context())};
    auto sol = solve_linear_system(a, b);
    REQUIRE(sol.consistent);
    CHECK(sol.rank == 2);
    // x = lambda, y = -mu solves it
    CHECK(sol.particular[0] == l);
    CHECK(sol.particular[1] == -m);
}

TEST_CASE("solution property on random rational systems") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dim(1, 5), entry(-4, 4);
    for (int trial = 0; trial < 60; ++trial) {
        size_t r = static_cast<size_t>(dim(rng)), c = static_cast<size_t>(dim(rng));
        Matrix a(r, Vector(c, Scalar::integer(0)));
        for (auto& row : a)
            for (auto& e : row) e = Scalar::integer(entry(rng));
        Vector b(r, Scalar::integer(0));
        for (auto& e : b) e = Scalar::integer(entry(rng));
        auto sol = solve_linear_system(a, b);
        auto apply = [&](const Vector& x) {
            Vector y(r, Scalar::integer(0));
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < c; ++j) y[i] = y[i] + a[i][j] * x[j];
            return y;
        };
        if (sol.consistent) {
            CHECK(apply(sol.particular) == b);
            for (auto& n : sol.nullspace) {
                Vector y = apply(n);
                for (auto& e : y) CHECK(e.is_zero());
            }
        }
        CHECK(static_cast<size_t>(sol.rank) + sol.nullspace.size() == c);
    }
}

TEST_CASE("context mismatch rejected") {
    Matrix a = {{Scalar::integer(1), Scalar::lambda()}};
    CHECK_THROWS_AS(solve_linear_system(a, {Scalar::integer(0)}), FieldMismatch);
}
