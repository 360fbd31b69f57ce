#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>

#include "dua/errors.hpp"

namespace dua {

inline mpq_class make_q(long num, long den = 1) {
    if (den == 0) throw DivisionByZero();
    mpq_class x(num, den);
    x.canonicalize();
    return x;
}

inline mpq_class make_q(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero();
    mpq_class x(num, den);
    x.canonicalize();
    return x;
}

inline std::string q_to_string(const mpq_class& x) { return x.get_str(); }

/// Exact square root of a rational if it is a perfect square, else nothing.
inline std::optional<mpq_class> rational_sqrt(const mpq_class& x) {
    if (sgn(x) < 0) return std::nullopt;
    const mpz_class& n = x.get_num();
    const mpz_class& d = x.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return make_q(rn, rd);
}

/// Splits a nonzero integer as n = f^2 * d with d squarefree (d carries the sign).
inline std::pair<mpz_class, mpz_class> squarefree_split(mpz_class n) {
    if (n == 0) throw PreconditionViolated("squarefree_split: zero input");
    mpz_class d = n < 0 ? -1 : 1;
    mpz_class f = 1;
    mpz_class m = abs(n);
    for (mpz_class p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p != 0) continue;
        int mult = 0;
        while (m % p == 0) {
            m /= p;
            ++mult;
        }
        for (int i = 0; i < mult / 2; ++i) f *= p;
        if (mult % 2) d *= p;
    }
    d *= m; // leftover factor is prime
    return {d, f};
}

/// Writes a nonzero rational as x = f^2 * d with d a squarefree integer, f rational > 0.
/// For x = p/q this is x = pq / q^2.
inline std::pair<mpz_class, mpq_class> sqrt_decompose(const mpq_class& x) {
    if (x == 0) throw PreconditionViolated("sqrt_decompose: zero input");
    mpz_class pq = x.get_num() * x.get_den();
    auto [d, f] = squarefree_split(pq);
    return {d, make_q(f, x.get_den())};
}

} // namespace dua
