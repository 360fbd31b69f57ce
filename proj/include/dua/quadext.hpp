#pragma once

#include <gmpxx.h>

#include <string>

#include "dua/errors.hpp"
#include "dua/rat_util.hpp"

namespace dua {

/// Element a + b*sqrt(d) of Q(sqrt(d)), d a squarefree integer, d not in {0, 1}.
struct QuadExt {
    mpq_class a{0};
    mpq_class b{0};
    long d = 2;

    QuadExt() = default;
    QuadExt(mpq_class a_, mpq_class b_, long d_) : a(std::move(a_)), b(std::move(b_)), d(d_) {
        if (d == 0 || d == 1) throw PreconditionViolated("QuadExt: d must be squarefree, not 0 or 1");
    }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.d == y.d && x.a == y.a && x.b == y.b;
    }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        check(x, y);
        return QuadExt(x.a + y.a, x.b + y.b, x.d);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        check(x, y);
        return QuadExt(x.a - y.a, x.b - y.b, x.d);
    }
    QuadExt operator-() const { return QuadExt(-a, -b, d); }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        check(x, y);
        return QuadExt(x.a * y.a + mpq_class(x.d) * x.b * y.b, x.a * y.b + x.b * y.a, x.d);
    }

    QuadExt inverse() const {
        // norm a^2 - d b^2 vanishes only at 0 since d is squarefree, not a square
        mpq_class n = a * a - mpq_class(d) * b * b;
        if (n == 0) throw DivisionByZero();
        return QuadExt(a / n, -b / n, d);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

    QuadExt conjugate() const { return QuadExt(a, -b, d); }

    std::string to_string() const {
        std::string root = "sqrt(" + std::to_string(d) + ")";
        if (b == 0) return q_to_string(a);
        std::string bpart;
        mpq_class babs = abs(b);
        bpart = (babs == 1) ? root : q_to_string(babs) + "*" + root;
        if (a == 0) return (b < 0 ? "-" : "") + bpart;
        return q_to_string(a) + (b < 0 ? " - " : " + ") + bpart;
    }

private:
    static void check(const QuadExt& x, const QuadExt& y) {
        if (x.d != y.d) throw FieldMismatch("quadratic elements over different radicands");
    }
};

} // namespace dua
