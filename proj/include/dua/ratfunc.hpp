#pragma once

#include <string>
#include <utility>

#include "dua/errors.hpp"
#include "dua/poly2.hpp"

namespace dua {

/// Element of Q(lambda, mu) as a reduced fraction of polynomials.
/// Canonical form: gcd(num, den) = 1 and den is integer-primitive with a
/// positive graded-lex leading coefficient, so equal values have equal parts.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly2::constant(1)) {}
    explicit RatFunc(const mpq_class& c) : num_(Poly2::constant(c)), den_(Poly2::constant(1)) {}
    RatFunc(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    static RatFunc lambda() { return RatFunc(Poly2::lambda(), Poly2::constant(1)); }
    static RatFunc mu() { return RatFunc(Poly2::mu(), Poly2::constant(1)); }
    static RatFunc from_poly(Poly2 p) { return RatFunc(std::move(p), Poly2::constant(1)); }

    const Poly2& num() const { return num_; }
    const Poly2& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_ == Poly2::constant(1) && num_ == Poly2::constant(1); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    mpq_class constant_value() const { return num_.constant_value() / den_.constant_value(); }

    friend bool operator==(const RatFunc& x, const RatFunc& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }

    friend RatFunc operator+(const RatFunc& x, const RatFunc& y) {
        return RatFunc(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend RatFunc operator-(const RatFunc& x, const RatFunc& y) {
        return RatFunc(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& x, const RatFunc& y) {
        // cross-cancel first so the final reduction is between small parts
        Poly2 g1 = gcd(x.num_, y.den_), g2 = gcd(y.num_, x.den_);
        return RatFunc(divexact(x.num_, g1) * divexact(y.num_, g2),
                       divexact(x.den_, g2) * divexact(y.den_, g1));
    }
    RatFunc inverse() const {
        if (is_zero()) throw DivisionByZero();
        return RatFunc(den_, num_);
    }
    friend RatFunc operator/(const RatFunc& x, const RatFunc& y) { return x * y.inverse(); }

    RatFunc pow(long e) const {
        RatFunc base = e < 0 ? inverse() : *this;
        unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
        RatFunc r(1);
        while (k) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    std::string to_string() const {
        if (den_ == Poly2::constant(1)) return num_.to_string();
        // a '/' binds tighter than surrounding '+'/'*', so multi-term sides and
        // product denominators need parentheses to parse back to the same value
        std::string n = num_.to_string(), d = den_.to_string();
        if (n.find(' ') != std::string::npos) n = "(" + n + ")";
        if (d.find_first_of("* ") != std::string::npos) d = "(" + d + ")";
        return n + "/" + d;
    }

private:
    void reduce() {
        if (den_.is_zero()) throw DivisionByZero("zero denominator");
        if (num_.is_zero()) {
            den_ = Poly2::constant(1);
            return;
        }
        Poly2 g = gcd(num_, den_);
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
        mpq_class c = den_.integer_primitive_scale();
        if (den_.leading().second < 0) c = -c;
        num_ = num_.scaled(c);
        den_ = den_.scaled(c);
    }

    Poly2 num_, den_;
};

} // namespace dua
