#pragma once

#include <stdexcept>
#include <string>

namespace dua {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& what = "operands from different field contexts")
        : Error(what) {}
};

struct UnsupportedField : Error {
    explicit UnsupportedField(const std::string& what) : Error(what) {}
};

struct PresentationMismatch : Error {
    explicit PresentationMismatch(const std::string& what = "operands from different presentations")
        : Error(what) {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("zero polynomial has no leading term") {}
};

struct NotInCoefficientRing : Error {
    explicit NotInCoefficientRing(const std::string& what) : Error(what) {}
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& what) : Error(what) {}
};

struct DegenerateRoots : Error {
    explicit DegenerateRoots(const std::string& what) : Error(what) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

struct BoundTooSmall : Error {
    explicit BoundTooSmall(const std::string& what) : Error(what) {}
};

struct FixtureMissing : Error {
    explicit FixtureMissing(const std::string& what) : Error(what) {}
};

/// Parse failure with 1-based position into the input line.
struct ParseError : Error {
    int column;
    std::string expected;
    ParseError(int col, const std::string& expected_, const std::string& what)
        : Error(what), column(col), expected(expected_) {}
};

} // namespace dua
