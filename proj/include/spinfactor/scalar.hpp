#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spinfactor/polynomial.hpp"
#include "spinfactor/rational_function.hpp"

namespace spinfactor {

class ScalarError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZeroError : public ScalarError {
public:
    DivisionByZeroError() : ScalarError("division by zero") {}
};

class NonInvertibleError : public ScalarError {
public:
    explicit NonInvertibleError(const std::string& what)
        : ScalarError("not invertible: " + what) {}
};

class PoleError : public ScalarError {
public:
    PoleError(const std::string& factor, const std::string& detail)
        : ScalarError("pole at factor " + factor + detail), factor_(factor) {}
    const std::string& factor() const { return factor_; }

private:
    std::string factor_;
};

class ParseError : public ScalarError {
public:
    ParseError(const std::string& what, std::size_t pos)
        : ScalarError(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

class Scalar;
using Assignment = std::map<std::string, Scalar, std::less<>>;

/// Exact scalar: a rational number, a polynomial, or a rational function.
///
/// Values are always stored in the simplest of the three representations,
/// so two scalars are equal iff their stored alternatives are equal.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(long c) : v_(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    Scalar(int c) : v_(Rational(c)) {}   // NOLINT(google-explicit-constructor)
    Scalar(Rational q);                  // NOLINT(google-explicit-constructor)
    explicit Scalar(Polynomial p);
    explicit Scalar(RationalFunction f);
    static Scalar fraction(long num, long den);
    static Scalar variable(std::string_view name);

    /// Parses `+ - * / ^ ( )`, integers and identifiers.
    static Scalar parse(std::string_view text);

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    bool is_polynomial() const { return !std::holds_alternative<RationalFunction>(v_); }
    const Rational& rational() const;
    Polynomial numerator() const;
    Polynomial denominator() const;
    RationalFunction as_fraction() const;
    std::vector<std::string> variable_names() const;
    bool uses_relations() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }
    Scalar pow(int e) const;

    /// Image under the ring map sending each named variable to its value.
    /// Unassigned variables are left alone.
    Scalar substitute(const Assignment& assignment) const;
    /// Complex conjugation i -> -i.
    Scalar conjugate() const;

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    std::size_t hash() const;
    std::string to_string() const;

private:
    using Repr = std::variant<Rational, Polynomial, RationalFunction>;
    static Scalar from_fraction(RationalFunction f);
    static Scalar from_polynomial(Polynomial p);
    Repr v_;
};

struct ScalarHash {
    std::size_t operator()(const Scalar& s) const { return s.hash(); }
};

std::size_t hash_rational(const Rational& q);

}  // namespace spinfactor
