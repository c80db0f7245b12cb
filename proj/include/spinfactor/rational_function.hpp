#pragma once

#include <string>

#include "spinfactor/polynomial.hpp"

namespace spinfactor {

/// Reduced quotient of polynomials.
///
/// The denominator is free of relation-bearing generators, coprime to the
/// numerator, and has leading coefficient 1 under the name-based term order.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    explicit RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}
    /// Throws DivisionByZeroError for a zero denominator and
    /// NonInvertibleError when the denominator is not a unit.
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    std::string to_string() const;

private:
    struct Reduced {};
    RationalFunction(Polynomial num, Polynomial den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
    Polynomial num_;
    Polynomial den_;
};

}  // namespace spinfactor
