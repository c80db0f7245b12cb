#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spinfactor/variables.hpp"

namespace spinfactor {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);

/// Power product of generators, factors sorted by variable index.
class Monomial {
public:
    using Factor = std::pair<VarIndex, std::uint32_t>;

    Monomial() = default;
    static Monomial variable(VarIndex v, std::uint32_t exponent = 1);
    static Monomial from_factors(std::vector<Factor> factors);

    std::span<const Factor> factors() const { return factors_; }
    std::uint32_t degree() const { return degree_; }
    std::uint32_t exponent(VarIndex v) const;
    bool is_one() const { return factors_.empty(); }
    bool divides(const Monomial& other) const;

    /// Product in the free commutative monoid (no relations applied).
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Quotient; requires divisor.divides(*this).
    Monomial operator/(const Monomial& divisor) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    std::size_t hash() const;
    std::string to_string() const;

private:
    std::vector<Factor> factors_;
    std::uint32_t degree_ = 0;
};

/// Graded-lexicographic comparison over variable indices: >0 when a > b.
int compare_grlex(const Monomial& a, const Monomial& b);
/// Graded-lexicographic comparison over variable names (used for display and
/// for the normalisation of denominators, so output does not depend on the
/// order in which variables were registered).
int compare_grlex_by_name(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
    Monomial monomial;
    Rational coeff;
};

/// Multivariate polynomial over Q with optional per-generator relations.
///
/// Terms are kept sorted by descending grlex order with nonzero coefficients,
/// and no relation-bearing generator occurs with exponent above one. The term
/// vector is shared between copies; polynomials are immutable values.
class Polynomial {
public:
    Polynomial();
    explicit Polynomial(const Rational& c);
    explicit Polynomial(long c) : Polynomial(Rational(c)) {}
    static Polynomial variable(VarIndex v);
    static Polynomial variable(std::string_view name);
    static Polynomial monomial(const Monomial& m, const Rational& c);
    /// Normalises arbitrary terms: applies relations, merges, sorts.
    static Polynomial from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_->empty(); }
    bool is_constant() const;
    bool is_one() const;
    /// Coefficient of the empty monomial.
    Rational constant_term() const;
    const std::vector<Term>& terms() const { return *terms_; }
    std::size_t size() const { return terms_->size(); }
    const Term& leading() const { return terms_->front(); }

    std::vector<VarIndex> variables() const;
    bool uses(Relation rel) const;
    bool uses_relations() const;
    std::uint32_t degree_in(VarIndex v) const;
    std::uint32_t total_degree() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned e) const;
    /// Replaces generator v by -v (complex conjugation for i^2 = -1).
    Polynomial negate_variable(VarIndex v) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    std::size_t hash() const;

    /// Leading term under the name-based term order.
    const Term& display_leading() const;
    std::string to_string() const;

private:
    explicit Polynomial(std::vector<Term> sorted_terms);
    std::shared_ptr<const std::vector<Term>> terms_;
};

/// Exact quotient a / b when b divides a in the free polynomial ring.
/// Returns nullopt when the division is not exact. `b` must not involve
/// relation-bearing generators.
std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b);

/// Greatest common divisor, normalised to leading coefficient 1.
/// Relation-bearing generators of the inputs are treated as free.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Distinct rational roots of a univariate polynomial (ascending), and the
/// cofactor left after removing the corresponding linear factors.
struct LinearFactorization {
    std::vector<Rational> roots;
    Polynomial remainder;
};
LinearFactorization linear_factors(const Polynomial& p);

}  // namespace spinfactor
