#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spinfactor/report.hpp"
#include "spinfactor/split_spin.hpp"

namespace spinfactor {

/// Nonassociative commutative monomial in x1, x2, ... stored as a canonical
/// binary tree: at every node the left child is <= the right child.
/// Trees are ordered by degree, then sorted leaves, then shape, then children.
class CommutativeMonomial {
public:
    static CommutativeMonomial variable(int index);  // x_index, index >= 1
    static CommutativeMonomial product(const CommutativeMonomial& a, const CommutativeMonomial& b);
    /// Accepts "((x3 x5) x4) (x1 x2)", "((x_3x_5)x_4)(x_1x_2)"; juxtaposition
    /// associates to the left. Throws std::invalid_argument.
    static CommutativeMonomial parse(std::string_view text);

    bool is_variable() const { return node_->left == nullptr; }
    int index() const { return node_->var; }
    CommutativeMonomial left() const { return CommutativeMonomial(node_->left); }
    CommutativeMonomial right() const { return CommutativeMonomial(node_->right); }
    std::size_t degree() const { return node_->leaves.size(); }
    /// Sorted variable indices with multiplicity.
    const std::vector<int>& leaves() const { return node_->leaves; }
    bool is_multilinear() const;
    /// Bracket type with '*' for letters, e.g. "((**)*)(**)".
    const std::string& shape() const { return node_->shape; }
    /// Higher-degree factor first, e.g. "((x3 x5) x4) (x1 x2)".
    const std::string& to_string() const { return node_->text; }

    Element evaluate(const std::vector<Element>& assignment) const;

    friend int compare(const CommutativeMonomial& a, const CommutativeMonomial& b);
    friend bool operator==(const CommutativeMonomial& a, const CommutativeMonomial& b) { return compare(a, b) == 0; }
    friend bool operator<(const CommutativeMonomial& a, const CommutativeMonomial& b) { return compare(a, b) < 0; }

private:
    struct Node {
        int var = 0;
        std::shared_ptr<const Node> left, right;
        std::vector<int> leaves;
        std::string shape, text;
    };
    explicit CommutativeMonomial(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Linear combination of commutative monomials.
class MagmaPolynomial {
public:
    MagmaPolynomial() = default;
    MagmaPolynomial(const CommutativeMonomial& m);  // NOLINT(google-explicit-constructor)
    static MagmaPolynomial variable(int index) { return CommutativeMonomial::variable(index); }

    const std::map<CommutativeMonomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    MagmaPolynomial operator-() const;
    friend MagmaPolynomial operator+(const MagmaPolynomial& a, const MagmaPolynomial& b);
    friend MagmaPolynomial operator-(const MagmaPolynomial& a, const MagmaPolynomial& b);
    friend MagmaPolynomial operator*(const Scalar& c, const MagmaPolynomial& a);
    friend MagmaPolynomial operator*(const MagmaPolynomial& a, const MagmaPolynomial& b);

    Element evaluate(const std::vector<Element>& assignment) const;
    /// x_i -> image[i - 1].
    MagmaPolynomial substitute(const std::vector<MagmaPolynomial>& image) const;
    std::string to_string() const;

private:
    std::map<CommutativeMonomial, Scalar> terms_;
};

MagmaPolynomial associator(const MagmaPolynomial& a, const MagmaPolynomial& b, const MagmaPolynomial& c);

struct MultilinearBasis {
    std::size_t degree = 0;
    std::vector<CommutativeMonomial> monomials;

    std::size_t size() const { return monomials.size(); }
    std::optional<std::size_t> index_of(const CommutativeMonomial& m) const;
    /// Coordinates of a polynomial supported on the basis; throws otherwise.
    Vector coordinates(const MagmaPolynomial& p) const;
    /// Number of monomials of each shape.
    std::map<std::string, std::size_t> shape_counts() const;
    nlohmann::json to_json() const;
};

/// All multilinear monomials of the given degree, sorted.
MultilinearBasis gen_multilinear(std::size_t degree);
/// The ten degree-5 monomials removed from P to form B.
const std::vector<std::string>& excluded_monomials_z();
/// P minus the excluded monomials (95 monomials).
MultilinearBasis reduced_basis_B();

struct IdentityCandidate {
    MultilinearBasis basis;
    Vector coeffs;

    MagmaPolynomial polynomial() const;
    std::string to_string() const;
};

/// Evaluates every monomial of a basis on one assignment, sharing subproducts.
class BasisEvaluator {
public:
    explicit BasisEvaluator(const MultilinearBasis& basis);
    std::vector<Element> evaluate(const std::vector<Element>& assignment) const;

private:
    struct Step {
        int var;  // > 0 for x_var
        std::size_t left, right;
    };
    std::vector<Step> steps_;
    std::vector<std::size_t> outputs_;
};

struct NullspaceOptions {
    /// Tuples of basis indices; all dim^degree tuples when empty.
    std::vector<std::vector<std::size_t>> substitutions;
    unsigned jobs = 1;
};

struct NullspaceResult {
    std::size_t basis_size = 0;
    std::size_t substitutions = 0;
    /// Distinct values of sum l_i b_i over the substitutions.
    std::size_t distinct_substitution_values = 0;
    /// Distinct coordinate equations (including the zero equation if present).
    std::size_t rows_after_dedup = 0;
    std::size_t rank = 0;
    std::vector<IdentityCandidate> nullspace;
    std::vector<std::string> excluded_locus;
    double elapsed_ms = 0;

    nlohmann::json to_json(bool with_vectors = true) const;
};

/// The linear system sum l_i coord_k(b_i(tuple)) = 0 for all substitutions,
/// solved exactly. Scalars must be rational.
NullspaceResult identity_nullspace(const AlgebraPtr& algebra, const MultilinearBasis& basis,
                                   const NullspaceOptions& options = {});

/// Generic rank of the substitution system over Q(alpha) for an algebra whose
/// structure constants are polynomials in `parameter`.
struct ParametricRankResult {
    bool completed = false;
    std::size_t basis_size = 0;
    std::size_t rows_after_dedup = 0;
    std::size_t generic_rank = 0;
    std::string parameter;
    Scalar sample;
    /// Determinant of a maximal minor that is nonzero at `sample`.
    std::optional<Scalar> minor_determinant;
    /// Rational parameter values where the rank really drops.
    std::vector<Rational> excluded_roots;
    /// Rational roots of the minor where the rank turned out to be full.
    std::vector<Rational> spurious_roots;
    /// Factors without rational roots where the rank drops, and where it does not.
    std::vector<Polynomial> excluded_factors;
    std::vector<Polynomial> spurious_factors;
    std::string note;
    double elapsed_ms = 0;

    bool trivial_nullspace() const { return completed && generic_rank == basis_size; }
    /// Factors of the rank-drop locus, e.g. "2*alpha - 1".
    std::vector<std::string> excluded_locus() const;
    nlohmann::json to_json() const;
};

ParametricRankResult parametric_rank(const AlgebraPtr& algebra, const MultilinearBasis& basis,
                                     const std::string& parameter, const Scalar& sample, unsigned jobs = 1,
                                     double budget_seconds = 240);

/// The degree-5 multilinearizations of ((a,b,c),d,b) + ((c,b,d),a,b) + ((d,b,a),c,b)
/// over all assignments of x1..x5, as polynomials.
std::vector<MagmaPolynomial> wb_multilinearizations();
/// Basis of their span in the coordinates of `basis` (degree 5).
Subspace wb_consequence_span(const MultilinearBasis& basis);

/// ((c,a,e),b,d) + ((e,a,d),b,c) + ((d,a,c),b,e) + (c,b,a)[R_d,R_e] + (d,b,a)[R_e,R_c]
/// + (e,b,a)[R_c,R_d] in a,b,c,d,e = x1..x5, with x[R_d,R_e] = (xd)e - (xe)d.
MagmaPolynomial degree5_identity_polynomial();

/// ((a,b,c),d,b) + ((c,b,d),a,b) + ((d,b,a),c,b) in x1 = a, x2 = b, x3 = c, x4 = d.
MagmaPolynomial wb_polynomial();

struct WbCheck {
    bool holds = false;
    std::vector<std::string> witness;  // labels of a, b, c, d
    std::string residual;
    CheckResult check;
};

/// W_b on all basis tuples (a, c, d) with b generic; on failure also looks for
/// a witness with every argument a basis element or a sum of two.
WbCheck check_wb(const AlgebraPtr& algebra, const std::string& id = "wb/W_b(a,c,d) = 0");

/// M_n(Q) with a o b = ab + ba, basis E11, E12, ...
AlgebraPtr matrix_jordan_plus(std::size_t n);

/// The three displayed degree-4 identities, each shown to fail on
/// S(alpha,t,E) by an explicit witness compared to its closed form.
Report check_osborn_degree4(const SplitSpinConfig& config);

/// The displayed identity at (alpha, t) = (11/4, 5): zero on all basis tuples,
/// inside the degree-5 nullspace, outside the W_b span, and nonzero at (3, 8/3).
Report check_remark8(unsigned jobs = 1);

/// Counts of P, its shape split, |B| and the substitution count.
Report check_counts();

/// Nullspace of B on S(alpha,E), dim E = 2, at each sample alpha, plus the
/// parametric run when `symbolic` is set.
Report check_reduced_nullspace(const std::vector<Scalar>& alphas, bool symbolic, unsigned jobs = 1);

/// W_b fails on M3(Q) with a o b = ab + ba; the degree-3 nullspace is trivial.
Report check_negative_control();

}  // namespace spinfactor
