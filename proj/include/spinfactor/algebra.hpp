#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinfactor/linalg.hpp"

namespace spinfactor {

/// Commutative algebra given by a labeled basis and structure constants.
class AlgebraDescriptor {
public:
    struct Entry {
        std::size_t index;
        Scalar coeff;
    };

    /// `products[i][j]` is the coordinate vector of b_i b_j for i <= j.
    AlgebraDescriptor(std::vector<std::string> labels, const std::vector<std::vector<Vector>>& upper);

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t index_of(const std::string& label) const;
    /// Sparse coordinates of b_i b_j.
    const std::vector<Entry>& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    Vector product_vector(std::size_t i, std::size_t j) const;

    nlohmann::json to_json() const;
    static std::shared_ptr<const AlgebraDescriptor> from_json(const nlohmann::json& j);

    friend bool operator==(const AlgebraDescriptor& a, const AlgebraDescriptor& b);

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Entry>> table_;
};

using AlgebraPtr = std::shared_ptr<const AlgebraDescriptor>;

AlgebraPtr make_algebra(std::vector<std::string> labels, const std::vector<std::vector<Vector>>& upper);

class Element {
public:
    Element() = default;
    Element(AlgebraPtr algebra, Vector coords);
    static Element zero(AlgebraPtr algebra);
    static Element basis(AlgebraPtr algebra, std::size_t i);
    static Element basis(AlgebraPtr algebra, const std::string& label);

    const AlgebraPtr& algebra() const { return algebra_; }
    const Vector& coords() const { return coords_; }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }
    bool is_zero() const { return spinfactor::is_zero(coords_); }

    Element operator-() const;
    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Scalar& c, const Element& a);
    Element& operator+=(const Element& b) { return *this = *this + b; }
    Element& operator-=(const Element& b) { return *this = *this - b; }
    friend bool operator==(const Element& a, const Element& b);

    Element substitute(const Assignment& assignment) const;
    std::string to_string() const;

private:
    AlgebraPtr algebra_;
    Vector coords_;
};

/// Element whose coordinates on `support` (default: all) are the fresh
/// variables <prefix>_<label>; other coordinates are zero.
Element generic_element(const AlgebraPtr& algebra, const std::string& prefix,
                        const std::vector<std::size_t>& support = {});

/// Algebra product.
Element multiply(const Element& x, const Element& y);
inline Element operator*(const Element& x, const Element& y) { return multiply(x, y); }
/// (xy)z - x(yz)
Element associator(const Element& x, const Element& y, const Element& z);
/// W_b(a,c,d) = ((a,b,c),d,b) + ((c,b,d),a,b) + ((d,b,a),c,b)
Element three_associators(const Element& a, const Element& b, const Element& c, const Element& d);

/// Linear endomorphism; column j is the image of basis element j.
class LinearMap {
public:
    LinearMap(AlgebraPtr algebra, Matrix matrix);
    static LinearMap identity(AlgebraPtr algebra);
    const Matrix& matrix() const { return matrix_; }
    const AlgebraPtr& algebra() const { return algebra_; }
    Element apply(const Element& x) const;
    LinearMap operator*(const LinearMap& other) const;
    LinearMap operator-(const LinearMap& other) const;

private:
    AlgebraPtr algebra_;
    Matrix matrix_;
};

LinearMap right_mult(const Element& x);
Subspace annihilator(const Element& x);
bool is_ideal(const AlgebraDescriptor& algebra, const Subspace& subspace);
Subspace ideal_closure(const AlgebraPtr& algebra, const std::vector<Element>& generators);
bool is_automorphism(const LinearMap& phi);

class AlgebraMismatchError : public std::invalid_argument {
public:
    AlgebraMismatchError() : std::invalid_argument("elements belong to different algebras") {}
};

}  // namespace spinfactor
