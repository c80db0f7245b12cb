#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinfactor/algebra.hpp"
#include "spinfactor/report.hpp"
#include "spinfactor/split_spin.hpp"

namespace spinfactor {

/// Raw tensors of a generalized sharped cubic form (N, Delta, #, c).
struct GscfData {
    std::vector<std::string> labels;
    std::vector<Scalar> N3;     // dim^3, fully symmetric
    std::vector<Scalar> Delta;  // dim^2, symmetric
    std::vector<Vector> sharp;  // dim^2, sharp[i*dim+j] = b_i # b_j
    Vector c;
    std::string name;

    std::size_t dim() const { return labels.size(); }
    nlohmann::json to_json() const;
    static GscfData from_json(const nlohmann::json& j);
};

class CubicityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using CubicMap = std::function<Scalar(const Vector&)>;
using QuadraticMap = std::function<Vector(const Vector&)>;
using BilinearMap = std::function<Scalar(const Vector&, const Vector&)>;

/// Full linearization N(v,u,w) = N(v+u+w) - N(v+u) - N(v+w) - N(u+w) + N(u) + N(v) + N(w)
/// on basis triples. Throws CubicityError if N(r,r,r) != 6 N(r) on test vectors.
std::vector<Scalar> linearize_cubic(const CubicMap& N, std::size_t dim);
/// b_i # b_j = (b_i + b_j)^# - b_i^# - b_j^#, and b_i # b_i = 2 b_i^#.
std::vector<Vector> sharp_from_quadratic(const QuadraticMap& sharp, std::size_t dim);
std::vector<Scalar> tabulate_bilinear(const BilinearMap& form, std::size_t dim);

/// Evaluator for the forms attached to GscfData, and its induced algebra
/// rq = (r#q + T(r)q + T(q)r - S(r,q)c)/2.
class Gscf {
public:
    explicit Gscf(GscfData data);

    const GscfData& data() const { return data_; }
    const AlgebraPtr& algebra() const { return algebra_; }
    std::size_t dim() const { return data_.dim(); }
    Element c() const { return Element(algebra_, data_.c); }
    Element element(Vector coords) const { return Element(algebra_, std::move(coords)); }

    Scalar N3(const Element& r, const Element& q, const Element& s) const;
    Scalar N(const Element& r) const;
    Scalar N2(const Element& r, const Element& q) const;  // N(r,r,q)/2
    Scalar T(const Element& r) const;
    Scalar S(const Element& r) const;
    Scalar S2(const Element& r, const Element& q) const;  // N(r,q,c)
    Scalar delta(const Element& r, const Element& q) const;
    /// T(r)T(q) - S(r,q) - Delta(r,q)
    Scalar inner(const Element& r, const Element& q) const;
    Element sharp_product(const Element& r, const Element& q) const;
    Element sharp(const Element& r) const;

private:
    struct Trilinear {
        std::size_t i, j, k;
        Scalar coeff;
    };
    struct Bilinear {
        std::size_t i, j;
        Scalar coeff;
    };
    GscfData data_;
    std::vector<Trilinear> n3_;
    std::vector<Bilinear> delta_;
    std::vector<Scalar> t_;   // T(b_i)
    std::vector<Scalar> s2_;  // S(b_i, b_j)
    AlgebraPtr algebra_;
};

/// Split spin form: N(az1+bz2+v) = ab(alpha a + (1-alpha) b) - <v,v>((1-alpha)t a + alpha b), etc.
GscfData split_spin_gscf(const SplitSpinConfig& config);
/// The dual-number data over Q[lambda]/(lambda^2); not a GSCF (fails the adjoint axiom).
GscfData example1_gscf();
/// Same N, # and c with Delta forced to zero.
GscfData with_zero_delta(GscfData data);

/// Applies the assignment to every stored scalar.
GscfData substitute(const GscfData& data, const Assignment& assignment);

/// Checks the three GSCF axioms and the data invariants on generic elements.
std::vector<CheckResult> verify_gscf_axioms(const Gscf& form);
/// r^3 - T(r)r^2 + S(r)r - N(r)c = 0, r# = r^2 - T(r)r + S(r)c, r#r = N(r)c.
std::vector<CheckResult> verify_cubic_identity(const Gscf& form, const std::optional<Element>& r = std::nullopt);

struct InnerForm {
    Matrix inner;  // (b_i, b_j)
    Matrix delta;  // Delta(b_i, b_j)
};

/// (r,q) = ((1 + l/3)T(r)T(q) - S(r,q))/(l + 1), Delta = l((r,q) - T(r)T(q)/3).
/// Throws std::invalid_argument when l = -1.
InnerForm inner_form_from(const std::vector<Scalar>& N3, const Vector& c, const Scalar& lambda);

struct InnerResult {
    bool inner = false;
    std::optional<Scalar> lambda;
};

/// Solves Delta(r,q) = l((r,q) - T(r)T(q)/3) for a single scalar l.
InnerResult is_inner(const Gscf& form);

/// Lambda of the inner S(alpha, E) form: 3a(1-a)/((1+a)(a-2)).
Scalar s_alpha_inner_lambda(const Scalar& alpha);

}  // namespace spinfactor
