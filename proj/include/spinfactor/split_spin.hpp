#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinfactor/algebra.hpp"

namespace spinfactor {

/// Parameters of S(alpha, t, E) with dim E = n and Gram matrix of <,> on E.
struct SplitSpinConfig {
    Scalar alpha;
    Scalar t;
    std::size_t n = 1;
    Matrix gram;  // empty means the identity

    /// S(alpha, E): t = (alpha^2 - 1)/(alpha(alpha - 2)).
    static SplitSpinConfig s_alpha(const Scalar& alpha, std::size_t n);
    static SplitSpinConfig generic(std::size_t n);

    Matrix gram_matrix() const;
    nlohmann::json to_json() const;
    /// {alpha, t | "S-alpha", n, gram?}; "symbolic" gives the variable alpha or t.
    static SplitSpinConfig from_json(const nlohmann::json& j);
};

/// t of S(alpha, E). Throws PoleError when alpha is 0 or 2.
Scalar s_alpha_t(const Scalar& alpha);

std::vector<std::string> split_spin_labels(std::size_t n);

/// z1^2 = z1, z2^2 = z2, z1 z2 = 0, e z1 = alpha e, e z2 = (1 - alpha) e,
/// e f = <e,f>(z1 + t z2).
AlgebraPtr build(const SplitSpinConfig& config);
AlgebraPtr build_S_alpha(const Scalar& alpha, std::size_t n);
/// The S(alpha, E) table e f = -<e,f>(alpha(alpha-2) z1 + (alpha^2-1) z2).
AlgebraPtr build_S_alpha_original(const Scalar& alpha, std::size_t n, const Matrix& gram = {});

/// Gram matrix of (r,s) = (1+a)ak + (2-a)bl + (1+a+(2-a)t)<v,u>.
Matrix invariant_form(const SplitSpinConfig& config);
Scalar bilinear(const Matrix& form, const Element& x, const Element& y);

/// Unit c = z1 + z2.
Element unit(const AlgebraPtr& algebra);

struct SimplicityReport {
    enum class Verdict { simple, not_simple, generically_simple };
    Verdict verdict;
    std::string witness_label;           // e.g. "F z1"
    Subspace witness;                    // proper ideal when not simple
    bool witness_is_ideal = false;
    std::vector<std::string> certified;  // basis elements whose closure is everything
    std::vector<std::string> excluded_locus;

    nlohmann::json to_json() const;
};

SimplicityReport simplicity_report(const SplitSpinConfig& config);

/// z1 <-> z2, e_i -> scale * e_i.
LinearMap flip_map(const AlgebraPtr& algebra, const Scalar& e_scale);

/// z1 - alpha/(1-alpha) z2.
Element u_line_element(const AlgebraPtr& algebra, const Scalar& alpha);

}  // namespace spinfactor
