#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "spinfactor/cubic_form.hpp"

namespace spinfactor {

/// Hypothesis names used for gating.
inline constexpr const char* kHypGscf = "gscf axioms";
inline constexpr const char* kHypInvariant = "(rs,q) = (r,sq)";
inline constexpr const char* kHypTildeSharp = "tilde(r#s,q) = tilde(r,s#q)";
inline constexpr const char* kHypInner = "D = l((r,q) - T(r)T(q)/3)";
inline constexpr const char* kHypNondegenerate = "(,) nondegenerate";
inline constexpr const char* kHypDim2 = "dim V >= 2";

/// A GSCF together with its induced algebra and the operators built on it.
/// tilde(r,q) = (r,q) + k D(r,q) with k = 3 unless stated otherwise.
class DerivedContext {
public:
    explicit DerivedContext(GscfData data, Scalar tilde_coeff = Scalar(3));

    const Gscf& form() const;
    const AlgebraPtr& algebra() const { return form().algebra(); }
    std::size_t dim() const { return form().dim(); }
    Element c() const { return form().c(); }
    const Scalar& tilde_coeff() const;

    /// Set for split-spin instances.
    const std::optional<SplitSpinConfig>& split_spin() const;
    /// dim E for split-spin, dim V otherwise.
    std::size_t n() const;
    const nlohmann::json& parameters() const;
    void set_parameters(nlohmann::json p);
    void set_split_spin(SplitSpinConfig config);

    /// Indices of E in a split-spin basis (all indices otherwise).
    std::vector<std::size_t> e_indices() const;

    Scalar inner(const Element& r, const Element& q) const { return form().inner(r, q); }
    Scalar delta(const Element& r, const Element& q) const { return form().delta(r, q); }
    Element sharp(const Element& r) const { return form().sharp(r); }
    Element sharp_product(const Element& r, const Element& q) const { return form().sharp_product(r, q); }

    /// U_r(s) = (r,s)r - (r#)#s
    Element u_op(const Element& r, const Element& s) const;
    /// U_{r,q}(s) = U_{r+q}(s) - U_r(s) - U_q(s)
    Element u_op_lin(const Element& r, const Element& q, const Element& s) const;
    /// {r,s,q} = (r,s)q + (q,s)r - (r#q)#s
    Element triple(const Element& r, const Element& s, const Element& q) const;
    Scalar tilde(const Element& r, const Element& q) const;
    /// (r,s,q)# = (r#s)#q - r#(s#q)
    Element sharp_associator(const Element& r, const Element& s, const Element& q) const;
    /// 4 Psi(r,s,q) = (r,s,q)# + tilde(r,s)q - tilde(s,q)r
    Element psi(const Element& r, const Element& s, const Element& q) const;
    /// Psi(r,s,q) = (r,s,q) - D(q,s)r + D(r,s)q + phi_general(r,s,q)c
    Element psi_from_associator(const Element& r, const Element& s, const Element& q) const;
    /// 4 Psi(r,s,q) = U_{q,s}(r) - U_{r,s}(q) + k(D(r,s)q - D(q,s)r), k the tilde coefficient
    Element psi_from_u(const Element& r, const Element& s, const Element& q) const;
    /// (D(q#s,r) - D(r#s,q) + 2T(r)D(s,q) - 2T(q)D(r,s) + (q#s,r) - (r#s,q))/4
    Scalar phi_general(const Element& r, const Element& s, const Element& q) const;
    /// (T(r)D(s,q) - T(q)D(r,s) + D(r#s,q) - D(q#s,r))/2
    Scalar phi_simple(const Element& r, const Element& s, const Element& q) const;
    /// phi_simple when tilde is #-invariant, phi_general otherwise.
    Scalar phi(const Element& r, const Element& s, const Element& q) const;

    /// Cached pass/fail of a named hypothesis (kHyp*).
    Status hypothesis(const std::string& name) const;
    /// The inner constant when kHypInner holds.
    std::optional<Scalar> inner_lambda() const;

private:
    struct State;
    std::shared_ptr<State> state_;
};

DerivedContext split_spin_context(const SplitSpinConfig& config);
/// Dual-number data over Q[lambda]/(lambda^2) with tilde(r,q) = (r,q) + D(r,q).
DerivedContext example1_context();

/// Argument slot of a checked identity: either every basis element of
/// `support` in turn, or one generic element with symbolic coordinates.
struct Arg {
    enum class Kind { basis, generic };
    std::string name;
    Kind kind = Kind::basis;
    std::vector<std::size_t> support;  // empty means all

    static Arg basis(std::string name, std::vector<std::size_t> support = {}) {
        return Arg{std::move(name), Kind::basis, std::move(support)};
    }
    static Arg generic(std::string name, std::vector<std::size_t> support = {}) {
        return Arg{std::move(name), Kind::generic, std::move(support)};
    }
};

using Residual = std::variant<Scalar, Element>;
using IdentityFn = std::function<Residual(const std::vector<Element>&)>;

/// Evaluates `fn` on every combination of the slots and passes iff every
/// residual is exactly zero. Basis slots are only sound for arguments in
/// which the identity is linear. Skipped when a hypothesis fails.
CheckResult check_identity(const DerivedContext& ctx, std::string id, const std::vector<std::string>& hypotheses,
                           const std::vector<Arg>& args, const IdentityFn& fn);

/// Passes iff all statements hold or all fail.
CheckResult check_equivalence(const DerivedContext& ctx, std::string id, const std::vector<std::string>& hypotheses,
                              const std::vector<std::pair<std::vector<Arg>, IdentityFn>>& statements);

using Task = std::function<CheckResult()>;
/// Runs tasks on up to `jobs` threads; results come back in task order.
std::vector<CheckResult> run_tasks(const std::vector<Task>& tasks, unsigned jobs);

/// Identities for general GSCFs, each gated by its hypotheses.
Report verify_lemma_suite(const DerivedContext& ctx, unsigned jobs = 1);
/// The dual-number subset: tilde with coefficient 1, Psi relations, W_b.
Report verify_example1_suite(const DerivedContext& ctx, unsigned jobs = 1);
/// Split-spin only: tilde #-invariance, the Psi closed form, the auxiliary
/// equalities and W_b with b generic and a, c, d running over the basis.
Report verify_theorem3(const DerivedContext& ctx, unsigned jobs = 1);
/// [v,u,w] = Psi(v,w,u) on E-vectors.
Report verify_lie_triple(const DerivedContext& ctx, unsigned jobs = 1);
/// N(Psi) = 0, Psi^3 = -S(Psi)Psi, D(Psi,x#s) = D(Psi#s,x), <u,Psi> = 0.
Report verify_corollary3_4(const DerivedContext& ctx, unsigned jobs = 1);

}  // namespace spinfactor
