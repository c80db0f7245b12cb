#include <doctest.h>

#include <random>

#include "spinfactor/derived_ops.hpp"

using namespace spinfactor;

namespace {

bool no_failures(const Report& r) {
    bool ok = true;
    for (const auto& c : r.checks) {
        if (c.status == Status::fail) {
            MESSAGE(c.id << " residual " << c.residual << " " << c.note);
            ok = false;
        }
    }
    return ok;
}

std::size_t count(const Report& r, Status s) {
    std::size_t k = 0;
    for (const auto& c : r.checks) k += c.status == s;
    return k;
}

Element random_element(const AlgebraPtr& alg, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    Vector v(alg->dim());
    for (auto& x : v) x = Scalar::fraction(num(rng), den(rng));
    return Element(alg, v);
}

// Psi with the c-component fixed by T(Psi) = 0 instead of phi.
Element psi_oracle(const DerivedContext& ctx, const Element& r, const Element& s, const Element& q) {
    const Element x = associator(r, s, q) - ctx.delta(q, s) * r + ctx.delta(r, s) * q;
    return x - (ctx.form().T(x) / ctx.form().T(ctx.c())) * ctx.c();
}

}  // namespace

TEST_CASE("U_c is the identity") {
    const auto ctx = split_spin_context(SplitSpinConfig::generic(2));
    const Element r = generic_element(ctx.algebra(), "r");
    CHECK(ctx.u_op(ctx.c(), r) == r);
    CHECK(ctx.u_op_lin(r, r, ctx.c()) == Scalar(2) * ctx.u_op(r, ctx.c()));
}

TEST_CASE("associator on E vectors") {
    const Scalar a = Scalar::variable("alpha"), t = Scalar::variable("t");
    const auto ctx = split_spin_context(SplitSpinConfig::generic(3));
    const auto alg = ctx.algebra();
    const Element u = generic_element(alg, "u", {2, 3, 4});
    const Element v = generic_element(alg, "v", {2, 3, 4});
    const Element w = generic_element(alg, "w", {2, 3, 4});
    auto dot = [](const Element& x, const Element& y) {
        Scalar s;
        for (std::size_t i = 2; i < 5; ++i) s += x[i] * y[i];
        return s;
    };
    const Scalar kappa = a + t * (1 - a);
    CHECK(associator(u, v, w) == kappa * (dot(u, v) * w - dot(v, w) * u));
}

TEST_CASE("Psi agrees with the associator definition") {
    std::mt19937 rng(7);
    for (const auto& cfg : {SplitSpinConfig{Scalar(3), Scalar(5), 3, {}}, SplitSpinConfig::s_alpha(Scalar(3), 2),
                            SplitSpinConfig{Scalar::fraction(1, 3), Scalar(-2), 2, {}}}) {
        const auto ctx = split_spin_context(cfg);
        for (int k = 0; k < 5; ++k) {
            const Element r = random_element(ctx.algebra(), rng);
            const Element s = random_element(ctx.algebra(), rng);
            const Element q = random_element(ctx.algebra(), rng);
            const Element p = ctx.psi(r, s, q);
            CHECK(p == psi_oracle(ctx, r, s, q));
            CHECK(ctx.psi_from_associator(r, s, q) == p);
            CHECK(ctx.psi_from_u(r, s, q) == p);
            CHECK(ctx.form().T(p).is_zero());
            CHECK((ctx.psi(q, s, r) + p).is_zero());
            CHECK(ctx.psi(ctx.c(), s, q).is_zero());
            CHECK(ctx.psi(r, ctx.c(), q).is_zero());
            CHECK(ctx.psi(r, s, ctx.c()).is_zero());
            CHECK((p * p * p + ctx.form().S(p) * p).is_zero());
        }
    }
}

TEST_CASE("Psi symbolic on basis triples") {
    const auto ctx = split_spin_context(SplitSpinConfig::generic(2));
    const auto alg = ctx.algebra();
    for (std::size_t i = 0; i < alg->dim(); ++i) {
        for (std::size_t j = 0; j < alg->dim(); ++j) {
            for (std::size_t k = 0; k < alg->dim(); ++k) {
                const Element r = Element::basis(alg, i), s = Element::basis(alg, j), q = Element::basis(alg, k);
                CHECK(ctx.psi(r, s, q) == psi_oracle(ctx, r, s, q));
            }
        }
    }
}

TEST_CASE("hypotheses") {
    const auto gen = split_spin_context(SplitSpinConfig::generic(2));
    CHECK(gen.hypothesis(kHypGscf) == Status::pass);
    CHECK(gen.hypothesis(kHypInner) == Status::fail);
    CHECK(gen.hypothesis(kHypInvariant) == Status::fail);

    const Scalar a = Scalar::variable("alpha");
    const auto s = split_spin_context(SplitSpinConfig::s_alpha(a, 2));
    CHECK(s.hypothesis(kHypInner) == Status::pass);
    CHECK(s.hypothesis(kHypInvariant) == Status::pass);
    REQUIRE(s.inner_lambda());
    CHECK(*s.inner_lambda() == s_alpha_inner_lambda(a));

    const auto ex = example1_context();
    CHECK(ex.hypothesis(kHypGscf) == Status::fail);
    CHECK(ex.tilde_coeff() == Scalar(1));
}

TEST_CASE("lemma suite on generic split spin") {
    for (std::size_t n : {2, 3}) {
        const Report r = verify_lemma_suite(split_spin_context(SplitSpinConfig::generic(n)));
        CHECK(no_failures(r));
        CHECK(count(r, Status::pass) > 30);
    }
}

TEST_CASE("lemma suite on S(alpha, E)") {
    const Report r = verify_lemma_suite(split_spin_context(SplitSpinConfig::s_alpha(Scalar::variable("alpha"), 3)));
    CHECK(no_failures(r));
    CHECK(count(r, Status::skipped) == 0);
}

TEST_CASE("lemma suite with zero Delta") {
    const GscfData d = substitute(example1_gscf(), {{"lambda", Scalar(0)}});
    for (const auto& s : d.Delta) CHECK(s.is_zero());
    const DerivedContext ctx(d);
    CHECK(ctx.hypothesis(kHypGscf) == Status::pass);
    CHECK(ctx.hypothesis(kHypInner) == Status::pass);
    const Report r = verify_lemma_suite(ctx);
    CHECK(no_failures(r));
    CHECK(count(r, Status::pass) > 30);
}

TEST_CASE("split spin suites") {
    for (const auto& cfg : {SplitSpinConfig::generic(2), SplitSpinConfig::generic(3),
                            SplitSpinConfig::s_alpha(Scalar::variable("alpha"), 3)}) {
        const auto ctx = split_spin_context(cfg);
        for (const Report& r : {verify_theorem3(ctx), verify_lie_triple(ctx), verify_corollary3_4(ctx)}) {
            CHECK(no_failures(r));
            CHECK(count(r, Status::pass) > 0);
        }
    }
}

TEST_CASE("dual-number suite") {
    const auto ctx = example1_context();
    const Report r = verify_example1_suite(ctx);
    CHECK(r.all_passed());
    CHECK(r.checks.size() >= 10);
    CHECK(no_failures(verify_lemma_suite(ctx)));
}

TEST_CASE("W_b on random elements") {
    std::mt19937 rng(11);
    const auto alg = build(SplitSpinConfig{Scalar(3), Scalar::fraction(8, 3), 3, {}});
    for (int k = 0; k < 10; ++k) {
        const Element a = random_element(alg, rng), b = random_element(alg, rng);
        const Element c = random_element(alg, rng), d = random_element(alg, rng);
        CHECK(three_associators(a, b, c, d).is_zero());
    }
}

TEST_CASE("check_identity reports the failing slot") {
    const auto ctx = split_spin_context(SplitSpinConfig{Scalar(3), Scalar(5), 2, {}});
    const auto bad = check_identity(ctx, "r^2 = r", {}, {Arg::basis("r")},
                                    [](const std::vector<Element>& x) -> Residual { return x[0] * x[0] - x[0]; });
    CHECK(bad.status == Status::fail);
    CHECK(bad.note.find("r=") != std::string::npos);
    const auto eq = check_equivalence(
        ctx, "both false", {},
        {{{Arg::basis("r")}, [](const std::vector<Element>& x) -> Residual { return x[0]; }},
         {{Arg::basis("r")}, [](const std::vector<Element>& x) -> Residual { return x[0] * x[0]; }}});
    CHECK(eq.status == Status::pass);
}
