#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "spinfactor/identity_engine.hpp"

using namespace spinfactor;

namespace {

// Independent enumeration: all ordered binary trees over every leaf
// permutation, canonicalised by sorting child strings.
std::vector<std::string> ordered_trees(const std::vector<int>& leaves) {
    if (leaves.size() == 1) return {"x" + std::to_string(leaves[0])};
    std::vector<std::string> out;
    for (std::size_t k = 1; k < leaves.size(); ++k) {
        const std::vector<int> l(leaves.begin(), leaves.begin() + static_cast<long>(k));
        const std::vector<int> r(leaves.begin() + static_cast<long>(k), leaves.end());
        for (const auto& a : ordered_trees(l)) {
            for (const auto& b : ordered_trees(r)) out.push_back("(" + std::min(a, b) + "," + std::max(a, b) + ")");
        }
    }
    return out;
}

std::size_t brute_count(int degree) {
    std::vector<int> leaves(degree);
    std::iota(leaves.begin(), leaves.end(), 1);
    std::set<std::string> seen;
    do {
        for (const auto& t : ordered_trees(leaves)) seen.insert(t);
    } while (std::next_permutation(leaves.begin(), leaves.end()));
    return seen.size();
}

Element random_element(const AlgebraPtr& alg, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-7, 7), den(1, 3);
    Vector v(alg->dim());
    for (auto& s : v) s = Scalar::fraction(num(rng), den(rng));
    return Element(alg, v);
}

// Random re-commutation of a monomial, built back through product().
CommutativeMonomial shuffle(const CommutativeMonomial& m, std::mt19937& rng) {
    if (m.is_variable()) return m;
    const auto l = shuffle(m.left(), rng), r = shuffle(m.right(), rng);
    return rng() % 2 ? CommutativeMonomial::product(l, r) : CommutativeMonomial::product(r, l);
}

std::string commuted_text(const CommutativeMonomial& m, std::mt19937& rng) {
    if (m.is_variable()) return m.to_string();
    auto wrap = [](const CommutativeMonomial& x, std::mt19937& g) {
        return x.is_variable() ? x.to_string() : "(" + commuted_text(x, g) + ")";
    };
    const std::string a = wrap(m.left(), rng), b = wrap(m.right(), rng);
    return rng() % 2 ? a + " " + b : b + a;
}

bool passed(const Report& r) {
    for (const auto& c : r.checks) {
        if (c.status != Status::pass) MESSAGE(c.id << ": " << c.note << " " << c.residual);
    }
    return r.all_passed();
}

}  // namespace

TEST_CASE("multilinear counts") {
    const std::size_t expected[] = {1, 1, 3, 15, 105};
    for (int d = 1; d <= 5; ++d) {
        const auto b = gen_multilinear(d);
        CHECK(b.size() == expected[d - 1]);
        CHECK(b.size() == brute_count(d));
        for (const auto& m : b.monomials) CHECK(m.is_multilinear());
    }
    const auto p = gen_multilinear(5);
    const auto shapes = p.shape_counts();
    CHECK(shapes.size() == 3);
    CHECK(shapes.at("(((**)*)*)*") == 60);
    CHECK(shapes.at("((**)*)(**)") == 30);
    CHECK(shapes.at("((**)(**))*") == 15);
    CHECK(gen_multilinear(2).monomials.front().to_string() == "x1 x2");
    CHECK_THROWS_AS(gen_multilinear(0), std::invalid_argument);
}

TEST_CASE("canonical form") {
    std::mt19937 rng(3);
    const auto p = gen_multilinear(5);
    const auto alg = build(SplitSpinConfig{Scalar(3), Scalar(5), 2, {}});
    for (const auto& m : p.monomials) {
        CHECK(CommutativeMonomial::parse(m.to_string()) == m);
        CHECK(shuffle(m, rng) == m);
        CHECK(CommutativeMonomial::parse(commuted_text(m, rng)) == m);
    }
    for (int k = 0; k < 10; ++k) {
        const auto& m = p.monomials[rng() % p.size()];
        const std::string text = commuted_text(m, rng);
        std::vector<Element> args;
        for (int i = 0; i < 5; ++i) args.push_back(random_element(alg, rng));
        CHECK(CommutativeMonomial::parse(text).evaluate(args) == m.evaluate(args));
    }
    CHECK(CommutativeMonomial::parse("((x_3 x_5) x_4) (x_1 x_2)") == CommutativeMonomial::parse("(x1x2)(x4(x5x3))"));
    CHECK(CommutativeMonomial::parse("((x3 x5) x4) (x1 x2)").to_string() == "((x3 x5) x4) (x1 x2)");
    CHECK(CommutativeMonomial::parse("(((x1 x5) x4) x3) x2").shape() == "(((**)*)*)*");
    CHECK_THROWS_AS(CommutativeMonomial::parse("(x1 x2"), std::invalid_argument);
    CHECK_THROWS_AS(CommutativeMonomial::parse("x1 y2"), std::invalid_argument);
    CHECK_THROWS_AS(CommutativeMonomial::parse("x1)"), std::invalid_argument);
}

TEST_CASE("reduced basis") {
    const auto p = gen_multilinear(5);
    const auto b = reduced_basis_B();
    CHECK(b.size() == 95);
    CHECK(excluded_monomials_z().size() == 10);
    for (const auto& z : excluded_monomials_z()) {
        const auto m = CommutativeMonomial::parse(z);
        CHECK(p.index_of(m).has_value());
        CHECK_FALSE(b.index_of(m).has_value());
    }
}

TEST_CASE("monomial evaluation") {
    const Scalar t = Scalar::variable("t");
    const auto alg = build(SplitSpinConfig::generic(2));
    const Element z1 = Element::basis(alg, "z1"), e = Element::basis(alg, "e1"), f = Element::basis(alg, "e2");
    const auto m3 = CommutativeMonomial::parse("(x1 x2) x3");
    CHECK(m3.evaluate({z1, z1, z1}) == z1);
    CHECK(CommutativeMonomial::parse("x1 x2").evaluate({e, f}).is_zero());
    CHECK(m3.evaluate({e, e, z1}) == z1);
    CHECK(m3.evaluate({e, e, e}) == (Scalar::variable("alpha") + t * (1 - Scalar::variable("alpha"))) * e);
}

TEST_CASE("free polynomials") {
    std::mt19937 rng(5);
    const auto alg = build(SplitSpinConfig{Scalar::fraction(2, 5), Scalar(7), 2, {}});
    for (int k = 0; k < 5; ++k) {
        std::vector<Element> args;
        for (int i = 0; i < 4; ++i) args.push_back(random_element(alg, rng));
        CHECK(wb_polynomial().evaluate(args) == three_associators(args[0], args[1], args[2], args[3]));
        const auto x1 = MagmaPolynomial::variable(1), x2 = MagmaPolynomial::variable(2);
        CHECK((x1 * x2 - x2 * x1).is_zero());
        CHECK(associator(x1, x2, x1).is_zero());
    }
    const auto lin = wb_multilinearizations();
    for (const auto& q : lin) {
        for (const auto& [m, c] : q.terms()) CHECK(m.is_multilinear());
    }
    const auto p = gen_multilinear(5);
    const Subspace w = wb_consequence_span(p);
    CHECK(w.dim() == 10);
    // B is a complement: the W_b span projects onto the Z coordinates.
    std::vector<std::size_t> zidx;
    for (const auto& z : excluded_monomials_z()) zidx.push_back(*p.index_of(CommutativeMonomial::parse(z)));
    std::vector<Vector> proj;
    for (const auto& v : w.basis()) {
        Vector r;
        for (std::size_t i : zidx) r.push_back(v[i]);
        proj.push_back(r);
    }
    CHECK(rank(Matrix::from_rows(proj, 10)) == 10);
}

TEST_CASE("low-degree nullspaces are trivial") {
    const auto alg = build(SplitSpinConfig{Scalar(3), Scalar(5), 2, {}});
    for (std::size_t d : {2, 3, 4}) {
        const auto r = identity_nullspace(alg, gen_multilinear(d));
        CHECK(r.nullspace.empty());
        CHECK(r.substitutions == static_cast<std::size_t>(std::pow(4, d)));
    }
    const auto m3 = identity_nullspace(matrix_jordan_plus(3), gen_multilinear(3));
    CHECK(m3.nullspace.empty());
    CHECK(m3.substitutions == 729);
}

TEST_CASE("nullspace detects commutative associative identities") {
    // F x F is associative: degree-3 identities are the two associator relations.
    const auto alg = make_algebra({"p", "q"}, {{Vector{Scalar(1), Scalar(0)}, Vector{Scalar(0), Scalar(0)}},
                                              {Vector{}, Vector{Scalar(0), Scalar(1)}}});
    const auto r = identity_nullspace(alg, gen_multilinear(3));
    CHECK(r.nullspace.size() == 2);
    CHECK(r.rank == 1);
    std::mt19937 rng(9);
    for (const auto& c : r.nullspace) {
        for (int k = 0; k < 5; ++k) {
            CHECK(c.polynomial()
                      .evaluate({random_element(alg, rng), random_element(alg, rng), random_element(alg, rng)})
                      .is_zero());
        }
    }
}

TEST_CASE("reduced basis on S(alpha, E) at alpha = 3") {
    const auto r = identity_nullspace(build_S_alpha(Scalar(3), 2), reduced_basis_B());
    CHECK(r.substitutions == 1024);
    CHECK(r.basis_size == 95);
    CHECK(r.nullspace.empty());
}

TEST_CASE("parametric rank on a small basis") {
    const auto alg = build_S_alpha_original(Scalar::variable("alpha"), 2);
    const auto r = parametric_rank(alg, gen_multilinear(3), "alpha", Scalar(3));
    CHECK(r.completed);
    CHECK(r.generic_rank == 3);
    CHECK(r.trivial_nullspace());

    ParametricRankResult f;
    f.parameter = "alpha";
    f.excluded_roots = {Rational(-1), Rational(0), Rational(1, 2)};
    CHECK(f.excluded_locus() == std::vector<std::string>{"alpha + 1", "alpha", "2*alpha - 1"});
}

TEST_CASE("W_b checks") {
    CHECK(check_wb(build(SplitSpinConfig::generic(2))).holds);
    const auto neg = check_wb(matrix_jordan_plus(3));
    CHECK_FALSE(neg.holds);
    REQUIRE(neg.witness.size() == 4);
    CHECK(passed(check_negative_control()));
}

TEST_CASE("named reports") {
    CHECK(passed(check_counts()));
    CHECK(passed(check_osborn_degree4(SplitSpinConfig::generic(1))));
    CHECK(passed(check_osborn_degree4(SplitSpinConfig{Scalar(3), Scalar(5), 2, {}})));
    CHECK_THROWS_AS(check_osborn_degree4(SplitSpinConfig{Scalar(1), Scalar(5), 2, {}}), std::invalid_argument);
    CHECK(passed(check_remark8()));
}
