#include <doctest.h>

#include <random>

#include "spinfactor/algebra.hpp"
#include "spinfactor/split_spin.hpp"

using namespace spinfactor;

namespace {

Element random_element(const AlgebraPtr& alg, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-6, 6);
    Vector v(alg->dim());
    for (auto& s : v) s = Scalar::fraction(d(rng), 1 + (d(rng) + 6) % 4);
    return Element(alg, v);
}

}  // namespace

TEST_CASE("split spin product table") {
    const auto alg = build(SplitSpinConfig::generic(2));
    const auto z1 = Element::basis(alg, "z1"), z2 = Element::basis(alg, "z2");
    const auto e1 = Element::basis(alg, "e1"), e2 = Element::basis(alg, "e2");
    const Scalar a = Scalar::variable("alpha"), t = Scalar::variable("t");
    CHECK(z1 * z1 == z1);
    CHECK(z2 * z2 == z2);
    CHECK((z1 * z2).is_zero());
    CHECK(e1 * z1 == a * e1);
    CHECK(e1 * z2 == (1 - a) * e1);
    CHECK(e1 * e1 == z1 + t * z2);
    CHECK((e1 * e2).is_zero());
    CHECK((Element::zero(alg) * e1).is_zero());
    const auto c = unit(alg);
    for (std::size_t k = 0; k < alg->dim(); ++k) CHECK(c * Element::basis(alg, k) == Element::basis(alg, k));
    CHECK(right_mult(c).matrix() == Matrix::identity(4));
    CHECK(associator(c, e1, e2 + z1).is_zero());
}

TEST_CASE("right multiplication by z1 is diagonal") {
    const auto alg = build(SplitSpinConfig::generic(3));
    const Scalar a = Scalar::variable("alpha");
    const Matrix m = right_mult(Element::basis(alg, "z1")).matrix();
    Matrix expected(5, 5);
    expected.at(0, 0) = Scalar(1);
    for (std::size_t i = 2; i < 5; ++i) expected.at(i, i) = a;
    CHECK(m == expected);
}

TEST_CASE("bilinearity and commutativity on random rational elements") {
    std::mt19937 rng(3);
    const auto alg = build(SplitSpinConfig{Scalar(3), Scalar::fraction(8, 3), 2, {}});
    for (int k = 0; k < 20; ++k) {
        const Element x = random_element(alg, rng), y = random_element(alg, rng), z = random_element(alg, rng);
        const Scalar s = Scalar::fraction(k - 7, 3);
        CHECK(x * y == y * x);
        CHECK((x + s * y) * z == x * z + s * (y * z));
    }
}

TEST_CASE("commutator of right multiplications by E vectors") {
    const auto alg = build(SplitSpinConfig{Scalar(3), Scalar::fraction(8, 3), 2, {}});
    const auto e1 = Element::basis(alg, "e1"), e2 = Element::basis(alg, "e2");
    const LinearMap comm = right_mult(e1) * right_mult(e2) - right_mult(e2) * right_mult(e1);
    CHECK_FALSE(comm.matrix().is_zero());
    // (x R_e2) R_e1 - (x R_e1) R_e2 on x = e1: (e1 e2) e1 - (e1 e1) e2 = -(z1 + t z2) e2
    const Element x = e1;
    const Element expected = (x * e2) * e1 - (x * e1) * e2;
    CHECK(comm.apply(x) == expected);
}

TEST_CASE("annihilators") {
    const Scalar a(3);
    const auto alg = build(SplitSpinConfig{a, Scalar(5), 3, {}});
    CHECK(annihilator(unit(alg)).dim() == 0);
    CHECK(annihilator(Element::basis(alg, "e1")).dim() == 3);
    CHECK(annihilator(u_line_element(alg, a)).dim() == 3);
    // Hand solution for x = e1: (1 - alpha) z1 - alpha z2 and e2, e3 span the kernel.
    const Subspace ann = annihilator(Element::basis(alg, "e1"));
    const Element k = (1 - a) * Element::basis(alg, "z1") - a * Element::basis(alg, "z2");
    CHECK(ann.contains(k.coords()));
    CHECK(ann.contains(Element::basis(alg, "e2").coords()));
    CHECK(ann.contains(Element::basis(alg, "e3").coords()));
    CHECK(annihilator(Element::basis(alg, "z1")).dim() == 1);
}

TEST_CASE("ideals") {
    const auto deg0 = build(SplitSpinConfig{Scalar(0), Scalar(5), 2, {}});
    CHECK(is_ideal(*deg0, Subspace::span({Element::basis(deg0, "z1").coords()}, 4)));
    const auto degt = build(SplitSpinConfig{Scalar(3), Scalar(0), 2, {}});
    CHECK(is_ideal(*degt, Subspace::span({Element::basis(degt, "z1").coords(), Element::basis(degt, "e1").coords(),
                                           Element::basis(degt, "e2").coords()},
                                          4)));
    const auto alg = build(SplitSpinConfig{Scalar(3), Scalar::fraction(8, 3), 2, {}});
    CHECK_FALSE(is_ideal(*alg, Subspace::span({Element::basis(alg, "z1").coords()}, 4)));
    const Scalar t = Scalar::fraction(8, 3);
    const Element g = Element::basis(alg, "z1") + t * Element::basis(alg, "z2") + Scalar(2) * Element::basis(alg, "e1");
    const Subspace closure = ideal_closure(alg, {g});
    CHECK(closure == Subspace::whole(4));
    CHECK(is_ideal(*alg, closure));
    const Subspace small = ideal_closure(deg0, {Element::basis(deg0, "z1")});
    CHECK(small.dim() == 1);
    CHECK(ideal_closure(deg0, {Element(deg0, small.basis()[0])}) == small);
}

TEST_CASE("flip automorphism") {
    const auto half1 = build(SplitSpinConfig{Scalar::fraction(1, 2), Scalar(1), 2, {}});
    CHECK(is_automorphism(LinearMap::identity(half1)));
    CHECK(is_automorphism(flip_map(half1, Scalar(1))));
    const auto half_m1 = build(SplitSpinConfig{Scalar::fraction(1, 2), Scalar(-1), 2, {}});
    CHECK(is_automorphism(flip_map(half_m1, Scalar::variable("i"))));
    CHECK_FALSE(is_automorphism(flip_map(half_m1, Scalar(1))));
    const auto third = build(SplitSpinConfig{Scalar::fraction(1, 3), Scalar(1), 2, {}});
    CHECK_FALSE(is_automorphism(flip_map(third, Scalar(1))));
    const auto half2 = build(SplitSpinConfig{Scalar::fraction(1, 2), Scalar(2), 2, {}});
    CHECK_FALSE(is_automorphism(flip_map(half2, Scalar(1))));
}

TEST_CASE("algebra json round trip") {
    const auto alg = build(SplitSpinConfig::s_alpha(Scalar::variable("alpha"), 2));
    const auto back = AlgebraDescriptor::from_json(nlohmann::json::parse(alg->to_json().dump()));
    CHECK(*back == *alg);
    const auto e1 = Element::basis(alg, "e1");
    CHECK_THROWS_AS(e1 * Element::basis(build(SplitSpinConfig::generic(3)), 0), AlgebraMismatchError);
}
