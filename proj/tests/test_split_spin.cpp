#include <doctest.h>

#include "spinfactor/split_spin.hpp"

using namespace spinfactor;

TEST_CASE("t of S(alpha,E)") {
    CHECK(s_alpha_t(Scalar(3)) == Scalar::fraction(8, 3));
    CHECK(s_alpha_t(Scalar(-1)).is_zero());
    CHECK_THROWS_AS(s_alpha_t(Scalar(0)), PoleError);
    CHECK_THROWS_AS(s_alpha_t(Scalar(2)), PoleError);
    const Scalar a = Scalar::variable("alpha");
    CHECK(s_alpha_t(a) == Scalar::parse("(alpha^2-1)/(alpha*(alpha-2))"));
    const auto alg = build_S_alpha(Scalar(3), 1);
    const auto e1 = Element::basis(alg, "e1");
    CHECK(e1 * e1 == Element::basis(alg, "z1") + Scalar::fraction(8, 3) * Element::basis(alg, "z2"));
}

TEST_CASE("degenerate gram is rejected") {
    SplitSpinConfig c = SplitSpinConfig::generic(2);
    c.gram = Matrix(2, 2);
    c.gram.at(0, 0) = c.gram.at(0, 1) = c.gram.at(1, 0) = c.gram.at(1, 1) = Scalar(1);
    CHECK_THROWS_AS(build(c), std::invalid_argument);
    c.gram.at(1, 1) = Scalar(2);
    CHECK_NOTHROW(build(c));
}

TEST_CASE("original normalization equals canonical table with rescaled gram") {
    const Scalar a = Scalar::variable("alpha");
    SplitSpinConfig c = SplitSpinConfig::s_alpha(a, 2);
    c.gram = Matrix::identity(2);
    for (std::size_t i = 0; i < 2; ++i) c.gram.at(i, i) = -a * (a - 2);
    CHECK(*build(c) == *build_S_alpha_original(a, 2));
}

TEST_CASE("invariant form") {
    const SplitSpinConfig cfg = SplitSpinConfig::generic(2);
    const auto alg = build(cfg);
    const Matrix B = invariant_form(cfg);
    const Scalar a = Scalar::variable("alpha");
    const auto z1 = Element::basis(alg, "z1"), z2 = Element::basis(alg, "z2");
    CHECK(bilinear(B, z1, z1) == 1 + a);
    CHECK(bilinear(B, z1, z2).is_zero());

    const Element r = generic_element(alg, "r"), s = generic_element(alg, "s"), q = generic_element(alg, "q");
    const Scalar defect = bilinear(B, r * s, q) - bilinear(B, r, s * q);
    // nu((g - h)<v,u> - (a - b)<u,w>) with r = a z1 + b z2 + v, s = k z1 + l z2 + u, q = g z1 + h z2 + w.
    const Scalar t = Scalar::variable("t");
    const Scalar nu = 1 - a * a + a * (a - 2) * t;
    auto E = [](const Element& x, const Element& y) { return x[2] * y[2] + x[3] * y[3]; };
    CHECK(defect == nu * ((q[0] - q[1]) * E(r, s) - (r[0] - r[1]) * E(s, q)));

    const SplitSpinConfig sa = SplitSpinConfig::s_alpha(a, 2);
    const auto salg = build(sa);
    const Matrix Bs = invariant_form(sa);
    const Element rs = generic_element(salg, "r"), ss = generic_element(salg, "s"), qs = generic_element(salg, "q");
    CHECK((bilinear(Bs, rs * ss, qs) - bilinear(Bs, rs, ss * qs)).is_zero());
}

TEST_CASE("simplicity reports") {
    auto rep = simplicity_report(SplitSpinConfig{Scalar(0), Scalar(5), 2, {}});
    CHECK(rep.verdict == SimplicityReport::Verdict::not_simple);
    CHECK(rep.witness_label == "F z1");
    CHECK(rep.witness_is_ideal);
    rep = simplicity_report(SplitSpinConfig{Scalar(1), Scalar(5), 2, {}});
    CHECK(rep.witness_label == "F z2");
    CHECK(rep.witness_is_ideal);
    rep = simplicity_report(SplitSpinConfig{Scalar(3), Scalar(0), 2, {}});
    CHECK(rep.witness_label == "F z1 + F e1 + F e2");
    CHECK(rep.witness_is_ideal);
    CHECK(rep.witness.dim() == 3);
    rep = simplicity_report(SplitSpinConfig{Scalar(3), Scalar::fraction(8, 3), 2, {}});
    CHECK(rep.verdict == SimplicityReport::Verdict::simple);
    CHECK(rep.certified.size() == 4);
    rep = simplicity_report(SplitSpinConfig::generic(2));
    CHECK(rep.verdict == SimplicityReport::Verdict::generically_simple);
    CHECK(rep.excluded_locus.size() == 3);
}

TEST_CASE("config json") {
    const auto j = nlohmann::json::parse(R"({"alpha": "3", "t": "S-alpha", "n": 2})");
    const auto c = SplitSpinConfig::from_json(j);
    CHECK(c.t == Scalar::fraction(8, 3));
    const auto back = SplitSpinConfig::from_json(c.to_json());
    CHECK(back.alpha == c.alpha);
    CHECK(back.t == c.t);
}
