#include <doctest.h>

#include "spinfactor/cubic_form.hpp"

using namespace spinfactor;

namespace {

bool all_pass(const std::vector<CheckResult>& rs) {
    bool ok = true;
    for (const auto& r : rs) {
        if (r.status != Status::pass) {
            MESSAGE(r.id << " residual " << r.residual);
            ok = false;
        }
    }
    return ok;
}

const CheckResult& find(const std::vector<CheckResult>& rs, const std::string& id) {
    for (const auto& r : rs) {
        if (r.id == id) return r;
    }
    throw std::out_of_range(id);
}

}  // namespace

TEST_CASE("linearization") {
    const auto t = linearize_cubic([](const Vector& r) { return r[0] * r[1] * r[2]; }, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            for (std::size_t k = 0; k < 3; ++k) {
                const bool perm = i != j && j != k && i != k;
                CHECK(t[(i * 3 + j) * 3 + k] == Scalar(perm ? 1 : 0));
            }
        }
    }
    const auto z = linearize_cubic([](const Vector&) { return Scalar(); }, 2);
    for (const auto& s : z) CHECK(s.is_zero());
    CHECK_THROWS_AS(linearize_cubic([](const Vector& r) { return r[0] * r[0]; }, 2), CubicityError);
}

TEST_CASE("split spin form basics") {
    const Gscf f(split_spin_gscf(SplitSpinConfig::generic(2)));
    const auto& alg = f.algebra();
    const Scalar a = Scalar::variable("alpha"), t = Scalar::variable("t");
    const Element c = f.c();
    CHECK(f.T(c) == Scalar(3));
    CHECK(f.S(c) == Scalar(3));
    CHECK(f.N(c) == Scalar(1));
    CHECK(f.sharp(c) == c);
    CHECK(f.sharp(Element::zero(alg)).is_zero());
    const Element r = generic_element(alg, "r");
    CHECK(f.T(r) == (1 + a) * r[0] + (2 - a) * r[1]);
    CHECK(f.inner(r, c) == f.T(r));
    const Element z1 = Element::basis(alg, "z1");
    CHECK(f.delta(z1, z1) == a * (a - 1));

    const Element v = generic_element(alg, "v", {2, 3});
    const Scalar vv = v[2] * v[2] + v[3] * v[3];
    CHECK(f.sharp(v) == (t - 1) * vv * (-(1 - a) * z1 + a * Element::basis(alg, "z2")));
    CHECK(f.N(r) == r[0] * r[1] * (a * r[0] + (1 - a) * r[1]) -
                        (r[2] * r[2] + r[3] * r[3]) * ((1 - a) * t * r[0] + a * r[1]));

    const Element s = generic_element(alg, "s");
    const Scalar vu = r[2] * s[2] + r[3] * s[3];
    CHECK(f.inner(r, s) == (1 + a) * r[0] * s[0] + (2 - a) * r[1] * s[1] + (1 + a + (2 - a) * t) * vu);
    CHECK(f.S2(r, s) == 2 * (a * r[0] * s[0] + r[0] * s[1] + r[1] * s[0] + (1 - a) * r[1] * s[1]) -
                           2 * ((1 - a) * t + a) * vu);
    const Scalar nn = f.N(r) + f.delta(f.sharp(r), r);
    CHECK(nn == ((1 - a) * r[0] + a * r[1]) *
                    ((a * r[0] + (1 - a) * r[1]).pow(2) + (2 * a - 1) * (t - 1) * (r[2] * r[2] + r[3] * r[3])));
}

TEST_CASE("induced product equals the split spin table") {
    for (std::size_t n = 1; n <= 3; ++n) {
        const SplitSpinConfig cfg = SplitSpinConfig::generic(n);
        const Gscf f(split_spin_gscf(cfg));
        CHECK(*f.algebra() == *build(cfg));
    }
    const Scalar a = Scalar::variable("alpha");
    SplitSpinConfig orig = SplitSpinConfig::s_alpha(a, 2);
    orig.gram = Matrix::identity(2);
    for (std::size_t i = 0; i < 2; ++i) orig.gram.at(i, i) = -a * (a - 2);
    CHECK(*Gscf(split_spin_gscf(orig)).algebra() == *build_S_alpha_original(a, 2));
}

TEST_CASE("split spin axioms and cubic identity") {
    for (std::size_t n = 1; n <= 2; ++n) {
        const Gscf f(split_spin_gscf(SplitSpinConfig::generic(n)));
        CHECK(all_pass(verify_gscf_axioms(f)));
        CHECK(all_pass(verify_cubic_identity(f)));
    }
    const Gscf num(split_spin_gscf(SplitSpinConfig{Scalar(3), Scalar::fraction(8, 3), 2, {}}));
    const Element r = num.element({Scalar(2), Scalar::fraction(-1, 3), Scalar(5), Scalar::fraction(7, 2)});
    CHECK(all_pass(verify_cubic_identity(num, r)));
    CHECK(all_pass(verify_cubic_identity(num, num.c())));
}

TEST_CASE("zero Delta breaks the first axiom") {
    const Gscf f(with_zero_delta(split_spin_gscf(SplitSpinConfig::generic(1))));
    const auto rs = verify_gscf_axioms(f);
    CHECK(find(rs, "axiom/(r#q,r) + (r#,q) = 3N(r,q)").status == Status::fail);
}

TEST_CASE("dual number example") {
    const Gscf f(example1_gscf());
    const Scalar l = Scalar::variable("lambda");
    const auto& alg = f.algebra();
    const Element c = f.c();
    const Element r = generic_element(alg, "r"), q = generic_element(alg, "q");
    CHECK(f.sharp(c) == (1 - 6 * l) * c);
    CHECK(r * c == r - 2 * l * f.T(r) * c);
    CHECK(f.sharp_product(c, r) == (1 - 4 * l) * f.T(r) * c - r);
    const Vector expected{(1 + l) * r[0] * q[0] + l * (r[1] * q[2] + q[1] * r[2]),
                          (1 + l) * r[1] * q[1] + l * (r[0] * q[2] + q[0] * r[2]),
                          (1 + l) * r[2] * q[2] + l * (r[0] * q[1] + q[0] * r[1])};
    CHECK(r * q == f.element(expected) - l * f.T(r) * f.T(q) * c);
    CHECK(f.inner(r, q) == r[0] * q[0] + r[1] * q[1] + r[2] * q[2] + 3 * l * f.S2(r, q));

    const auto rs = verify_gscf_axioms(f);
    const auto& adj = find(rs, "axiom/(r#)# = (N(r) + D(r#,r))r");
    CHECK(adj.status == Status::fail);
    const Element rsh = f.sharp(r);
    const Scalar T = f.T(r), S = f.S(r), N = f.N(r);
    const Element actual = f.sharp(rsh);
    const Element relation = (N + f.delta(rsh, r) + 2 * l * T * S) * r + 2 * l * S * rsh - 2 * l * (T * N + S * S) * c;
    CHECK(actual == relation);
    CHECK(find(rs, "data/D(r,c) = 0").status == Status::fail);
    CHECK(f.delta(r, c) == -6 * l * T);

    const Element s = generic_element(alg, "s");
    CHECK(f.inner(f.sharp_product(r, q), s) + f.inner(f.sharp_product(q, s), r) + f.inner(f.sharp_product(s, r), q) ==
          3 * f.N3(r, q, s));
    CHECK(f.N(rsh) == N * (N + f.delta(rsh, r)));
    CHECK(f.T(rsh) == (1 - 6 * l) * (S - f.delta(r, r)) - 2 * l * T * T);
}

TEST_CASE("innerness") {
    const Scalar a = Scalar::variable("alpha");
    const Gscf sa(split_spin_gscf(SplitSpinConfig::s_alpha(a, 2)));
    const InnerResult in = is_inner(sa);
    CHECK(in.inner);
    REQUIRE(in.lambda);
    CHECK(*in.lambda == s_alpha_inner_lambda(a));

    CHECK_FALSE(is_inner(Gscf(split_spin_gscf(SplitSpinConfig{Scalar(3), Scalar(5), 2, {}}))).inner);
    const InnerResult zero = is_inner(Gscf(with_zero_delta(split_spin_gscf(SplitSpinConfig::generic(1)))));
    CHECK(zero.inner);
    CHECK(zero.lambda->is_zero());

    const GscfData d = split_spin_gscf(SplitSpinConfig::s_alpha(a, 2));
    const Scalar lam = s_alpha_inner_lambda(a);
    const InnerForm f = inner_form_from(d.N3, d.c, lam);
    for (std::size_t i = 0; i < 4; ++i) {
        Scalar rc;
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(f.delta.at(i, j) == d.Delta[i * 4 + j]);
            rc += f.inner.at(i, j) * d.c[j];
        }
        CHECK(rc == sa.T(Element::basis(sa.algebra(), i)));
    }
    const InnerForm f0 = inner_form_from(d.N3, d.c, Scalar(0));
    CHECK(f0.delta.is_zero());
    CHECK_THROWS_AS(inner_form_from(d.N3, d.c, Scalar(-1)), std::invalid_argument);
}

TEST_CASE("gscf json round trip") {
    const GscfData d = split_spin_gscf(SplitSpinConfig::generic(2));
    const GscfData back = GscfData::from_json(nlohmann::json::parse(d.to_json().dump()));
    CHECK(back.N3 == d.N3);
    CHECK(back.Delta == d.Delta);
    CHECK(back.sharp == d.sharp);
    CHECK(back.c == d.c);
}
