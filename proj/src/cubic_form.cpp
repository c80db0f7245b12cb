#include "spinfactor/cubic_form.hpp"

#include <stdexcept>

namespace spinfactor {

namespace {

Vector basis_vector(std::size_t dim, std::size_t i, const Scalar& c = Scalar(1)) {
    Vector v(dim);
    v[i] = c;
    return v;
}

Vector axpy(const Vector& a, const Scalar& k, const Vector& b) {
    Vector out = a;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!b[i].is_zero()) out[i] += k * b[i];
    }
    return out;
}

Scalar eval_trilinear(const std::vector<Scalar>& t, std::size_t dim, const Vector& r, const Vector& q,
                      const Vector& s) {
    Scalar total;
    for (std::size_t i = 0; i < dim; ++i) {
        if (r[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (q[j].is_zero()) continue;
            Scalar inner;
            for (std::size_t k = 0; k < dim; ++k) {
                const Scalar& e = t[(i * dim + j) * dim + k];
                if (!e.is_zero() && !s[k].is_zero()) inner += e * s[k];
            }
            if (!inner.is_zero()) total += r[i] * q[j] * inner;
        }
    }
    return total;
}

}  // namespace

std::vector<Scalar> linearize_cubic(const CubicMap& N, std::size_t dim) {
    std::vector<Scalar> t(dim * dim * dim);
    std::vector<Scalar> single(dim);
    std::vector<Scalar> pair(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) single[i] = N(basis_vector(dim, i));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
            pair[i * dim + j] = pair[j * dim + i] = N(add(basis_vector(dim, i), basis_vector(dim, j)));
        }
    }
    auto n_of_sum = [&](std::size_t i, std::size_t j, std::size_t k) {
        Vector v(dim);
        v[i] += 1;
        v[j] += 1;
        v[k] += 1;
        return N(v);
    };
    auto n_pair = [&](std::size_t i, std::size_t j) {
        if (i == j) return N(basis_vector(dim, i, Scalar(2)));
        return pair[i * dim + j];
    };
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i; j < dim; ++j) {
            for (std::size_t k = j; k < dim; ++k) {
                const Scalar value = n_of_sum(i, j, k) - n_pair(i, j) - n_pair(i, k) - n_pair(j, k) + single[i] +
                                     single[j] + single[k];
                const std::size_t idx[3] = {i, j, k};
                static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
                for (const auto& p : perms) t[(idx[p[0]] * dim + idx[p[1]]) * dim + idx[p[2]]] = value;
            }
        }
    }
    // A posteriori cubicity on a spread of test vectors.
    std::vector<Vector> tests;
    for (std::size_t i = 0; i < dim; ++i) {
        tests.push_back(basis_vector(dim, i));
        for (std::size_t j = i + 1; j < dim; ++j) {
            tests.push_back(axpy(basis_vector(dim, i), Scalar(2), basis_vector(dim, j)));
            for (std::size_t k = j + 1; k < dim; ++k) {
                tests.push_back(axpy(axpy(basis_vector(dim, i, Scalar(-1)), Scalar(3), basis_vector(dim, j)),
                                     Scalar::fraction(1, 2), basis_vector(dim, k)));
            }
        }
    }
    for (const auto& v : tests) {
        if (!(eval_trilinear(t, dim, v, v, v) == 6 * N(v))) {
            throw CubicityError("map is not a cubic form (N(r,r,r) != 6N(r))");
        }
    }
    return t;
}

std::vector<Vector> sharp_from_quadratic(const QuadraticMap& sharp, std::size_t dim) {
    std::vector<Vector> out(dim * dim);
    std::vector<Vector> single(dim);
    for (std::size_t i = 0; i < dim; ++i) single[i] = sharp(basis_vector(dim, i));
    for (std::size_t i = 0; i < dim; ++i) {
        out[i * dim + i] = scale(Scalar(2), single[i]);
        for (std::size_t j = i + 1; j < dim; ++j) {
            const Vector both = sharp(add(basis_vector(dim, i), basis_vector(dim, j)));
            Vector v(dim);
            for (std::size_t k = 0; k < dim; ++k) v[k] = both[k] - single[i][k] - single[j][k];
            out[i * dim + j] = v;
            out[j * dim + i] = std::move(v);
        }
    }
    return out;
}

std::vector<Scalar> tabulate_bilinear(const BilinearMap& form, std::size_t dim) {
    std::vector<Scalar> out(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) out[i * dim + j] = form(basis_vector(dim, i), basis_vector(dim, j));
    }
    return out;
}

// --------------------------------------------------------------------- Gscf

Gscf::Gscf(GscfData data) : data_(std::move(data)) {
    const std::size_t n = dim();
    if (n == 0) throw std::invalid_argument("form dimension must be positive");
    if (data_.N3.size() != n * n * n || data_.Delta.size() != n * n || data_.sharp.size() != n * n ||
        data_.c.size() != n) {
        throw std::invalid_argument("form tensors do not match dimension");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& e = data_.N3[(i * n + j) * n + k];
                if (!e.is_zero()) n3_.push_back(Trilinear{i, j, k, e});
            }
            const Scalar& d = data_.Delta[i * n + j];
            if (!d.is_zero()) delta_.push_back(Bilinear{i, j, d});
        }
    }
    const Vector& c = data_.c;
    t_.resize(n);
    s2_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        t_[i] = eval_trilinear(data_.N3, n, basis_vector(n, i), c, c) / 2;
        for (std::size_t j = 0; j < n; ++j) {
            s2_[i * n + j] = eval_trilinear(data_.N3, n, basis_vector(n, i), basis_vector(n, j), c);
        }
    }
    std::vector<std::vector<Vector>> upper(n, std::vector<Vector>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Vector v = data_.sharp[i * n + j];
            v[j] += t_[i];
            v[i] += t_[j];
            v = axpy(v, -s2_[i * n + j], c);
            upper[i][j] = scale(Scalar::fraction(1, 2), v);
        }
    }
    algebra_ = make_algebra(data_.labels, upper);
}

Scalar Gscf::N3(const Element& r, const Element& q, const Element& s) const {
    Scalar total;
    for (const auto& e : n3_) {
        const Scalar& a = r[e.i];
        if (a.is_zero()) continue;
        const Scalar& b = q[e.j];
        if (b.is_zero()) continue;
        const Scalar& c = s[e.k];
        if (c.is_zero()) continue;
        total += e.coeff * a * b * c;
    }
    return total;
}

Scalar Gscf::N(const Element& r) const { return N3(r, r, r) / 6; }

Scalar Gscf::N2(const Element& r, const Element& q) const { return N3(r, r, q) / 2; }

Scalar Gscf::T(const Element& r) const {
    Scalar total;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!r[i].is_zero() && !t_[i].is_zero()) total += t_[i] * r[i];
    }
    return total;
}

Scalar Gscf::S2(const Element& r, const Element& q) const {
    Scalar total;
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i) {
        if (r[i].is_zero()) continue;
        Scalar row;
        for (std::size_t j = 0; j < n; ++j) {
            if (!q[j].is_zero() && !s2_[i * n + j].is_zero()) row += s2_[i * n + j] * q[j];
        }
        if (!row.is_zero()) total += r[i] * row;
    }
    return total;
}

Scalar Gscf::S(const Element& r) const { return S2(r, r) / 2; }

Scalar Gscf::delta(const Element& r, const Element& q) const {
    Scalar total;
    for (const auto& e : delta_) {
        if (r[e.i].is_zero() || q[e.j].is_zero()) continue;
        total += e.coeff * r[e.i] * q[e.j];
    }
    return total;
}

Scalar Gscf::inner(const Element& r, const Element& q) const {
    return T(r) * T(q) - S2(r, q) - delta(r, q);
}

Element Gscf::sharp_product(const Element& r, const Element& q) const {
    const std::size_t n = dim();
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (r[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (q[j].is_zero()) continue;
            const Vector& v = data_.sharp[i * n + j];
            const Scalar w = r[i] * q[j];
            for (std::size_t k = 0; k < n; ++k) {
                if (!v[k].is_zero()) out[k] += w * v[k];
            }
        }
    }
    return Element(algebra_, std::move(out));
}

Element Gscf::sharp(const Element& r) const {
    return Scalar::fraction(1, 2) * sharp_product(r, r);
}

// ---------------------------------------------------------------- instances

GscfData split_spin_gscf(const SplitSpinConfig& config) {
    const std::size_t n = config.n;
    const std::size_t dim = n + 2;
    const Matrix g = config.gram_matrix();
    const Scalar a = config.alpha;
    const Scalar abar = 1 - a;
    const Scalar t = config.t;
    auto form = [&](const Vector& x, const Vector& y) {
        Scalar s;
        for (std::size_t i = 0; i < n; ++i) {
            if (x[2 + i].is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (!y[2 + k].is_zero() && !g.at(i, k).is_zero()) s += x[2 + i] * g.at(i, k) * y[2 + k];
            }
        }
        return s;
    };
    GscfData d;
    d.labels = split_spin_labels(n);
    d.name = "split-spin";
    d.N3 = linearize_cubic(
        [&](const Vector& r) {
            return r[0] * r[1] * (a * r[0] + abar * r[1]) - form(r, r) * (abar * t * r[0] + a * r[1]);
        },
        dim);
    d.Delta = tabulate_bilinear(
        [&](const Vector& r, const Vector& s) {
            return a * (a - 1) * (r[0] - r[1]) * (s[0] - s[1]) - form(r, s) * (abar + a * t);
        },
        dim);
    d.sharp = sharp_from_quadratic(
        [&](const Vector& r) {
            Vector out(dim);
            const Scalar p = a * r[0] + abar * r[1];
            const Scalar vv = (t - 1) * form(r, r);
            out[0] = p * r[1] - abar * vv;
            out[1] = p * r[0] + a * vv;
            const Scalar m = abar * r[0] + a * r[1];
            for (std::size_t i = 0; i < n; ++i) out[2 + i] = -m * r[2 + i];
            return out;
        },
        dim);
    d.c = Vector(dim);
    d.c[0] = Scalar(1);
    d.c[1] = Scalar(1);
    return d;
}

GscfData example1_gscf() {
    const Scalar l = Scalar::variable(kNilpotentName);
    GscfData d;
    d.labels = {"b1", "b2", "b3"};
    d.name = "dual-number example";
    d.N3 = linearize_cubic([](const Vector& r) { return r[0] * r[1] * r[2]; }, 3);
    auto S = [](const Vector& r, const Vector& q) {
        return r[0] * (q[1] + q[2]) + r[1] * (q[0] + q[2]) + r[2] * (q[0] + q[1]);
    };
    d.Delta = tabulate_bilinear([&](const Vector& r, const Vector& q) { return -3 * l * S(r, q); }, 3);
    d.sharp = sharp_from_quadratic(
        [&](const Vector& r) {
            const Scalar &x = r[0], &y = r[1], &z = r[2];
            return Vector{y * z - l * (y * y + z * z + 2 * x * (y + z)),
                          x * z - l * (x * x + z * z + 2 * y * (x + z)),
                          x * y - l * (x * x + y * y + 2 * z * (x + y))};
        },
        3);
    d.c = Vector{Scalar(1), Scalar(1), Scalar(1)};
    return d;
}

GscfData substitute(const GscfData& data, const Assignment& assignment) {
    GscfData out = data;
    for (auto& s : out.N3) s = s.substitute(assignment);
    for (auto& s : out.Delta) s = s.substitute(assignment);
    for (auto& v : out.sharp) {
        for (auto& s : v) s = s.substitute(assignment);
    }
    for (auto& s : out.c) s = s.substitute(assignment);
    return out;
}

GscfData with_zero_delta(GscfData data) {
    for (auto& s : data.Delta) s = Scalar();
    data.name += " (zero Delta)";
    return data;
}

// ------------------------------------------------------------ verification

std::vector<CheckResult> verify_gscf_axioms(const Gscf& form) {
    const auto& alg = form.algebra();
    const std::size_t n = form.dim();
    const Element r = generic_element(alg, "r");
    const Element q = generic_element(alg, "q");
    const Element c = form.c();
    std::vector<CheckResult> out;

    out.push_back(timed([&] {
        return zero_check("axiom/(r#q,r) + (r#,q) = 3N(r,q)",
                          form.inner(form.sharp_product(r, q), r) + form.inner(form.sharp(r), q) - 3 * form.N2(r, q));
    }));
    out.push_back(timed([&] {
        const Element rs = form.sharp(r);
        return zero_check("axiom/(r#)# = (N(r) + D(r#,r))r",
                          form.sharp(rs) - (form.N(r) + form.delta(rs, r)) * r);
    }));
    out.push_back(timed([&] {
        return zero_check("axiom/c#r = T(r)c - r", form.sharp_product(c, r) - (form.T(r) * c - r));
    }));
    out.push_back(zero_check("data/N(c) = 1", form.N(c) - 1));
    out.push_back(zero_check("data/D(r,c) = 0", form.delta(r, c)));

    Scalar asym;
    const auto& d = form.data();
    for (std::size_t i = 0; i < n && asym.is_zero(); ++i) {
        for (std::size_t j = 0; j < n && asym.is_zero(); ++j) {
            asym = d.Delta[i * n + j] - d.Delta[j * n + i];
            for (std::size_t k = 0; k < n && asym.is_zero(); ++k) {
                const Scalar& e = d.N3[(i * n + j) * n + k];
                for (const Scalar* other : {&d.N3[(j * n + i) * n + k], &d.N3[(i * n + k) * n + j],
                                            &d.N3[(k * n + j) * n + i]}) {
                    if (!(e == *other)) asym = e - *other;
                }
                if (asym.is_zero()) asym = d.sharp[i * n + j][k] - d.sharp[j * n + i][k];
            }
        }
    }
    out.push_back(zero_check("data/tensors symmetric", asym));
    out.push_back(zero_check("data/S(c) = T(c) = 3", (form.S(c) - 3) * (form.S(c) - 3) + (form.T(c) - 3) * (form.T(c) - 3)));
    for (auto& res : out) res.n = n;
    return out;
}

std::vector<CheckResult> verify_cubic_identity(const Gscf& form, const std::optional<Element>& element) {
    const Element r = element ? *element : generic_element(form.algebra(), "r");
    const Element c = form.c();
    const Element r2 = r * r;
    const Element r3 = r2 * r;
    const Scalar T = form.T(r), S = form.S(r), N = form.N(r);
    std::vector<CheckResult> out;
    out.push_back(zero_check("cubic/r^3 - T(r)r^2 + S(r)r - N(r)c = 0", r3 - T * r2 + S * r - N * c));
    out.push_back(zero_check("cubic/r# = r^2 - T(r)r + S(r)c", form.sharp(r) - (r2 - T * r + S * c)));
    out.push_back(zero_check("cubic/r#r = N(r)c", form.sharp(r) * r - N * c));
    for (auto& res : out) res.n = form.dim();
    return out;
}

InnerForm inner_form_from(const std::vector<Scalar>& N3, const Vector& c, const Scalar& lambda) {
    if ((lambda + 1).is_zero()) throw std::invalid_argument("lambda must differ from -1");
    const std::size_t n = c.size();
    std::vector<Scalar> T(n);
    for (std::size_t i = 0; i < n; ++i) T[i] = eval_trilinear(N3, n, basis_vector(n, i), c, c) / 2;
    InnerForm f{Matrix(n, n), Matrix(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar S = eval_trilinear(N3, n, basis_vector(n, i), basis_vector(n, j), c);
            const Scalar tt = T[i] * T[j];
            f.inner.at(i, j) = ((1 + lambda / 3) * tt - S) / (lambda + 1);
            f.delta.at(i, j) = lambda * (f.inner.at(i, j) - tt / 3);
        }
    }
    return f;
}

InnerResult is_inner(const Gscf& form) {
    const auto& alg = form.algebra();
    const std::size_t n = form.dim();
    std::optional<Scalar> lambda;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Element bi = Element::basis(alg, i), bj = Element::basis(alg, j);
            const Scalar g = form.inner(bi, bj) - form.T(bi) * form.T(bj) / 3;
            const Scalar d = form.delta(bi, bj);
            if (g.is_zero()) {
                if (!d.is_zero()) return {false, std::nullopt};
                continue;
            }
            if (!lambda) {
                lambda = d / g;
            } else if (!(d == *lambda * g)) {
                return {false, std::nullopt};
            }
        }
    }
    return {true, lambda ? *lambda : Scalar()};
}

Scalar s_alpha_inner_lambda(const Scalar& alpha) {
    return 3 * alpha * (1 - alpha) / ((1 + alpha) * (alpha - 2));
}

// --------------------------------------------------------------------- JSON

nlohmann::json GscfData::to_json() const {
    const std::size_t n = dim();
    nlohmann::json n3 = nlohmann::json::array(), delta = nlohmann::json::array(), sh = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            for (std::size_t k = j; k < n; ++k) {
                const Scalar& e = N3[(i * n + j) * n + k];
                if (!e.is_zero()) n3.push_back({{"i", i}, {"j", j}, {"k", k}, {"value", e.to_string()}});
            }
            if (!Delta[i * n + j].is_zero()) {
                delta.push_back({{"i", i}, {"j", j}, {"value", Delta[i * n + j].to_string()}});
            }
            const Vector& v = sharp[i * n + j];
            if (!is_zero(v)) {
                nlohmann::json coords = nlohmann::json::array();
                for (const auto& s : v) coords.push_back(s.to_string());
                sh.push_back({{"i", i}, {"j", j}, {"coords", coords}});
            }
        }
    }
    nlohmann::json cj = nlohmann::json::array();
    for (const auto& s : c) cj.push_back(s.to_string());
    return {{"dim", n}, {"labels", labels}, {"c", cj}, {"N3", n3}, {"Delta", delta}, {"sharp", sh}};
}

GscfData GscfData::from_json(const nlohmann::json& j) {
    GscfData d;
    const std::size_t n = j.at("dim").get<std::size_t>();
    d.labels = j.at("labels").get<std::vector<std::string>>();
    if (d.labels.size() != n) throw std::invalid_argument("labels do not match dim");
    d.N3.assign(n * n * n, Scalar());
    d.Delta.assign(n * n, Scalar());
    d.sharp.assign(n * n, Vector(n));
    for (const auto& s : j.at("c")) d.c.push_back(Scalar::parse(s.get<std::string>()));
    if (d.c.size() != n) throw std::invalid_argument("basepoint does not match dim");
    for (const auto& e : j.at("N3")) {
        const std::size_t idx[3] = {e.at("i").get<std::size_t>(), e.at("j").get<std::size_t>(),
                                    e.at("k").get<std::size_t>()};
        const Scalar v = Scalar::parse(e.at("value").get<std::string>());
        static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (const auto& p : perms) d.N3.at((idx[p[0]] * n + idx[p[1]]) * n + idx[p[2]]) = v;
    }
    for (const auto& e : j.at("Delta")) {
        const std::size_t a = e.at("i").get<std::size_t>(), b = e.at("j").get<std::size_t>();
        d.Delta.at(a * n + b) = d.Delta.at(b * n + a) = Scalar::parse(e.at("value").get<std::string>());
    }
    for (const auto& e : j.at("sharp")) {
        const std::size_t a = e.at("i").get<std::size_t>(), b = e.at("j").get<std::size_t>();
        Vector v;
        for (const auto& s : e.at("coords")) v.push_back(Scalar::parse(s.get<std::string>()));
        if (v.size() != n) throw std::invalid_argument("sharp coordinates do not match dim");
        d.sharp.at(a * n + b) = v;
        d.sharp.at(b * n + a) = v;
    }
    return d;
}

}  // namespace spinfactor
