#include "spinfactor/split_spin.hpp"

#include <stdexcept>

namespace spinfactor {

Scalar s_alpha_t(const Scalar& alpha) {
    const Scalar den = alpha * (alpha - 2);
    if (den.is_zero()) {
        throw PoleError(alpha.is_zero() ? "alpha" : "alpha - 2", " under alpha = " + alpha.to_string());
    }
    return (alpha * alpha - 1) / den;
}

SplitSpinConfig SplitSpinConfig::s_alpha(const Scalar& alpha, std::size_t n) {
    return SplitSpinConfig{alpha, s_alpha_t(alpha), n, {}};
}

SplitSpinConfig SplitSpinConfig::generic(std::size_t n) {
    return SplitSpinConfig{Scalar::variable("alpha"), Scalar::variable("t"), n, {}};
}

Matrix SplitSpinConfig::gram_matrix() const {
    return gram.rows() != 0 ? gram : Matrix::identity(n);
}

nlohmann::json SplitSpinConfig::to_json() const {
    nlohmann::json j{{"alpha", alpha.to_string()}, {"t", t.to_string()}, {"n", n}};
    if (gram.rows() != 0) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < n; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t k = 0; k < n; ++k) row.push_back(gram.at(i, k).to_string());
            rows.push_back(row);
        }
        j["gram"] = rows;
    }
    return j;
}

SplitSpinConfig SplitSpinConfig::from_json(const nlohmann::json& j) {
    SplitSpinConfig c;
    auto scalar_of = [](const nlohmann::json& v, std::string_view name = {}) {
        if (v.is_number_integer()) return Scalar(v.get<long>());
        const auto text = v.get<std::string>();
        if (!name.empty() && text == "symbolic") return Scalar::variable(name);
        return Scalar::parse(text);
    };
    c.alpha = scalar_of(j.at("alpha"), "alpha");
    c.n = j.at("n").get<std::size_t>();
    if (c.n == 0) throw std::invalid_argument("n must be positive");
    const auto& t = j.at("t");
    c.t = (t.is_string() && t.get<std::string>() == "S-alpha") ? s_alpha_t(c.alpha) : scalar_of(t, "t");
    if (j.contains("gram")) {
        const auto& rows = j.at("gram");
        if (rows.size() != c.n) throw std::invalid_argument("gram must be n x n");
        c.gram = Matrix(c.n, c.n);
        for (std::size_t i = 0; i < c.n; ++i) {
            if (rows[i].size() != c.n) throw std::invalid_argument("gram must be n x n");
            for (std::size_t k = 0; k < c.n; ++k) c.gram.at(i, k) = scalar_of(rows[i][k]);
        }
    }
    return c;
}

std::vector<std::string> split_spin_labels(std::size_t n) {
    std::vector<std::string> labels{"z1", "z2"};
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
    return labels;
}

namespace {

void validate_gram(const Matrix& g, std::size_t n) {
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("gram must be n x n");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = i + 1; k < n; ++k) {
            if (!(g.at(i, k) == g.at(k, i))) throw std::invalid_argument("gram matrix is not symmetric");
        }
    }
    if (determinant(g).is_zero()) throw std::invalid_argument("gram matrix is degenerate");
}

}  // namespace

AlgebraPtr build(const SplitSpinConfig& config) {
    const std::size_t n = config.n;
    if (n == 0) throw std::invalid_argument("dim E must be positive");
    const Matrix g = config.gram_matrix();
    validate_gram(g, n);
    const std::size_t dim = n + 2;
    std::vector<std::vector<Vector>> upper(dim, std::vector<Vector>(dim));
    auto unit_vec = [dim](std::size_t k, const Scalar& c) {
        Vector v(dim);
        v[k] = c;
        return v;
    };
    upper[0][0] = unit_vec(0, Scalar(1));
    upper[1][1] = unit_vec(1, Scalar(1));
    const Scalar beta = Scalar(1) - config.alpha;
    for (std::size_t i = 0; i < n; ++i) {
        upper[0][2 + i] = unit_vec(2 + i, config.alpha);
        upper[1][2 + i] = unit_vec(2 + i, beta);
        for (std::size_t k = i; k < n; ++k) {
            Vector v(dim);
            v[0] = g.at(i, k);
            v[1] = g.at(i, k) * config.t;
            upper[2 + i][2 + k] = std::move(v);
        }
    }
    return make_algebra(split_spin_labels(n), upper);
}

AlgebraPtr build_S_alpha(const Scalar& alpha, std::size_t n) {
    return build(SplitSpinConfig::s_alpha(alpha, n));
}

AlgebraPtr build_S_alpha_original(const Scalar& alpha, std::size_t n, const Matrix& gram) {
    const Matrix g = gram.rows() == 0 ? Matrix::identity(n) : gram;
    const std::size_t dim = n + 2;
    std::vector<std::vector<Vector>> upper(dim, std::vector<Vector>(dim));
    upper[0][0] = Vector(dim);
    upper[0][0][0] = Scalar(1);
    upper[1][1] = Vector(dim);
    upper[1][1][1] = Scalar(1);
    const Scalar a2 = alpha * (alpha - 2);
    const Scalar a1 = alpha * alpha - 1;
    for (std::size_t i = 0; i < n; ++i) {
        upper[0][2 + i] = Vector(dim);
        upper[0][2 + i][2 + i] = alpha;
        upper[1][2 + i] = Vector(dim);
        upper[1][2 + i][2 + i] = Scalar(1) - alpha;
        for (std::size_t k = i; k < n; ++k) {
            Vector v(dim);
            v[0] = -g.at(i, k) * a2;
            v[1] = -g.at(i, k) * a1;
            upper[2 + i][2 + k] = std::move(v);
        }
    }
    return make_algebra(split_spin_labels(n), upper);
}

Matrix invariant_form(const SplitSpinConfig& config) {
    const std::size_t n = config.n;
    const Matrix g = config.gram_matrix();
    Matrix b(n + 2, n + 2);
    const Scalar& a = config.alpha;
    b.at(0, 0) = 1 + a;
    b.at(1, 1) = 2 - a;
    const Scalar e = 1 + a + (2 - a) * config.t;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) b.at(2 + i, 2 + k) = e * g.at(i, k);
    }
    return b;
}

Scalar bilinear(const Matrix& form, const Element& x, const Element& y) {
    Scalar s;
    const std::size_t n = form.rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        Scalar row;
        for (std::size_t k = 0; k < n; ++k) {
            if (!y[k].is_zero() && !form.at(i, k).is_zero()) row += form.at(i, k) * y[k];
        }
        if (!row.is_zero()) s += x[i] * row;
    }
    return s;
}

Element unit(const AlgebraPtr& algebra) {
    return Element::basis(algebra, 0) + Element::basis(algebra, 1);
}

nlohmann::json SimplicityReport::to_json() const {
    nlohmann::json j;
    switch (verdict) {
        case Verdict::simple:
            j["simple"] = true;
            break;
        case Verdict::not_simple:
            j["simple"] = false;
            break;
        case Verdict::generically_simple:
            j["simple"] = "generic";
            break;
    }
    if (verdict == Verdict::not_simple) {
        nlohmann::json basis = nlohmann::json::array();
        for (const auto& v : witness.basis()) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto& s : v) row.push_back(s.to_string());
            basis.push_back(row);
        }
        j["witness"] = {{"ideal", witness_label}, {"basis", basis}, {"is_ideal", witness_is_ideal},
                        {"dim", witness.dim()}};
    } else {
        j["certificate"] = {{"generators", certified}, {"closure", "whole algebra"}};
    }
    if (!excluded_locus.empty()) j["excluded_locus"] = excluded_locus;
    return j;
}

SimplicityReport simplicity_report(const SplitSpinConfig& config) {
    const AlgebraPtr alg = build(config);
    const std::size_t n = config.n;
    const std::size_t dim = n + 2;
    SimplicityReport rep;
    auto proper = [&](std::string label, std::vector<std::size_t> idx) {
        std::vector<Vector> vs;
        for (std::size_t k : idx) vs.push_back(Element::basis(alg, k).coords());
        rep.verdict = SimplicityReport::Verdict::not_simple;
        rep.witness_label = std::move(label);
        rep.witness = Subspace::span(vs, dim);
        rep.witness_is_ideal = is_ideal(*alg, rep.witness);
        return rep;
    };
    const bool concrete = config.alpha.is_rational() && config.t.is_rational();
    if (concrete) {
        if (config.alpha.is_zero()) return proper("F z1", {0});
        if (config.alpha.is_one()) return proper("F z2", {1});
        if (config.t.is_zero()) {
            std::vector<std::size_t> idx{0};
            std::string label = "F z1";
            for (std::size_t i = 0; i < n; ++i) {
                idx.push_back(2 + i);
                label += " + F e" + std::to_string(i + 1);
            }
            return proper(label, idx);
        }
    }
    rep.verdict = concrete ? SimplicityReport::Verdict::simple : SimplicityReport::Verdict::generically_simple;
    if (!concrete) rep.excluded_locus = {"alpha = 0", "alpha = 1", "t = 0"};
    const Subspace whole = Subspace::whole(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        if (ideal_closure(alg, {Element::basis(alg, k)}) == whole) {
            rep.certified.push_back(alg->labels()[k]);
        } else {
            rep.verdict = SimplicityReport::Verdict::not_simple;
            rep.witness_label = "ideal generated by " + alg->labels()[k];
            rep.witness = ideal_closure(alg, {Element::basis(alg, k)});
            rep.witness_is_ideal = is_ideal(*alg, rep.witness);
            return rep;
        }
    }
    return rep;
}

LinearMap flip_map(const AlgebraPtr& algebra, const Scalar& e_scale) {
    const std::size_t dim = algebra->dim();
    Matrix m(dim, dim);
    m.at(1, 0) = Scalar(1);
    m.at(0, 1) = Scalar(1);
    for (std::size_t i = 2; i < dim; ++i) m.at(i, i) = e_scale;
    return LinearMap(algebra, std::move(m));
}

Element u_line_element(const AlgebraPtr& algebra, const Scalar& alpha) {
    return Element::basis(algebra, 0) - (alpha / (1 - alpha)) * Element::basis(algebra, 1);
}

}  // namespace spinfactor
