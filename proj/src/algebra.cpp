#include "spinfactor/algebra.hpp"

#include <stdexcept>

namespace spinfactor {

AlgebraDescriptor::AlgebraDescriptor(std::vector<std::string> labels, const std::vector<std::vector<Vector>>& upper)
    : labels_(std::move(labels)), table_(labels_.size() * labels_.size()) {
    const std::size_t n = labels_.size();
    if (n == 0) throw std::invalid_argument("algebra dimension must be positive");
    if (upper.size() != n) throw std::invalid_argument("structure table has wrong size");
    for (std::size_t i = 0; i < n; ++i) {
        if (upper[i].size() != n) throw std::invalid_argument("structure table row has wrong size");
        for (std::size_t j = i; j < n; ++j) {
            const Vector& v = upper[i][j];
            if (v.empty()) continue;
            if (v.size() != n) throw std::invalid_argument("structure constant vector has wrong length");
            std::vector<Entry> entries;
            for (std::size_t k = 0; k < n; ++k) {
                if (!v[k].is_zero()) entries.push_back(Entry{k, v[k]});
            }
            table_[i * n + j] = entries;
            table_[j * n + i] = std::move(entries);
        }
    }
}

std::size_t AlgebraDescriptor::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return i;
    }
    throw std::out_of_range("no basis element labeled '" + label + "'");
}

Vector AlgebraDescriptor::product_vector(std::size_t i, std::size_t j) const {
    Vector v(dim());
    for (const auto& e : product(i, j)) v[e.index] = e.coeff;
    return v;
}

bool operator==(const AlgebraDescriptor& a, const AlgebraDescriptor& b) {
    if (a.labels_ != b.labels_) return false;
    for (std::size_t k = 0; k < a.table_.size(); ++k) {
        const auto& x = a.table_[k];
        const auto& y = b.table_[k];
        if (x.size() != y.size()) return false;
        for (std::size_t m = 0; m < x.size(); ++m) {
            if (x[m].index != y[m].index || !(x[m].coeff == y[m].coeff)) return false;
        }
    }
    return true;
}

nlohmann::json AlgebraDescriptor::to_json() const {
    nlohmann::json products = nlohmann::json::array();
    for (std::size_t i = 0; i < dim(); ++i) {
        for (std::size_t j = i; j < dim(); ++j) {
            if (product(i, j).empty()) continue;
            nlohmann::json coords = nlohmann::json::array();
            for (const auto& s : product_vector(i, j)) coords.push_back(s.to_string());
            products.push_back({{"i", i}, {"j", j}, {"coords", coords}});
        }
    }
    return {{"dim", dim()}, {"labels", labels_}, {"products", products}};
}

AlgebraPtr AlgebraDescriptor::from_json(const nlohmann::json& j) {
    const std::size_t n = j.at("dim").get<std::size_t>();
    auto labels = j.at("labels").get<std::vector<std::string>>();
    if (labels.size() != n) throw std::invalid_argument("labels do not match dim");
    std::vector<std::vector<Vector>> upper(n, std::vector<Vector>(n));
    for (const auto& p : j.at("products")) {
        std::size_t a = p.at("i").get<std::size_t>();
        std::size_t b = p.at("j").get<std::size_t>();
        if (a >= n || b >= n) throw std::invalid_argument("product index out of range");
        if (a > b) std::swap(a, b);
        Vector v;
        for (const auto& c : p.at("coords")) v.push_back(Scalar::parse(c.get<std::string>()));
        if (v.size() != n) throw std::invalid_argument("product coordinates do not match dim");
        upper[a][b] = std::move(v);
    }
    return make_algebra(std::move(labels), upper);
}

AlgebraPtr make_algebra(std::vector<std::string> labels, const std::vector<std::vector<Vector>>& upper) {
    return std::make_shared<const AlgebraDescriptor>(std::move(labels), upper);
}

// ------------------------------------------------------------------ Element

namespace {

void require_same(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a == b) return;
    if (!a || !b || !(*a == *b)) throw AlgebraMismatchError();
}

}  // namespace

Element::Element(AlgebraPtr algebra, Vector coords) : algebra_(std::move(algebra)), coords_(std::move(coords)) {
    if (!algebra_ || coords_.size() != algebra_->dim()) {
        throw std::invalid_argument("coordinate vector does not match algebra dimension");
    }
}

Element Element::zero(AlgebraPtr algebra) {
    const std::size_t n = algebra->dim();
    return Element(std::move(algebra), Vector(n));
}

Element Element::basis(AlgebraPtr algebra, std::size_t i) {
    Vector v(algebra->dim());
    v.at(i) = Scalar(1);
    return Element(std::move(algebra), std::move(v));
}

Element Element::basis(AlgebraPtr algebra, const std::string& label) {
    const std::size_t i = algebra->index_of(label);
    return basis(std::move(algebra), i);
}

Element Element::operator-() const {
    return Element(algebra_, scale(Scalar(-1), coords_));
}

Element operator+(const Element& a, const Element& b) {
    require_same(a.algebra_, b.algebra_);
    return Element(a.algebra_, add(a.coords_, b.coords_));
}

Element operator-(const Element& a, const Element& b) {
    require_same(a.algebra_, b.algebra_);
    Vector out(a.coords_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coords_[i] - b.coords_[i];
    return Element(a.algebra_, std::move(out));
}

Element operator*(const Scalar& c, const Element& a) {
    return Element(a.algebra_, scale(c, a.coords_));
}

bool operator==(const Element& a, const Element& b) {
    require_same(a.algebra_, b.algebra_);
    return a.coords_ == b.coords_;
}

Element Element::substitute(const Assignment& assignment) const {
    Vector out(coords_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coords_[i].substitute(assignment);
    return Element(algebra_, std::move(out));
}

std::string Element::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (coords_[i].is_one()) {
            s += algebra_->labels()[i];
        } else {
            s += "(" + coords_[i].to_string() + ")*" + algebra_->labels()[i];
        }
    }
    return s.empty() ? "0" : s;
}

Element generic_element(const AlgebraPtr& algebra, const std::string& prefix,
                        const std::vector<std::size_t>& support) {
    Vector v(algebra->dim());
    auto set = [&](std::size_t k) { v.at(k) = Scalar::variable(prefix + "_" + algebra->labels()[k]); };
    if (support.empty()) {
        for (std::size_t k = 0; k < v.size(); ++k) set(k);
    } else {
        for (std::size_t k : support) set(k);
    }
    return Element(algebra, std::move(v));
}

Element multiply(const Element& x, const Element& y) {
    require_same(x.algebra(), y.algebra());
    const auto& alg = *x.algebra();
    const std::size_t n = alg.dim();
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const auto& entries = alg.product(i, j);
            if (entries.empty()) continue;
            const Scalar c = x[i] * y[j];
            for (const auto& e : entries) out[e.index] += c * e.coeff;
        }
    }
    return Element(x.algebra(), std::move(out));
}

Element associator(const Element& x, const Element& y, const Element& z) {
    return multiply(multiply(x, y), z) - multiply(x, multiply(y, z));
}

Element three_associators(const Element& a, const Element& b, const Element& c, const Element& d) {
    return associator(associator(a, b, c), d, b) + associator(associator(c, b, d), a, b) +
           associator(associator(d, b, a), c, b);
}

// ---------------------------------------------------------------- LinearMap

LinearMap::LinearMap(AlgebraPtr algebra, Matrix matrix) : algebra_(std::move(algebra)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != algebra_->dim() || matrix_.cols() != algebra_->dim()) {
        throw std::invalid_argument("linear map does not match algebra dimension");
    }
}

LinearMap LinearMap::identity(AlgebraPtr algebra) {
    const std::size_t n = algebra->dim();
    return LinearMap(std::move(algebra), Matrix::identity(n));
}

Element LinearMap::apply(const Element& x) const {
    require_same(algebra_, x.algebra());
    return Element(algebra_, matrix_ * x.coords());
}

LinearMap LinearMap::operator*(const LinearMap& other) const {
    require_same(algebra_, other.algebra_);
    return LinearMap(algebra_, matrix_ * other.matrix_);
}

LinearMap LinearMap::operator-(const LinearMap& other) const {
    require_same(algebra_, other.algebra_);
    return LinearMap(algebra_, matrix_ - other.matrix_);
}

LinearMap right_mult(const Element& x) {
    const auto& alg = x.algebra();
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < alg->dim(); ++j) cols.push_back(multiply(x, Element::basis(alg, j)).coords());
    return LinearMap(alg, Matrix::from_columns(cols, alg->dim()));
}

Subspace annihilator(const Element& x) {
    const std::size_t n = x.algebra()->dim();
    return Subspace::span(kernel(right_mult(x).matrix()), n);
}

bool is_ideal(const AlgebraDescriptor& algebra, const Subspace& subspace) {
    const std::size_t n = algebra.dim();
    for (const auto& v : subspace.basis()) {
        for (std::size_t k = 0; k < n; ++k) {
            Vector prod(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (v[i].is_zero()) continue;
                for (const auto& e : algebra.product(i, k)) prod[e.index] += v[i] * e.coeff;
            }
            if (!subspace.contains(prod)) return false;
        }
    }
    return true;
}

Subspace ideal_closure(const AlgebraPtr& algebra, const std::vector<Element>& generators) {
    const std::size_t n = algebra->dim();
    std::vector<Vector> gens;
    for (const auto& g : generators) {
        require_same(algebra, g.algebra());
        gens.push_back(g.coords());
    }
    Subspace current = Subspace::span(gens, n);
    while (true) {
        std::vector<Vector> grown = current.basis();
        for (const auto& v : current.basis()) {
            const Element x(algebra, v);
            for (std::size_t k = 0; k < n; ++k) grown.push_back(multiply(x, Element::basis(algebra, k)).coords());
        }
        Subspace next = Subspace::span(grown, n);
        if (next.dim() == current.dim()) return next;
        current = std::move(next);
    }
}

bool is_automorphism(const LinearMap& phi) {
    const auto& alg = phi.algebra();
    if (determinant(phi.matrix()).is_zero()) return false;
    const std::size_t n = alg->dim();
    std::vector<Element> images;
    for (std::size_t j = 0; j < n; ++j) images.push_back(phi.apply(Element::basis(alg, j)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Element lhs = phi.apply(Element(alg, alg->product_vector(i, j)));
            if (!(lhs == multiply(images[i], images[j]))) return false;
        }
    }
    return true;
}

}  // namespace spinfactor
