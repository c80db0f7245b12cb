#include "spinfactor/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinfactor {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                if (!other.at(k, j).is_zero()) out.at(i, j) += a * other.at(k, j);
            }
        }
    }
    return out;
}

Vector Matrix::operator*(const Vector& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            if (!at(i, k).is_zero() && !v[k].is_zero()) out[i] += at(i, k) * v[k];
        }
    }
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] - other.data_[k];
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    }
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

namespace {

bool is_unit_candidate(const Scalar& s) {
    if (s.is_zero()) return false;
    if (!s.uses_relations()) return true;
    // A unit must keep a nonzero part after killing the nilpotent generators.
    Assignment kill;
    for (const auto& name : s.variable_names()) {
        const auto v = Variables::find(name);
        if (v && Variables::relation(*v) == Relation::square_zero) kill.emplace(name, Scalar(0));
    }
    return kill.empty() || !s.substitute(kill).is_zero();
}

std::size_t cost(const Scalar& s) {
    if (s.is_rational()) return 0;
    return s.numerator().size() + s.denominator().size() + (s.uses_relations() ? 1000 : 0);
}

struct Forward {
    Matrix m;
    std::vector<std::size_t> pivots;
    std::vector<Scalar> pivot_values;
    int sign = 1;
};

Forward bareiss_forward(Matrix m) {
    Forward f;
    Scalar prev(1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t best = m.rows();
        const Scalar* blocked = nullptr;
        for (std::size_t i = r; i < m.rows(); ++i) {
            const Scalar& s = m.at(i, col);
            if (s.is_zero()) continue;
            if (!is_unit_candidate(s)) {
                blocked = &s;
                continue;
            }
            if (best == m.rows() || cost(s) < cost(m.at(best, col))) best = i;
        }
        if (best == m.rows()) {
            if (blocked != nullptr) throw NonInvertibleError("pivot " + blocked->to_string());
            continue;
        }
        if (best != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(best, j), m.at(r, j));
            f.sign = -f.sign;
        }
        const Scalar piv = m.at(r, col);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const Scalar factor = m.at(i, col);
            for (std::size_t j = col + 1; j < m.cols(); ++j) {
                Scalar v = piv * m.at(i, j);
                if (!factor.is_zero()) v -= factor * m.at(r, j);
                m.at(i, j) = prev.is_one() ? v : v / prev;
            }
            m.at(i, col) = Scalar();
        }
        f.pivots.push_back(col);
        f.pivot_values.push_back(piv);
        prev = piv;
        ++r;
    }
    f.m = std::move(m);
    return f;
}

}  // namespace

Echelon row_reduce(const Matrix& input) {
    Forward f = bareiss_forward(input);
    Matrix& m = f.m;
    const std::size_t rank = f.pivots.size();
    // Normalise pivots and clear above them.
    for (std::size_t r = rank; r-- > 0;) {
        const std::size_t pc = f.pivots[r];
        const Scalar inv = Scalar(1) / m.at(r, pc);
        for (std::size_t j = pc; j < m.cols(); ++j) {
            if (!m.at(r, j).is_zero()) m.at(r, j) *= inv;
        }
        for (std::size_t i = 0; i < r; ++i) {
            const Scalar factor = m.at(i, pc);
            if (factor.is_zero()) continue;
            for (std::size_t j = pc; j < m.cols(); ++j) {
                if (!m.at(r, j).is_zero()) m.at(i, j) -= factor * m.at(r, j);
            }
        }
    }
    Echelon e;
    e.rref = Matrix(rank, m.cols());
    for (std::size_t i = 0; i < rank; ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) e.rref.at(i, j) = m.at(i, j);
    }
    e.pivots = std::move(f.pivots);
    e.pivot_values = std::move(f.pivot_values);
    return e;
}

std::size_t rank(const Matrix& m) {
    return bareiss_forward(m).pivots.size();
}

std::vector<Vector> kernel(const Matrix& m) {
    const Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = Scalar(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Scalar determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() == 0) return Scalar(1);
    const Forward f = bareiss_forward(m);
    if (f.pivots.size() < m.rows()) return Scalar();
    const Scalar d = f.m.at(m.rows() - 1, m.cols() - 1);
    return f.sign > 0 ? d : -d;
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    const Echelon e = row_reduce(Matrix::from_rows(vectors, ambient));
    for (std::size_t i = 0; i < e.rref.rows(); ++i) s.basis_.push_back(e.rref.row(i));
    return s;
}

Subspace Subspace::whole(std::size_t ambient) {
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < ambient; ++i) {
        Vector v(ambient);
        v[i] = Scalar(1);
        vs.push_back(std::move(v));
    }
    return span(vs, ambient);
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector length mismatch");
    // Reduce v against the RREF basis.
    Vector w = v;
    for (const auto& b : basis_) {
        std::size_t p = 0;
        while (b[p].is_zero()) ++p;
        if (w[p].is_zero()) continue;
        const Scalar f = w[p];
        for (std::size_t j = p; j < ambient_; ++j) {
            if (!b[j].is_zero()) w[j] -= f * b[j];
        }
    }
    return is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vector& v) { return contains(v); });
}

Subspace Subspace::operator+(const Subspace& other) const {
    std::vector<Vector> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(all, ambient_);
}

Vector add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vector scale(const Scalar& c, const Vector& v) {
    Vector out(v.size());
    if (c.is_zero()) return out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) out[i] = c * v[i];
    }
    return out;
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace spinfactor
