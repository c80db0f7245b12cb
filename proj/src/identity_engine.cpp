#include "spinfactor/identity_engine.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <chrono>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <variant>

namespace spinfactor {

namespace {

std::string wrap(const std::string& s, bool compound) { return compound ? "(" + s + ")" : s; }

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < std::min<std::size_t>(jobs, count); ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

struct VectorHash {
    std::size_t operator()(const Vector& v) const {
        std::size_t h = v.size();
        for (const auto& s : v) h = h * 1000003u ^ s.hash();
        return h;
    }
};

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

// ------------------------------------------------------------- monomials

CommutativeMonomial CommutativeMonomial::variable(int index) {
    if (index < 1) throw std::invalid_argument("variable index must be positive");
    auto n = std::make_shared<Node>();
    n->var = index;
    n->leaves = {index};
    n->shape = "*";
    n->text = "x" + std::to_string(index);
    return CommutativeMonomial(std::move(n));
}

CommutativeMonomial CommutativeMonomial::product(const CommutativeMonomial& a, const CommutativeMonomial& b) {
    const bool swap = compare(b, a) < 0;
    const CommutativeMonomial& l = swap ? b : a;
    const CommutativeMonomial& r = swap ? a : b;
    auto n = std::make_shared<Node>();
    n->left = l.node_;
    n->right = r.node_;
    std::merge(l.leaves().begin(), l.leaves().end(), r.leaves().begin(), r.leaves().end(),
               std::back_inserter(n->leaves));
    const bool right_first = l.degree() < r.degree();
    const CommutativeMonomial& first = right_first ? r : l;
    const CommutativeMonomial& second = right_first ? l : r;
    n->shape = wrap(first.shape(), !first.is_variable()) + wrap(second.shape(), !second.is_variable());
    n->text = wrap(first.to_string(), !first.is_variable()) + " " + wrap(second.to_string(), !second.is_variable());
    return CommutativeMonomial(std::move(n));
}

int compare(const CommutativeMonomial& a, const CommutativeMonomial& b) {
    if (a.node_ == b.node_) return 0;
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    if (a.leaves() != b.leaves()) return a.leaves() < b.leaves() ? -1 : 1;
    if (a.is_variable()) return 0;
    if (a.shape() != b.shape()) return a.shape() < b.shape() ? -1 : 1;
    if (const int c = compare(a.left(), b.left()); c != 0) return c;
    return compare(a.right(), b.right());
}

bool CommutativeMonomial::is_multilinear() const {
    return std::adjacent_find(leaves().begin(), leaves().end()) == leaves().end();
}

namespace {

struct MonomialParser {
    std::string_view s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("cannot parse monomial \"" + std::string(s) + "\": " + what);
    }
    void skip() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n')) ++pos;
    }
    CommutativeMonomial atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end");
        if (s[pos] == '(') {
            ++pos;
            CommutativeMonomial m = sequence();
            skip();
            if (pos >= s.size() || s[pos] != ')') fail("missing ')'");
            ++pos;
            return m;
        }
        if (s[pos] != 'x') fail("unexpected '" + std::string(1, s[pos]) + "'");
        ++pos;
        if (pos < s.size() && s[pos] == '_') ++pos;
        const bool brace = pos < s.size() && s[pos] == '{';
        if (brace) ++pos;
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("variable without index");
        const int index = std::stoi(std::string(s.substr(start, pos - start)));
        if (brace) {
            if (pos >= s.size() || s[pos] != '}') fail("missing '}'");
            ++pos;
        }
        return CommutativeMonomial::variable(index);
    }
    CommutativeMonomial sequence() {
        CommutativeMonomial m = atom();
        for (;;) {
            skip();
            if (pos >= s.size() || s[pos] == ')') return m;
            m = CommutativeMonomial::product(m, atom());
        }
    }
};

}  // namespace

CommutativeMonomial CommutativeMonomial::parse(std::string_view text) {
    MonomialParser p{text};
    CommutativeMonomial m = p.sequence();
    p.skip();
    if (p.pos != text.size()) p.fail("unbalanced ')'");
    return m;
}

Element CommutativeMonomial::evaluate(const std::vector<Element>& assignment) const {
    if (is_variable()) {
        if (static_cast<std::size_t>(index()) > assignment.size()) {
            throw std::invalid_argument("no value for x" + std::to_string(index()));
        }
        return assignment[index() - 1];
    }
    return left().evaluate(assignment) * right().evaluate(assignment);
}

// ------------------------------------------------------------- polynomials

MagmaPolynomial::MagmaPolynomial(const CommutativeMonomial& m) { terms_.emplace(m, Scalar(1)); }

MagmaPolynomial MagmaPolynomial::operator-() const { return Scalar(-1) * *this; }

MagmaPolynomial operator+(const MagmaPolynomial& a, const MagmaPolynomial& b) {
    MagmaPolynomial out = a;
    for (const auto& [m, c] : b.terms_) {
        auto [it, inserted] = out.terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    return out;
}

MagmaPolynomial operator-(const MagmaPolynomial& a, const MagmaPolynomial& b) { return a + (-b); }

MagmaPolynomial operator*(const Scalar& c, const MagmaPolynomial& a) {
    MagmaPolynomial out;
    if (c.is_zero()) return out;
    for (const auto& [m, k] : a.terms_) out.terms_.emplace(m, c * k);
    return out;
}

MagmaPolynomial operator*(const MagmaPolynomial& a, const MagmaPolynomial& b) {
    MagmaPolynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out = out + (ca * cb) * MagmaPolynomial(CommutativeMonomial::product(ma, mb));
        }
    }
    return out;
}

Element MagmaPolynomial::evaluate(const std::vector<Element>& assignment) const {
    if (assignment.empty()) throw std::invalid_argument("empty assignment");
    Element out = Element::zero(assignment.front().algebra());
    for (const auto& [m, c] : terms_) out += c * m.evaluate(assignment);
    return out;
}

namespace {

MagmaPolynomial substitute_monomial(const CommutativeMonomial& m, const std::vector<MagmaPolynomial>& image) {
    if (m.is_variable()) {
        if (static_cast<std::size_t>(m.index()) > image.size()) {
            throw std::invalid_argument("no image for x" + std::to_string(m.index()));
        }
        return image[m.index() - 1];
    }
    return substitute_monomial(m.left(), image) * substitute_monomial(m.right(), image);
}

}  // namespace

MagmaPolynomial MagmaPolynomial::substitute(const std::vector<MagmaPolynomial>& image) const {
    MagmaPolynomial out;
    for (const auto& [m, c] : terms_) out = out + c * substitute_monomial(m, image);
    return out;
}

std::string MagmaPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string coeff = c.to_string();
        const bool negative = !coeff.empty() && coeff[0] == '-';
        if (negative) coeff.erase(0, 1);
        if (coeff.find_first_of("+-") != std::string::npos) coeff = "(" + coeff + ")";
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        if (coeff != "1") out += coeff + " ";
        out += "[" + m.to_string() + "]";
    }
    return out;
}

MagmaPolynomial associator(const MagmaPolynomial& a, const MagmaPolynomial& b, const MagmaPolynomial& c) {
    return (a * b) * c - a * (b * c);
}

// ------------------------------------------------------------- bases

std::optional<std::size_t> MultilinearBasis::index_of(const CommutativeMonomial& m) const {
    const auto it = std::lower_bound(monomials.begin(), monomials.end(), m);
    if (it == monomials.end() || !(*it == m)) return std::nullopt;
    return static_cast<std::size_t>(it - monomials.begin());
}

Vector MultilinearBasis::coordinates(const MagmaPolynomial& p) const {
    Vector v(size());
    for (const auto& [m, c] : p.terms()) {
        const auto i = index_of(m);
        if (!i) throw std::invalid_argument("monomial " + m.to_string() + " is not in the basis");
        v[*i] = c;
    }
    return v;
}

std::map<std::string, std::size_t> MultilinearBasis::shape_counts() const {
    std::map<std::string, std::size_t> out;
    for (const auto& m : monomials) ++out[m.shape()];
    return out;
}

nlohmann::json MultilinearBasis::to_json() const {
    nlohmann::json j;
    j["degree"] = degree;
    j["size"] = size();
    j["monomials"] = nlohmann::json::array();
    for (const auto& m : monomials) j["monomials"].push_back(m.to_string());
    j["shapes"] = shape_counts();
    return j;
}

MultilinearBasis gen_multilinear(std::size_t degree) {
    if (degree < 1 || degree > 12) throw std::invalid_argument("degree must lie in 1..12");
    std::unordered_map<unsigned, std::vector<CommutativeMonomial>> memo;
    std::function<const std::vector<CommutativeMonomial>&(unsigned)> trees = [&](unsigned mask)
        -> const std::vector<CommutativeMonomial>& {
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        std::vector<CommutativeMonomial> out;
        const unsigned low = mask & (~mask + 1);
        if (mask == low) {
            out.push_back(CommutativeMonomial::variable(std::countr_zero(mask) + 1));
        } else {
            const unsigned rest = mask ^ low;
            // Subsets containing the lowest variable, excluding the full set.
            for (unsigned sub = rest;; sub = (sub - 1) & rest) {
                const unsigned a = sub | low;
                if (a != mask) {
                    const auto& ta = trees(a);
                    const auto& tb = trees(mask ^ a);
                    for (const auto& x : ta) {
                        for (const auto& y : tb) out.push_back(CommutativeMonomial::product(x, y));
                    }
                }
                if (sub == 0) break;
            }
        }
        return memo.emplace(mask, std::move(out)).first->second;
    };
    MultilinearBasis b;
    b.degree = degree;
    b.monomials = trees((1u << degree) - 1);
    std::sort(b.monomials.begin(), b.monomials.end());
    return b;
}

const std::vector<std::string>& excluded_monomials_z() {
    static const std::vector<std::string> z{
        "((x3 x5) x4) (x1 x2)",   "((x4 x5) x3) (x1 x2)",   "((x2 x5) x4) (x1 x3)",   "((x4 x5) x2) (x1 x3)",
        "((x2 x5) x3) (x1 x4)",   "((x3 x5) x2) (x1 x4)",   "(((x1 x5) x4) x3) x2",   "(((x2 x5) x4) x3) x1",
        "(((x3 x5) x4) x2) x1",   "(((x4 x5) x3) x2) x1",
    };
    return z;
}

MultilinearBasis reduced_basis_B() {
    const MultilinearBasis p = gen_multilinear(5);
    std::vector<bool> drop(p.size(), false);
    for (const auto& text : excluded_monomials_z()) {
        const auto i = p.index_of(CommutativeMonomial::parse(text));
        if (!i) throw std::logic_error("excluded monomial " + text + " is not in P");
        drop[*i] = true;
    }
    MultilinearBasis b;
    b.degree = 5;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!drop[i]) b.monomials.push_back(p.monomials[i]);
    }
    return b;
}

MagmaPolynomial IdentityCandidate::polynomial() const {
    MagmaPolynomial out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (!coeffs[i].is_zero()) out = out + coeffs[i] * MagmaPolynomial(basis.monomials[i]);
    }
    return out;
}

std::string IdentityCandidate::to_string() const { return polynomial().to_string(); }

// ------------------------------------------------------------- evaluation

BasisEvaluator::BasisEvaluator(const MultilinearBasis& basis) {
    std::map<CommutativeMonomial, std::size_t> ids;
    std::function<std::size_t(const CommutativeMonomial&)> visit = [&](const CommutativeMonomial& m) {
        if (auto it = ids.find(m); it != ids.end()) return it->second;
        Step s{0, 0, 0};
        if (m.is_variable()) {
            s.var = m.index();
        } else {
            s.left = visit(m.left());
            s.right = visit(m.right());
        }
        steps_.push_back(s);
        ids.emplace(m, steps_.size() - 1);
        return steps_.size() - 1;
    };
    for (const auto& m : basis.monomials) outputs_.push_back(visit(m));
}

std::vector<Element> BasisEvaluator::evaluate(const std::vector<Element>& assignment) const {
    std::vector<Element> values(steps_.size());
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        const Step& s = steps_[i];
        if (s.var > 0) {
            if (static_cast<std::size_t>(s.var) > assignment.size()) {
                throw std::invalid_argument("no value for x" + std::to_string(s.var));
            }
            values[i] = assignment[s.var - 1];
        } else {
            values[i] = values[s.left] * values[s.right];
        }
    }
    std::vector<Element> out;
    out.reserve(outputs_.size());
    for (std::size_t o : outputs_) out.push_back(values[o]);
    return out;
}

namespace {

std::vector<std::vector<std::size_t>> all_tuples(std::size_t dim, std::size_t degree) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> t(degree, 0);
    for (;;) {
        out.push_back(t);
        std::size_t k = degree;
        while (k > 0 && ++t[k - 1] == dim) t[--k] = 0;
        if (k == 0) break;
    }
    return out;
}

/// Per substitution, the coordinate rows (one per algebra coordinate).
struct SystemRows {
    std::size_t substitutions = 0;
    std::size_t distinct_values = 0;
    std::vector<Vector> rows;  // distinct, in order of first appearance
    bool has_zero_row = false;
};

SystemRows assemble(const AlgebraPtr& algebra, const MultilinearBasis& basis, const NullspaceOptions& options) {
    const std::size_t dim = algebra->dim();
    const auto tuples = options.substitutions.empty() ? all_tuples(dim, basis.degree) : options.substitutions;
    std::vector<Element> generators;
    for (std::size_t i = 0; i < dim; ++i) generators.push_back(Element::basis(algebra, i));
    const BasisEvaluator evaluator(basis);

    std::vector<std::vector<Vector>> blocks(tuples.size());
    parallel_for(tuples.size(), options.jobs, [&](std::size_t k) {
        const auto& t = tuples[k];
        if (t.size() != basis.degree) throw std::invalid_argument("substitution has the wrong length");
        std::vector<Element> assignment;
        for (std::size_t i : t) assignment.push_back(generators.at(i));
        const auto values = evaluator.evaluate(assignment);
        std::vector<Vector> rows(dim, Vector(basis.size()));
        for (std::size_t m = 0; m < values.size(); ++m) {
            for (std::size_t c = 0; c < dim; ++c) rows[c][m] = values[m][c];
        }
        blocks[k] = std::move(rows);
    });

    SystemRows out;
    out.substitutions = tuples.size();
    std::unordered_set<Vector, VectorHash> values, seen;
    for (const auto& block : blocks) {
        Vector flat;
        for (const auto& r : block) flat.insert(flat.end(), r.begin(), r.end());
        values.insert(std::move(flat));
        for (const auto& r : block) {
            if (!seen.insert(r).second) continue;
            if (is_zero(r)) {
                out.has_zero_row = true;
            } else {
                out.rows.push_back(r);
            }
        }
    }
    out.distinct_values = values.size();
    return out;
}

}  // namespace

NullspaceResult identity_nullspace(const AlgebraPtr& algebra, const MultilinearBasis& basis,
                                   const NullspaceOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < algebra->dim(); ++i) {
        for (std::size_t j = 0; j < algebra->dim(); ++j) {
            for (const auto& e : algebra->product(i, j)) {
                if (!e.coeff.is_rational()) {
                    throw std::invalid_argument("identity_nullspace needs rational structure constants");
                }
            }
        }
    }
    const SystemRows sys = assemble(algebra, basis, options);
    NullspaceResult r;
    r.basis_size = basis.size();
    r.substitutions = sys.substitutions;
    r.distinct_substitution_values = sys.distinct_values;
    r.rows_after_dedup = sys.rows.size() + (sys.has_zero_row ? 1 : 0);
    std::vector<Vector> kernel_basis;
    if (sys.rows.empty()) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Vector v(basis.size());
            v[i] = Scalar(1);
            kernel_basis.push_back(std::move(v));
        }
    } else {
        kernel_basis = kernel(Matrix::from_rows(sys.rows, basis.size()));
    }
    r.rank = basis.size() - kernel_basis.size();
    for (auto& v : kernel_basis) r.nullspace.push_back(IdentityCandidate{basis, std::move(v)});
    r.elapsed_ms = ms_since(start);
    return r;
}

nlohmann::json NullspaceResult::to_json(bool with_vectors) const {
    nlohmann::json j;
    j["basis_size"] = basis_size;
    j["substitutions"] = substitutions;
    j["distinct_substitution_values"] = distinct_substitution_values;
    j["rows_after_dedup"] = rows_after_dedup;
    j["rank"] = rank;
    j["nullspace_dim"] = nullspace.size();
    if (with_vectors) {
        j["nullspace_vectors"] = nlohmann::json::array();
        for (const auto& c : nullspace) j["nullspace_vectors"].push_back(c.to_string());
    }
    if (!excluded_locus.empty()) j["excluded_locus"] = excluded_locus;
    return j;
}

// ------------------------------------------------------------- parametric rank

namespace {

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    const Polynomial g = gcd(a, b);
    return *exact_divide(a * b, g);
}

/// Rows made polynomial by clearing denominators and constant content.
Vector polynomial_row(const Vector& row) {
    Polynomial den(Rational(1));
    for (const auto& s : row) {
        if (!s.is_zero()) den = lcm(den, s.denominator());
    }
    Vector out;
    out.reserve(row.size());
    const Scalar d(den);
    for (const auto& s : row) out.push_back(s * d);
    return out;
}

std::size_t row_degree(const Vector& row) {
    std::size_t d = 0;
    for (const auto& s : row) {
        if (!s.is_zero()) d = std::max<std::size_t>(d, s.numerator().total_degree());
    }
    return d;
}

/// Greedy choice of rows independent at the sample, cheapest first.
std::vector<std::size_t> independent_rows(const std::vector<Vector>& numeric, const std::vector<std::size_t>& order,
                                          std::size_t cols) {
    std::vector<std::size_t> chosen;
    std::vector<std::pair<std::size_t, Vector>> echelon;  // (pivot, row with 1 at pivot)
    for (std::size_t idx : order) {
        Vector v = numeric[idx];
        for (const auto& [p, b] : echelon) {
            if (v[p].is_zero()) continue;
            const Scalar f = v[p];
            for (std::size_t j = 0; j < cols; ++j) {
                if (!b[j].is_zero()) v[j] -= f * b[j];
            }
        }
        std::size_t p = 0;
        while (p < cols && v[p].is_zero()) ++p;
        if (p == cols) continue;
        const Scalar inv = Scalar(1) / v[p];
        for (auto& s : v) s *= inv;
        echelon.emplace_back(p, std::move(v));
        chosen.push_back(idx);
        if (chosen.size() == cols) break;
    }
    return chosen;
}

std::vector<Vector> substitute_rows(const std::vector<Vector>& rows, const Assignment& a) {
    std::vector<Vector> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        Vector v;
        v.reserve(r.size());
        for (const auto& s : r) v.push_back(s.substitute(a));
        out.push_back(std::move(v));
    }
    return out;
}

/// Entry of a polynomial row as dense coefficients in one variable.
using Dense = std::vector<Rational>;

Dense dense_entry(const Scalar& s, VarIndex v) {
    if (s.is_zero()) return {};
    if (!s.is_polynomial()) throw std::invalid_argument("parametric rows must be polynomial");
    const Polynomial p = s.numerator();
    Dense d(p.degree_in(v) + 1);
    for (const auto& t : p.terms()) {
        if (t.monomial.degree() != t.monomial.exponent(v)) {
            throw std::invalid_argument("parametric rows may involve only the parameter");
        }
        d[t.monomial.exponent(v)] += t.coeff;
    }
    return d;
}

Rational horner(const Dense& d, const Rational& x) {
    Rational acc = 0;
    for (std::size_t k = d.size(); k-- > 0;) acc = acc * x + d[k];
    return acc;
}

/// Determinant of an integer matrix (row-major) by fraction-free elimination.
Integer integer_determinant(std::vector<Integer> m, std::size_t n) {
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && sgn(m[piv * n + k]) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m[piv * n + j], m[k * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m[k * n + k] * m[i * n + j] - m[i * n + k] * m[k * n + j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i * n + j] = std::move(v);
            }
            m[i * n + k] = 0;
        }
        prev = m[k * n + k];
    }
    return sign * prev;
}

/// Determinant of a square polynomial matrix in one variable, by exact
/// evaluation at deg + 1 integer points and interpolation.
Polynomial univariate_determinant(const std::vector<std::vector<Dense>>& rows, VarIndex v) {
    const std::size_t n = rows.size();
    std::size_t bound = 0;
    for (const auto& r : rows) {
        std::size_t d = 0;
        for (const auto& e : r) d = std::max(d, e.empty() ? 0 : e.size() - 1);
        bound += d;
    }
    std::vector<Rational> xs, ys;
    const long half = static_cast<long>(bound / 2);
    for (std::size_t k = 0; k <= bound; ++k) {
        const Rational x(static_cast<long>(k) - half);
        std::vector<Integer> m(n * n);
        Rational scale = 1;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Rational> vals(n);
            Integer den = 1;
            for (std::size_t j = 0; j < n; ++j) {
                vals[j] = horner(rows[i][j], x);
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), vals[j].get_den_mpz_t());
            }
            for (std::size_t j = 0; j < n; ++j) m[i * n + j] = Integer(vals[j] * den);
            scale *= den;
        }
        xs.push_back(x);
        ys.push_back(Rational(integer_determinant(std::move(m), n)) / scale);
    }
    // Newton divided differences, then expansion to the monomial basis.
    std::vector<Rational> c = ys;
    for (std::size_t j = 1; j < c.size(); ++j) {
        for (std::size_t i = c.size() - 1; i >= j; --i) c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
    }
    Dense poly{c.back()};
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        Dense next(poly.size() + 1);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= poly[k] * xs[i];
        }
        next[0] += c[i];
        poly = std::move(next);
    }
    std::vector<Term> terms;
    for (std::size_t k = 0; k < poly.size(); ++k) {
        if (sgn(poly[k]) != 0) terms.push_back(Term{Monomial::variable(v, static_cast<std::uint32_t>(k)), poly[k]});
    }
    return Polynomial::from_terms(std::move(terms));
}

void trim(Dense& d) {
    while (!d.empty() && sgn(d.back()) == 0) d.pop_back();
}

Dense dense_sub(Dense a, const Dense& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
    trim(a);
    return a;
}

Dense dense_mul(const Dense& a, const Dense& b) {
    if (a.empty() || b.empty()) return {};
    Dense out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

/// Quotient and remainder of a by b (b nonzero).
std::pair<Dense, Dense> dense_divmod(Dense a, const Dense& b) {
    trim(a);
    Dense q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size() && !a.empty()) {
        const Rational f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
        a.pop_back();
        trim(a);
    }
    trim(q);
    return {std::move(q), std::move(a)};
}

Dense to_dense(const Polynomial& p, VarIndex v) { return dense_entry(Scalar(p), v); }

Polynomial from_dense(const Dense& d, VarIndex v) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (sgn(d[k]) != 0) terms.push_back(Term{Monomial::variable(v, static_cast<std::uint32_t>(k)), d[k]});
    }
    return Polynomial::from_terms(std::move(terms));
}

/// a^-1 mod g, or the nontrivial common factor of a and g when a is a zero divisor.
std::variant<Dense, Dense> inverse_mod(const Dense& a, const Dense& g) {
    Dense r0 = g, r1 = a, s0, s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = dense_divmod(r0, r1);
        Dense s = dense_sub(s0, dense_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.size() > 1) return std::variant<Dense, Dense>(std::in_place_index<1>, r0);
    const Rational c = r0.front();
    for (auto& x : s0) x /= c;
    return std::variant<Dense, Dense>(std::in_place_index<0>, dense_divmod(s0, g).second);
}

struct ResidueRank {
    std::size_t rank = 0;
    std::optional<Dense> split;  // set when g turned out to be reducible
};

/// Rank of the rows over Q[x]/(g), assuming g irreducible until shown otherwise.
ResidueRank residue_rank(const std::vector<std::vector<Dense>>& rows, std::size_t cols, const Dense& g) {
    std::vector<std::vector<Dense>> m;
    for (const auto& r : rows) {
        std::vector<Dense> red;
        for (const auto& e : r) red.push_back(dense_divmod(e, g).second);
        m.push_back(std::move(red));
    }
    ResidueRank out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col].empty()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[row]);
        auto inv = inverse_mod(m[row][col], g);
        if (inv.index() == 1) {
            out.split = std::get<1>(inv);
            return out;
        }
        const Dense& pinv = std::get<0>(inv);
        for (std::size_t j = col; j < cols; ++j) m[row][j] = dense_divmod(dense_mul(m[row][j], pinv), g).second;
        for (std::size_t i = row + 1; i < m.size(); ++i) {
            if (m[i][col].empty()) continue;
            const Dense f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                if (m[row][j].empty()) continue;
                m[i][j] = dense_divmod(dense_sub(m[i][j], dense_mul(f, m[row][j])), g).second;
            }
        }
        ++row;
    }
    out.rank = row;
    return out;
}

}  // namespace

ParametricRankResult parametric_rank(const AlgebraPtr& algebra, const MultilinearBasis& basis,
                                     const std::string& parameter, const Scalar& sample, unsigned jobs,
                                     double budget_seconds) {
    const auto start = std::chrono::steady_clock::now();
    ParametricRankResult r;
    r.basis_size = basis.size();
    r.parameter = parameter;
    r.sample = sample;
    NullspaceOptions opts;
    opts.jobs = jobs;
    const SystemRows sys = assemble(algebra, basis, opts);
    r.rows_after_dedup = sys.rows.size() + (sys.has_zero_row ? 1 : 0);

    std::vector<Vector> rows;
    for (const auto& row : sys.rows) rows.push_back(polynomial_row(row));
    const Assignment at_sample{{parameter, sample}};
    const std::vector<Vector> numeric = substitute_rows(rows, at_sample);

    auto choose = [&](bool reverse) {
        std::vector<std::size_t> order(rows.size());
        std::iota(order.begin(), order.end(), 0);
        std::vector<std::size_t> deg(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) deg[i] = row_degree(rows[i]);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg[a] < deg[b]; });
        if (reverse) std::reverse(order.begin(), order.end());
        return independent_rows(numeric, order, basis.size());
    };
    const VarIndex var = Polynomial::variable(parameter).variables().front();
    auto minor_det = [&](const std::vector<std::size_t>& pick) {
        std::vector<std::vector<Dense>> m;
        for (std::size_t i : pick) {
            std::vector<Dense> row;
            for (const auto& s : rows[i]) row.push_back(dense_entry(s, var));
            m.push_back(std::move(row));
        }
        return univariate_determinant(m, var);
    };
    auto out_of_time = [&] { return ms_since(start) > budget_seconds * 1000; };

    const auto pick = choose(false);
    r.generic_rank = pick.size();
    if (pick.size() < basis.size()) {
        r.note = "rank " + std::to_string(pick.size()) + " at the sample; the generic rank is not determined";
        r.elapsed_ms = ms_since(start);
        return r;
    }
    const Polynomial det = minor_det(pick);
    r.minor_determinant = Scalar(det);
    if (out_of_time()) {
        r.note = "time budget exceeded after the first minor";
        r.elapsed_ms = ms_since(start);
        return r;
    }
    // The rank drops only where every maximal minor vanishes.
    Polynomial common = det;
    if (!common.is_constant()) {
        const auto second = choose(true);
        if (second.size() == basis.size()) common = gcd(common, minor_det(second));
    }
    const LinearFactorization lf = linear_factors(common);
    for (const auto& root : lf.roots) {
        if (out_of_time()) {
            r.note = "time budget exceeded while testing roots";
            r.elapsed_ms = ms_since(start);
            return r;
        }
        const auto at_root = substitute_rows(rows, {{parameter, Scalar(root)}});
        if (rank(Matrix::from_rows(at_root, basis.size())) == basis.size()) {
            r.spurious_roots.push_back(root);
        } else {
            r.excluded_roots.push_back(root);
        }
    }
    if (!lf.remainder.is_constant()) {
        // Square-free part, then the rank over Q[x]/(g) for each factor found.
        Dense rem = to_dense(lf.remainder, var);
        Dense deriv;
        for (std::size_t k = 1; k < rem.size(); ++k) deriv.push_back(rem[k] * static_cast<long>(k));
        const Dense common_part = to_dense(gcd(lf.remainder, from_dense(deriv, var)), var);
        std::vector<Dense> pending{dense_divmod(rem, common_part).first};
        std::vector<std::vector<Dense>> dense_rows;
        for (const auto& row : rows) {
            std::vector<Dense> d;
            for (const auto& e : row) d.push_back(dense_entry(e, var));
            dense_rows.push_back(std::move(d));
        }
        while (!pending.empty()) {
            if (out_of_time()) {
                r.note = "time budget exceeded while testing nonlinear factors";
                r.elapsed_ms = ms_since(start);
                return r;
            }
            const Dense g = pending.back();
            pending.pop_back();
            const ResidueRank rr = residue_rank(dense_rows, basis.size(), g);
            if (rr.split) {
                pending.push_back(*rr.split);
                pending.push_back(dense_divmod(g, *rr.split).first);
                continue;
            }
            Polynomial f = from_dense(g, var);
            f = *exact_divide(f, Polynomial(f.leading().coeff));
            (rr.rank == basis.size() ? r.spurious_factors : r.excluded_factors).push_back(f);
        }
    }
    r.completed = true;
    r.elapsed_ms = ms_since(start);
    return r;
}

std::vector<std::string> ParametricRankResult::excluded_locus() const {
    std::vector<std::string> out;
    const Scalar x = Scalar::variable(parameter);
    for (const auto& q : excluded_roots) out.push_back((Rational(q.get_den()) * x - Rational(q.get_num())).to_string());
    for (const auto& f : excluded_factors) out.push_back(f.to_string());
    return out;
}

nlohmann::json ParametricRankResult::to_json() const {
    nlohmann::json j;
    j["completed"] = completed;
    j["basis_size"] = basis_size;
    j["rows_after_dedup"] = rows_after_dedup;
    j["generic_rank"] = generic_rank;
    j["nullspace_dim"] = basis_size - generic_rank;
    j["parameter"] = parameter;
    j["sample"] = sample.to_string();
    j["excluded_locus"] = excluded_locus();
    j["spurious_roots"] = nlohmann::json::array();
    for (const auto& q : spurious_roots) j["spurious_roots"].push_back(spinfactor::to_string(q));
    j["spurious_factors"] = nlohmann::json::array();
    for (const auto& f : spurious_factors) j["spurious_factors"].push_back(f.to_string());
    if (minor_determinant) j["minor_determinant_degree"] = minor_determinant->numerator().total_degree();
    if (!note.empty()) j["note"] = note;
    return j;
}

// ------------------------------------------------------------- named identities

namespace {

MagmaPolynomial x(int i) { return MagmaPolynomial::variable(i); }

}  // namespace

MagmaPolynomial wb_polynomial() {
    const auto a = x(1), b = x(2), c = x(3), d = x(4);
    return associator(associator(a, b, c), d, b) + associator(associator(c, b, d), a, b) +
           associator(associator(d, b, a), c, b);
}

std::vector<MagmaPolynomial> wb_multilinearizations() {
    // b split into b1 (inner) and b2 (outer), then symmetrised.
    auto f = [](const MagmaPolynomial& a, const MagmaPolynomial& b1, const MagmaPolynomial& b2,
                const MagmaPolynomial& c, const MagmaPolynomial& d) {
        return associator(associator(a, b1, c), d, b2) + associator(associator(c, b1, d), a, b2) +
               associator(associator(d, b1, a), c, b2);
    };
    const MagmaPolynomial lin = f(x(1), x(2), x(3), x(4), x(5)) + f(x(1), x(3), x(2), x(4), x(5));
    std::vector<int> perm{1, 2, 3, 4, 5};
    std::vector<MagmaPolynomial> out;
    std::set<std::string> seen;
    do {
        std::vector<MagmaPolynomial> image;
        for (int p : perm) image.push_back(x(p));
        MagmaPolynomial q = lin.substitute(image);
        if (seen.insert(q.to_string()).second) out.push_back(std::move(q));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Subspace wb_consequence_span(const MultilinearBasis& basis) {
    std::vector<Vector> vs;
    for (const auto& p : wb_multilinearizations()) vs.push_back(basis.coordinates(p));
    return Subspace::span(vs, basis.size());
}

MagmaPolynomial degree5_identity_polynomial() {
    const auto a = x(1), b = x(2), c = x(3), d = x(4), e = x(5);
    auto commutator = [](const MagmaPolynomial& v, const MagmaPolynomial& p, const MagmaPolynomial& q) {
        return (v * p) * q - (v * q) * p;
    };
    return associator(associator(c, a, e), b, d) + associator(associator(e, a, d), b, c) +
           associator(associator(d, a, c), b, e) + commutator(associator(c, b, a), d, e) +
           commutator(associator(d, b, a), e, c) + commutator(associator(e, b, a), c, d);
}

AlgebraPtr matrix_jordan_plus(std::size_t n) {
    const std::size_t dim = n * n;
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) labels.push_back("E" + std::to_string(i) + std::to_string(j));
    }
    std::vector<std::vector<Vector>> upper(dim, std::vector<Vector>(dim));
    for (std::size_t p = 0; p < dim; ++p) {
        for (std::size_t q = p; q < dim; ++q) {
            const std::size_t a = p / n, b = p % n, c = q / n, d = q % n;
            Vector v(dim);
            if (b == c) v[a * n + d] += Scalar(1);
            if (d == a) v[c * n + b] += Scalar(1);
            upper[p][q] = std::move(v);
        }
    }
    return make_algebra(labels, upper);
}

WbCheck check_wb(const AlgebraPtr& algebra, const std::string& id) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = algebra->dim();
    WbCheck out;
    const Element b = generic_element(algebra, "b");
    std::string where;
    Element residual;
    for (std::size_t i = 0; i < n && where.empty(); ++i) {
        for (std::size_t j = 0; j < n && where.empty(); ++j) {
            for (std::size_t k = 0; k < n && where.empty(); ++k) {
                const Element w = three_associators(Element::basis(algebra, i), b, Element::basis(algebra, j),
                                                    Element::basis(algebra, k));
                if (!w.is_zero()) {
                    const auto& l = algebra->labels();
                    where = "a=" + l[i] + ", c=" + l[j] + ", d=" + l[k];
                    residual = w;
                }
            }
        }
    }
    out.holds = where.empty();
    if (!out.holds) {
        // Concrete witness with b a basis element or a sum of two.
        std::vector<std::pair<Element, std::string>> bs;
        for (std::size_t i = 0; i < n; ++i) bs.emplace_back(Element::basis(algebra, i), algebra->labels()[i]);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                bs.emplace_back(Element::basis(algebra, i) + Element::basis(algebra, j),
                                algebra->labels()[i] + "+" + algebra->labels()[j]);
            }
        }
        for (const auto& [bv, bl] : bs) {
            for (std::size_t i = 0; i < n && out.witness.empty(); ++i) {
                for (std::size_t j = 0; j < n && out.witness.empty(); ++j) {
                    for (std::size_t k = 0; k < n && out.witness.empty(); ++k) {
                        const Element w = three_associators(Element::basis(algebra, i), bv, Element::basis(algebra, j),
                                                            Element::basis(algebra, k));
                        if (!w.is_zero()) {
                            const auto& l = algebra->labels();
                            out.witness = {l[i], bl, l[j], l[k]};
                            out.residual = w.to_string();
                        }
                    }
                }
            }
            if (!out.witness.empty()) break;
        }
        if (out.witness.empty()) out.residual = residual.to_string();
    }
    out.check.id = id;
    out.check.status = out.holds ? Status::pass : Status::fail;
    if (!out.holds) {
        out.check.residual = out.residual;
        out.check.note = "nonzero at " + where + " with b generic";
        if (!out.witness.empty()) {
            out.check.note += "; witness a=" + out.witness[0] + ", b=" + out.witness[1] + ", c=" + out.witness[2] +
                              ", d=" + out.witness[3];
        }
    }
    out.check.elapsed_ms = ms_since(start);
    return out;
}

// ------------------------------------------------------------- reports

namespace {

CheckResult equality(std::string id, const Element& lhs, const Element& rhs) {
    return zero_check(std::move(id), lhs - rhs);
}

/// Passes iff the difference is nonzero.
CheckResult inequality(std::string id, const Element& lhs, const Element& rhs) {
    CheckResult c;
    c.id = std::move(id);
    const Element d = lhs - rhs;
    c.status = d.is_zero() ? Status::fail : Status::pass;
    c.note = "difference " + d.to_string();
    return c;
}

CheckResult boolean(std::string id, bool ok, std::string note = {}) {
    CheckResult c;
    c.id = std::move(id);
    c.status = ok ? Status::pass : Status::fail;
    c.note = std::move(note);
    return c;
}

Element random_element(const AlgebraPtr& alg, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    Vector v(alg->dim());
    for (auto& s : v) s = Scalar::fraction(num(rng), den(rng));
    return Element(alg, v);
}

}  // namespace

Report check_osborn_degree4(const SplitSpinConfig& config) {
    const Scalar a = config.alpha, t = config.t;
    auto bad = [](const Scalar& s) { return s.is_rational() && (s.is_zero() || s.is_one()); };
    if (bad(a) || bad(t)) throw std::invalid_argument("alpha and t must avoid 0 and 1");
    SplitSpinConfig cfg = config;
    cfg.gram = Matrix();
    const AlgebraPtr alg = build(cfg);
    const Element e = Element::basis(alg, "e1"), z1 = Element::basis(alg, "z1"), z2 = Element::basis(alg, "z2");
    const Scalar k = a + t * (1 - a);
    Report rep;
    rep.command = "osborn";

    const Element e2 = e * e;
    const Element lhs1 = (e2 * e) * e, rhs1 = e2 * e2;
    rep.add(equality("(x^2x)x at x=e: (e^2e)e = (alpha+t(1-alpha))(z1+tz2)", lhs1, k * (z1 + t * z2)));
    rep.add(equality("x^2x^2 at x=e: e^2e^2 = z1+t^2z2", rhs1, z1 + (t * t) * z2));
    rep.add(inequality("(x^2x)x = x^2x^2 fails at x=e", lhs1, rhs1));

    auto id2_lhs = [](const Element& xx, const Element& y) {
        const Element x3 = (xx * xx) * xx;
        return Scalar(2) * (((y * xx) * xx) * xx) + y * x3;
    };
    auto id2_rhs = [](const Element& xx, const Element& y) { return Scalar(3) * ((y * (xx * xx)) * xx); };
    const Element lhs2 = id2_lhs(e, z1), rhs2 = id2_rhs(e, z1);
    rep.add(equality("2((yx)x)x + yx^3 at x=e, y=z1: = 3alpha(alpha+t(1-alpha))e", lhs2, Scalar(3) * a * k * e));
    rep.add(equality("3(yx^2)x at x=e, y=z1: = 3alpha e", rhs2, Scalar(3) * a * e));
    rep.add(inequality("2((yx)x)x + yx^3 = 3(yx^2)x fails at x=e, y=z1", lhs2, rhs2));

    auto phi = [](const Element& xx, const Element& y) {
        const Element yx = y * xx;
        return Scalar(2) * ((y * y) * xx) * xx + Scalar(2) * ((xx * xx) * y) * y + yx * yx -
               Scalar(2) * (yx * y) * xx - Scalar(2) * (yx * xx) * y - (y * y) * (xx * xx);
    };
    const Element ph = phi(e, z1);
    rep.add(equality("phi(e,z1) = (1-alpha^2)z1 + t alpha(2-alpha)z2", ph,
                     (1 - a * a) * z1 + (t * a * (2 - a)) * z2));
    rep.add(inequality("2(y^2x)x + 2(x^2y)y + (yx)(yx) = 2((yx)y)x + 2((yx)x)y + y^2x^2 fails at x=e, y=z1", ph,
                       Element::zero(alg)));
    rep.data["config"] = cfg.to_json();
    return rep;
}

Report check_counts() {
    Report rep;
    rep.command = "counts";
    const std::vector<std::size_t> expected{1, 1, 3, 15, 105};
    for (std::size_t d = 1; d <= 5; ++d) {
        const auto b = gen_multilinear(d);
        rep.add(boolean("count/|P_" + std::to_string(d) + "| = " + std::to_string(expected[d - 1]),
                        b.size() == expected[d - 1], std::to_string(b.size())));
    }
    const auto p = gen_multilinear(5);
    const auto shapes = p.shape_counts();
    auto shape = [&](const std::string& s) { return shapes.count(s) ? shapes.at(s) : 0; };
    rep.add(boolean("count/shape (((**)*)*)* = 60", shape("(((**)*)*)*") == 60, std::to_string(shape("(((**)*)*)*"))));
    rep.add(boolean("count/shape ((**)*)(**) = 30", shape("((**)*)(**)") == 30, std::to_string(shape("((**)*)(**)"))));
    rep.add(boolean("count/shape ((**)(**))* = 15", shape("((**)(**))*") == 15, std::to_string(shape("((**)(**))*"))));
    rep.add(boolean("count/shapes cover P", shapes.size() == 3 && shape("(((**)*)*)*") + shape("((**)*)(**)") +
                                                                            shape("((**)(**))*") == p.size()));
    std::size_t in_p = 0;
    for (const auto& z : excluded_monomials_z()) in_p += p.index_of(CommutativeMonomial::parse(z)).has_value();
    rep.add(boolean("count/|Z| = 10, Z in P", excluded_monomials_z().size() == 10 && in_p == 10));
    const auto b = reduced_basis_B();
    rep.add(boolean("count/|B| = 95", b.size() == 95, std::to_string(b.size())));
    const auto alg = build(SplitSpinConfig{Scalar(3), Scalar(5), 2, {}});
    const std::size_t subs = all_tuples(alg->dim(), 5).size();
    rep.add(boolean("count/substitutions 4^5 = 1024", subs == 1024, std::to_string(subs)));
    rep.data["P"] = p.to_json();
    rep.data["Z"] = excluded_monomials_z();
    return rep;
}

Report check_reduced_nullspace(const std::vector<Scalar>& alphas, bool symbolic, unsigned jobs) {
    Report rep;
    rep.command = "reduced-nullspace";
    const auto B = reduced_basis_B();
    const auto P = gen_multilinear(5);
    nlohmann::json samples = nlohmann::json::array();
    for (std::size_t s = 0; s < alphas.size(); ++s) {
        const Scalar& a = alphas[s];
        const auto alg = build_S_alpha(a, 2);
        NullspaceOptions opts;
        opts.jobs = jobs;
        const auto start = std::chrono::steady_clock::now();
        const auto res = identity_nullspace(alg, B, opts);
        CheckResult c = boolean("nullspace/B on S(alpha,E) at alpha=" + a.to_string() + " is trivial",
                                res.nullspace.empty() && res.substitutions == 1024,
                                "rank " + std::to_string(res.rank) + " of " + std::to_string(res.basis_size));
        c.parameters["alpha"] = a.to_string();
        c.elapsed_ms = ms_since(start);
        rep.add(c);
        nlohmann::json j = res.to_json(false);
        j["alpha"] = a.to_string();
        j["counts_635_498_informational"] = {{"distinct_substitution_values", res.distinct_substitution_values},
                                             {"rows_after_dedup", res.rows_after_dedup},
                                             {"matches", res.distinct_substitution_values == 635 &&
                                                             res.rows_after_dedup == 498}};
        samples.push_back(j);
        if (s == 0) {
            const auto full = identity_nullspace(alg, P, opts);
            const Subspace wb = wb_consequence_span(P);
            bool inside = true;
            for (const auto& v : full.nullspace) inside = inside && wb.contains(v.coeffs);
            CheckResult cp = boolean("nullspace/P on S(alpha,E) at alpha=" + a.to_string() + " = span of W_b "
                                     "multilinearizations (dim 10)",
                                     full.nullspace.size() == 10 && wb.dim() == 10 && inside,
                                     "nullspace " + std::to_string(full.nullspace.size()) + ", W_b span " +
                                         std::to_string(wb.dim()));
            cp.parameters["alpha"] = a.to_string();
            rep.add(cp);
        }
    }
    rep.data["samples"] = samples;
    if (symbolic) {
        const Scalar alpha = Scalar::variable("alpha");
        const auto alg = build_S_alpha_original(alpha, 2);
        const auto pr = parametric_rank(alg, B, "alpha", Scalar(3), jobs);
        CheckResult c;
        c.id = "nullspace/B on S(alpha,E) over Q(alpha) is trivial away from alpha in {-1,0,1/2,1,2}";
        c.elapsed_ms = pr.elapsed_ms;
        if (!pr.completed) {
            c.status = Status::skipped;
            c.note = "symbolic run incomplete (" + pr.note + "); verdict rests on the rational samples";
        } else {
            const std::set<std::string> allowed{"-1", "0", "1/2", "1", "2"};
            bool subset = pr.excluded_factors.empty();
            for (const auto& q : pr.excluded_roots) subset = subset && allowed.count(spinfactor::to_string(q));
            c.status = pr.trivial_nullspace() && subset ? Status::pass : Status::fail;
            c.note = "excluded locus {";
            for (std::size_t i = 0; i < pr.excluded_locus().size(); ++i) {
                c.note += (i ? ", " : "") + pr.excluded_locus()[i];
            }
            c.note += "}";
        }
        rep.add(c);
        rep.data["symbolic"] = pr.to_json();
    }
    return rep;
}

Report check_remark8(unsigned jobs) {
    Report rep;
    rep.command = "remark8";
    const auto P = gen_multilinear(5);
    const auto B = reduced_basis_B();
    const MagmaPolynomial poly = degree5_identity_polynomial();
    const Vector coords = P.coordinates(poly);
    const auto alg = build(SplitSpinConfig{Scalar::fraction(11, 4), Scalar(5), 2, {}});
    const BasisEvaluator ev(P);

    auto evaluate_all = [&](const AlgebraPtr& a) {
        std::vector<Element> gens;
        for (std::size_t i = 0; i < a->dim(); ++i) gens.push_back(Element::basis(a, i));
        const auto tuples = all_tuples(a->dim(), 5);
        std::vector<Element> values(tuples.size());
        parallel_for(tuples.size(), jobs, [&](std::size_t k) {
            std::vector<Element> assignment;
            for (std::size_t i : tuples[k]) assignment.push_back(gens[i]);
            const auto vals = ev.evaluate(assignment);
            Element sum = Element::zero(a);
            for (std::size_t m = 0; m < vals.size(); ++m) {
                if (!coords[m].is_zero()) sum += coords[m] * vals[m];
            }
            values[k] = sum;
        });
        std::optional<std::string> witness;
        for (std::size_t k = 0; k < tuples.size() && !witness; ++k) {
            if (values[k].is_zero()) continue;
            std::string w;
            const char* names = "abcde";
            for (std::size_t i = 0; i < 5; ++i) w += std::string(i ? ", " : "") + names[i] + "=" + a->labels()[tuples[k][i]];
            witness = w + " gives " + values[k].to_string();
        }
        return std::make_pair(tuples.size(), witness);
    };

    const auto [count, witness] = evaluate_all(alg);
    rep.add(boolean("degree5/identity vanishes on all basis 5-tuples at alpha=11/4, t=5", count == 1024 && !witness,
                    witness ? *witness : std::to_string(count) + " tuples"));

    NullspaceOptions opts;
    opts.jobs = jobs;
    const auto nb = identity_nullspace(alg, B, opts);
    rep.add(boolean("degree5/nullspace of B at alpha=11/4, t=5 is nontrivial", !nb.nullspace.empty(),
                    "dim " + std::to_string(nb.nullspace.size())));
    const auto np = identity_nullspace(alg, P, opts);
    std::vector<Vector> nvecs;
    for (const auto& c : np.nullspace) nvecs.push_back(c.coeffs);
    const Subspace nsp = Subspace::span(nvecs, P.size());
    const Subspace wb = wb_consequence_span(P);
    rep.add(boolean("degree5/W_b span lies in the degree-5 nullspace", nsp.contains(wb)));
    rep.add(boolean("degree5/dim nullspace > dim W_b span", nsp.dim() > wb.dim(),
                    std::to_string(nsp.dim()) + " > " + std::to_string(wb.dim())));
    rep.add(boolean("degree5/identity lies in the nullspace but not in the W_b span",
                    nsp.contains(coords) && !wb.contains(coords)));

    std::mt19937 rng(20240611);
    bool random_ok = true;
    for (const auto& cand : nb.nullspace) {
        const MagmaPolynomial q = cand.polynomial();
        for (int k = 0; k < 50 && random_ok; ++k) {
            std::vector<Element> args;
            for (int i = 0; i < 5; ++i) args.push_back(random_element(alg, rng));
            random_ok = q.evaluate(args).is_zero();
        }
    }
    rep.add(boolean("degree5/nullspace vectors vanish on 50 random rational 5-tuples", random_ok));

    const auto s3 = build(SplitSpinConfig{Scalar(3), Scalar::fraction(8, 3), 2, {}});
    const auto [count3, witness3] = evaluate_all(s3);
    rep.add(boolean("degree5/identity is nonzero at alpha=3, t=8/3", witness3.has_value(),
                    witness3 ? *witness3 : std::to_string(count3) + " tuples all zero"));

    rep.data["identity"] = poly.to_string();
    rep.data["nullspace_B"] = nb.to_json();
    rep.data["nullspace_P_dim"] = np.nullspace.size();
    rep.data["wb_span_dim"] = wb.dim();
    return rep;
}

Report check_negative_control() {
    Report rep;
    rep.command = "negative-control";
    const auto m3 = matrix_jordan_plus(3);
    WbCheck wb = check_wb(m3, "negative/W_b(a,c,d) on M3(Q) with a o b = ab + ba");
    CheckResult c = wb.check;
    c.id = "negative/W_b fails on M3(Q) with a o b = ab + ba";
    c.status = wb.holds || wb.witness.empty() ? Status::fail : Status::pass;
    rep.add(c);
    if (!wb.witness.empty()) {
        std::vector<Element> args;
        for (const auto& l : wb.witness) {
            Element v = Element::zero(m3);
            std::size_t from = 0;
            for (;;) {
                const std::size_t plus = l.find('+', from);
                v += Element::basis(m3, l.substr(from, plus == std::string::npos ? std::string::npos : plus - from));
                if (plus == std::string::npos) break;
                from = plus + 1;
            }
            args.push_back(v);
        }
        const Element w = wb_polynomial().evaluate(args);
        rep.add(boolean("negative/witness re-evaluated through the free polynomial is nonzero", !w.is_zero(),
                        w.to_string()));
    }
    const auto n3 = identity_nullspace(m3, gen_multilinear(3));
    rep.add(boolean("negative/degree-3 nullspace on M3(Q)+ is trivial", n3.nullspace.empty(),
                    "rank " + std::to_string(n3.rank)));
    rep.data["witness"] = wb.witness;
    return rep;
}

}  // namespace spinfactor
