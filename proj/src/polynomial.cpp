#include "spinfactor/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace spinfactor {

std::string to_string(const Rational& q) {
    return q.get_str();
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(VarIndex v, std::uint32_t exponent) {
    Monomial m;
    if (exponent > 0) {
        m.factors_.emplace_back(v, exponent);
        m.degree_ = exponent;
    }
    return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end());
    Monomial m;
    for (const auto& [v, e] : factors) {
        if (e == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().first == v) {
            m.factors_.back().second += e;
        } else {
            m.factors_.emplace_back(v, e);
        }
        m.degree_ += e;
    }
    return m;
}

std::uint32_t Monomial::exponent(VarIndex v) const {
    for (const auto& [var, e] : factors_) {
        if (var == v) return e;
        if (var > v) break;
    }
    return 0;
}

bool Monomial::divides(const Monomial& other) const {
    std::size_t j = 0;
    for (const auto& [v, e] : factors_) {
        while (j < other.factors_.size() && other.factors_[j].first < v) ++j;
        if (j == other.factors_.size() || other.factors_[j].first != v || other.factors_[j].second < e) {
            return false;
        }
    }
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.factors_.reserve(a.factors_.size() + b.factors_.size());
    std::size_t i = 0, j = 0;
    while (i < a.factors_.size() && j < b.factors_.size()) {
        if (a.factors_[i].first < b.factors_[j].first) {
            m.factors_.push_back(a.factors_[i++]);
        } else if (b.factors_[j].first < a.factors_[i].first) {
            m.factors_.push_back(b.factors_[j++]);
        } else {
            m.factors_.emplace_back(a.factors_[i].first, a.factors_[i].second + b.factors_[j].second);
            ++i;
            ++j;
        }
    }
    for (; i < a.factors_.size(); ++i) m.factors_.push_back(a.factors_[i]);
    for (; j < b.factors_.size(); ++j) m.factors_.push_back(b.factors_[j]);
    m.degree_ = a.degree_ + b.degree_;
    return m;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
    Monomial m;
    std::size_t j = 0;
    for (const auto& [v, e] : factors_) {
        std::uint32_t sub = 0;
        if (j < divisor.factors_.size() && divisor.factors_[j].first == v) {
            sub = divisor.factors_[j].second;
            ++j;
        }
        if (e > sub) m.factors_.emplace_back(v, e - sub);
    }
    m.degree_ = degree_ - divisor.degree_;
    return m;
}

std::size_t Monomial::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& [v, e] : factors_) {
        h ^= (static_cast<std::size_t>(v) * 0x100000001b3ull + e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

namespace {

std::vector<std::pair<const std::string*, std::uint32_t>> named_factors(const Monomial& m) {
    std::vector<std::pair<const std::string*, std::uint32_t>> out;
    out.reserve(m.factors().size());
    for (const auto& [v, e] : m.factors()) out.emplace_back(&Variables::name(v), e);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return *x.first < *y.first; });
    return out;
}

}  // namespace

std::string Monomial::to_string() const {
    std::string s;
    for (const auto& [name, e] : named_factors(*this)) {
        if (!s.empty()) s += '*';
        s += *name;
        if (e > 1) s += '^' + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

int compare_grlex(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    auto fa = a.factors();
    auto fb = b.factors();
    std::size_t i = 0;
    for (; i < fa.size() && i < fb.size(); ++i) {
        if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first ? 1 : -1;
        if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second ? 1 : -1;
    }
    if (fa.size() == fb.size()) return 0;
    return i < fa.size() ? 1 : -1;
}

int compare_grlex_by_name(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    auto fa = named_factors(a);
    auto fb = named_factors(b);
    std::size_t i = 0;
    for (; i < fa.size() && i < fb.size(); ++i) {
        if (*fa[i].first != *fb[i].first) return *fa[i].first < *fb[i].first ? 1 : -1;
        if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second ? 1 : -1;
    }
    if (fa.size() == fb.size()) return 0;
    return i < fa.size() ? 1 : -1;
}

// -------------------------------------------------------------- Polynomial

namespace {

const std::shared_ptr<const std::vector<Term>>& empty_terms() {
    static const auto empty = std::make_shared<const std::vector<Term>>();
    return empty;
}

// Applies generator relations in place. Returns false when the term vanishes.
bool reduce_relations(Monomial& m, Rational& coeff) {
    bool touched = false;
    for (const auto& [v, e] : m.factors()) {
        if (e >= 2 && Variables::relation(v) != Relation::none) {
            touched = true;
            break;
        }
    }
    if (!touched) return true;
    std::vector<Monomial::Factor> kept;
    for (const auto& [v, e] : m.factors()) {
        switch (Variables::relation(v)) {
            case Relation::none:
                kept.emplace_back(v, e);
                break;
            case Relation::square_zero:
                if (e >= 2) return false;
                kept.emplace_back(v, e);
                break;
            case Relation::square_minus_one:
                if ((e / 2) % 2 == 1) coeff = -coeff;
                if (e % 2 == 1) kept.emplace_back(v, 1);
                break;
        }
    }
    m = Monomial::from_factors(std::move(kept));
    return true;
}

bool descending(const Term& x, const Term& y) {
    return compare_grlex(x.monomial, y.monomial) > 0;
}

// Sorts and merges raw terms that already satisfy the relations.
std::vector<Term> canonicalize(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), descending);
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().monomial == t.monomial) {
            out.back().coeff += t.coeff;
        } else {
            if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
    return out;
}

}  // namespace

Polynomial::Polynomial() : terms_(empty_terms()) {}

Polynomial::Polynomial(std::vector<Term> sorted_terms)
    : terms_(sorted_terms.empty() ? empty_terms()
                                  : std::make_shared<const std::vector<Term>>(std::move(sorted_terms))) {}

Polynomial::Polynomial(const Rational& c) : Polynomial() {
    if (sgn(c) != 0) {
        terms_ = std::make_shared<const std::vector<Term>>(std::vector<Term>{Term{Monomial{}, c}});
    }
}

Polynomial Polynomial::variable(VarIndex v) {
    return Polynomial(std::vector<Term>{Term{Monomial::variable(v), Rational(1)}});
}

Polynomial Polynomial::variable(std::string_view name) {
    return variable(Variables::intern(name));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
    return from_terms({Term{m, c}});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::vector<Term> reduced;
    reduced.reserve(terms.size());
    for (auto& t : terms) {
        if (sgn(t.coeff) == 0) continue;
        if (reduce_relations(t.monomial, t.coeff)) reduced.push_back(std::move(t));
    }
    return Polynomial(canonicalize(std::move(reduced)));
}

bool Polynomial::is_constant() const {
    return terms_->empty() || (terms_->size() == 1 && terms_->front().monomial.is_one());
}

bool Polynomial::is_one() const {
    return terms_->size() == 1 && terms_->front().monomial.is_one() && terms_->front().coeff == 1;
}

Rational Polynomial::constant_term() const {
    if (!terms_->empty() && terms_->back().monomial.is_one()) return terms_->back().coeff;
    return Rational(0);
}

std::vector<VarIndex> Polynomial::variables() const {
    std::vector<VarIndex> vars;
    for (const auto& t : *terms_) {
        for (const auto& f : t.monomial.factors()) vars.push_back(f.first);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

bool Polynomial::uses(Relation rel) const {
    for (const auto& t : *terms_) {
        for (const auto& f : t.monomial.factors()) {
            if (Variables::relation(f.first) == rel) return true;
        }
    }
    return false;
}

bool Polynomial::uses_relations() const {
    return uses(Relation::square_zero) || uses(Relation::square_minus_one);
}

std::uint32_t Polynomial::degree_in(VarIndex v) const {
    std::uint32_t d = 0;
    for (const auto& t : *terms_) d = std::max(d, t.monomial.exponent(v));
    return d;
}

std::uint32_t Polynomial::total_degree() const {
    return terms_->empty() ? 0 : terms_->front().monomial.degree();
}

Polynomial Polynomial::operator-() const {
    std::vector<Term> out(*terms_);
    for (auto& t : out) t.coeff = -t.coeff;
    return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const auto& x = *a.terms_;
    const auto& y = *b.terms_;
    std::vector<Term> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        const int c = compare_grlex(x[i].monomial, y[j].monomial);
        if (c > 0) {
            out.push_back(x[i++]);
        } else if (c < 0) {
            out.push_back(y[j++]);
        } else {
            Rational s = x[i].coeff + y[j].coeff;
            if (sgn(s) != 0) out.push_back(Term{x[i].monomial, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < x.size(); ++i) out.push_back(x[i]);
    for (; j < y.size(); ++j) out.push_back(y[j]);
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (sgn(c) == 0 || is_zero()) return Polynomial();
    if (c == 1) return *this;
    std::vector<Term> out(*terms_);
    for (auto& t : out) t.coeff *= c;
    return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    if (a.is_constant()) return b.scaled(a.leading().coeff);
    if (b.is_constant()) return a.scaled(b.leading().coeff);
    const auto& x = *a.terms_;
    const auto& y = *b.terms_;

    const std::size_t work = x.size() * y.size();
    if (work > 2048) {
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        acc.reserve(work / 2);
        for (const auto& tx : x) {
            for (const auto& ty : y) {
                Monomial m = tx.monomial * ty.monomial;
                Rational c = tx.coeff * ty.coeff;
                if (!reduce_relations(m, c)) continue;
                auto [it, inserted] = acc.try_emplace(std::move(m), c);
                if (!inserted) it->second += c;
            }
        }
        std::vector<Term> out;
        out.reserve(acc.size());
        for (auto& [m, c] : acc) {
            if (sgn(c) != 0) out.push_back(Term{m, std::move(c)});
        }
        std::sort(out.begin(), out.end(), descending);
        return Polynomial(std::move(out));
    }

    std::vector<Term> out;
    out.reserve(work);
    for (const auto& tx : x) {
        for (const auto& ty : y) {
            Monomial m = tx.monomial * ty.monomial;
            Rational c = tx.coeff * ty.coeff;
            if (reduce_relations(m, c)) out.push_back(Term{std::move(m), std::move(c)});
        }
    }
    return Polynomial(canonicalize(std::move(out)));
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::negate_variable(VarIndex v) const {
    std::vector<Term> out(*terms_);
    for (auto& t : out) {
        if (t.monomial.exponent(v) % 2 == 1) t.coeff = -t.coeff;
    }
    return Polynomial(std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_ == b.terms_) return true;
    const auto& x = *a.terms_;
    const auto& y = *b.terms_;
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i].monomial == y[i].monomial) || x[i].coeff != y[i].coeff) return false;
    }
    return true;
}

std::size_t Polynomial::hash() const {
    std::size_t h = terms_->size();
    for (const auto& t : *terms_) {
        h ^= t.monomial.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= std::hash<std::string>{}(t.coeff.get_str()) + (h << 6) + (h >> 2);
    }
    return h;
}

const Term& Polynomial::display_leading() const {
    if (terms_->empty()) throw std::logic_error("leading term of zero polynomial");
    const Term* best = &terms_->front();
    for (const auto& t : *terms_) {
        if (compare_grlex_by_name(t.monomial, best->monomial) > 0) best = &t;
    }
    return *best;
}

std::string Polynomial::to_string() const {
    if (terms_->empty()) return "0";
    std::vector<const Term*> order;
    order.reserve(terms_->size());
    for (const auto& t : *terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const Term* x, const Term* y) {
        return compare_grlex_by_name(x->monomial, y->monomial) > 0;
    });
    std::string s;
    bool first = true;
    for (const Term* t : order) {
        Rational c = t->coeff;
        const bool negative = sgn(c) < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) s += '-';
        } else {
            s += negative ? " - " : " + ";
        }
        first = false;
        if (t->monomial.is_one()) {
            s += c.get_str();
        } else {
            if (c != 1) s += c.get_str() + '*';
            s += t->monomial.to_string();
        }
    }
    return s;
}

// ------------------------------------------------------ division and gcd

namespace {

bool is_subset(const std::vector<VarIndex>& small, const std::vector<VarIndex>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<VarIndex> intersect(const std::vector<VarIndex>& a, const std::vector<VarIndex>& b) {
    std::vector<VarIndex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Splits p = sum_k m_k * c_k where m_k are monomials outside `keep` and c_k
// only involve variables of `keep`.
std::vector<std::pair<Monomial, Polynomial>> split_coefficients(const Polynomial& p,
                                                                const std::vector<VarIndex>& keep) {
    std::map<std::vector<Monomial::Factor>, std::vector<Term>> groups;
    for (const auto& t : p.terms()) {
        std::vector<Monomial::Factor> inner, outer;
        for (const auto& f : t.monomial.factors()) {
            if (std::binary_search(keep.begin(), keep.end(), f.first)) {
                inner.push_back(f);
            } else {
                outer.push_back(f);
            }
        }
        groups[outer].push_back(Term{Monomial::from_factors(std::move(inner)), t.coeff});
    }
    std::vector<std::pair<Monomial, Polynomial>> out;
    out.reserve(groups.size());
    for (auto& [outer, terms] : groups) {
        // Terms arrive in descending order of the full monomial; re-sort.
        std::sort(terms.begin(), terms.end(), descending);
        out.emplace_back(Monomial::from_factors(outer), Polynomial::from_terms(std::move(terms)));
    }
    return out;
}

Polynomial make_monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    const Rational lc = p.display_leading().coeff;
    if (lc == 1) return p;
    return p.scaled(1 / lc);
}

std::optional<Polynomial> exact_divide_direct(const Polynomial& a, const Polynomial& b) {
    const Term& lb = b.leading();
    std::vector<Term> quotient;
    Polynomial rem = a;
    while (!rem.is_zero()) {
        const Term& lr = rem.leading();
        if (!lb.monomial.divides(lr.monomial)) return std::nullopt;
        Term q{lr.monomial / lb.monomial, lr.coeff / lb.coeff};
        rem = rem - b * Polynomial::monomial(q.monomial, q.coeff);
        quotient.push_back(std::move(q));
    }
    return Polynomial::from_terms(std::move(quotient));
}

// Dense univariate polynomial helpers over Q.
using Dense = std::vector<Rational>;

void trim(Dense& d) {
    while (!d.empty() && sgn(d.back()) == 0) d.pop_back();
}

Dense to_dense(const Polynomial& p, VarIndex x) {
    Dense d(p.degree_in(x) + 1);
    for (const auto& t : p.terms()) d[t.monomial.exponent(x)] += t.coeff;
    trim(d);
    return d;
}

Polynomial from_dense(const Dense& d, VarIndex x) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (sgn(d[k]) != 0) terms.push_back(Term{Monomial::variable(x, static_cast<std::uint32_t>(k)), d[k]});
    }
    return Polynomial::from_terms(std::move(terms));
}

Dense dense_rem(Dense a, const Dense& b) {
    const Rational& lb = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        const Rational f = a.back() / lb;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
        a.pop_back();
        trim(a);
    }
    return a;
}

Polynomial univariate_gcd(const Polynomial& a, const Polynomial& b, VarIndex x) {
    Dense p = to_dense(a, x);
    Dense q = to_dense(b, x);
    while (!q.empty()) {
        Dense r = dense_rem(p, q);
        p = std::move(q);
        q = std::move(r);
    }
    return make_monic(from_dense(p, x));
}

// Univariate view over a multivariate coefficient ring.
using UPoly = std::vector<Polynomial>;

UPoly to_upoly(const Polynomial& p, VarIndex x) {
    UPoly u(p.degree_in(x) + 1);
    std::vector<std::vector<Term>> buckets(u.size());
    for (const auto& t : p.terms()) {
        const std::uint32_t e = t.monomial.exponent(x);
        std::vector<Monomial::Factor> rest;
        for (const auto& f : t.monomial.factors()) {
            if (f.first != x) rest.push_back(f);
        }
        buckets[e].push_back(Term{Monomial::from_factors(std::move(rest)), t.coeff});
    }
    for (std::size_t k = 0; k < u.size(); ++k) u[k] = Polynomial::from_terms(std::move(buckets[k]));
    return u;
}

Polynomial from_upoly(const UPoly& u, VarIndex x) {
    Polynomial out;
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (!u[k].is_zero()) out = out + u[k] * Polynomial::monomial(Monomial::variable(x, static_cast<std::uint32_t>(k)), 1);
    }
    return out;
}

void trim(UPoly& u) {
    while (!u.empty() && u.back().is_zero()) u.pop_back();
}

Polynomial upoly_content(const UPoly& u) {
    Polynomial g;
    for (const auto& c : u) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : gcd(g, c);
        if (g.is_constant()) return Polynomial(1);
    }
    return g;
}

UPoly primitive_part(const UPoly& u) {
    const Polynomial c = upoly_content(u);
    if (c.is_constant()) return u;
    UPoly out;
    out.reserve(u.size());
    for (const auto& coeff : u) {
        auto q = exact_divide(coeff, c);
        if (!q) throw std::logic_error("content does not divide coefficient");
        out.push_back(*q);
    }
    return out;
}

UPoly pseudo_remainder(UPoly a, const UPoly& b) {
    const Polynomial& lb = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        const Polynomial la = a.back();
        const std::size_t shift = a.size() - b.size();
        for (auto& c : a) c = c * lb;
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] = a[k + shift] - la * b[k];
        a.pop_back();
        trim(a);
    }
    return a;
}

Polynomial prs_gcd(const Polynomial& a, const Polynomial& b, VarIndex x) {
    UPoly A = to_upoly(a, x);
    UPoly B = to_upoly(b, x);
    if (A.size() < B.size()) std::swap(A, B);
    const Polynomial content = gcd(upoly_content(A), upoly_content(B));
    A = primitive_part(A);
    B = primitive_part(B);
    while (true) {
        UPoly R = pseudo_remainder(A, B);
        if (R.empty()) break;
        if (R.size() == 1) {
            B = UPoly{Polynomial(1)};
            break;
        }
        A = std::move(B);
        B = primitive_part(R);
    }
    return make_monic(from_upoly(B, x) * content);
}

}  // namespace

std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (b.uses_relations()) return std::nullopt;
    if (a.is_zero()) return Polynomial();
    if (b.is_constant()) return a.scaled(1 / b.leading().coeff);
    const auto vb = b.variables();
    const auto va = a.variables();
    if (!is_subset(vb, va)) return std::nullopt;
    if (vb.size() < va.size() && a.size() > 8) {
        Polynomial out;
        for (const auto& [outer, coeff] : split_coefficients(a, vb)) {
            auto q = exact_divide_direct(coeff, b);
            if (!q) return std::nullopt;
            out = out + *q * Polynomial::monomial(outer, 1);
        }
        return out;
    }
    return exact_divide_direct(a, b);
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.is_constant() || b.is_constant()) return Polynomial(1);
    if (a == b) return make_monic(a);
    const auto va = a.variables();
    const auto vb = b.variables();
    const auto common = intersect(va, vb);
    if (common.empty()) return Polynomial(1);

    if (va != common || vb != common) {
        // Any common divisor lives in Q[common]; fold over the coefficients.
        std::vector<Polynomial> pieces;
        auto collect = [&](const Polynomial& p, const std::vector<VarIndex>& vp) {
            if (vp == common) {
                pieces.push_back(p);
            } else {
                for (auto& [outer, coeff] : split_coefficients(p, common)) pieces.push_back(coeff);
            }
        };
        collect(b, vb);
        collect(a, va);
        std::stable_sort(pieces.begin(), pieces.end(),
                         [](const Polynomial& x, const Polynomial& y) { return x.size() < y.size(); });
        Polynomial g;
        for (const auto& p : pieces) {
            g = g.is_zero() ? p : gcd(g, p);
            if (g.is_constant()) return Polynomial(1);
        }
        return make_monic(g);
    }

    if (common.size() == 1) return univariate_gcd(a, b, common.front());

    VarIndex main = common.front();
    std::uint32_t best = a.degree_in(main) + b.degree_in(main);
    for (VarIndex v : common) {
        const std::uint32_t d = a.degree_in(v) + b.degree_in(v);
        if (d < best) {
            best = d;
            main = v;
        }
    }
    return prs_gcd(a, b, main);
}

// ------------------------------------------------------- rational roots

namespace {

std::vector<Integer> divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<std::pair<Integer, unsigned>> primes;
    Integer rest = n;
    for (Integer p = 2; p * p <= rest && p < 1000000; ++p) {
        unsigned k = 0;
        while (rest % p == 0) {
            rest /= p;
            ++k;
        }
        if (k > 0) primes.emplace_back(p, k);
    }
    if (rest > 1) primes.emplace_back(rest, 1);
    std::vector<Integer> out{Integer(1)};
    for (const auto& [p, k] : primes) {
        const std::size_t n0 = out.size();
        Integer pk = 1;
        for (unsigned e = 1; e <= k; ++e) {
            pk *= p;
            for (std::size_t i = 0; i < n0; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rational eval_dense(const Dense& d, const Rational& x) {
    Rational acc = 0;
    for (std::size_t k = d.size(); k-- > 0;) acc = acc * x + d[k];
    return acc;
}

}  // namespace

LinearFactorization linear_factors(const Polynomial& p) {
    const auto vars = p.variables();
    if (vars.size() > 1) throw std::invalid_argument("linear_factors expects a univariate polynomial");
    LinearFactorization out{{}, p};
    if (vars.empty()) return out;
    const VarIndex x = vars.front();
    Dense d = to_dense(p, x);
    // Divide out the root 0.
    std::size_t zeros = 0;
    while (zeros < d.size() && sgn(d[zeros]) == 0) ++zeros;
    if (zeros > 0) {
        out.roots.push_back(Rational(0));
        d.erase(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(zeros));
    }
    auto deflate = [](Dense& poly, const Rational& r) {
        // Synthetic division by (x - r).
        Dense q(poly.size() - 1);
        Rational carry = 0;
        for (std::size_t k = poly.size(); k-- > 1;) {
            carry = poly[k] + carry * r;
            q[k - 1] = carry;
        }
        poly = std::move(q);
    };
    if (d.size() > 1) {
        Integer den_lcm = 1;
        for (const auto& c : d) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        const Integer a0 = Integer(d.front() * den_lcm);
        const Integer an = Integer(d.back() * den_lcm);
        std::vector<Rational> candidates;
        for (const auto& num : divisors(a0)) {
            for (const auto& den : divisors(an)) {
                Rational r(num, den);
                r.canonicalize();
                candidates.push_back(r);
                candidates.push_back(-r);
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& r : candidates) {
            if (d.size() <= 1) break;
            if (sgn(eval_dense(d, r)) == 0) {
                out.roots.push_back(r);
                while (d.size() > 1 && sgn(eval_dense(d, r)) == 0) deflate(d, r);
            }
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.remainder = make_monic(from_dense(d, x));
    return out;
}

}  // namespace spinfactor
