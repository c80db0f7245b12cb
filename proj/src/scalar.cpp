#include "spinfactor/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <unordered_map>

namespace spinfactor {

std::size_t hash_rational(const Rational& q) {
    auto limbs = [](const mpz_class& z) {
        std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1);
        const std::size_t n = mpz_size(z.get_mpz_t());
        for (std::size_t k = 0; k < n; ++k) {
            h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), static_cast<mp_size_t>(k))) +
                 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    };
    return limbs(q.get_num()) * 31u + limbs(q.get_den());
}

Scalar::Scalar(Rational q) : v_(std::move(q)) {}

Scalar::Scalar(Polynomial p) : v_(Rational(0)) { *this = from_polynomial(std::move(p)); }

Scalar::Scalar(RationalFunction f) : v_(Rational(0)) { *this = from_fraction(std::move(f)); }

Scalar Scalar::from_polynomial(Polynomial p) {
    Scalar s;
    if (p.is_constant()) {
        s.v_ = p.constant_term();
    } else {
        s.v_ = std::move(p);
    }
    return s;
}

Scalar Scalar::from_fraction(RationalFunction f) {
    if (f.is_polynomial()) return from_polynomial(f.numerator());
    Scalar s;
    s.v_ = std::move(f);
    return s;
}

Scalar Scalar::fraction(long num, long den) {
    if (den == 0) throw DivisionByZeroError();
    Rational q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::variable(std::string_view name) {
    return from_polynomial(Polynomial::variable(name));
}

bool Scalar::is_zero() const {
    const auto* q = std::get_if<Rational>(&v_);
    return q != nullptr && sgn(*q) == 0;
}

bool Scalar::is_one() const {
    const auto* q = std::get_if<Rational>(&v_);
    return q != nullptr && *q == 1;
}

const Rational& Scalar::rational() const {
    if (const auto* q = std::get_if<Rational>(&v_)) return *q;
    throw ScalarError("scalar " + to_string() + " is not a rational number");
}

Polynomial Scalar::numerator() const {
    return std::visit(
        [](const auto& x) -> Polynomial {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>) {
                return Polynomial(x);
            } else if constexpr (std::is_same_v<T, Polynomial>) {
                return x;
            } else {
                return x.numerator();
            }
        },
        v_);
}

Polynomial Scalar::denominator() const {
    if (const auto* f = std::get_if<RationalFunction>(&v_)) return f->denominator();
    return Polynomial(1);
}

RationalFunction Scalar::as_fraction() const {
    if (const auto* f = std::get_if<RationalFunction>(&v_)) return *f;
    return RationalFunction(numerator());
}

std::vector<std::string> Scalar::variable_names() const {
    std::vector<VarIndex> vars = numerator().variables();
    for (VarIndex v : denominator().variables()) vars.push_back(v);
    std::vector<std::string> names;
    for (VarIndex v : vars) names.push_back(Variables::name(v));
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

bool Scalar::uses_relations() const {
    return numerator().uses_relations();
}

Scalar Scalar::operator-() const {
    return std::visit(
        [](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            return Scalar(T(-x));
        },
        v_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const auto* qa = std::get_if<Rational>(&a.v_);
    const auto* qb = std::get_if<Rational>(&b.v_);
    if (qa && qb) return Scalar(Rational(*qa + *qb));
    if (a.is_polynomial() && b.is_polynomial()) return Scalar::from_polynomial(a.numerator() + b.numerator());
    return Scalar::from_fraction(a.as_fraction() + b.as_fraction());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    const auto* qa = std::get_if<Rational>(&a.v_);
    const auto* qb = std::get_if<Rational>(&b.v_);
    if (qa && qb) return Scalar(Rational(*qa - *qb));
    return a + (-b);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    const auto* qa = std::get_if<Rational>(&a.v_);
    const auto* qb = std::get_if<Rational>(&b.v_);
    if (qa && qb) return Scalar(Rational(*qa * *qb));
    if (a.is_zero() || b.is_zero()) return Scalar();
    if (qa) {
        if (*qa == 1) return b;
        if (b.is_polynomial()) return Scalar::from_polynomial(b.numerator().scaled(*qa));
    }
    if (qb) {
        if (*qb == 1) return a;
        if (a.is_polynomial()) return Scalar::from_polynomial(a.numerator().scaled(*qb));
    }
    if (a.is_polynomial() && b.is_polynomial()) return Scalar::from_polynomial(a.numerator() * b.numerator());
    return Scalar::from_fraction(a.as_fraction() * b.as_fraction());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw DivisionByZeroError();
    const auto* qa = std::get_if<Rational>(&a.v_);
    const auto* qb = std::get_if<Rational>(&b.v_);
    if (qb) {
        if (qa) return Scalar(Rational(*qa / *qb));
        if (a.is_polynomial()) return Scalar::from_polynomial(a.numerator().scaled(1 / *qb));
    }
    return Scalar::from_fraction(a.as_fraction() / b.as_fraction());
}

Scalar Scalar::pow(int e) const {
    if (e < 0) return Scalar(1) / pow(-e);
    Scalar result(1);
    Scalar base = *this;
    unsigned k = static_cast<unsigned>(e);
    while (k > 0) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k > 0) base *= base;
    }
    return result;
}

namespace {

Scalar substitute_polynomial(const Polynomial& p, const Assignment& assignment) {
    std::unordered_map<VarIndex, const Scalar*> values;
    for (VarIndex v : p.variables()) {
        auto it = assignment.find(Variables::name(v));
        if (it != assignment.end()) values.emplace(v, &it->second);
    }
    if (values.empty()) return Scalar(p);
    std::map<std::pair<VarIndex, std::uint32_t>, Scalar> powers;
    auto power = [&](VarIndex v, std::uint32_t e) -> const Scalar& {
        auto [it, inserted] = powers.try_emplace({v, e});
        if (inserted) it->second = values.at(v)->pow(static_cast<int>(e));
        return it->second;
    };
    // Unassigned factors stay symbolic and are accumulated as a polynomial.
    std::vector<Term> untouched;
    Scalar total;
    for (const auto& t : p.terms()) {
        Scalar value(t.coeff);
        std::vector<Monomial::Factor> rest;
        for (const auto& [v, e] : t.monomial.factors()) {
            if (values.count(v)) {
                value *= power(v, e);
            } else {
                rest.emplace_back(v, e);
            }
        }
        if (rest.size() == t.monomial.factors().size()) {
            untouched.push_back(t);
        } else {
            total += value * Scalar(Polynomial::monomial(Monomial::from_factors(std::move(rest)), 1));
        }
    }
    return total + Scalar(Polynomial::from_terms(std::move(untouched)));
}

std::string offending_factor(const Polynomial& den, const Assignment& assignment) {
    const auto vars = den.variables();
    if (vars.size() == 1) {
        auto it = assignment.find(Variables::name(vars.front()));
        if (it != assignment.end() && it->second.is_rational()) {
            const Rational& r = it->second.rational();
            const Polynomial factor = Polynomial::variable(vars.front()) - Polynomial(r);
            if (exact_divide(den, factor)) return factor.to_string();
        }
    }
    return den.to_string();
}

}  // namespace

Scalar Scalar::substitute(const Assignment& assignment) const {
    if (is_rational() || assignment.empty()) return *this;
    const Scalar num = substitute_polynomial(numerator(), assignment);
    if (is_polynomial()) return num;
    const Scalar den = substitute_polynomial(denominator(), assignment);
    if (den.is_zero()) {
        std::string detail;
        for (const auto& [name, value] : assignment) {
            if (!detail.empty()) detail += ", ";
            detail += name + " = " + value.to_string();
        }
        throw PoleError(offending_factor(denominator(), assignment), " under " + detail);
    }
    return num / den;
}

Scalar Scalar::conjugate() const {
    const VarIndex i = Variables::declare(kImaginaryName, Relation::square_minus_one);
    if (is_rational()) return *this;
    Scalar num(numerator().negate_variable(i));
    if (is_polynomial()) return num;
    return num / Scalar(denominator());
}

std::size_t Scalar::hash() const {
    return std::visit(
        [](const auto& x) -> std::size_t {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>) {
                return hash_rational(x);
            } else if constexpr (std::is_same_v<T, Polynomial>) {
                return x.hash() * 3u + 1u;
            } else {
                return x.numerator().hash() * 7u + x.denominator().hash();
            }
        },
        v_);
}

std::string Scalar::to_string() const {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>) {
                return x.get_str();
            } else {
                return x.to_string();
            }
        },
        v_);
}

// ------------------------------------------------------------------ parser

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    Scalar parse() {
        Scalar value = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char ch) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    Scalar expr() {
        Scalar value = term();
        while (true) {
            if (accept('+')) {
                value += term();
            } else if (accept('-')) {
                value -= term();
            } else {
                return value;
            }
        }
    }

    Scalar term() {
        Scalar value = unary();
        while (true) {
            if (accept('*')) {
                value *= unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                Scalar d = unary();
                if (d.is_zero()) throw ParseError("division by zero", at);
                value /= d;
            } else {
                return value;
            }
        }
    }

    Scalar unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Scalar power() {
        Scalar base = atom();
        if (accept('^')) {
            skip();
            bool negative = false;
            if (accept('-')) negative = true;
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected integer exponent");
            const int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
            return base.pow(negative ? -e : e);
        }
        return base;
    }

    Scalar atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char ch = s_[pos_];
        if (ch == '(') {
            ++pos_;
            Scalar value = expr();
            if (!accept(')')) fail("expected ')'");
            return value;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Scalar(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                ++pos_;
            }
            return Scalar::variable(s_.substr(start, pos_ - start));
        }
        fail("unexpected '" + std::string(1, ch) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) {
    return Parser(text).parse();
}

}  // namespace spinfactor
