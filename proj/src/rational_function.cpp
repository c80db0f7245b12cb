#include "spinfactor/rational_function.hpp"

#include "spinfactor/scalar.hpp"

namespace spinfactor {
namespace {

// Splits p = p0 + g*p1 for a generator g of degree at most one in p.
std::pair<Polynomial, Polynomial> split_linear(const Polynomial& p, VarIndex g) {
    std::vector<Term> p0, p1;
    for (const auto& t : p.terms()) {
        if (t.monomial.exponent(g) == 0) {
            p0.push_back(t);
        } else {
            p1.push_back(Term{t.monomial / Monomial::variable(g), t.coeff});
        }
    }
    return {Polynomial::from_terms(std::move(p0)), Polynomial::from_terms(std::move(p1))};
}

// Clears relation-bearing generators from the denominator by multiplying
// through with the conjugate.
void clear_relations(Polynomial& num, Polynomial& den) {
    for (VarIndex g : den.variables()) {
        const Relation rel = Variables::relation(g);
        if (rel == Relation::none) continue;
        auto [d0, d1] = split_linear(den, g);
        if (d1.is_zero()) continue;
        if (d0.is_zero() && rel == Relation::square_zero) {
            throw NonInvertibleError(den.to_string());
        }
        const Polynomial conj = d0 - Polynomial::variable(g) * d1;
        num = num * conj;
        den = den * conj;
    }
    if (den.uses_relations()) clear_relations(num, den);
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw DivisionByZeroError();
    if (den.uses_relations()) clear_relations(num, den);
    if (den.is_zero()) throw DivisionByZeroError();
    if (num.is_zero()) {
        num_ = Polynomial();
        den_ = Polynomial(1);
        return;
    }
    if (!den.is_constant()) {
        const Polynomial g = gcd(num, den);
        if (!g.is_constant()) {
            num = *exact_divide(num, g);
            den = *exact_divide(den, g);
        }
    }
    const Rational lc = den.display_leading().coeff;
    if (lc != 1) {
        const Rational inv = 1 / lc;
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

RationalFunction RationalFunction::operator-() const {
    return RationalFunction(-num_, den_, Reduced{});
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    if (a.den_.is_one()) return RationalFunction(a.num_ * b.den_ + b.num_, b.den_, RationalFunction::Reduced{});
    if (b.den_.is_one()) return RationalFunction(a.num_ + b.num_ * a.den_, a.den_, RationalFunction::Reduced{});
    const Polynomial g = gcd(a.den_, b.den_);
    if (g.is_constant()) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    const Polynomial ad = *exact_divide(a.den_, g);
    const Polynomial bd = *exact_divide(b.den_, g);
    return RationalFunction(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    if (a.den_.is_one() && b.den_.is_one()) {
        return RationalFunction(a.num_ * b.num_, Polynomial(1), RationalFunction::Reduced{});
    }
    // Cross-cancel before multiplying to keep the final gcd small.
    Polynomial an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    if (!bd.is_one()) {
        const Polynomial g = gcd(an, bd);
        if (!g.is_constant()) {
            an = *exact_divide(an, g);
            bd = *exact_divide(bd, g);
        }
    }
    if (!ad.is_one()) {
        const Polynomial g = gcd(bn, ad);
        if (!g.is_constant()) {
            bn = *exact_divide(bn, g);
            ad = *exact_divide(ad, g);
        }
    }
    Polynomial num = an * bn;
    Polynomial den = ad * bd;
    const Rational lc = den.display_leading().coeff;
    if (lc != 1) {
        num = num.scaled(1 / lc);
        den = den.scaled(1 / lc);
    }
    if (num.uses_relations()) {
        // Relations can create new common factors only through cancellation
        // inside the numerator; renormalise fully in that case.
        return RationalFunction(std::move(num), std::move(den));
    }
    return RationalFunction(std::move(num), std::move(den), RationalFunction::Reduced{});
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZeroError();
    if (b.num_.uses_relations()) {
        return a * RationalFunction(b.den_, b.num_);
    }
    return a * RationalFunction(b.den_, b.num_, RationalFunction::Reduced{});
}

std::string RationalFunction::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace spinfactor
