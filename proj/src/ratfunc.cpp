#include "rsys/ratfunc.hpp"

#include <sstream>
#include <stdexcept>

namespace rsys {

RationalFunction::RationalFunction(Polynomial p) : num_(std::move(p)) {
    den_ = Polynomial::constant(num_.table(), Rational(1));
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(table(), Rational(1));
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = *divide_exact(num_, g);
        den_ = *divide_exact(den_, g);
    }
    // normalize: den has content 1 and positive name-order leading coefficient
    Rational c = den_.rational_content();
    if (!den_.name_leading_coef_positive()) c = -c;
    if (c != 1) {
        den_ = den_.mul_rational(1 / c);
        num_ = num_.mul_rational(1 / c);
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
    Polynomial g = poly_gcd(den_, o.den_);
    if (g.is_one()) return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    Polynomial da = *divide_exact(den_, g);
    Polynomial db = *divide_exact(o.den_, g);
    return RationalFunction(num_ * db + o.num_ * da, da * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    if (is_zero() || o.is_zero())
        return RationalFunction(Polynomial::zero(table() ? table() : o.table()));
    // cross-reduce before multiplying
    Polynomial g1 = poly_gcd(num_, o.den_);
    Polynomial g2 = poly_gcd(o.num_, den_);
    Polynomial n1 = g1.is_one() ? num_ : *divide_exact(num_, g1);
    Polynomial d2 = g1.is_one() ? o.den_ : *divide_exact(o.den_, g1);
    Polynomial n2 = g2.is_one() ? o.num_ : *divide_exact(o.num_, g2);
    Polynomial d1 = g2.is_one() ? den_ : *divide_exact(den_, g2);
    RationalFunction r;
    r.num_ = n1 * n2;
    r.den_ = d1 * d2;
    // normalization only; factors are already coprime
    Rational c = r.den_.rational_content();
    if (!r.den_.name_leading_coef_positive()) c = -c;
    if (c != 1) {
        r.den_ = r.den_.mul_rational(1 / c);
        r.num_ = r.num_.mul_rational(1 / c);
    }
    return r;
}

RationalFunction RationalFunction::inv() const {
    if (is_zero()) throw std::domain_error("RationalFunction::inv: zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const { return *this * o.inv(); }

RationalFunction RationalFunction::pow(int k) const {
    if (k == 0) return RationalFunction(Polynomial::constant(table(), Rational(1)));
    RationalFunction base = k < 0 ? inv() : *this;
    int e = k < 0 ? -k : k;
    RationalFunction r = RationalFunction(Polynomial::constant(table(), Rational(1)));
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

Rational RationalFunction::evaluate(const std::map<SymbolId, Rational>& point) const {
    Rational d = den_.evaluate(point);
    if (d == 0) throw std::domain_error("RationalFunction::evaluate: denominator vanishes");
    return num_.evaluate(point) / d;
}

int RationalFunction::laurent_degree() const {
    if (!is_laurent()) throw std::logic_error("laurent_degree: denominator is not a monomial");
    if (num_.is_zero()) return -1;
    int dden = den_.terms()[0].mono.degree();
    int best = std::numeric_limits<int>::min();
    for (auto& t : num_.terms()) best = std::max(best, t.mono.degree());
    return best - dden;
}

Integer RationalFunction::laurent_term_count() const {
    Rational s = num_.coefficient_sum();
    Rational d = den_.terms().empty() ? Rational(1) : den_.terms()[0].coef;
    Rational r = s / d;
    if (r.get_den() != 1) throw std::logic_error("laurent_term_count: non-integer count");
    return r.get_num();
}

std::string RationalFunction::str() const {
    if (den_.is_one()) return num_.str();
    std::ostringstream os;
    bool pn = num_.is_single_term() || num_.is_constant();
    bool pd = den_.is_single_term() && den_.terms()[0].mono.entries().size() <= 1 &&
              den_.terms()[0].coef == 1;
    os << (pn ? num_.str() : "(" + num_.str() + ")");
    os << "/";
    os << (pd ? den_.str() : "(" + den_.str() + ")");
    return os.str();
}

std::string to_string(const RationalFunction& f) { return f.str(); }

RationalFunction substitute(const Polynomial& p, SymbolId var, const RationalFunction& value) {
    auto coefs = p.coefficients_in(var);
    RationalFunction acc(Polynomial::zero(p.table()));
    for (auto& [e, c] : coefs) acc += RationalFunction(c) * value.pow(e);
    return acc;
}

} // namespace rsys
