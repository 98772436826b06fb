#include "rsys/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace rsys {

static bool term_before(const Polynomial::Term& a, const Polynomial::Term& b) {
    return Monomial::cmp_grlex(a.mono, b.mono) > 0; // descending
}

void Polynomial::set_table(const SymbolTable* t) {
    if (t) tab_ = t;
}

const SymbolTable* Polynomial::common_table(const Polynomial& a, const Polynomial& b) {
    if (a.tab_ && b.tab_ && a.tab_ != b.tab_)
        throw std::invalid_argument("Polynomial: mixing symbol tables");
    return a.tab_ ? a.tab_ : b.tab_;
}

Polynomial::Polynomial(const SymbolTable* tab, Rational c) : tab_(tab) {
    if (c != 0) terms_.push_back(Term{Monomial{}, std::move(c)});
}

Polynomial Polynomial::variable(const SymbolTable* tab, SymbolId id) {
    return monomial(tab, Monomial::var(id), Rational(1));
}

Polynomial Polynomial::monomial(const SymbolTable* tab, Monomial m, Rational c) {
    Polynomial p;
    p.tab_ = tab;
    if (c != 0) p.terms_.push_back(Term{std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::from_sorted_terms(const SymbolTable* tab, std::vector<Term> terms) {
    Polynomial p;
    p.tab_ = tab;
    p.terms_ = std::move(terms);
    return p;
}

Polynomial Polynomial::from_terms(const SymbolTable* tab, std::vector<Term> terms) {
    Polynomial p;
    p.tab_ = tab;
    std::sort(terms.begin(), terms.end(), term_before);
    for (auto& t : terms) {
        if (t.coef == 0) continue;
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
            p.terms_.back().coef += t.coef;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
    }
    return p;
}

Rational Polynomial::coefficient_sum() const {
    Rational s(0);
    for (auto& t : terms_) s += t.coef;
    return s;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef == 1;
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("constant_value: polynomial is not constant");
    return terms_[0].coef;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

int Polynomial::degree_in(SymbolId id) const {
    int d = 0;
    for (auto& t : terms_) d = std::max(d, t.mono.exponent(id));
    return d;
}

std::vector<SymbolId> Polynomial::symbols() const {
    std::vector<SymbolId> out;
    for (auto& t : terms_)
        for (auto& [id, e] : t.mono.entries()) out.push_back(id);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(*this);
    for (auto& t : p.terms_) t.coef = -t.coef;
    return p;
}

static Polynomial add_signed(const Polynomial& a, const Polynomial& b, int sign_b,
                             const SymbolTable* tab) {
    std::vector<Polynomial::Term> out;
    out.reserve(a.terms().size() + b.terms().size());
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        int c;
        if (ia == ea)
            c = -1;
        else if (ib == eb)
            c = 1;
        else
            c = Monomial::cmp_grlex(ia->mono, ib->mono);
        if (c > 0) {
            out.push_back(*ia++);
        } else if (c < 0) {
            out.push_back(Polynomial::Term{ib->mono, sign_b > 0 ? ib->coef : -ib->coef});
            ++ib;
        } else {
            Rational s = ia->coef + (sign_b > 0 ? ib->coef : -ib->coef);
            if (s != 0) out.push_back(Polynomial::Term{ia->mono, std::move(s)});
            ++ia;
            ++ib;
        }
    }
    return Polynomial::from_sorted_terms(tab, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    return add_signed(*this, o, +1, common_table(*this, o));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return add_signed(*this, o, -1, common_table(*this, o));
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
    if (c == 0) return Polynomial::zero(tab_);
    Polynomial p;
    p.tab_ = tab_;
    p.terms_.reserve(terms_.size());
    for (auto& t : terms_) p.terms_.push_back(Term{t.mono * m, t.coef * c});
    return p;
}

Polynomial Polynomial::mul_rational(const Rational& c) const {
    return mul_term(Monomial{}, c);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    const SymbolTable* tab = common_table(*this, o);
    if (is_zero() || o.is_zero()) return Polynomial::zero(tab);
    if (o.terms_.size() == 1) {
        Polynomial r = mul_term(o.terms_[0].mono, o.terms_[0].coef);
        r.set_table(tab);
        return r;
    }
    if (terms_.size() == 1) {
        Polynomial r = o.mul_term(terms_[0].mono, terms_[0].coef);
        r.set_table(tab);
        return r;
    }
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(terms_.size() * 2);
    for (auto& ta : terms_)
        for (auto& tb : o.terms_) {
            Monomial m = ta.mono * tb.mono;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), ta.coef * tb.coef);
            else
                it->second += ta.coef * tb.coef;
        }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) out.push_back(Term{m, c});
    std::sort(out.begin(), out.end(), term_before);
    return Polynomial::from_sorted_terms(tab, std::move(out));
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("Polynomial::pow: negative exponent");
    Polynomial r = Polynomial::constant(tab_, Rational(1));
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = (k >>= 1) ? base * base : base;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef) return false;
    return true;
}

Polynomial Polynomial::derivative(SymbolId id) const {
    std::vector<Term> out;
    for (auto& t : terms_) {
        int e = t.mono.exponent(id);
        if (e == 0) continue;
        out.push_back(Term{t.mono.laurent_div(Monomial::var(id)), t.coef * e});
    }
    return from_terms(tab_, std::move(out));
}

Polynomial Polynomial::substitute_zero(SymbolId id) const {
    std::vector<Term> out;
    for (auto& t : terms_)
        if (t.mono.exponent(id) == 0) out.push_back(t);
    return from_terms(tab_, std::move(out));
}

Rational Polynomial::evaluate(const std::map<SymbolId, Rational>& point) const {
    Rational acc(0);
    for (auto& t : terms_) {
        Rational v = t.coef;
        for (auto& [id, e] : t.mono.entries()) {
            auto it = point.find(id);
            if (it == point.end()) throw std::invalid_argument("evaluate: missing symbol value");
            if (it->second == 0 && e < 0) throw std::domain_error("evaluate: zero to negative power");
            Rational p(1);
            Rational base = it->second;
            int k = e < 0 ? -e : e;
            while (k > 0) {
                if (k & 1) p *= base;
                base *= base;
                k >>= 1;
            }
            if (e < 0) p = 1 / p;
            v *= p;
        }
        acc += v;
    }
    return acc;
}

Monomial Polynomial::monomial_content() const {
    if (terms_.empty()) return Monomial{};
    Monomial g = terms_[0].mono;
    for (size_t i = 1; i < terms_.size() && !g.is_one(); ++i) g = Monomial::gcd(g, terms_[i].mono);
    return g;
}

Rational Polynomial::rational_content() const {
    if (terms_.empty()) return Rational(0);
    Integer num_gcd(0), den_lcm(1);
    for (auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den().get_mpz_t());
    }
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    if (c < 0) c = -c;
    return c;
}

const Polynomial::Term& Polynomial::leading_term_by_name() const {
    if (terms_.empty()) throw std::logic_error("leading_term_by_name: zero polynomial");
    if (!tab_) return terms_[0];
    size_t best = 0;
    for (size_t i = 1; i < terms_.size(); ++i)
        if (Monomial::cmp_grlex_names(terms_[i].mono, terms_[best].mono, *tab_) > 0) best = i;
    return terms_[best];
}

bool Polynomial::name_leading_coef_positive() const {
    if (terms_.empty()) return true;
    return leading_term_by_name().coef > 0;
}

Polynomial Polynomial::normalized() const {
    if (terms_.empty()) return *this;
    Rational c = rational_content();
    if (leading_term_by_name().coef < 0) c = -c;
    return mul_rational(1 / c);
}

std::map<int, Polynomial> Polynomial::coefficients_in(SymbolId x) const {
    std::map<int, Polynomial> out;
    std::map<int, std::vector<Term>> buckets;
    for (auto& t : terms_) {
        int e = t.mono.exponent(x);
        buckets[e].push_back(Term{t.mono.laurent_div(Monomial::var(x, e)), t.coef});
    }
    for (auto& [e, ts] : buckets) out.emplace(e, from_terms(tab_, std::move(ts)));
    return out;
}

Polynomial Polynomial::from_coefficients_in(const SymbolTable* tab, SymbolId x,
                                            const std::map<int, Polynomial>& coefs) {
    Polynomial r = Polynomial::zero(tab);
    for (auto& [e, p] : coefs) r += p.mul_term(Monomial::var(x, e), Rational(1));
    return r;
}

size_t Polynomial::hash() const {
    size_t h = terms_.size();
    for (auto& t : terms_) {
        h ^= t.mono.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= std::hash<double>{}(t.coef.get_d());
    }
    return h;
}

// ---------------------------------------------------------------------------
// printing

static void print_coef(std::ostringstream& os, const Rational& c, bool leading, bool has_mono) {
    Rational a = c < 0 ? Rational(-c) : c;
    if (!leading)
        os << (c < 0 ? " - " : " + ");
    else if (c < 0)
        os << "-";
    // a leading "-x" would not re-parse (the grammar has no unary minus),
    // so spell the unit coefficient out in that case
    if (a != 1 || !has_mono || (leading && c < 0)) {
        os << a.get_str();
        if (has_mono) os << "*";
    }
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> ordered;
    ordered.reserve(terms_.size());
    for (auto& t : terms_) ordered.push_back(&t);
    if (tab_)
        std::sort(ordered.begin(), ordered.end(), [&](const Term* a, const Term* b) {
            return Monomial::cmp_grlex_names(a->mono, b->mono, *tab_) > 0;
        });
    std::ostringstream os;
    bool first = true;
    for (const Term* t : ordered) {
        print_coef(os, t->coef, first, !t->mono.is_one());
        if (!t->mono.is_one()) {
            std::vector<Monomial::Entry> ents(t->mono.entries().begin(), t->mono.entries().end());
            if (tab_)
                std::sort(ents.begin(), ents.end(), [&](auto& a, auto& b) {
                    return tab_->name(a.first) < tab_->name(b.first);
                });
            bool fv = true;
            for (auto& [id, e] : ents) {
                if (!fv) os << "*";
                fv = false;
                os << (tab_ ? tab_->name(id) : "#" + std::to_string(id));
                if (e != 1) os << "^" << e;
            }
        }
        first = false;
    }
    return os.str();
}

std::string to_string(const Polynomial& p) { return p.str(); }

} // namespace rsys
