#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rsys/monomial.hpp"
#include "rsys/symbol.hpp"

namespace rsys {

using Rational = mpq_class;
using Integer = mpz_class;

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept sorted descending in a fixed graded-lex order on symbol ids,
// with no zero coefficients and no negative exponents.
class Polynomial {
public:
    struct Term {
        Monomial mono;
        Rational coef;
    };

    Polynomial() = default;
    Polynomial(const SymbolTable* tab, Rational c);
    static Polynomial zero(const SymbolTable* tab = nullptr) { return Polynomial(tab, Rational(0)); }
    static Polynomial constant(const SymbolTable* tab, Rational c) { return Polynomial(tab, std::move(c)); }
    static Polynomial variable(const SymbolTable* tab, SymbolId id);
    static Polynomial monomial(const SymbolTable* tab, Monomial m, Rational c = Rational(1));
    // terms need not be sorted or unique
    static Polynomial from_terms(const SymbolTable* tab, std::vector<Term> terms);
    // caller guarantees descending grlex order, merged monomials, no zeros
    static Polynomial from_sorted_terms(const SymbolTable* tab, std::vector<Term> terms);

    const SymbolTable* table() const { return tab_; }
    const std::vector<Term>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    Rational coefficient_sum() const;

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    bool is_single_term() const { return terms_.size() == 1; }
    // single term with coefficient +1/-1? no: any single term counts as monomial times coefficient
    Rational constant_value() const; // requires is_constant

    int total_degree() const; // -1 for the zero polynomial
    int degree_in(SymbolId id) const;
    std::vector<SymbolId> symbols() const;
    bool depends_on(SymbolId id) const { return degree_in(id) > 0; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial mul_term(const Monomial& m, const Rational& c) const;
    Polynomial mul_rational(const Rational& c) const;
    Polynomial pow(int k) const; // k >= 0

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial derivative(SymbolId id) const;
    Polynomial substitute_zero(SymbolId id) const; // set variable to 0
    Rational evaluate(const std::map<SymbolId, Rational>& point) const;

    // componentwise-min exponent vector across terms (the monomial content)
    Monomial monomial_content() const;
    // positive rational c such that (*this)/c has coprime integer coefficients
    Rational rational_content() const;
    // leading term in graded-lex-by-name order (requires nonzero)
    const Term& leading_term_by_name() const;
    // divides by rational content and flips sign so the name-order leading
    // coefficient is positive; identity on zero
    Polynomial normalized() const;
    bool name_leading_coef_positive() const;

    // view as univariate in x: map exponent -> coefficient polynomial
    std::map<int, Polynomial> coefficients_in(SymbolId x) const;
    static Polynomial from_coefficients_in(const SymbolTable* tab, SymbolId x,
                                           const std::map<int, Polynomial>& coefs);

    std::string str() const;

    size_t hash() const;

private:
    const SymbolTable* tab_ = nullptr;
    std::vector<Term> terms_;

    void set_table(const SymbolTable* t);
    static const SymbolTable* common_table(const Polynomial& a, const Polynomial& b);
};

// Exact division; nullopt when q does not divide p. Throws on q == 0.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q);

// Normalized gcd (positive name-order leading coefficient, rational content 1).
// gcd(0,0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// Product of the distinct prime factors of p (up to content), computed via
// gcds with the partial derivatives.
Polynomial squarefree_part(const Polynomial& p);

std::string to_string(const Polynomial& p);

} // namespace rsys
