#pragma once

#include <map>
#include <optional>
#include <string>

#include "rsys/polynomial.hpp"

namespace rsys {

// Reduced fraction of polynomials. Invariants: gcd(num, den) = 1, den != 0,
// den has rational content 1 and positive leading coefficient in the
// graded-lex-by-name order.
class RationalFunction {
public:
    RationalFunction() = default; // zero
    RationalFunction(Polynomial num, Polynomial den);
    /*implicit*/ RationalFunction(Polynomial p);
    static RationalFunction constant(const SymbolTable* tab, Rational c) {
        return RationalFunction(Polynomial::constant(tab, std::move(c)));
    }
    static RationalFunction variable(const SymbolTable* tab, SymbolId id) {
        return RationalFunction(Polynomial::variable(tab, id));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const SymbolTable* table() const { return num_.table() ? num_.table() : den_.table(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_polynomial() const { return den_.is_one(); }
    // denominator is a single term (Laurent polynomial)
    bool is_laurent() const { return den_.is_single_term(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
    RationalFunction inv() const;
    RationalFunction pow(int k) const;

    bool operator==(const RationalFunction& o) const;
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    Rational evaluate(const std::map<SymbolId, Rational>& point) const;

    // max total degree over the Laurent monomials num/den (den must be a
    // single term); this is the degree convention used for tau-sequences
    int laurent_degree() const;
    // number of numerator terms counted with multiplicity (sum of
    // coefficients) when all coefficients are positive integers
    Integer laurent_term_count() const;

    std::string str() const;

private:
    Polynomial num_;
    Polynomial den_;
    void reduce();
};

std::string to_string(const RationalFunction& f);

// substitute var -> value inside a polynomial, yielding a rational function
RationalFunction substitute(const Polynomial& p, SymbolId var, const RationalFunction& value);

} // namespace rsys
