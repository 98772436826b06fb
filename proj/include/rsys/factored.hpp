#pragma once

#include <vector>

#include "rsys/polynomial.hpp"

namespace rsys {

// Pairwise-coprime set of primitive, monomial-free, sign-normalized
// polynomials closed under gcd refinement. Any polynomial assembled from the
// inserted ones factors exactly over the basis by trial division.
class CoprimeBasis {
public:
    const std::vector<Polynomial>& elems() const { return elems_; }

    // inserts the non-monomial primitive part of f, refining as needed
    void add(const Polynomial& f);

    // exponents of the primitive non-monomial part of f over the basis;
    // throws std::logic_error if f does not factor over the basis
    std::vector<int> exponents(const Polynomial& f) const;

private:
    std::vector<Polynomial> elems_;
    void add_primitive(Polynomial f);
};

// monomial * rational * primitive-part decomposition
struct PolyParts {
    Monomial mono;
    Rational content; // signed; primitive has positive name-leading coefficient
    Polynomial primitive;
};
PolyParts split_parts(const Polynomial& p);

} // namespace rsys
