#include "rsys/factored.hpp"

#include <stdexcept>

namespace rsys {

PolyParts split_parts(const Polynomial& p) {
    if (p.is_zero()) return PolyParts{Monomial{}, Rational(0), p};
    Monomial m = p.monomial_content();
    Polynomial q = p.mul_term(m.inv(), Rational(1));
    Rational c = q.rational_content();
    if (!q.name_leading_coef_positive()) c = -c;
    return PolyParts{m, c, q.mul_rational(1 / c)};
}

void CoprimeBasis::add(const Polynomial& f) {
    PolyParts parts = split_parts(f);
    if (parts.primitive.is_constant()) return;
    add_primitive(parts.primitive);
}

void CoprimeBasis::add_primitive(Polynomial f) {
    // worklist refinement; total degree strictly decreases on every split
    std::vector<Polynomial> work{std::move(f)};
    while (!work.empty()) {
        Polynomial x = std::move(work.back());
        work.pop_back();
        if (x.is_constant()) continue;
        bool placed = false;
        for (size_t i = 0; i < elems_.size(); ++i) {
            if (x == elems_[i]) {
                placed = true;
                break;
            }
            Polynomial g = poly_gcd(x, elems_[i]);
            if (g.is_constant()) continue;
            Polynomial b_rest = *divide_exact(elems_[i], g);
            Polynomial x_rest = *divide_exact(x, g);
            elems_.erase(elems_.begin() + static_cast<long>(i));
            if (!b_rest.is_constant()) work.push_back(split_parts(b_rest).primitive);
            if (!x_rest.is_constant()) work.push_back(split_parts(x_rest).primitive);
            // g itself may still overlap the remaining basis elements
            work.push_back(std::move(g));
            placed = true;
            break;
        }
        if (!placed) elems_.push_back(std::move(x));
    }
}

std::vector<int> CoprimeBasis::exponents(const Polynomial& f) const {
    PolyParts parts = split_parts(f);
    std::vector<int> out(elems_.size(), 0);
    Polynomial rest = parts.primitive;
    if (rest.is_constant()) return out;
    for (size_t i = 0; i < elems_.size(); ++i) {
        while (true) {
            auto q = divide_exact(rest, elems_[i]);
            if (!q) break;
            rest = *q;
            ++out[i];
            if (rest.is_constant()) return out;
        }
    }
    throw std::logic_error("CoprimeBasis::exponents: polynomial does not factor over basis");
}

} // namespace rsys
