#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rsys/symbol.hpp"

namespace rsys {

// Exponent vector, sparse and sorted by symbol id. Zero exponents are never
// stored. Negative exponents are allowed (Laurent contexts); Polynomial
// restricts itself to nonnegative ones.
class Monomial {
public:
    using Entry = std::pair<SymbolId, int>;

    Monomial() = default;
    explicit Monomial(std::vector<Entry> entries); // sorts and drops zeros
    static Monomial var(SymbolId id, int exp = 1);
    // caller guarantees entries are id-sorted, unique, and zero-free
    static Monomial from_sorted(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return e_; }
    bool is_one() const { return e_.empty(); }
    int degree() const;
    int exponent(SymbolId id) const;
    bool all_nonnegative() const;

    Monomial operator*(const Monomial& o) const;
    // componentwise difference; may produce negative exponents
    Monomial laurent_div(const Monomial& o) const;
    // nullopt unless o divides *this with nonnegative result
    std::optional<Monomial> div(const Monomial& o) const;
    Monomial pow(int k) const;
    Monomial inv() const { return pow(-1); }

    static Monomial gcd(const Monomial& a, const Monomial& b); // componentwise min
    static Monomial lcm(const Monomial& a, const Monomial& b); // componentwise max

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    // graded, then lexicographic on the id-sorted exponent sequence;
    // a stable total order independent of symbol names
    static int cmp_grlex(const Monomial& a, const Monomial& b);
    // graded lexicographic by symbol name (the canonical print order)
    static int cmp_grlex_names(const Monomial& a, const Monomial& b, const SymbolTable& tab);

    size_t hash() const;

private:
    std::vector<Entry> e_;
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const { return m.hash(); }
};

} // namespace rsys
