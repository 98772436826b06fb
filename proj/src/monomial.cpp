#include "rsys/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace rsys {

Monomial::Monomial(std::vector<Entry> entries) : e_(std::move(entries)) {
    std::sort(e_.begin(), e_.end());
    size_t w = 0;
    for (size_t i = 0; i < e_.size(); ++i) {
        if (i + 1 < e_.size() && e_[i].first == e_[i + 1].first)
            throw std::invalid_argument("Monomial: duplicate symbol");
        if (e_[i].second != 0) e_[w++] = e_[i];
    }
    e_.resize(w);
}

Monomial Monomial::var(SymbolId id, int exp) {
    Monomial m;
    if (exp != 0) m.e_.emplace_back(id, exp);
    return m;
}

Monomial Monomial::from_sorted(std::vector<Entry> entries) {
    Monomial m;
    m.e_ = std::move(entries);
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (auto& [id, e] : e_) d += e;
    return d;
}

int Monomial::exponent(SymbolId id) const {
    for (auto& [s, e] : e_)
        if (s == id) return e;
    return 0;
}

bool Monomial::all_nonnegative() const {
    for (auto& [id, e] : e_)
        if (e < 0) return false;
    return true;
}

static Monomial merge(const Monomial& a, const Monomial& b, int sign_b) {
    std::vector<Monomial::Entry> out;
    out.reserve(a.entries().size() + b.entries().size());
    auto ia = a.entries().begin(), ea = a.entries().end();
    auto ib = b.entries().begin(), eb = b.entries().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == ea || ib->first < ia->first) {
            out.emplace_back(ib->first, sign_b * ib->second);
            ++ib;
        } else {
            int e = ia->second + sign_b * ib->second;
            if (e != 0) out.emplace_back(ia->first, e);
            ++ia;
            ++ib;
        }
    }
    return Monomial::from_sorted(std::move(out));
}

Monomial Monomial::operator*(const Monomial& o) const { return merge(*this, o, +1); }

Monomial Monomial::laurent_div(const Monomial& o) const { return merge(*this, o, -1); }

std::optional<Monomial> Monomial::div(const Monomial& o) const {
    Monomial q = laurent_div(o);
    if (!q.all_nonnegative()) return std::nullopt;
    return q;
}

Monomial Monomial::pow(int k) const {
    Monomial m;
    if (k == 0) return m;
    m.e_ = e_;
    for (auto& [id, e] : m.e_) e *= k;
    return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    std::vector<Entry> out;
    auto ia = a.e_.begin(), ea = a.e_.end();
    auto ib = b.e_.begin(), eb = b.e_.end();
    // absent symbol means exponent 0
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            if (ia->second < 0) out.emplace_back(ia->first, ia->second);
            ++ia;
        } else if (ia == ea || ib->first < ia->first) {
            if (ib->second < 0) out.emplace_back(ib->first, ib->second);
            ++ib;
        } else {
            int e = std::min(ia->second, ib->second);
            if (e != 0) out.emplace_back(ia->first, e);
            ++ia;
            ++ib;
        }
    }
    Monomial m;
    m.e_ = std::move(out);
    return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    return a * b.laurent_div(Monomial::gcd(a, b));
}

int Monomial::cmp_grlex(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    auto ia = a.e_.begin(), ea = a.e_.end();
    auto ib = b.e_.begin(), eb = b.e_.end();
    while (ia != ea || ib != eb) {
        SymbolId sa = ia != ea ? ia->first : std::numeric_limits<SymbolId>::max();
        SymbolId sb = ib != eb ? ib->first : std::numeric_limits<SymbolId>::max();
        int xa = 0, xb = 0;
        if (sa <= sb) xa = ia->second;
        if (sb <= sa) xb = ib->second;
        SymbolId s = std::min(sa, sb);
        (void)s;
        if (xa != xb) return xa > xb ? 1 : -1; // larger exponent on earlier symbol wins
        if (sa <= sb) ++ia;
        if (sb <= sa) ++ib;
    }
    return 0;
}

int Monomial::cmp_grlex_names(const Monomial& a, const Monomial& b, const SymbolTable& tab) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // walk both entry lists in name order
    std::vector<Entry> va(a.e_), vb(b.e_);
    auto byname = [&](const Entry& x, const Entry& y) { return tab.name(x.first) < tab.name(y.first); };
    std::sort(va.begin(), va.end(), byname);
    std::sort(vb.begin(), vb.end(), byname);
    auto ia = va.begin();
    auto ib = vb.begin();
    while (ia != va.end() || ib != vb.end()) {
        if (ia == va.end()) return ib->second > 0 ? -1 : 1;
        if (ib == vb.end()) return ia->second > 0 ? 1 : -1;
        const std::string& na = tab.name(ia->first);
        const std::string& nb = tab.name(ib->first);
        if (na < nb) {
            if (ia->second != 0) return ia->second > 0 ? 1 : -1;
            ++ia;
        } else if (nb < na) {
            if (ib->second != 0) return ib->second > 0 ? -1 : 1;
            ++ib;
        } else {
            if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
            ++ia;
            ++ib;
        }
    }
    return 0;
}

size_t Monomial::hash() const {
    size_t h = 1469598103934665603ull;
    for (auto& [id, e] : e_) {
        h ^= static_cast<size_t>(id) * 1099511628211ull;
        h *= 1099511628211ull;
        h ^= static_cast<size_t>(static_cast<uint32_t>(e));
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace rsys
