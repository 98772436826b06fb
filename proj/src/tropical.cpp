#include "rsys/tropical.hpp"

#include <algorithm>
#include <ostream>

namespace rsys {

TropicalPoint TropicalPoint::canonical(std::vector<Rational> raw) {
    if (raw.empty()) throw std::invalid_argument("TropicalPoint: empty");
    Rational m = raw[0];
    for (auto& c : raw) m = std::min(m, c);
    for (auto& c : raw) c -= m;
    return TropicalPoint{std::move(raw)};
}

TropicalPoint trop_step(const Digraph& g, const TropicalPoint& lam) {
    if (g.n() > 12) throw SizeGuardError("trop_step: |V| > 12");
    const auto& l = lam.coords;
    std::vector<Rational> mu(g.n());
    for (int v = 0; v < g.n(); ++v) {
        bool first = true;
        Rational best(0);
        for (auto& arb : arborescences(g, v)) {
            Rational s(0);
            for (int u = 0; u < g.n(); ++u) {
                if (u == v) continue;
                s += l[arb.parent[u]] - l[u];
            }
            if (first || s > best) best = s;
            first = false;
        }
        mu[v] = l[v] - best;
    }
    return TropicalPoint::canonical(std::move(mu));
}

bool verify_trop_toggle(const Digraph& g, const TropicalPoint& lam, const TropicalPoint& lam2) {
    // each side carries exactly one t-term and one (t+1)-term, so the common
    // representative shift cancels and canonical forms can be compared directly
    for (int v = 0; v < g.n(); ++v) {
        bool first = true;
        Rational mx(0);
        for (int e : g.out(v)) {
            Rational c = lam.coords[g.edges()[e].to];
            if (first || c > mx) mx = c;
            first = false;
        }
        first = true;
        Rational mn(0);
        for (int e : g.in(v)) {
            Rational c = lam2.coords[g.edges()[e].from];
            if (first || c < mn) mn = c;
            first = false;
        }
        if (lam.coords[v] + lam2.coords[v] != mx + mn) return false;
    }
    return true;
}

void write_tropical_orbit_csv(std::ostream& os, const Digraph& g, const TropicalPoint& lam0,
                              int t_max) {
    os << "t";
    for (int v = 0; v < g.n(); ++v) os << "," << g.name(v);
    os << "\n";
    TropicalPoint lam = lam0;
    for (int t = 0; t <= t_max; ++t) {
        os << t;
        for (auto& c : lam.coords) os << "," << c.get_str();
        os << "\n";
        if (t < t_max) lam = trop_step(g, lam);
    }
}

} // namespace rsys
