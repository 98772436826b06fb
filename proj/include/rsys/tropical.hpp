#pragma once

#include "rsys/digraph.hpp"

namespace rsys {

// Element of W = R^V / <(1,...,1)> in canonical form: nonnegative rational
// coordinates with at least one zero.
struct TropicalPoint {
    std::vector<Rational> coords;

    static TropicalPoint canonical(std::vector<Rational> raw);
    bool operator==(const TropicalPoint& o) const { return coords == o.coords; }
};

// mu'_v = lam_v - max over arborescences rooted at v of sum (lam_{T(u)} - lam_u),
// re-canonicalized. Uses arborescence enumeration; guarded for |V| <= 12.
TropicalPoint trop_step(const Digraph& g, const TropicalPoint& lam);

// X_v(t) + X_v(t+1) = max_{(v,w)} X_w(t) + min_{(u,v)} X_u(t+1) at every vertex
bool verify_trop_toggle(const Digraph& g, const TropicalPoint& lam, const TropicalPoint& lam2);

void write_tropical_orbit_csv(std::ostream& os, const Digraph& g, const TropicalPoint& lam0,
                              int t_max);

} // namespace rsys
