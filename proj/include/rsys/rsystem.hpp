#pragma once

#include <functional>
#include <optional>

#include "rsys/digraph.hpp"
#include "rsys/factored.hpp"

namespace rsys {

// Point of the projective space P^V(K) in canonical form: polynomial
// components with overall gcd 1, rational content 1, and a positive leading
// coefficient in the first nonzero component.
struct ProjectivePoint {
    const Digraph* graph = nullptr;
    std::vector<Polynomial> comps;

    bool operator==(const ProjectivePoint& o) const { return comps == o.comps; }
    bool operator!=(const ProjectivePoint& o) const { return !(*this == o); }
    std::string str() const;
};

// Clears denominators by the lcm, divides out the overall gcd and rational
// content, and fixes the sign. Components must be nonzero.
ProjectivePoint canonicalize(const Digraph& g, const std::vector<RationalFunction>& comps);

ProjectivePoint point_from_symbols(const Digraph& g, const std::vector<SymbolId>& syms);
// assignment text lines NAME = EXPR; unassigned vertices get fresh symbols
ProjectivePoint point_from_assignments(const Digraph& g, const std::string& text);

std::vector<RationalFunction> as_fractions(const ProjectivePoint& x);

enum class StepMethod { Auto, TreeSum, Laplacian, Sweep };

// One iteration of the birational map: the unique projective solution of the
// toggle relations. Values returned as reduced fractions (one representative).
std::vector<RationalFunction> step_values(const Digraph& g, const std::vector<RationalFunction>& x,
                                          StepMethod method = StepMethod::Auto);
ProjectivePoint step(const Digraph& g, const ProjectivePoint& x, StepMethod method = StepMethod::Auto);

std::vector<RationalFunction> step_inverse_values(const Digraph& g,
                                                  const std::vector<RationalFunction>& x2);
ProjectivePoint step_inverse(const Digraph& g, const ProjectivePoint& x2);

// Checks all |V| toggle relations  X_v X'_v * sum_in wt/X'_u = sum_out wt X_w
// as exact rational-function identities.
bool verify_toggle(const Digraph& g, const std::vector<RationalFunction>& x,
                   const std::vector<RationalFunction>& x2);
bool verify_toggle(const Digraph& g, const ProjectivePoint& x, const ProjectivePoint& x2);

// F_G(X) = sum over edges of wt(u,w) X_w / X_u
RationalFunction superpotential(const Digraph& g, const std::vector<RationalFunction>& x);
RationalFunction superpotential(const Digraph& g, const ProjectivePoint& x);

struct Trajectory {
    const Digraph* graph;
    std::vector<ProjectivePoint> points; // R(0..t_max)
};

Trajectory trajectory(const Digraph& g, const ProjectivePoint& x0, int t_max,
                      const std::function<void(int, const ProjectivePoint&)>& hook = {},
                      StepMethod method = StepMethod::Auto);

// Numeric dynamics (exact rational coordinates) for round-trip and positivity
// checks; weights are evaluated at `wt_point` (may be empty for constants).
std::vector<Rational> step_rational(const Digraph& g, const std::vector<Rational>& x,
                                    const std::map<SymbolId, Rational>& wt_point = {});

// vertex v such that removing it leaves a DAG, or -1
int sweep_vertex(const Digraph& g);

} // namespace rsys
