#pragma once

#include "rsys/digraph.hpp"

namespace rsys {

// Oriented spanning trees as edge-index subsets (undirected-connected).
std::vector<std::vector<int>> oriented_spanning_trees(const Digraph& g);

// admissible: no directed path of length >= 2 inside the tree whose endpoints
// are connected by a chord of G
bool tree_admissible(const Digraph& g, const std::vector<int>& tree);

// compatible: every directed cycle of (V, T1 u reverse(T2)) has length 2
bool trees_compatible(const Digraph& g, const std::vector<int>& t1, const std::vector<int>& t2);

// Maximum size of a collection of admissible, pairwise compatible oriented
// spanning trees; equals the normalized (|V|-1)-volume of the Newton polytope
// of the superpotential. Guarded for |V| <= 7.
struct VolumeResult {
    long volume;
    std::vector<std::vector<int>> collection; // one witness collection
};
VolumeResult normalized_volume(const Digraph& g, int max_vertices = 7);

// Gradient descent with backtracking on F_G in log coordinates (convex).
struct FixedPointResult {
    std::vector<double> point;      // positive, normalized so max coordinate = 1
    double residual;                // toggle residual of the returned point
    std::vector<double> objectives; // descent iterates of F_G
    int iterations;
};
FixedPointResult positive_fixed_point(const Digraph& g, const std::vector<double>& weights,
                                      double tol, int max_iter = 200000);

// max over v of the relative gap between the two sides of the symmetric toggle
// relation at x' = x
double verify_fixed_point(const Digraph& g, const std::vector<double>& x,
                          const std::vector<double>& weights);

// convenience: per-edge numeric weights from the graph's weight functions
std::vector<double> unit_weights(const Digraph& g);

} // namespace rsys
