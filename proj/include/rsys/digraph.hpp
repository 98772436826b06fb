#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rsys/ratfunc.hpp"

namespace rsys {

struct SizeGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Strongly connected weighted digraph. Vertices are indexed densely in
// insertion order; names are kept for printing and lookups. No loops, no
// repeated (from,to) pairs, weights nonzero.
class Digraph {
public:
    struct Edge {
        int from;
        int to;
        RationalFunction wt;
    };

    explicit Digraph(SymbolTable* tab) : tab_(tab) {}

    int add_vertex(const std::string& name);
    void add_edge(int from, int to, RationalFunction wt);
    void add_edge(int from, int to); // weight 1
    void set_distinguished(int v) { s_ = v; }

    SymbolTable* table() const { return tab_; }
    int n() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& name(int v) const { return names_[v]; }
    int index(const std::string& name) const; // -1 if absent
    int distinguished() const { return s_; }

    // edge indices, grouped by tail / head
    const std::vector<int>& out(int v) const { return out_[v]; }
    const std::vector<int>& in(int v) const { return in_[v]; }
    bool has_edge(int from, int to) const;
    const RationalFunction& weight(int from, int to) const;

    bool is_strongly_connected() const;

private:
    SymbolTable* tab_;
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_, in_;
    int s_ = -1;
};

// An arborescence rooted at `root`: parent[v] for every v != root, following
// parents reaches the root.
struct Arborescence {
    int root;
    std::vector<int> parent; // parent[root] = -1
};

// Exhaustive enumeration of arborescences oriented toward root.
// Guarded: throws SizeGuardError when past `max_count` results.
std::vector<Arborescence> arborescences(const Digraph& g, int root, size_t max_count = 2000000);

// Number of arborescences toward root, via the determinant of the unweighted
// out-degree Laplacian with the root row/column removed.
Integer complexity(const Digraph& g, int root);

// All bijections eta with (v,u) in E  <=>  (u, eta(v)) in E.
std::vector<std::vector<int>> find_antimorphisms(const Digraph& g, int max_n = 10);

// Line-oriented graph format: `v NAME`, `e FROM TO [EXPR]`, `s NAME`, with
// '#' comments. Vertex order follows the `v` lines.
Digraph read_graph(std::istream& is, SymbolTable* tab);
void write_graph(std::ostream& os, const Digraph& g);

} // namespace rsys
