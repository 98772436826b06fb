#pragma once

#include <array>
#include <variant>

#include "rsys/digraph.hpp"

namespace rsys {

struct CycleParams {
    int n;
};

struct PosetParams {
    // element names in display order; covers as (lower, upper)
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> covers;
};

struct Somos4Params {};
struct Somos5Params {};

struct SubcycleParams {
    int n;
    std::vector<int> special; // subset of 1..n-1 (n itself excluded)
};

struct CylindricParams {
    int n, m;
};

struct ToricParams {
    std::array<int, 2> u, v; // basis of the sublattice
};

struct BidirectedParams {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges; // undirected
    bool with_coefficients = false;
};

struct CompleteBidirectedParams {
    int n;
    bool with_coefficients = false;
};

struct FlagParams {
    std::vector<int> levels; // 0 < n_1 < ... < n_k < n+1
    int n;                   // ambient dimension minus one
};

struct Gr3Params {
    int p, q;
    bool symbolic_weights = true; // alpha/beta edge weights
};

struct Gr4Params {
    int q, r; // p = 1 < q < r
};

struct RawFileParams {
    std::string path;
};

using FamilyParams =
    std::variant<CycleParams, PosetParams, Somos4Params, Somos5Params, SubcycleParams,
                 CylindricParams, ToricParams, BidirectedParams, CompleteBidirectedParams,
                 FlagParams, Gr3Params, Gr4Params, RawFileParams>;

Digraph build_graph(const FamilyParams& params, SymbolTable& tab);

// Quotient of the Z^2 grid (steps +e1, +e2) by the rank-2 sublattice spanned
// by u and v. Vertices are named A, B, C, ... along the fundamental domain.
struct ToricGraph {
    Digraph g;
    std::vector<std::pair<int, int>> reps; // canonical representative per class
    std::vector<int> succ1, succ2;         // class of rep+e1 / rep+e2
    std::vector<int> succ_e;               // class of rep+e1+e2
    int cls(int x, int y) const;

    int p = 0, r = 0, qoff = 0; // Hermite basis (p,0), (qoff,r)
};
ToricGraph build_toric(const ToricParams& params, SymbolTable& tab);

// convenience constructors used throughout the tests
Digraph directed_cycle(int n, SymbolTable& tab);
Digraph bidirected_cycle(int n, SymbolTable& tab, bool with_coefficients = false);
Digraph poset_lift(const PosetParams& p, SymbolTable& tab);
PosetParams example_9_2_poset();
PosetParams example_9_3_poset();
PosetParams example_9_4_poset();
PosetParams rowmotion_square_poset(); // a,b,c,d with a<c, a<d, b<d

// same digraph with every weight replaced by a fresh edge symbol w_FROM_TO
Digraph with_edge_symbols(const Digraph& g, SymbolTable& tab);

// default initial-value symbol names, one per vertex
std::vector<SymbolId> default_initial_symbols(const Digraph& g, SymbolTable& tab);

} // namespace rsys
