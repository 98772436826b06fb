#include <sstream>

#include "doctest.h"
#include "rsys/families.hpp"

using namespace rsys;

namespace {

// independent reachability oracle: BFS from every vertex
bool strongly_connected_oracle(const Digraph& g) {
    for (int s = 0; s < g.n(); ++s) {
        std::vector<char> seen(g.n(), 0);
        std::vector<int> q{s};
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.back();
            q.pop_back();
            for (int e : g.out(v))
                if (!seen[g.edges()[e].to]) {
                    seen[g.edges()[e].to] = 1;
                    q.push_back(g.edges()[e].to);
                }
        }
        for (char c : seen)
            if (!c) return false;
    }
    return true;
}

} // namespace

TEST_CASE("poset lift of the four-element poset") {
    SymbolTable tab;
    Digraph g = poset_lift(rowmotion_square_poset(), tab);
    CHECK(g.n() == 5);
    CHECK(g.edge_count() == 7);
    int s = g.distinguished();
    REQUIRE(s >= 0);
    CHECK(g.has_edge(s, g.index("a")));
    CHECK(g.has_edge(s, g.index("b")));
    CHECK(g.has_edge(g.index("c"), s));
    CHECK(g.has_edge(g.index("d"), s));
    CHECK(g.has_edge(g.index("a"), g.index("c")));
    CHECK(g.is_strongly_connected());
}

TEST_CASE("subgraph of the bidirected cycle (8, {1,3,4,5,7})") {
    SymbolTable tab;
    Digraph g = build_graph(SubcycleParams{8, {1, 3, 4, 5, 7}}, tab);
    CHECK(g.n() == 8);
    CHECK(g.edge_count() == 13);
    CHECK(g.is_strongly_connected());
}

TEST_CASE("toric digraph on four vertices") {
    SymbolTable tab;
    ToricGraph tg = build_toric(ToricParams{{3, 1}, {0, 2}}, tab);
    CHECK(tg.g.n() == 4);
    for (int v = 0; v < 4; ++v) CHECK(tg.g.out(v).size() == 2);
    CHECK(tg.g.name(0) == "A");
    // +e1 walks the 4-cycle, +e2 jumps two steps
    CHECK(tg.succ1 == std::vector<int>{1, 2, 3, 0});
    CHECK(tg.succ2 == std::vector<int>{2, 3, 0, 1});
    CHECK(tg.succ_e == std::vector<int>{3, 0, 1, 2});
    CHECK(complexity(tg.g, 0) == 5);

    CHECK_THROWS(build_toric(ToricParams{{1, 0}, {0, 2}}, tab)); // contains e1
    CHECK_THROWS(build_toric(ToricParams{{1, 1}, {3, 0}}, tab)); // contains e1+e2
}

TEST_CASE("strong connectivity") {
    SymbolTable tab;
    CHECK(directed_cycle(3, tab).is_strongly_connected());
    Digraph h(&tab);
    h.add_vertex("u");
    h.add_vertex("v");
    h.add_edge(0, 1);
    CHECK(!h.is_strongly_connected());

    std::vector<FamilyParams> fams = {
        CycleParams{5},
        PosetParams{rowmotion_square_poset()},
        Somos4Params{},
        Somos5Params{},
        SubcycleParams{8, {1, 3, 4, 5, 7}},
        CylindricParams{3, 2},
        ToricParams{{3, 1}, {0, 2}},
        CompleteBidirectedParams{4, false},
        FlagParams{{1, 2}, 2},
        Gr3Params{2, 3},
        Gr4Params{2, 3},
    };
    for (auto& f : fams) {
        SymbolTable t2;
        Digraph g = build_graph(f, t2);
        CHECK(g.is_strongly_connected());
        CHECK(strongly_connected_oracle(g));
    }
}

TEST_CASE("arborescence enumeration") {
    SymbolTable tab;
    Digraph g = build_graph(Somos4Params{}, tab);
    auto arbs = arborescences(g, g.index("3"));
    REQUIRE(arbs.size() == 2);
    // {1->2, 2->3} and {1->3, 2->3}
    bool first = false, second = false;
    for (auto& a : arbs) {
        if (a.parent[0] == 1 && a.parent[1] == 2) first = true;
        if (a.parent[0] == 2 && a.parent[1] == 2) second = true;
    }
    CHECK(first);
    CHECK(second);

    Digraph c5 = directed_cycle(5, tab);
    for (int r = 0; r < 5; ++r) CHECK(arborescences(c5, r).size() == 1);

    SymbolTable t3;
    Digraph tri = bidirected_cycle(3, t3);
    for (int r = 0; r < 3; ++r) {
        CHECK(arborescences(tri, r).size() == 3);
        CHECK(complexity(tri, r) == 3); // matrix-tree determinant agrees
    }
}

TEST_CASE("complexity matches enumeration at every root") {
    std::vector<FamilyParams> fams = {
        Somos4Params{}, Somos5Params{}, SubcycleParams{5, {1, 2}}, ToricParams{{3, 1}, {0, 2}},
        CompleteBidirectedParams{4, false}};
    for (auto& f : fams) {
        SymbolTable tab;
        Digraph g = build_graph(f, tab);
        for (int r = 0; r < g.n(); ++r)
            CHECK(Integer(static_cast<long>(arborescences(g, r).size())) == complexity(g, r));
    }
}

TEST_CASE("complexity is root independent on in/out-balanced graphs") {
    std::vector<FamilyParams> fams = {CycleParams{6}, ToricParams{{3, 1}, {0, 2}},
                                      CompleteBidirectedParams{4, false}};
    for (auto& f : fams) {
        SymbolTable tab;
        Digraph g = build_graph(f, tab);
        Integer c0 = complexity(g, 0);
        for (int r = 1; r < g.n(); ++r) CHECK(complexity(g, r) == c0);
    }
    SymbolTable tab;
    CHECK(complexity(bidirected_cycle(4, tab), 0) == 4);
    CHECK(complexity(directed_cycle(7, tab), 3) == 1);
}

TEST_CASE("antimorphisms") {
    SymbolTable tab;
    Digraph tri = bidirected_cycle(3, tab);
    auto etas = find_antimorphisms(tri);
    bool has_id = false;
    for (auto& e : etas) {
        bool id = true;
        for (int v = 0; v < tri.n(); ++v)
            if (e[v] != v) id = false;
        if (id) has_id = true;
    }
    CHECK(has_id);

    SymbolTable t2;
    ToricGraph tg = build_toric(ToricParams{{3, 1}, {0, 2}}, t2);
    auto tetas = find_antimorphisms(tg.g);
    bool has_shift = false;
    for (auto& e : tetas) {
        bool ok = true;
        for (int v = 0; v < 4; ++v)
            if (e[v] != tg.succ_e[v]) ok = false;
        if (ok) has_shift = true;
    }
    CHECK(has_shift);

    // circulant with jumps 1,2,3 on eight vertices: v_i -> v_{i+4}
    SymbolTable t3;
    Digraph circ(&t3);
    for (int i = 0; i < 8; ++i) circ.add_vertex("v" + std::to_string(i + 1));
    for (int i = 0; i < 8; ++i)
        for (int j = 1; j <= 3; ++j) circ.add_edge(i, (i + j) % 8);
    auto cetas = find_antimorphisms(circ);
    bool has4 = false;
    for (auto& e : cetas) {
        bool ok = true;
        for (int v = 0; v < 8; ++v)
            if (e[v] != (v + 4) % 8) ok = false;
        if (ok) has4 = true;
    }
    CHECK(has4);
}

TEST_CASE("graph file round trip") {
    SymbolTable tab;
    Digraph g = build_graph(Gr3Params{1, 2}, tab);
    std::ostringstream os;
    write_graph(os, g);
    std::istringstream is(os.str());
    SymbolTable t2;
    Digraph h = read_graph(is, &t2);
    CHECK(h.n() == g.n());
    CHECK(h.edge_count() == g.edge_count());
    CHECK(h.distinguished() == g.distinguished());
    for (auto& e : g.edges()) CHECK(h.has_edge(e.from, e.to));

    std::istringstream bad("v a\ne a b");
    CHECK_THROWS(read_graph(bad, &t2));
}

TEST_CASE("family shapes") {
    SymbolTable tab;
    Digraph gr3 = build_graph(Gr3Params{2, 3}, tab);
    CHECK(gr3.n() == 6); // s, A, B1, C1, C2, D
    CHECK(gr3.edge_count() == 7);

    Digraph gr4 = build_graph(Gr4Params{2, 3}, tab);
    CHECK(gr4.n() == 10);
    CHECK(gr4.edge_count() == 14);
    CHECK(gr4.has_edge(gr4.index("A"), gr4.index("B")));
    CHECK(gr4.has_edge(gr4.index("B"), gr4.index("A"))); // B -> B_1 = A for q = 2

    Digraph flag = build_graph(FlagParams{{1, 2}, 2}, tab);
    CHECK(flag.n() == 4);
    CHECK(flag.edge_count() == 6);

    Digraph cyl = build_graph(CylindricParams{3, 3}, tab);
    CHECK(cyl.n() == 3 * 5 + 1);
    CHECK(cyl.edge_count() == 3 * (2 * 4 + 2));
}

TEST_CASE("duplicate edges are rejected") {
    SymbolTable tab;
    Digraph g(&tab);
    g.add_vertex("u");
    g.add_vertex("v");
    g.add_edge(0, 1);
    CHECK_THROWS(g.add_edge(0, 1));
    CHECK_THROWS(g.add_edge(0, 0));
}
