#include <cmath>
#include <random>

#include "doctest.h"
#include "rsys/critical.hpp"
#include "rsys/families.hpp"

using namespace rsys;

TEST_CASE("newton volume: somos_4") {
    SymbolTable tab;
    Digraph g = build_graph(Somos4Params{}, tab);
    VolumeResult r = normalized_volume(g);
    CHECK(r.volume == 4);
    // five oriented spanning trees, one inadmissible (the 1->2->3 path)
    CHECK(oriented_spanning_trees(g).size() == 5);
}

TEST_CASE("newton volume: full flag and directed cycle") {
    SymbolTable tab;
    Digraph flag = build_graph(FlagParams{{1, 2}, 2}, tab);
    CHECK(normalized_volume(flag).volume == 8);

    // brute-force critical count of a + b/a + 1/b is 3 (a^3 = 1)
    SymbolTable t2;
    Digraph c3 = directed_cycle(3, t2);
    CHECK(normalized_volume(c3).volume == 3);

    CHECK_THROWS_AS(normalized_volume(build_graph(CylindricParams{3, 2}, t2)), SizeGuardError);
}

TEST_CASE("newton volume is invariant under relabeling") {
    // same digraph as somos_4 with permuted vertex insertion order
    SymbolTable tab;
    Digraph g(&tab);
    g.add_vertex("3");
    g.add_vertex("1");
    g.add_vertex("2");
    g.add_edge(1, 2); // 1->2
    g.add_edge(2, 0); // 2->3
    g.add_edge(0, 1); // 3->1
    g.add_edge(1, 0); // 1->3
    CHECK(normalized_volume(g).volume == 4);
}

TEST_CASE("positive fixed point: symmetric cases") {
    SymbolTable tab;
    Digraph c3 = directed_cycle(3, tab);
    auto r = positive_fixed_point(c3, unit_weights(c3), 1e-10);
    for (double v : r.point) CHECK(v == doctest::Approx(r.point[0]).epsilon(1e-8));
    CHECK(verify_fixed_point(c3, std::vector<double>(3, 1.0), unit_weights(c3)) == 0.0);

    SymbolTable t2;
    Digraph k3 = build_graph(CompleteBidirectedParams{3, false}, t2);
    auto rk = positive_fixed_point(k3, unit_weights(k3), 1e-10);
    for (double v : rk.point) CHECK(v == doctest::Approx(rk.point[0]).epsilon(1e-8));
}

TEST_CASE("positive fixed point: somos_4") {
    SymbolTable tab;
    Digraph g = build_graph(Somos4Params{}, tab);
    auto r = positive_fixed_point(g, unit_weights(g), 1e-10);
    CHECK(r.residual < 1e-9);
    // descent is monotone
    for (size_t i = 0; i + 1 < r.objectives.size(); ++i) CHECK(r.objectives[i + 1] <= r.objectives[i]);
    // a generic point is far from fixed
    CHECK(verify_fixed_point(g, {1.0, 2.0, 5.0}, unit_weights(g)) > 1e-2);
}

TEST_CASE("volume bounds the number of distinct numeric fixed points found") {
    // random-restart exploration with generic rational weights; the count of
    // distinct positive critical points cannot exceed the volume
    SymbolTable tab;
    Digraph g = build_graph(Somos4Params{}, tab);
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> wd(0.5, 2.0);
    std::vector<double> w;
    for (int e = 0; e < g.edge_count(); ++e) w.push_back(wd(rng));
    std::vector<std::vector<double>> found;
    for (int trial = 0; trial < 5; ++trial) {
        auto r = positive_fixed_point(g, w, 1e-10);
        bool fresh = true;
        for (auto& p : found) {
            double d = 0;
            for (int v = 0; v < g.n(); ++v) d = std::max(d, std::fabs(p[v] - r.point[v]));
            if (d < 1e-6) fresh = false;
        }
        if (fresh) found.push_back(r.point);
    }
    CHECK(static_cast<long>(found.size()) <= normalized_volume(g).volume);
    CHECK(found.size() == 1); // the positive critical point is unique
}
