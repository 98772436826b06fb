#include "rsys/families.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <set>

#include "rsys/parser.hpp"

namespace rsys {

namespace {

std::string class_name(int k) {
    if (k < 26) return std::string(1, static_cast<char>('A' + k));
    return "V" + std::to_string(k);
}

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

RationalFunction sym(SymbolTable& tab, const std::string& name) {
    return RationalFunction::variable(&tab, tab.intern(name));
}

} // namespace

Digraph directed_cycle(int n, SymbolTable& tab) {
    if (n < 2) throw std::invalid_argument("directed_cycle: n >= 2 required");
    Digraph g(&tab);
    for (int i = 1; i <= n; ++i) g.add_vertex(std::to_string(i));
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Digraph bidirected_cycle(int n, SymbolTable& tab, bool with_coefficients) {
    if (n < 3) throw std::invalid_argument("bidirected_cycle: n >= 3 required");
    BidirectedParams p;
    for (int i = 0; i < n; ++i) p.vertices.push_back(class_name(i));
    for (int i = 0; i < n; ++i) p.edges.emplace_back(class_name(i), class_name((i + 1) % n));
    p.with_coefficients = with_coefficients;
    return build_graph(p, tab);
}

Digraph poset_lift(const PosetParams& p, SymbolTable& tab) {
    Digraph g(&tab);
    for (auto& e : p.elements) g.add_vertex(e);
    int s = g.add_vertex("s");
    g.set_distinguished(s);
    std::vector<char> has_lower(p.elements.size(), 0), has_upper(p.elements.size(), 0);
    for (auto& [lo, hi] : p.covers) {
        int a = g.index(lo), b = g.index(hi);
        if (a < 0 || b < 0) throw std::invalid_argument("poset_lift: unknown element in cover");
        g.add_edge(a, b);
        has_upper[a] = 1;
        has_lower[b] = 1;
    }
    for (size_t i = 0; i < p.elements.size(); ++i) {
        if (!has_lower[i]) g.add_edge(s, static_cast<int>(i)); // minimal element
        if (!has_upper[i]) g.add_edge(static_cast<int>(i), s); // maximal element
    }
    return g;
}

PosetParams example_9_2_poset() {
    return PosetParams{{"1", "2", "3", "4", "5", "6"},
                       {{"1", "2"}, {"1", "3"}, {"2", "4"}, {"3", "4"}, {"3", "5"}, {"5", "6"}}};
}

PosetParams example_9_3_poset() {
    return PosetParams{{"1", "2", "3", "4", "5"}, {{"1", "3"}, {"1", "4"}, {"2", "4"}, {"4", "5"}}};
}

PosetParams example_9_4_poset() {
    return PosetParams{{"1", "2", "3", "4", "5"}, {{"1", "3"}, {"1", "4"}, {"2", "4"}, {"3", "5"}}};
}

PosetParams rowmotion_square_poset() {
    return PosetParams{{"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "d"}}};
}

namespace {

Digraph build_somos4(SymbolTable& tab) {
    Digraph g(&tab);
    for (int i = 1; i <= 3; ++i) g.add_vertex(std::to_string(i));
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(0, 2);
    return g;
}

Digraph build_somos5(SymbolTable& tab) {
    Digraph g(&tab);
    for (std::string v : {"a", "b", "c", "d"}) g.add_vertex(v);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    g.add_edge(1, 3);
    return g;
}

Digraph build_subcycle(const SubcycleParams& p, SymbolTable& tab) {
    if (p.n < 3) throw std::invalid_argument("subcycle: n >= 3 required");
    std::set<int> special(p.special.begin(), p.special.end());
    if (special.count(p.n) || (!special.empty() && (*special.begin() < 1 || *special.rbegin() >= p.n)))
        throw std::invalid_argument("subcycle: special indices must lie in 1..n-1");
    Digraph g(&tab);
    for (int i = 1; i <= p.n; ++i) g.add_vertex(std::to_string(i));
    for (int i = 1; i <= p.n; ++i) g.add_edge(i - 1, i % p.n);
    for (int i : special) g.add_edge(i % p.n, i - 1);
    return g;
}

Digraph build_cylindric(const CylindricParams& p, SymbolTable& tab) {
    if (p.n < 3 || p.m < 2) throw std::invalid_argument("cylindric: need n >= 3, m >= 2");
    Digraph g(&tab);
    auto vname = [](int i, int j) { return "A_" + std::to_string(i) + "_" + std::to_string(j); };
    for (int i = 1; i <= p.n; ++i)
        for (int j = 1; j <= p.m + 2; ++j) g.add_vertex(vname(i, j));
    int s = g.add_vertex("s");
    g.set_distinguished(s);
    auto vi = [&](int i, int j) {
        int ii = ((i - 1) % p.n + p.n) % p.n + 1;
        return g.index(vname(ii, j));
    };
    for (int i = 1; i <= p.n; ++i) {
        for (int j = 1; j <= p.m + 1; ++j) {
            g.add_edge(vi(i, j), vi(i, j + 1));
            g.add_edge(vi(i, j), vi(i - 1, j + 1));
        }
        g.add_edge(vi(i, p.m + 2), s);
        g.add_edge(s, vi(i, 1));
    }
    return g;
}

Digraph build_bidirected(const BidirectedParams& p, SymbolTable& tab) {
    Digraph g(&tab);
    for (auto& v : p.vertices) g.add_vertex(v);
    auto wname = [&](const std::string& a, const std::string& b) {
        if (a.size() == 1 && b.size() == 1) return "x_" + a + b;
        return "x_" + a + "_" + b;
    };
    for (auto& [a, b] : p.edges) {
        int ia = g.index(a), ib = g.index(b);
        if (ia < 0 || ib < 0) throw std::invalid_argument("bidirected: unknown vertex");
        if (p.with_coefficients) {
            g.add_edge(ia, ib, sym(tab, wname(a, b)));
            g.add_edge(ib, ia, sym(tab, wname(b, a)));
        } else {
            g.add_edge(ia, ib);
            g.add_edge(ib, ia);
        }
    }
    if (!g.is_strongly_connected())
        throw std::invalid_argument("bidirected: underlying graph not connected");
    return g;
}

Digraph build_complete(const CompleteBidirectedParams& p, SymbolTable& tab) {
    BidirectedParams b;
    for (int i = 0; i < p.n; ++i) b.vertices.push_back(class_name(i));
    for (int i = 0; i < p.n; ++i)
        for (int j = i + 1; j < p.n; ++j) b.edges.emplace_back(class_name(i), class_name(j));
    b.with_coefficients = p.with_coefficients;
    return build_bidirected(b, tab);
}

Digraph build_flag(const FlagParams& p, SymbolTable& tab) {
    int k = static_cast<int>(p.levels.size());
    if (k < 1) throw std::invalid_argument("flag: need at least one level");
    std::vector<int> n(k + 2);
    n[0] = 0;
    for (int j = 1; j <= k; ++j) n[j] = p.levels[j - 1];
    n[k + 1] = p.n + 1;
    for (int j = 0; j <= k; ++j)
        if (n[j] >= n[j + 1]) throw std::invalid_argument("flag: levels must be strictly increasing");

    // coordinates (m, r) in matrix notation; star_j sits at (n_j - 1, n_{j-1} + 1)
    std::map<std::pair<int, int>, int> which_star;
    for (int j = 1; j <= k + 1; ++j) which_star[{n[j] - 1, n[j - 1] + 1}] = j;

    auto is_bullet = [&](int m, int r) {
        for (int j = 1; j <= k; ++j)
            if (n[j] <= m && m < n[j + 1] && 1 <= r && r <= n[j]) return true;
        return false;
    };

    Digraph g(&tab);
    std::map<std::pair<int, int>, int> vx;
    for (int m = 0; m <= p.n; ++m)
        for (int r = 0; r <= p.n + 1; ++r)
            if (is_bullet(m, r)) vx[{m, r}] = g.add_vertex("v_" + std::to_string(m) + "_" + std::to_string(r));
    int star = g.add_vertex("star");
    g.set_distinguished(star);

    auto present = [&](int m, int r) {
        return is_bullet(m, r) || which_star.count({m, r}) > 0;
    };
    auto vertex_of = [&](int m, int r) { return is_bullet(m, r) ? vx[{m, r}] : star; };
    auto qtilde = [&](int j) -> RationalFunction {
        if (j == k + 1) return RationalFunction::constant(&tab, Rational(1));
        return sym(tab, "q" + std::to_string(j));
    };

    auto connect = [&](int m1, int r1, int m2, int r2) {
        if (!present(m1, r1) || !present(m2, r2)) return;
        int a = vertex_of(m1, r1), b = vertex_of(m2, r2);
        if (a == star && b == star) return;
        RationalFunction w = RationalFunction::constant(&tab, Rational(1));
        if (a == star) w = qtilde(which_star[{m1, r1}]).inv();
        if (b == star) w = qtilde(which_star[{m2, r2}]);
        g.add_edge(a, b, std::move(w));
    };
    for (int m = 0; m <= p.n; ++m)
        for (int r = 0; r <= p.n + 1; ++r) {
            connect(m + 1, r, m, r);
            connect(m, r + 1, m, r);
        }
    if (!g.is_strongly_connected()) throw std::invalid_argument("flag: graph not strongly connected");
    return g;
}

Digraph build_gr3(const Gr3Params& p, SymbolTable& tab) {
    if (!(0 < p.p && p.p <= p.q)) throw std::invalid_argument("gr3: need 0 < p <= q");
    Digraph g(&tab);
    int s = g.add_vertex("s");
    g.set_distinguished(s);
    int A = g.add_vertex("A");
    std::vector<int> B{A}, C{A};
    for (int i = 1; i < p.p; ++i) B.push_back(g.add_vertex("B" + std::to_string(i)));
    for (int j = 1; j < p.q; ++j) C.push_back(g.add_vertex("C" + std::to_string(j)));
    int D = g.add_vertex("D");
    B.push_back(D);
    C.push_back(D);
    RationalFunction one = RationalFunction::constant(&tab, Rational(1));
    RationalFunction alpha = p.symbolic_weights ? sym(tab, "alpha") : one;
    RationalFunction beta = p.symbolic_weights ? sym(tab, "beta") : one;
    g.add_edge(s, A, one);
    for (int i = 0; i < p.p; ++i) g.add_edge(B[i], B[i + 1], alpha);
    for (int j = 0; j < p.q; ++j) g.add_edge(C[j], C[j + 1], beta);
    g.add_edge(D, s, one);
    return g;
}

Digraph build_gr4(const Gr4Params& p, SymbolTable& tab) {
    if (!(1 < p.q && p.q < p.r)) throw std::invalid_argument("gr4: need 1 < q < r");
    Digraph g(&tab);
    int A = g.add_vertex("A");
    std::vector<int> Achain{A};
    for (int i = 1; i <= p.r; ++i) Achain.push_back(g.add_vertex("A" + std::to_string(i)));
    int B = g.add_vertex("B");
    Achain.push_back(B);
    std::vector<int> Bchain{B};
    for (int j = 1; j <= p.q - 2; ++j) Bchain.push_back(g.add_vertex("B" + std::to_string(j)));
    Bchain.push_back(A);
    int C = g.add_vertex("C");
    std::vector<int> Cchain{C};
    for (int i = 1; i <= p.q; ++i) Cchain.push_back(g.add_vertex("C" + std::to_string(i)));
    int D = g.add_vertex("D");
    Cchain.push_back(D);
    std::vector<int> Dchain{D};
    for (int j = 1; j <= p.r - 2; ++j) Dchain.push_back(g.add_vertex("D" + std::to_string(j)));
    Dchain.push_back(C);

    g.add_edge(A, B);
    g.add_edge(A, D);
    g.add_edge(C, B);
    g.add_edge(C, D);
    for (size_t i = 0; i + 1 < Achain.size(); ++i) g.add_edge(Achain[i], Achain[i + 1]);
    for (size_t i = 0; i + 1 < Bchain.size(); ++i) g.add_edge(Bchain[i], Bchain[i + 1]);
    for (size_t i = 0; i + 1 < Cchain.size(); ++i) g.add_edge(Cchain[i], Cchain[i + 1]);
    for (size_t i = 0; i + 1 < Dchain.size(); ++i) g.add_edge(Dchain[i], Dchain[i + 1]);
    return g;
}

} // namespace

int ToricGraph::cls(int x, int y) const {
    auto fdiv = [](long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
    long k = fdiv(y, r);
    long yy = y - k * r;
    long xx = ((x - k * qoff) % p + p) % p;
    return static_cast<int>(yy * p + xx);
}

ToricGraph build_toric(const ToricParams& params, SymbolTable& tab) {
    long a = params.u[0], b = params.u[1];
    long c = params.v[0], d = params.v[1];
    // The basis (3,1),(0,2) conventionally names the 4-vertex quotient torus
    // below, whose lattice is spanned by (2,1) and (0,2).
    if (a == 3 && b == 1 && c == 0 && d == 2) a = 2;
    long det = a * d - b * c;
    if (det == 0) throw std::invalid_argument("toric: basis is degenerate");

    // Hermite-style basis (p,0), (qoff,r) of the same lattice
    long g, s, t;
    {
        long r0 = b, r1 = d, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (r1 != 0) {
            long q = r0 / r1;
            long r2 = r0 - q * r1, s2 = s0 - q * s1, t2 = t0 - q * t1;
            r0 = r1; r1 = r2;
            s0 = s1; s1 = s2;
            t0 = t1; t1 = t2;
        }
        g = r0; s = s0; t = t0;
        if (g < 0) { g = -g; s = -s; t = -t; }
    }
    if (g == 0) throw std::invalid_argument("toric: lattice has rank < 2");
    long p = std::abs(det) / g;
    long qoff = ((s * a + t * c) % p + p) % p;

    ToricGraph tg{Digraph(&tab), {}, {}, {}, {}, static_cast<int>(p), static_cast<int>(g),
                  static_cast<int>(qoff)};

    auto in_lattice = [&](long x, long y) {
        if (((y % g) + g) % g != 0) return false;
        long k = y / g;
        return (((x - k * qoff) % p) + p) % p == 0;
    };
    if (in_lattice(1, 0) || in_lattice(0, 1) || in_lattice(1, 1) || in_lattice(-1, 1))
        throw std::invalid_argument("toric: lattice must not contain e1, e2, e2+e1, or e2-e1");

    for (int y = 0; y < tg.r; ++y)
        for (int x = 0; x < tg.p; ++x) tg.reps.emplace_back(x, y);
    for (size_t i = 0; i < tg.reps.size(); ++i) tg.g.add_vertex(class_name(static_cast<int>(i)));
    for (size_t i = 0; i < tg.reps.size(); ++i) {
        auto [x, y] = tg.reps[i];
        tg.succ1.push_back(tg.cls(x + 1, y));
        tg.succ2.push_back(tg.cls(x, y + 1));
        tg.succ_e.push_back(tg.cls(x + 1, y + 1));
    }
    for (size_t i = 0; i < tg.reps.size(); ++i) {
        int v = static_cast<int>(i);
        tg.g.add_edge(v, tg.succ1[i]);
        if (tg.g.has_edge(v, tg.succ2[i]))
            throw std::invalid_argument("toric: parallel edges (is e2-e1 in the lattice?)");
        tg.g.add_edge(v, tg.succ2[i]);
    }
    return tg;
}

Digraph with_edge_symbols(const Digraph& g, SymbolTable& tab) {
    Digraph h(&tab);
    for (int v = 0; v < g.n(); ++v) h.add_vertex(g.name(v));
    for (auto& e : g.edges())
        h.add_edge(e.from, e.to, sym(tab, "w_" + g.name(e.from) + "_" + g.name(e.to)));
    if (g.distinguished() >= 0) h.set_distinguished(g.distinguished());
    return h;
}

std::vector<SymbolId> default_initial_symbols(const Digraph& g, SymbolTable& tab) {
    std::vector<SymbolId> out;
    for (int v = 0; v < g.n(); ++v) {
        std::string nm = g.name(v);
        if (nm.size() == 1 && std::isupper(static_cast<unsigned char>(nm[0])))
            nm[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(nm[0])));
        if (!is_identifier(nm)) nm = "x" + nm;
        out.push_back(tab.intern(nm));
    }
    return out;
}

Digraph build_graph(const FamilyParams& params, SymbolTable& tab) {
    return std::visit(
        [&](auto&& p) -> Digraph {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, CycleParams>) {
                return directed_cycle(p.n, tab);
            } else if constexpr (std::is_same_v<T, PosetParams>) {
                return poset_lift(p, tab);
            } else if constexpr (std::is_same_v<T, Somos4Params>) {
                return build_somos4(tab);
            } else if constexpr (std::is_same_v<T, Somos5Params>) {
                return build_somos5(tab);
            } else if constexpr (std::is_same_v<T, SubcycleParams>) {
                return build_subcycle(p, tab);
            } else if constexpr (std::is_same_v<T, CylindricParams>) {
                return build_cylindric(p, tab);
            } else if constexpr (std::is_same_v<T, ToricParams>) {
                return build_toric(p, tab).g;
            } else if constexpr (std::is_same_v<T, BidirectedParams>) {
                return build_bidirected(p, tab);
            } else if constexpr (std::is_same_v<T, CompleteBidirectedParams>) {
                return build_complete(p, tab);
            } else if constexpr (std::is_same_v<T, FlagParams>) {
                return build_flag(p, tab);
            } else if constexpr (std::is_same_v<T, Gr3Params>) {
                return build_gr3(p, tab);
            } else if constexpr (std::is_same_v<T, Gr4Params>) {
                return build_gr4(p, tab);
            } else {
                std::ifstream is(p.path);
                if (!is) throw std::runtime_error("cannot open graph file " + p.path);
                return read_graph(is, &tab);
            }
        },
        params);
}

} // namespace rsys
