#include "rsys/digraph.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include "rsys/parser.hpp"

namespace rsys {

int Digraph::add_vertex(const std::string& name) {
    if (index(name) >= 0) throw std::invalid_argument("Digraph: duplicate vertex " + name);
    names_.push_back(name);
    out_.emplace_back();
    in_.emplace_back();
    return n() - 1;
}

void Digraph::add_edge(int from, int to, RationalFunction wt) {
    if (from == to) throw std::invalid_argument("Digraph: loop at " + names_[from]);
    if (from < 0 || from >= n() || to < 0 || to >= n())
        throw std::out_of_range("Digraph: bad vertex index");
    if (has_edge(from, to))
        throw std::invalid_argument("Digraph: repeated edge " + names_[from] + "->" + names_[to]);
    if (wt.is_zero()) throw std::invalid_argument("Digraph: zero edge weight");
    out_[from].push_back(edge_count());
    in_[to].push_back(edge_count());
    edges_.push_back(Edge{from, to, std::move(wt)});
}

void Digraph::add_edge(int from, int to) {
    add_edge(from, to, RationalFunction::constant(tab_, Rational(1)));
}

int Digraph::index(const std::string& name) const {
    for (int i = 0; i < n(); ++i)
        if (names_[i] == name) return i;
    return -1;
}

bool Digraph::has_edge(int from, int to) const {
    for (int e : out_[from])
        if (edges_[e].to == to) return true;
    return false;
}

const RationalFunction& Digraph::weight(int from, int to) const {
    for (int e : out_[from])
        if (edges_[e].to == to) return edges_[e].wt;
    throw std::invalid_argument("Digraph::weight: no such edge");
}

bool Digraph::is_strongly_connected() const {
    if (n() == 0) return false;
    auto reach = [&](bool forward) {
        std::vector<char> seen(n(), 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : forward ? out_[v] : in_[v]) {
                int w = forward ? edges_[e].to : edges_[e].from;
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        return std::count(seen.begin(), seen.end(), 1) == n();
    };
    return reach(true) && reach(false);
}

std::vector<Arborescence> arborescences(const Digraph& g, int root, size_t max_count) {
    const int n = g.n();
    std::vector<Arborescence> out;
    std::vector<int> parent(n, -1);
    // assign parents vertex by vertex; reject choices creating cycles away from root
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            out.push_back(Arborescence{root, parent});
            if (out.size() > max_count) throw SizeGuardError("arborescences: size guard exceeded");
            return;
        }
        if (v == root) {
            rec(v + 1);
            return;
        }
        for (int e : g.out(v)) {
            int w = g.edges()[e].to;
            // walk the assigned parents from w; reaching v means a cycle
            int u = w;
            bool cycle = false;
            while (u != -1 && u != root) {
                if (u == v) {
                    cycle = true;
                    break;
                }
                u = parent[u];
            }
            if (cycle) continue;
            parent[v] = w;
            rec(v + 1);
            parent[v] = -1;
        }
    };
    rec(0);
    return out;
}

Integer complexity(const Digraph& g, int root) {
    const int n = g.n();
    // out-degree Laplacian minor, exact integer Gauss-Bareiss
    std::vector<std::vector<Integer>> m(n - 1, std::vector<Integer>(n - 1, Integer(0)));
    auto idx = [&](int v) { return v < root ? v : v - 1; };
    for (int v = 0; v < n; ++v) {
        if (v == root) continue;
        m[idx(v)][idx(v)] = Integer(static_cast<long>(g.out(v).size()));
    }
    for (auto& e : g.edges()) {
        if (e.from == root || e.to == root) continue;
        m[idx(e.from)][idx(e.to)] -= 1;
    }
    // Bareiss fraction-free elimination
    int sz = n - 1;
    Integer prev(1);
    int sign = 1;
    for (int k = 0; k < sz - 1; ++k) {
        if (m[k][k] == 0) {
            int p = -1;
            for (int r = k + 1; r < sz; ++r)
                if (m[r][k] != 0) {
                    p = r;
                    break;
                }
            if (p < 0) return Integer(0);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < sz; ++i) {
            for (int j = k + 1; j < sz; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Integer det = sz == 0 ? Integer(1) : m[sz - 1][sz - 1];
    return sign > 0 ? det : Integer(-det);
}

std::vector<std::vector<int>> find_antimorphisms(const Digraph& g, int max_n) {
    const int n = g.n();
    if (n > max_n) throw SizeGuardError("find_antimorphisms: size guard exceeded");
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto& e : g.edges()) adj[e.from][e.to] = 1;

    std::vector<std::vector<int>> result;
    std::vector<int> eta(n, -1);
    std::vector<char> used(n, 0);
    // (v,u) in E  <=>  (u, eta(v)) in E for all u once eta(v) is chosen
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            result.push_back(eta);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w]) continue;
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                if (adj[v][u] != adj[u][w]) ok = false;
            if (!ok) continue;
            used[w] = 1;
            eta[v] = w;
            rec(v + 1);
            used[w] = 0;
            eta[v] = -1;
        }
    };
    rec(0);
    return result;
}

Digraph read_graph(std::istream& is, SymbolTable* tab) {
    Digraph g(tab);
    std::string line;
    int lineno = 0;
    std::string s_name;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        if (kind == "v") {
            std::string name;
            if (!(ls >> name)) throw std::runtime_error("graph file: bad v line " + std::to_string(lineno));
            g.add_vertex(name);
        } else if (kind == "e") {
            std::string from, to;
            if (!(ls >> from >> to))
                throw std::runtime_error("graph file: bad e line " + std::to_string(lineno));
            std::string rest;
            std::getline(ls, rest);
            RationalFunction wt = rest.find_first_not_of(" \t") == std::string::npos
                                      ? RationalFunction::constant(tab, Rational(1))
                                      : parse_expr(rest, *tab);
            int fi = g.index(from), ti = g.index(to);
            if (fi < 0 || ti < 0)
                throw std::runtime_error("graph file: unknown vertex on line " + std::to_string(lineno));
            g.add_edge(fi, ti, std::move(wt));
        } else if (kind == "s") {
            if (!(ls >> s_name)) throw std::runtime_error("graph file: bad s line " + std::to_string(lineno));
        } else {
            throw std::runtime_error("graph file: unknown directive '" + kind + "' on line " +
                                     std::to_string(lineno));
        }
    }
    if (!s_name.empty()) {
        int si = g.index(s_name);
        if (si < 0) throw std::runtime_error("graph file: unknown s vertex " + s_name);
        g.set_distinguished(si);
    }
    return g;
}

void write_graph(std::ostream& os, const Digraph& g) {
    for (int v = 0; v < g.n(); ++v) os << "v " << g.name(v) << "\n";
    for (auto& e : g.edges()) {
        os << "e " << g.name(e.from) << " " << g.name(e.to);
        if (!e.wt.is_one()) os << " " << e.wt.str();
        os << "\n";
    }
    if (g.distinguished() >= 0) os << "s " << g.name(g.distinguished()) << "\n";
}

} // namespace rsys
