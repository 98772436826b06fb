#include "rsys/critical.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace rsys {

std::vector<std::vector<int>> oriented_spanning_trees(const Digraph& g) {
    const int n = g.n(), m = g.edge_count();
    std::vector<std::vector<int>> out;
    std::vector<int> pick;
    // disjoint-set over vertices for the undirected acyclicity test
    std::function<void(int, int)> rec = [&](int next, int remaining) {
        if (remaining == 0) {
            // connected iff acyclic with n-1 edges; verify with union-find
            std::vector<int> parent(n);
            std::iota(parent.begin(), parent.end(), 0);
            std::function<int(int)> find = [&](int v) {
                return parent[v] == v ? v : parent[v] = find(parent[v]);
            };
            for (int e : pick) {
                int a = find(g.edges()[e].from), b = find(g.edges()[e].to);
                if (a == b) return;
                parent[a] = b;
            }
            out.push_back(pick);
            return;
        }
        if (m - next < remaining) return;
        for (int e = next; e < m; ++e) {
            pick.push_back(e);
            rec(e + 1, remaining - 1);
            pick.pop_back();
        }
    };
    rec(0, n - 1);
    return out;
}

bool tree_admissible(const Digraph& g, const std::vector<int>& tree) {
    const int n = g.n();
    std::vector<std::vector<int>> succ(n);
    for (int e : tree) succ[g.edges()[e].from].push_back(g.edges()[e].to);
    // reachability by paths of length >= 2 within the tree
    for (int start = 0; start < n; ++start) {
        std::vector<char> seen(n, 0);
        std::vector<std::pair<int, int>> stack{{start, 0}}; // (vertex, distance)
        while (!stack.empty()) {
            auto [v, d] = stack.back();
            stack.pop_back();
            for (int w : succ[v]) {
                if (d + 1 >= 2 && g.has_edge(start, w)) return false;
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back({w, d + 1});
                }
            }
        }
    }
    return true;
}

bool trees_compatible(const Digraph& g, const std::vector<int>& t1, const std::vector<int>& t2) {
    const int n = g.n();
    // directed graph T1 together with T2 reversed; look for a simple cycle of
    // length >= 3 (parallel pairs u->v, v->u are allowed)
    std::vector<std::vector<int>> succ(n);
    for (int e : t1) succ[g.edges()[e].from].push_back(g.edges()[e].to);
    for (int e : t2) succ[g.edges()[e].to].push_back(g.edges()[e].from);

    // DFS over simple paths; n <= 7 keeps this tiny
    std::vector<char> onpath(n, 0);
    std::vector<int> path;
    bool bad = false;
    std::function<void(int, int)> dfs = [&](int start, int v) {
        if (bad) return;
        onpath[v] = 1;
        path.push_back(v);
        for (int w : succ[v]) {
            if (w == start && path.size() >= 3) {
                bad = true;
                return;
            }
            if (!onpath[w] && w > start) dfs(start, w); // canonical start = smallest vertex
        }
        onpath[v] = 0;
        path.pop_back();
    };
    for (int s = 0; s < n && !bad; ++s) {
        std::fill(onpath.begin(), onpath.end(), 0);
        path.clear();
        dfs(s, s);
    }
    return !bad;
}

VolumeResult normalized_volume(const Digraph& g, int max_vertices) {
    if (g.n() > max_vertices) throw SizeGuardError("normalized_volume: size guard exceeded");
    auto trees = oriented_spanning_trees(g);
    std::vector<std::vector<int>> adm;
    for (auto& t : trees)
        if (tree_admissible(g, t)) adm.push_back(t);

    const int k = static_cast<int>(adm.size());
    std::vector<std::vector<char>> compat(k, std::vector<char>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) compat[i][j] = compat[j][i] = trees_compatible(g, adm[i], adm[j]);

    // branch-and-bound maximum clique
    std::vector<int> best, cur;
    std::function<void(std::vector<int>&)> bb = [&](std::vector<int>& cand) {
        if (cur.size() + cand.size() <= best.size()) return;
        if (cand.empty()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        std::vector<int> cand_copy = cand;
        for (size_t i = 0; i < cand_copy.size(); ++i) {
            if (cur.size() + (cand_copy.size() - i) <= best.size()) break;
            int v = cand_copy[i];
            cur.push_back(v);
            std::vector<int> next;
            for (size_t j = i + 1; j < cand_copy.size(); ++j)
                if (compat[v][cand_copy[j]]) next.push_back(cand_copy[j]);
            bb(next);
            cur.pop_back();
        }
    };
    std::vector<int> all(k);
    std::iota(all.begin(), all.end(), 0);
    bb(all);

    VolumeResult res;
    res.volume = static_cast<long>(best.size());
    for (int i : best) res.collection.push_back(adm[i]);
    return res;
}

std::vector<double> unit_weights(const Digraph& g) {
    return std::vector<double>(g.edge_count(), 1.0);
}

namespace {

double objective(const Digraph& g, const std::vector<double>& lam, const std::vector<double>& w) {
    double s = 0;
    for (int e = 0; e < g.edge_count(); ++e)
        s += w[e] * std::exp(lam[g.edges()[e].to] - lam[g.edges()[e].from]);
    return s;
}

std::vector<double> gradient(const Digraph& g, const std::vector<double>& lam,
                             const std::vector<double>& w) {
    std::vector<double> grad(g.n(), 0.0);
    for (int e = 0; e < g.edge_count(); ++e) {
        double t = w[e] * std::exp(lam[g.edges()[e].to] - lam[g.edges()[e].from]);
        grad[g.edges()[e].to] += t;
        grad[g.edges()[e].from] -= t;
    }
    // project onto the sum-zero hyperplane (translation invariance)
    double mean = std::accumulate(grad.begin(), grad.end(), 0.0) / g.n();
    for (auto& v : grad) v -= mean;
    return grad;
}

} // namespace

double verify_fixed_point(const Digraph& g, const std::vector<double>& x,
                          const std::vector<double>& weights) {
    // symmetric toggle at x' = x:  sum_in wt X_v/X_u  vs  sum_out wt X_w/X_v
    double worst = 0;
    for (int v = 0; v < g.n(); ++v) {
        double lhs = 0, rhs = 0;
        for (int e : g.in(v)) lhs += weights[e] * x[v] / x[g.edges()[e].from];
        for (int e : g.out(v)) rhs += weights[e] * x[g.edges()[e].to] / x[v];
        worst = std::max(worst, std::fabs(lhs - rhs) / std::max(std::fabs(lhs), std::fabs(rhs)));
    }
    return worst;
}

FixedPointResult positive_fixed_point(const Digraph& g, const std::vector<double>& weights,
                                      double tol, int max_iter) {
    for (double w : weights)
        if (!(w > 0)) throw std::invalid_argument("positive_fixed_point: weights must be positive");
    if (!(tol > 0)) throw std::invalid_argument("positive_fixed_point: tol must be positive");

    std::vector<double> lam(g.n(), 0.0);
    FixedPointResult res;
    res.objectives.push_back(objective(g, lam, weights));
    int it = 0;
    for (; it < max_iter; ++it) {
        std::vector<double> grad = gradient(g, lam, weights);
        double gmax = 0;
        for (double v : grad) gmax = std::max(gmax, std::fabs(v));
        if (gmax < tol) break;
        // backtracking line search (Armijo)
        double step = 1.0;
        double f0 = res.objectives.back();
        double g2 = 0;
        for (double v : grad) g2 += v * v;
        while (step > 1e-18) {
            std::vector<double> trial(lam);
            for (int v = 0; v < g.n(); ++v) trial[v] -= step * grad[v];
            double f1 = objective(g, trial, weights);
            if (f1 <= f0 - 0.25 * step * g2) {
                lam = std::move(trial);
                res.objectives.push_back(f1);
                break;
            }
            step /= 2;
        }
        if (step <= 1e-18)
            throw std::runtime_error("positive_fixed_point: line search stalled (bug)");
    }
    if (it == max_iter) throw std::runtime_error("positive_fixed_point: no convergence (bug)");

    res.iterations = it;
    res.point.resize(g.n());
    double mx = *std::max_element(lam.begin(), lam.end());
    for (int v = 0; v < g.n(); ++v) res.point[v] = std::exp(lam[v] - mx);
    res.residual = verify_fixed_point(g, res.point, weights);
    return res;
}

} // namespace rsys
