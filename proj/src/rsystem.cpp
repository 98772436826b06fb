#include "rsys/rsystem.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "rsys/parser.hpp"

namespace rsys {

std::string ProjectivePoint::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < comps.size(); ++i) {
        if (i) os << " : ";
        os << comps[i].str();
    }
    os << ")";
    return os.str();
}

ProjectivePoint canonicalize(const Digraph& g, const std::vector<RationalFunction>& comps) {
    const int n = g.n();
    if (static_cast<int>(comps.size()) != n)
        throw std::invalid_argument("canonicalize: component count mismatch");
    for (auto& f : comps)
        if (f.is_zero()) throw std::invalid_argument("canonicalize: zero component");

    // factor numerators and denominators over one coprime basis, then clear
    // denominators and strip the overall gcd purely on exponent vectors
    CoprimeBasis basis;
    std::vector<PolyParts> np(n), dp(n);
    for (int v = 0; v < n; ++v) {
        np[v] = split_parts(comps[v].num());
        dp[v] = split_parts(comps[v].den());
        basis.add(np[v].primitive);
        basis.add(dp[v].primitive);
    }
    const size_t nb = basis.elems().size();
    std::vector<std::vector<int>> ne(n), de(n);
    for (int v = 0; v < n; ++v) {
        ne[v] = basis.exponents(np[v].primitive);
        de[v] = basis.exponents(dp[v].primitive);
    }

    // lcm of denominators, componentwise over the basis and the monomials
    std::vector<int> dmax(nb, 0);
    Monomial mono_lcm;
    for (int v = 0; v < n; ++v) {
        for (size_t j = 0; j < nb; ++j) dmax[j] = std::max(dmax[j], de[v][j]);
        mono_lcm = Monomial::lcm(mono_lcm, dp[v].mono);
    }
    // exponents of component v after clearing: ne + dmax - de
    std::vector<std::vector<int>> ce(n, std::vector<int>(nb, 0));
    std::vector<Monomial> cmono(n);
    std::vector<int> cmin(nb, std::numeric_limits<int>::max());
    Monomial mono_gcd;
    bool first = true;
    for (int v = 0; v < n; ++v) {
        for (size_t j = 0; j < nb; ++j) {
            ce[v][j] = ne[v][j] + dmax[j] - de[v][j];
            cmin[j] = std::min(cmin[j], ce[v][j]);
        }
        cmono[v] = np[v].mono * mono_lcm.laurent_div(dp[v].mono);
        mono_gcd = first ? cmono[v] : Monomial::gcd(mono_gcd, cmono[v]);
        first = false;
    }

    // rational contents: divide by their gcd, fix the sign at the first component
    Integer cn(0), cd(1);
    for (int v = 0; v < n; ++v) {
        Rational c = np[v].content / dp[v].content;
        mpz_gcd(cn.get_mpz_t(), cn.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(cd.get_mpz_t(), cd.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content_gcd(cn, cd);
    content_gcd.canonicalize();
    if (np[0].content / dp[0].content < 0) content_gcd = -content_gcd;

    ProjectivePoint out;
    out.graph = &g;
    out.comps.resize(n);
    for (int v = 0; v < n; ++v) {
        Polynomial p = Polynomial::monomial(comps[v].num().table() ? comps[v].num().table() : g.table(),
                                            cmono[v].laurent_div(mono_gcd),
                                            np[v].content / dp[v].content / content_gcd);
        for (size_t j = 0; j < nb; ++j) {
            int e = ce[v][j] - cmin[j];
            if (e > 0) p = p * basis.elems()[j].pow(e);
        }
        out.comps[v] = std::move(p);
    }
    return out;
}

ProjectivePoint point_from_symbols(const Digraph& g, const std::vector<SymbolId>& syms) {
    std::vector<RationalFunction> comps;
    for (int v = 0; v < g.n(); ++v)
        comps.push_back(RationalFunction::variable(g.table(), syms[v]));
    return canonicalize(g, comps);
}

ProjectivePoint point_from_assignments(const Digraph& g, const std::string& text) {
    std::map<std::string, RationalFunction> given;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw std::runtime_error("assignment line without '=': " + line);
        std::string name = line.substr(0, eq);
        name.erase(std::remove_if(name.begin(), name.end(), ::isspace), name.end());
        given.emplace(name, parse_expr(line.substr(eq + 1), *g.table()));
    }
    std::vector<RationalFunction> comps;
    for (int v = 0; v < g.n(); ++v) {
        auto it = given.find(g.name(v));
        if (it != given.end()) {
            comps.push_back(it->second);
            given.erase(it);
        } else {
            std::string nm = g.name(v);
            if (!nm.empty() && std::isdigit(static_cast<unsigned char>(nm[0]))) nm = "x" + nm;
            comps.push_back(RationalFunction::variable(g.table(), g.table()->intern(nm)));
        }
    }
    if (!given.empty()) throw std::runtime_error("assignment for unknown vertex " + given.begin()->first);
    return canonicalize(g, comps);
}

std::vector<RationalFunction> as_fractions(const ProjectivePoint& x) {
    std::vector<RationalFunction> out;
    out.reserve(x.comps.size());
    for (auto& p : x.comps) out.emplace_back(p);
    return out;
}

int sweep_vertex(const Digraph& g) {
    auto acyclic_without = [&](int s) {
        // Kahn on G minus s
        std::vector<int> indeg(g.n(), 0);
        for (auto& e : g.edges())
            if (e.from != s && e.to != s) ++indeg[e.to];
        std::vector<int> queue;
        for (int v = 0; v < g.n(); ++v)
            if (v != s && indeg[v] == 0) queue.push_back(v);
        int seen = 0;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            ++seen;
            for (int e : g.out(v)) {
                int w = g.edges()[e].to;
                if (w == s) continue;
                if (--indeg[w] == 0) queue.push_back(w);
            }
        }
        return seen == g.n() - 1;
    };
    if (g.distinguished() >= 0 && acyclic_without(g.distinguished())) return g.distinguished();
    for (int v = 0; v < g.n(); ++v)
        if (acyclic_without(v)) return v;
    return -1;
}

namespace {

std::vector<int> topo_order_without(const Digraph& g, int s) {
    std::vector<int> indeg(g.n(), 0);
    for (auto& e : g.edges())
        if (e.from != s && e.to != s) ++indeg[e.to];
    std::vector<int> queue, order;
    for (int v = 0; v < g.n(); ++v)
        if (v != s && indeg[v] == 0) queue.push_back(v);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        order.push_back(v);
        for (int e : g.out(v)) {
            int w = g.edges()[e].to;
            if (w == s) continue;
            if (--indeg[w] == 0) queue.push_back(w);
        }
    }
    if (static_cast<int>(order.size()) != g.n() - 1)
        throw std::logic_error("topo_order_without: graph minus s is not acyclic");
    return order;
}

// forward sweep: X'_v = (sum_out wt X_w) / (X_v * sum_in wt / X'_u), X'_s = X_s
std::vector<RationalFunction> step_sweep(const Digraph& g, const std::vector<RationalFunction>& x,
                                         int s) {
    std::vector<RationalFunction> out(g.n());
    out[s] = x[s];
    for (int v : topo_order_without(g, s)) {
        RationalFunction outsum(Polynomial::zero(g.table()));
        for (int e : g.out(v)) outsum += g.edges()[e].wt * x[g.edges()[e].to];
        RationalFunction insum(Polynomial::zero(g.table()));
        for (int e : g.in(v)) insum += g.edges()[e].wt / out[g.edges()[e].from];
        if (outsum.is_zero() || insum.is_zero())
            throw std::domain_error("step: toggle denominator vanishes identically");
        out[v] = outsum / (x[v] * insum);
    }
    return out;
}

// reverse sweep for the inverse map: X_v = (sum_out wt X_w) / (X'_v * sum_in wt / X'_u)
std::vector<RationalFunction> inverse_sweep(const Digraph& g, const std::vector<RationalFunction>& x2,
                                            int s) {
    std::vector<RationalFunction> out(g.n());
    out[s] = x2[s];
    auto order = topo_order_without(g, s);
    std::reverse(order.begin(), order.end());
    for (int v : order) {
        RationalFunction outsum(Polynomial::zero(g.table()));
        for (int e : g.out(v)) outsum += g.edges()[e].wt * out[g.edges()[e].to];
        RationalFunction insum(Polynomial::zero(g.table()));
        for (int e : g.in(v)) insum += g.edges()[e].wt / x2[g.edges()[e].from];
        if (outsum.is_zero() || insum.is_zero())
            throw std::domain_error("step_inverse: toggle denominator vanishes identically");
        out[v] = outsum / (x2[v] * insum);
    }
    return out;
}

// sum over arborescences rooted at v of prod wt(u,T(u)) X_{T(u)}
std::vector<RationalFunction> tree_sums(const Digraph& g, const std::vector<RationalFunction>& x) {
    std::vector<RationalFunction> sums(g.n());
    for (int root = 0; root < g.n(); ++root) {
        RationalFunction acc(Polynomial::zero(g.table()));
        for (auto& arb : arborescences(g, root)) {
            RationalFunction p = RationalFunction::constant(g.table(), Rational(1));
            for (int v = 0; v < g.n(); ++v) {
                if (v == root) continue;
                p *= g.weight(v, arb.parent[v]) * x[arb.parent[v]];
            }
            acc += p;
        }
        if (acc.is_zero()) throw std::domain_error("step: arborescence sum vanishes identically");
        sums[root] = acc;
    }
    return sums;
}

// X'_v = prod_u X_u / N_v
std::vector<RationalFunction> step_tree_sum(const Digraph& g, const std::vector<RationalFunction>& x) {
    std::vector<RationalFunction> sums = tree_sums(g, x);
    RationalFunction all = RationalFunction::constant(g.table(), Rational(1));
    for (auto& f : x) all *= f;
    std::vector<RationalFunction> out(g.n());
    for (int v = 0; v < g.n(); ++v) out[v] = all / sums[v];
    return out;
}

// weighted Laplacian with edge weight wt(u,v) X_v / X_u; the cokernel vector
// is the vector of principal minors (columns sum to zero)
std::vector<RationalFunction> laplacian_minors(const Digraph& g,
                                               const std::vector<RationalFunction>& x) {
    const int n = g.n();
    std::vector<std::vector<RationalFunction>> A(
        n, std::vector<RationalFunction>(n, RationalFunction(Polynomial::zero(g.table()))));
    for (int v = 0; v < n; ++v) {
        RationalFunction diag(Polynomial::zero(g.table()));
        for (int e : g.out(v)) diag += g.edges()[e].wt * x[g.edges()[e].to] / x[v];
        A[v][v] = diag;
    }
    for (auto& e : g.edges()) A[e.to][e.from] -= e.wt * x[e.to] / x[e.from];

    std::vector<RationalFunction> minors(n);
    for (int root = 0; root < n; ++root) {
        // fraction-ful Gaussian elimination on the (n-1)x(n-1) principal minor
        std::vector<std::vector<RationalFunction>> m;
        for (int i = 0; i < n; ++i) {
            if (i == root) continue;
            std::vector<RationalFunction> row;
            for (int j = 0; j < n; ++j)
                if (j != root) row.push_back(A[i][j]);
            m.push_back(std::move(row));
        }
        int sz = n - 1;
        RationalFunction det = RationalFunction::constant(g.table(), Rational(1));
        bool zero = false;
        for (int k = 0; k < sz && !zero; ++k) {
            int piv = -1;
            for (int r = k; r < sz; ++r)
                if (!m[r][k].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) {
                zero = true;
                break;
            }
            if (piv != k) {
                std::swap(m[piv], m[k]);
                det = -det;
            }
            det *= m[k][k];
            for (int r = k + 1; r < sz; ++r) {
                if (m[r][k].is_zero()) continue;
                RationalFunction f = m[r][k] / m[k][k];
                for (int c = k + 1; c < sz; ++c) m[r][c] -= f * m[k][c];
                m[r][k] = RationalFunction(Polynomial::zero(g.table()));
            }
        }
        if (zero) throw std::domain_error("step: Laplacian minor vanishes identically");
        minors[root] = det;
    }
    return minors;
}

} // namespace

std::vector<RationalFunction> step_values(const Digraph& g, const std::vector<RationalFunction>& x,
                                          StepMethod method) {
    if (!g.is_strongly_connected()) throw std::invalid_argument("step: graph is not strongly connected");
    if (static_cast<int>(x.size()) != g.n()) throw std::invalid_argument("step: size mismatch");
    for (auto& f : x)
        if (f.is_zero()) throw std::invalid_argument("step: zero component");

    if (method == StepMethod::Auto) {
        int s = sweep_vertex(g);
        if (s >= 0) return step_sweep(g, x, s);
        method = (g.n() <= 12 && complexity(g, 0) <= 10000) ? StepMethod::TreeSum : StepMethod::Laplacian;
    }
    switch (method) {
        case StepMethod::Sweep: {
            int s = sweep_vertex(g);
            if (s < 0) throw std::invalid_argument("step: no sweep vertex");
            return step_sweep(g, x, s);
        }
        case StepMethod::TreeSum:
            return step_tree_sum(g, x);
        default: {
            // X'_v = X_v / T_v with T the cokernel of the weighted Laplacian
            auto minors = laplacian_minors(g, x);
            std::vector<RationalFunction> out(g.n());
            for (int v = 0; v < g.n(); ++v) out[v] = x[v] / minors[v];
            return out;
        }
    }
}

ProjectivePoint step(const Digraph& g, const ProjectivePoint& x, StepMethod method) {
    return canonicalize(g, step_values(g, as_fractions(x), method));
}

std::vector<RationalFunction> step_inverse_values(const Digraph& g,
                                                  const std::vector<RationalFunction>& x2) {
    if (!g.is_strongly_connected())
        throw std::invalid_argument("step_inverse: graph is not strongly connected");
    int s = sweep_vertex(g);
    if (s >= 0) return inverse_sweep(g, x2, s);

    // solve sum_out wt(v,w) X_w = c_v X_v with c_v from X'; kernel of M
    const int n = g.n();
    std::vector<std::vector<RationalFunction>> M(
        n, std::vector<RationalFunction>(n, RationalFunction(Polynomial::zero(g.table()))));
    for (int v = 0; v < n; ++v) {
        RationalFunction c(Polynomial::zero(g.table()));
        for (int e : g.in(v)) c += g.edges()[e].wt * x2[v] / x2[g.edges()[e].from];
        M[v][v] = -c;
    }
    for (auto& e : g.edges()) M[e.from][e.to] += e.wt;

    // Gaussian elimination to find a kernel vector
    std::vector<int> pivot_col(n, -1);
    int row = 0;
    std::vector<int> col_of_row;
    for (int col = 0; col < n && row < n; ++col) {
        int piv = -1;
        for (int r = row; r < n; ++r)
            if (!M[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[piv], M[row]);
        RationalFunction inv = M[row][col].inv();
        for (int c = 0; c < n; ++c)
            if (!M[row][c].is_zero()) M[row][c] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == row || M[r][col].is_zero()) continue;
            RationalFunction f = M[r][col];
            for (int c = 0; c < n; ++c)
                if (!M[row][c].is_zero()) M[r][c] -= f * M[row][c];
        }
        pivot_col[row] = col;
        col_of_row.push_back(col);
        ++row;
    }
    if (row == n) throw std::domain_error("step_inverse: linear system has full rank");
    // free column: any col not a pivot
    std::vector<char> is_pivot(n, 0);
    for (int r = 0; r < row; ++r) is_pivot[pivot_col[r]] = 1;
    int free_col = 0;
    while (free_col < n && is_pivot[free_col]) ++free_col;
    std::vector<RationalFunction> X(n, RationalFunction(Polynomial::zero(g.table())));
    X[free_col] = RationalFunction::constant(g.table(), Rational(1));
    for (int r = 0; r < row; ++r) X[pivot_col[r]] = -M[r][free_col];
    for (auto& f : X)
        if (f.is_zero()) throw std::domain_error("step_inverse: degenerate solution");
    return X;
}

ProjectivePoint step_inverse(const Digraph& g, const ProjectivePoint& x2) {
    return canonicalize(g, step_inverse_values(g, as_fractions(x2)));
}

bool verify_toggle(const Digraph& g, const std::vector<RationalFunction>& x,
                   const std::vector<RationalFunction>& x2) {
    for (int v = 0; v < g.n(); ++v) {
        RationalFunction outsum(Polynomial::zero(g.table()));
        for (int e : g.out(v)) outsum += g.edges()[e].wt * x[g.edges()[e].to];
        RationalFunction insum(Polynomial::zero(g.table()));
        for (int e : g.in(v)) insum += g.edges()[e].wt / x2[g.edges()[e].from];
        if (insum.is_zero()) return false;
        if (x[v] * x2[v] * insum != outsum) return false;
    }
    return true;
}

bool verify_toggle(const Digraph& g, const ProjectivePoint& x, const ProjectivePoint& x2) {
    return verify_toggle(g, as_fractions(x), as_fractions(x2));
}

RationalFunction superpotential(const Digraph& g, const std::vector<RationalFunction>& x) {
    RationalFunction acc(Polynomial::zero(g.table()));
    for (auto& e : g.edges()) acc += e.wt * x[e.to] / x[e.from];
    return acc;
}

RationalFunction superpotential(const Digraph& g, const ProjectivePoint& x) {
    return superpotential(g, as_fractions(x));
}

Trajectory trajectory(const Digraph& g, const ProjectivePoint& x0, int t_max,
                      const std::function<void(int, const ProjectivePoint&)>& hook,
                      StepMethod method) {
    if (t_max < 0) throw std::invalid_argument("trajectory: t_max must be nonnegative");
    Trajectory out{&g, {x0}};
    if (hook) hook(0, x0);
    for (int t = 1; t <= t_max; ++t) {
        out.points.push_back(step(g, out.points.back(), method));
        if (hook) hook(t, out.points.back());
    }
    return out;
}

std::vector<Rational> step_rational(const Digraph& g, const std::vector<Rational>& x,
                                    const std::map<SymbolId, Rational>& wt_point) {
    const int n = g.n();
    // principal minors of the weighted Laplacian, exact fraction-ful Gauss
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n, Rational(0)));
    for (auto& e : g.edges()) {
        Rational w = e.wt.is_constant() ? e.wt.constant_value() : e.wt.evaluate(wt_point);
        Rational val = w * x[e.to] / x[e.from];
        A[e.from][e.from] += val;
        A[e.to][e.from] -= val;
    }
    std::vector<Rational> minors(n);
    for (int root = 0; root < n; ++root) {
        std::vector<std::vector<Rational>> m;
        for (int i = 0; i < n; ++i) {
            if (i == root) continue;
            std::vector<Rational> row;
            for (int j = 0; j < n; ++j)
                if (j != root) row.push_back(A[i][j]);
            m.push_back(std::move(row));
        }
        int sz = n - 1;
        Rational det(1);
        for (int k = 0; k < sz; ++k) {
            int piv = -1;
            for (int r = k; r < sz; ++r)
                if (m[r][k] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) {
                det = 0;
                break;
            }
            if (piv != k) {
                std::swap(m[piv], m[k]);
                det = -det;
            }
            det *= m[k][k];
            for (int r = k + 1; r < sz; ++r) {
                if (m[r][k] == 0) continue;
                Rational f = m[r][k] / m[k][k];
                for (int c = k + 1; c < sz; ++c) m[r][c] -= f * m[k][c];
            }
        }
        if (det == 0) throw std::domain_error("step_rational: vanishing arborescence sum");
        minors[root] = det;
    }
    std::vector<Rational> out(n);
    for (int v = 0; v < n; ++v) out[v] = x[v] / minors[v];
    return out;
}

} // namespace rsys
