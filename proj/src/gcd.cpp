#include <algorithm>
#include <random>
#include <stdexcept>

#include "rsys/polynomial.hpp"

namespace rsys {

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
    const SymbolTable* tab = p.table() ? p.table() : q.table();
    if (p.is_zero()) return Polynomial::zero(tab);
    if (q.is_constant()) return p.mul_rational(1 / q.constant_value());
    // leading-term cancellation in the stable grlex order
    Polynomial r = p;
    std::vector<Polynomial::Term> quot;
    const Polynomial::Term& lq = q.terms().front();
    while (!r.is_zero()) {
        Monomial lead = r.terms().front().mono;
        auto m = lead.div(lq.mono);
        if (!m) return std::nullopt;
        Rational c = r.terms().front().coef / lq.coef;
        quot.push_back(Polynomial::Term{*m, c});
        r = r - q.mul_term(*m, c);
        if (!r.is_zero() && Monomial::cmp_grlex(r.terms().front().mono, lead) >= 0)
            return std::nullopt; // no progress; not divisible
    }
    return Polynomial::from_terms(tab, std::move(quot));
}

// --- fast coprimality certificate -------------------------------------------
//
// Restrict both polynomials to a random affine line over F_p and take the
// univariate gcd. When both restrictions preserve total degree (verified),
// any common factor also restricts degree-preservingly, so a degree-zero
// univariate gcd proves the inputs coprime up to content. Randomness only
// decides whether the fast path applies; it never affects correctness.

namespace {

constexpr uint64_t kP = 0x1fffffffffffffffull; // 2^61 - 1

uint64_t mod_mul(uint64_t a, uint64_t b) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % kP);
}

uint64_t mod_pow(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mod_mul(r, a);
        a = mod_mul(a, a);
        e >>= 1;
    }
    return r;
}

uint64_t mod_inv(uint64_t a) { return mod_pow(a % kP, kP - 2); }

bool rational_mod(const Rational& c, uint64_t& out) {
    uint64_t num = mpz_fdiv_ui(c.get_num().get_mpz_t(), kP);
    uint64_t den = mpz_fdiv_ui(c.get_den().get_mpz_t(), kP);
    if (den == 0) return false;
    out = mod_mul(num, mod_inv(den));
    return true;
}

using UPoly = std::vector<uint64_t>; // dense, coefficient of t^i at index i

void utrim(UPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (!b[j]) continue;
            c[i + j] = (c[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % kP;
        }
    }
    utrim(c);
    return c;
}

UPoly upow(UPoly base, int e) {
    UPoly r{1};
    while (e > 0) {
        if (e & 1) r = umul(r, base);
        e >>= 1;
        if (e) base = umul(base, base);
    }
    return r;
}

void umod_inplace(UPoly& a, const UPoly& b) {
    uint64_t inv = mod_inv(b.back());
    while (a.size() >= b.size() && !a.empty()) {
        uint64_t c = mod_mul(a.back(), inv);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            uint64_t sub = mod_mul(c, b[i]);
            uint64_t& t = a[i + shift];
            t = (t >= sub) ? t - sub : t + kP - sub;
        }
        utrim(a);
    }
}

int ugcd_degree(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        umod_inplace(a, b);
        std::swap(a, b);
    }
    return a.empty() ? -1 : static_cast<int>(a.size()) - 1;
}

// f restricted to the line  x_i = c_i*t + d_i; false if a coefficient
// denominator vanishes mod p
bool specialize_line(const Polynomial& f, const std::vector<SymbolId>& vars,
                     const std::vector<uint64_t>& c, const std::vector<uint64_t>& d, UPoly& acc) {
    acc.clear();
    for (auto& t : f.terms()) {
        uint64_t c0;
        if (!rational_mod(t.coef, c0)) return false;
        UPoly prod{c0};
        for (auto& [id, e] : t.mono.entries()) {
            size_t k = std::lower_bound(vars.begin(), vars.end(), id) - vars.begin();
            UPoly lin{d[k], c[k]};
            prod = umul(prod, upow(lin, e));
        }
        if (acc.size() < prod.size()) acc.resize(prod.size(), 0);
        for (size_t i = 0; i < prod.size(); ++i) acc[i] = (acc[i] + prod[i]) % kP;
    }
    utrim(acc);
    return true;
}

bool probably_coprime(const Polynomial& a, const Polynomial& b) {
    std::vector<SymbolId> vars = a.symbols();
    std::vector<SymbolId> vb = b.symbols();
    vars.insert(vars.end(), vb.begin(), vb.end());
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    if (vars.empty()) return true;
    static thread_local std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_int_distribution<uint64_t> dist(1, kP - 1);
    std::vector<uint64_t> c(vars.size()), d(vars.size());
    for (auto& x : c) x = dist(rng);
    for (auto& x : d) x = dist(rng);
    UPoly ua, ub;
    if (!specialize_line(a, vars, c, d, ua)) return false;
    if (!specialize_line(b, vars, c, d, ub)) return false;
    // degree loss means the line was unlucky; fall through to the exact path
    if (static_cast<int>(ua.size()) - 1 != a.total_degree()) return false;
    if (static_cast<int>(ub.size()) - 1 != b.total_degree()) return false;
    return ugcd_degree(std::move(ua), std::move(ub)) == 0;
}

} // namespace

// --- subresultant PRS gcd ---------------------------------------------------

namespace {

int degree_in(const Polynomial& p, SymbolId x) { return p.degree_in(x); }

Polynomial leading_coef_in(const Polynomial& p, SymbolId x, int deg) {
    std::vector<Polynomial::Term> out;
    for (auto& t : p.terms())
        if (t.mono.exponent(x) == deg)
            out.push_back(Polynomial::Term{t.mono.laurent_div(Monomial::var(x, deg)), t.coef});
    return Polynomial::from_terms(p.table(), std::move(out));
}

// pseudo-remainder of A by B w.r.t. x:  lc(B)^(degA-degB+1) * A  mod  B
Polynomial pseudo_rem(Polynomial A, const Polynomial& B, SymbolId x) {
    int db = degree_in(B, x);
    Polynomial lb = leading_coef_in(B, x, db);
    int e = degree_in(A, x) - db + 1;
    while (!A.is_zero() && degree_in(A, x) >= db) {
        int da = degree_in(A, x);
        Polynomial la = leading_coef_in(A, x, da);
        A = A * lb - B * la.mul_term(Monomial::var(x, da - db), Rational(1));
        --e;
    }
    if (e > 0) A = A * lb.pow(e);
    return A;
}

Polynomial content_in(const Polynomial& p, SymbolId x) {
    auto coefs = p.coefficients_in(x);
    Polynomial g = Polynomial::zero(p.table());
    for (auto& [e, c] : coefs) {
        g = poly_gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

Polynomial gcd_prs(const Polynomial& a, const Polynomial& b, SymbolId x) {
    Polynomial ca = content_in(a, x);
    Polynomial cb = content_in(b, x);
    Polynomial A = *divide_exact(a, ca);
    Polynomial B = *divide_exact(b, cb);
    Polynomial cont = poly_gcd(ca, cb);
    if (degree_in(A, x) < degree_in(B, x)) std::swap(A, B);

    const SymbolTable* tab = a.table() ? a.table() : b.table();
    Polynomial g = Polynomial::constant(tab, Rational(1));
    Polynomial h = Polynomial::constant(tab, Rational(1));
    while (true) {
        int delta = degree_in(A, x) - degree_in(B, x);
        Polynomial R = pseudo_rem(A, B, x);
        if (R.is_zero()) break;
        if (degree_in(R, x) == 0) {
            B = Polynomial::constant(tab, Rational(1));
            break;
        }
        A = B;
        Polynomial divisor = g * h.pow(delta);
        auto q = divide_exact(R, divisor);
        if (!q) throw std::logic_error("gcd_prs: subresultant division failed");
        B = *q;
        g = leading_coef_in(A, x, degree_in(A, x));
        // h = g^delta * h^(1-delta)
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            auto hq = divide_exact(g.pow(delta), h.pow(delta - 1));
            if (!hq) throw std::logic_error("gcd_prs: h update failed");
            h = *hq;
        }
    }
    Polynomial pp = *divide_exact(B, content_in(B, x));
    return (cont * pp).normalized();
}

} // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    const SymbolTable* tab = a.table() ? a.table() : b.table();
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();

    Monomial ma = a.monomial_content();
    Monomial mb = b.monomial_content();
    Monomial mg = Monomial::gcd(ma, mb);
    Polynomial A = a.mul_term(ma.inv(), Rational(1));
    Polynomial B = b.mul_term(mb.inv(), Rational(1));
    Polynomial mono = Polynomial::monomial(tab, mg);

    if (A.is_constant() || B.is_constant()) return mono.normalized();

    // common main variables
    std::vector<SymbolId> va = A.symbols(), vb = B.symbols();
    std::vector<SymbolId> common;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
    if (common.empty()) return mono.normalized();

    if (A == B) return (mono * A).normalized();

    if (probably_coprime(A, B)) return mono.normalized();

    SymbolId x = common[0];
    int best = std::min(A.degree_in(x), B.degree_in(x));
    for (SymbolId y : common) {
        int d = std::min(A.degree_in(y), B.degree_in(y));
        if (d < best) {
            best = d;
            x = y;
        }
    }
    Polynomial g = gcd_prs(A, B, x);
    return (mono * g).normalized();
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero() || p.is_constant()) return p.normalized();
    Polynomial g = Polynomial::zero(p.table());
    for (SymbolId x : p.symbols()) {
        g = poly_gcd(g, p.derivative(x));
        if (g.is_one()) break;
    }
    Polynomial full = poly_gcd(p, g);
    auto q = divide_exact(p, full);
    if (!q) throw std::logic_error("squarefree_part: gcd does not divide");
    return q->normalized();
}

} // namespace rsys
