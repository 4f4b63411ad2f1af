#include "cubiczeta/reduce.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace cubiczeta {

namespace {

std::vector<long long> positive_divisors(long long n) {
    n = std::abs(n);
    std::vector<long long> out;
    for (long long i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            out.push_back(i);
            if (i != n / i) out.push_back(n / i);
        }
    }
    return out;
}

bool integer_sqrt(long long n, long long& s) {
    if (n < 0) return false;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    s = r;
    return r * r == n;
}

std::pair<long long, long long> normalize_root(long long u, long long v) {
    long long g = std::gcd(std::abs(u), std::abs(v));
    if (g != 0) { u /= g; v /= g; }
    if (v < 0 || (v == 0 && u < 0)) { u = -u; v = -v; }
    return {u, v};
}

// Rational projective zeros of A t^2 + B t + C with v > 0 (the zero at
// infinity, if any, is the caller's business).
void quad_roots(long long A, long long B, long long C,
                std::set<std::pair<long long, long long>>& out) {
    if (A == 0) {
        if (B != 0) out.insert(normalize_root(-C, B));
        return;
    }
    long long disc = B * B - 4 * A * C, s;
    if (!integer_sqrt(disc, s)) return;
    out.insert(normalize_root(-B + s, 2 * A));
    out.insert(normalize_root(-B - s, 2 * A));
}

__int128 eval_form(const BinaryCubicForm& x, long long u, long long v) {
    using I = __int128;
    I U = u, V = v;
    return I(x.a) * U * U * U + I(x.b) * U * U * V + I(x.c) * U * V * V + I(x.d) * V * V * V;
}

// g in SL_2(Z) with act(g, x).a == x(u, v) == 0 for a primitive root (u, v).
IntMat2 transport_to_infinity(long long u, long long v) {
    // Solve u*n - v*m = 1.
    long long old_r = u, r = v, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        long long q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    // old_s*u + old_t*v = old_r = +-1
    long long n = old_s, m = -old_t;
    if (old_r == -1) { n = -n; m = -m; }
    IntMat2 g{u, v, m, n};
    if (g.det() != 1) throw std::logic_error("transport is not unimodular");
    return g;
}

BinaryCubicForm lex_min(const std::vector<BinaryCubicForm>& cands) {
    BinaryCubicForm best = cands.front();
    for (const auto& c : cands)
        if (lex_less(c, best)) best = c;
    return best;
}

BinaryCubicForm canonical_reducible(const BinaryCubicForm& x) {
    auto roots = rational_roots(x);
    std::vector<BinaryCubicForm> cands;
    for (auto [u, v] : roots) {
        BinaryCubicForm y0 = act(transport_to_infinity(u, v), x);
        if (y0.a != 0 || y0.b == 0) throw std::logic_error("bad transport");
        for (BinaryCubicForm z : {y0, -y0}) {
            // Pin the translation freedom c -> c + 2rb to c in [0, 2|b|).
            long long tb = 2 * std::abs(z.b);
            long long cr = mod_reduce(z.c, tb);
            long long r = (cr - z.c) / (2 * z.b);
            BinaryCubicForm w = act(IntMat2{1, 0, r, 1}, z);
            if (w.c != cr) throw std::logic_error("translation pinning failed");
            cands.push_back(w);
        }
    }
    return lex_min(cands);
}

BinaryCubicForm canonical_posdef(const BinaryCubicForm& x) {
    auto h = hessian(x);
    QuadraticForm H{h[0], h[1], h[2]};
    auto red = gauss_reduce(H);
    BinaryCubicForm y0 = act(red.transform, x);
    std::vector<BinaryCubicForm> cands;
    for (const auto& alpha : proper_automorphisms(red.form)) cands.push_back(act(alpha, y0));
    return lex_min(cands);
}

// ---- negative discriminant ----------------------------------------------
//
// An irreducible form with disc < 0 has one real root theta and a complex
// pair beta, conj(beta). With a > 0 and G(n) := n^3 + b n^2 + ac n + a^2 d
// (the monicized polynomial, G(n) = a^2 x(n/a, 1)):
//   theta < n/a        <=>  G(n) > 0
//   Re beta > k + 1/2  <=>  G(-b - (2k+1) a) > 0
//   |beta|^2 > 1       <=>  Res(x, a t^2 + b t + (c - a)) > 0
// All three are integer sign tests; no root isolation is required.

template <class I>
I det5(std::array<std::array<I, 5>, 5> m) {
    // Fraction-free Bareiss elimination.
    int sign = 1;
    I denom = 1;
    for (int k = 0; k < 4; ++k) {
        if (m[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < 5; ++i)
                if (m[i][k] != 0) { piv = i; break; }
            if (piv < 0) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < 5; ++i)
            for (int j = k + 1; j < 5; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / denom;
        denom = m[k][k];
    }
    return sign > 0 ? m[4][4] : -m[4][4];
}

template <class I>
I res_cubic_quad(I a3, I b3, I c3, I d3, I A, I B, I C) {
    std::array<std::array<I, 5>, 5> m{{{a3, b3, c3, d3, 0},
                                       {0, a3, b3, c3, d3},
                                       {A, B, C, 0, 0},
                                       {0, A, B, C, 0},
                                       {0, 0, A, B, C}}};
    return det5(m);
}

struct BigForm {
    BigInt a, b, c, d;
    BigForm operator-() const { return {-a, -b, -c, -d}; }
};

BigForm shear(const BigForm& x, const BigInt& n) {
    // Roots move by -n; coefficients of x(u + n v, v).
    return {x.a, 3 * n * x.a + x.b, 3 * n * n * x.a + 2 * n * x.b + x.c,
            n * n * n * x.a + n * n * x.b + n * x.c + x.d};
}

BigForm rotate_s(const BigForm& x) { return {-x.d, x.c, -x.b, x.a}; }

BigInt eval_monic(const BigForm& x, const BigInt& n) {
    return ((n + x.b) * n + x.a * x.c) * n + x.a * x.a * x.d;
}

// Re beta > k + 1/2, assuming x.a > 0.
bool realpart_above(const BigForm& x, const BigInt& k) {
    return eval_monic(x, -x.b - (2 * k + 1) * x.a) > 0;
}

bool norm_above_one(const BigForm& x) {
    return res_cubic_quad<BigInt>(x.a, x.b, x.c, x.d, x.a, x.b, x.c - x.a) > 0;
}

BinaryCubicForm canonical_negdisc(const BinaryCubicForm& x0) {
    BigForm y{x0.a, x0.b, x0.c, x0.d};
    if (y.a < 0) y = -y;
    if (y.a == 0) throw std::logic_error("negdisc reduction needs an irreducible form");
    for (int iter = 0; iter < 512; ++iter) {
        // Shear the real part of the complex root into (-1/2, 1/2).
        BigInt k0;
        {
            BigInt cap = 1;
            BigInt cands[3] = {BigInt(abs(y.b)), BigInt(abs(y.a * y.c)),
                               BigInt(abs(y.a * y.a * y.d))};
            for (const BigInt& t : cands)
                if (t > cap) cap = t;
            BigInt K = (cap + abs(y.b)) / 2 + 2;
            BigInt lo = -K, hi = K;
            if (!realpart_above(y, lo) || realpart_above(y, hi))
                throw std::logic_error("real part out of search window");
            while (hi - lo > 1) {
                BigInt mid = (lo + hi) / 2;
                (realpart_above(y, mid) ? lo : hi) = mid;
            }
            k0 = lo; // Re beta in (k0 + 1/2, k0 + 3/2)
        }
        // shear(y, n) moves every root z to z - n.
        BigInt n = k0 + 1;
        if (n != 0) y = shear(y, n);
        if (norm_above_one(y)) {
            BinaryCubicForm r{checked_i64(y.a, "reduce"), checked_i64(y.b, "reduce"),
                              checked_i64(y.c, "reduce"), checked_i64(y.d, "reduce")};
            return lex_min({r, -r});
        }
        y = rotate_s(y);
        if (y.a < 0) y = -y;
    }
    throw std::logic_error("negative-discriminant reduction did not converge");
}

} // namespace

std::vector<std::pair<long long, long long>> rational_roots(const BinaryCubicForm& x) {
    std::set<std::pair<long long, long long>> out;
    if (x.a == 0) {
        if (x.b == 0 && x.c == 0 && x.d == 0) throw std::domain_error("zero form");
        out.insert({1, 0});
        quad_roots(x.b, x.c, x.d, out);
    } else if (x.d == 0) {
        out.insert({0, 1});
        quad_roots(x.a, x.b, x.c, out);
    } else {
        for (long long u : positive_divisors(x.d))
            for (long long v : positive_divisors(x.a)) {
                if (std::gcd(u, v) != 1) continue;
                if (eval_form(x, u, v) == 0) out.insert({u, v});
                if (eval_form(x, -u, v) == 0) out.insert({-u, v});
            }
    }
    return {out.begin(), out.end()};
}

bool is_reducible(const BinaryCubicForm& x) { return !rational_roots(x).empty(); }

BinaryCubicForm reduce(const BinaryCubicForm& x) {
    long long p = discriminant(x);
    if (p == 0) throw std::domain_error("reduce: discriminant is zero");
    if (is_reducible(x)) return canonical_reducible(x);
    if (p > 0) return canonical_posdef(x);
    return canonical_negdisc(x);
}

bool negdisc_reduced(const BinaryCubicForm& x) {
    using I = __int128;
    if (x.a <= 0) return false;
    I a = x.a, b = x.b, c = x.c, d = x.d;
    auto monic = [&](I n) { return ((n + b) * n + a * c) * n + a * a * d; };
    if (monic(-b - a) >= 0) return false; // Re beta < 1/2
    if (monic(-b + a) <= 0) return false; // Re beta > -1/2
    return res_cubic_quad<I>(a, b, c, d, a, b, c - a) > 0;
}

std::vector<IntMat2> stabilizer_elements(const BinaryCubicForm& x) {
    long long p = discriminant(x);
    if (p == 0) throw std::domain_error("stabilizer: discriminant is zero");
    if (p < 0) return {kIdentity};
    auto h = hessian(x);
    auto red = gauss_reduce(QuadraticForm{h[0], h[1], h[2]});
    IntMat2 g0inv = red.transform.inverse_unimodular();
    std::vector<IntMat2> out;
    for (const auto& alpha : proper_automorphisms(red.form)) {
        IntMat2 g = g0inv * alpha * red.transform;
        if (act(g, x) == x) out.push_back(g);
    }
    if (out.size() != 1 && out.size() != 3)
        throw std::logic_error("stabilizer order must be 1 or 3");
    return out;
}

int stabilizer_order(const BinaryCubicForm& x) {
    return static_cast<int>(stabilizer_elements(x).size());
}

} // namespace cubiczeta
