#include "cubiczeta/quadratic.hpp"

#include <numeric>

namespace cubiczeta {

long long QuadraticForm::disc() const {
    using I = __int128;
    I d = I(B) * B - 4 * I(A) * C;
    if (d > I(INT64_MAX) || d < I(INT64_MIN))
        throw std::overflow_error("quadratic discriminant exceeds 64 bits");
    return static_cast<long long>(d);
}

QuadraticForm quad_act(const IntMat2& g, const QuadraticForm& f) {
    using I = __int128;
    I p = g.p, q = g.q, r = g.r, s = g.s;
    I A = f.A, B = f.B, C = f.C;
    I A2 = A * p * p + B * p * q + C * q * q;
    I B2 = 2 * A * p * r + B * (p * s + q * r) + 2 * C * q * s;
    I C2 = A * r * r + B * r * s + C * s * s;
    auto chk = [](I t) {
        if (t > I(INT64_MAX) || t < I(INT64_MIN))
            throw std::overflow_error("quadratic action exceeds 64 bits");
        return static_cast<long long>(t);
    };
    return {chk(A2), chk(B2), chk(C2)};
}

ReducedQuadratic gauss_reduce(const QuadraticForm& f) {
    if (!f.positive_definite()) throw std::domain_error("gauss_reduce needs a positive definite form");
    QuadraticForm cur = f;
    IntMat2 acc = kIdentity;
    auto apply = [&](const IntMat2& s) {
        cur = quad_act(s, cur);
        acc = s * acc;
    };
    for (int guard = 0; guard < 4096; ++guard) {
        if (cur.B <= -cur.A || cur.B > cur.A) {
            // Shear (1 0; m 1): B -> B + 2Am, target (-A, A].
            long long m = -floor_div(cur.B + cur.A - 1, 2 * cur.A);
            if (cur.B + 2 * cur.A * m > cur.A) --m;
            apply({1, 0, m, 1});
            continue;
        }
        if (cur.A > cur.C || (cur.A == cur.C && cur.B < 0)) {
            apply(kGenS); // (A,B,C) -> (C,-B,A)
            continue;
        }
        break;
    }
    if (!(-cur.A < cur.B && cur.B <= cur.A && cur.A <= cur.C && (cur.A != cur.C || cur.B >= 0)))
        throw std::logic_error("gauss reduction did not converge");
    return {cur, acc};
}

std::vector<IntMat2> proper_automorphisms(const QuadraticForm& f) {
    if (!f.positive_definite())
        throw std::domain_error("automorphism enumeration needs a positive definite form");
    long long k = std::gcd(std::gcd(f.A, f.B), f.C);
    long long A0 = f.A / k, B0 = f.B / k, C0 = f.C / k;
    long long D0 = B0 * B0 - 4 * A0 * C0;

    std::vector<IntMat2> out{kIdentity, {-1, 0, 0, -1}};
    // Solutions of t^2 - D0 u^2 = 4 with u != 0 exist only for D0 in {-3, -4}.
    std::vector<std::pair<long long, long long>> tu;
    if (D0 == -3) tu = {{1, 1}, {-1, 1}, {1, -1}, {-1, -1}};
    if (D0 == -4) tu = {{0, 1}, {0, -1}};
    for (auto [t, u] : tu) {
        // Candidate automorph of the primitive part; try both substitution
        // orientations and keep whichever fixes f.
        IntMat2 g{(t - B0 * u) / 2, -C0 * u, A0 * u, (t + B0 * u) / 2};
        IntMat2 gt{g.p, g.r, g.q, g.s};
        for (const IntMat2& cand : {g, gt}) {
            if (cand.det() == 1 && quad_act(cand, f) == f) {
                bool seen = false;
                for (const auto& e : out) seen = seen || e == cand;
                if (!seen) out.push_back(cand);
            }
        }
    }
    return out;
}

} // namespace cubiczeta
