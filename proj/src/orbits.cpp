#include "cubiczeta/orbits.hpp"

#include "cubiczeta/lattices.hpp"
#include "cubiczeta/reduce.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_set>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cubiczeta {

bool record_less(const OrbitRecord& a, const OrbitRecord& b) {
    long long da = std::abs(a.disc), db = std::abs(b.disc);
    if (da != db) return da < db;
    if ((a.disc > 0) != (b.disc > 0)) return a.disc > 0;
    return lex_less(a.rep, b.rep);
}

namespace {

using Sink = std::vector<BinaryCubicForm>;

__int128 disc128(long long a, long long b, long long c, long long d) {
    using I = __int128;
    return I(b) * b * c * c + 18 * I(a) * b * c * d - 4 * I(a) * c * c * c -
           4 * I(b) * b * b * d - 27 * I(a) * a * d * d;
}

bool in_range(__int128 p, long long lo, long long hi) {
    __int128 ap = p < 0 ? -p : p;
    return ap > lo && ap <= hi;
}

// Reducible population: a = 0 normal forms with b >= 1, 0 <= c < 2b cover
// every orbit with a rational linear factor; disc = b^2 (c^2 - 4bd).
void scan_reducible_b(long long b, long long lo, long long hi, Sink& out) {
    long long m = hi / (b * b);
    if (m == 0) return;
    for (long long c = 0; c < 2 * b; ++c) {
        long long dmin = -floor_div(m - c * c, 4 * b);
        long long dmax = floor_div(m + c * c, 4 * b);
        for (long long d = dmin; d <= dmax; ++d) {
            __int128 p = disc128(0, b, c, d);
            if (p == 0 || !in_range(p, lo, hi)) continue;
            out.push_back(reduce(BinaryCubicForm{0, b, c, d}));
        }
    }
}

long long reducible_bmax(long long hi) {
    return static_cast<long long>(std::sqrt(static_cast<double>(hi))) + 1;
}

// Positive-discriminant population. Every orbit contains a form whose
// Hessian (A, B, C) is Gauss-reduced, and such a form satisfies
//   1 <= A <= sqrt(disc), |B| <= A <= C,
//   a^2 <= 4 A^3 / (27 disc)   (from 27 P x^2 = 4 H^3 - G^2 >= 0),
//   |b| <= 3|a|/2 + sqrt(A)    (b solves A b^2 - 3aB b + 9a^2 C - A^2 = 0).
// The scan runs over that region and canonicalizes the survivors; it is a
// superset of the reduced forms, so duplicates are removed downstream.
struct PosdefBounds {
    long long amax, bmax, hess_amax;
};

PosdefBounds posdef_bounds(long long hi) {
    double x = static_cast<double>(hi);
    long long amax = static_cast<long long>(2.0 * std::pow(x, 0.25) / std::sqrt(27.0)) + 1;
    long long hess_amax = static_cast<long long>(std::sqrt(x)) + 1;
    long long bmax = static_cast<long long>(1.5 * amax + std::pow(x, 0.25)) + 2;
    return {amax, bmax, hess_amax};
}

void scan_posdef_ab(long long a, long long b, long long hess_amax, long long lo, long long hi,
                    Sink& out) {
    // c such that A = b^2 - 3ac lies in [1, hess_amax].
    long long c_lo, c_hi;
    if (a > 0) {
        c_lo = -floor_div(hess_amax - b * b, 3 * a);
        c_hi = floor_div(b * b - 1, 3 * a);
    } else {
        c_lo = -floor_div(b * b - 1, -3 * a);
        c_hi = floor_div(hess_amax - b * b, -3 * a);
    }
    for (long long c = c_lo; c <= c_hi; ++c) {
        long long A = b * b - 3 * a * c;
        if (A < 1 || A > hess_amax) continue;
        // d such that |B| = |bc - 9ad| <= A.
        long long d_lo, d_hi;
        if (a > 0) {
            d_lo = -floor_div(A - b * c, 9 * a);
            d_hi = floor_div(A + b * c, 9 * a);
        } else {
            d_lo = -floor_div(A + b * c, -9 * a);
            d_hi = floor_div(A - b * c, -9 * a);
        }
        for (long long d = d_lo; d <= d_hi; ++d) {
            long long B = b * c - 9 * a * d;
            if (B > A || B < -A) continue;
            __int128 C = __int128(c) * c - 3 * __int128(b) * d;
            if (C < A) continue;
            __int128 p = disc128(a, b, c, d);
            if (p <= 0 || !in_range(p, lo, hi)) continue;
            BinaryCubicForm x{a, b, c, d};
            if (is_reducible(x)) continue; // reducible population covers it
            out.push_back(reduce(x));
        }
    }
}

// Negative-discriminant population (irreducible forms). With the complex
// root beta in the fundamental domain and theta the real root,
//   |disc| = 4 a^4 |theta-beta|^4 (Im beta)^2,  Im beta >= sqrt(3)/2,
// which yields, for 0 < |disc| <= X:
//   1 <= a <= (16 X / 27)^(1/4),
//   Im beta <= (X/4)^(1/6) / a^(2/3),  |theta - beta| <= (X/(3a^4))^(1/4),
// and coefficient boxes via |b| = a|theta + 2 Re beta| etc.
struct NegdiscBounds {
    long long amax;
    // per a: bmax, cmax, dmax
    long long bmax(long long a, double x) const {
        double t = tmax(a, x);
        return static_cast<long long>(a * (t + 1.0)) + 2;
    }
    long long cmax(long long a, double x) const {
        double t = tmax(a, x), m = mmax(a, x);
        return static_cast<long long>(a * (t + m)) + 2;
    }
    long long dmax(long long a, double x) const {
        double t = tmax(a, x), m = mmax(a, x);
        return static_cast<long long>(a * t * m) + 2;
    }
    static double imax(long long a, double x) {
        return std::pow(x / 4.0, 1.0 / 6.0) / std::pow(double(a), 2.0 / 3.0);
    }
    static double tmax(long long a, double x) {
        return 0.5 + imax(a, x) + std::pow(x / (3.0 * std::pow(double(a), 4.0)), 0.25);
    }
    static double mmax(long long a, double x) {
        double im = imax(a, x);
        return 0.25 + im * im;
    }
};

NegdiscBounds negdisc_bounds(long long hi) {
    double x = static_cast<double>(hi);
    return {static_cast<long long>(std::pow(16.0 * x / 27.0, 0.25)) + 1};
}

// Loose floating-point screen for the exact fundamental-domain test; the
// slack absorbs the numerical error of the closed-form root.
bool negdisc_float_screen(long long a, long long b, long long c, long long d) {
    double A = double(a), B = double(b) / A, C = double(c) / A, D = double(d) / A;
    // Depressed cubic t = y - B/3: y^3 + p y + q.
    double p = C - B * B / 3.0;
    double q = 2.0 * B * B * B / 27.0 - B * C / 3.0 + D;
    double disc = q * q / 4.0 + p * p * p / 27.0;
    if (disc < 0) return true; // three real roots: leave to the exact test
    double s = std::sqrt(disc);
    double theta = std::cbrt(-q / 2.0 + s) + std::cbrt(-q / 2.0 - s) - B / 3.0;
    // Two polishing steps.
    for (int i = 0; i < 2; ++i) {
        double f = ((theta + B) * theta + C) * theta + D;
        double fp = (3.0 * theta + 2.0 * B) * theta + C;
        if (fp != 0) theta -= f / fp;
    }
    double re = -(theta + B) / 2.0;
    double m = C + B * theta + theta * theta;
    const double eps = 0.05;
    return std::abs(re) <= 0.5 + eps && m >= 1.0 - eps;
}

void scan_negdisc_ab(long long a, long long b, const NegdiscBounds& nb, long long lo,
                     long long hi, Sink& out, bool use_float_screen) {
    double x = static_cast<double>(hi);
    long long cmax = nb.cmax(a, x), dmax = nb.dmax(a, x);
    for (long long c = -cmax; c <= cmax; ++c) {
        for (long long d = -dmax; d <= dmax; ++d) {
            __int128 p = disc128(a, b, c, d);
            if (p >= 0 || !in_range(p, lo, hi)) continue;
            if (use_float_screen && !negdisc_float_screen(a, b, c, d)) continue;
            BinaryCubicForm f{a, b, c, d};
            if (!negdisc_reduced(f) || is_reducible(f)) continue;
            out.push_back(lex_less(f, -f) ? f : -f);
        }
    }
}

std::vector<OrbitRecord> finalize(Sink reps) {
    std::sort(reps.begin(), reps.end(),
              [](const BinaryCubicForm& x, const BinaryCubicForm& y) { return lex_key(x) < lex_key(y); });
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    std::vector<OrbitRecord> out;
    out.reserve(reps.size());
    for (const auto& r : reps) {
        OrbitRecord rec;
        rec.rep = r;
        rec.disc = discriminant(r);
        rec.stab = rec.disc < 0 ? 1 : stabilizer_order(r);
        rec.membership = membership_mask(r);
        out.push_back(rec);
    }
    std::sort(out.begin(), out.end(), record_less);
    return out;
}

struct Task {
    int kind; // 0 reducible (param b), 1 posdef (a, b), 2 negdisc (a, b)
    long long a, b;
};

std::vector<Task> make_tasks(long long hi) {
    std::vector<Task> tasks;
    for (long long b = 1; b <= reducible_bmax(hi); ++b) tasks.push_back({0, 0, b});
    auto pb = posdef_bounds(hi);
    for (long long a = 1; a <= pb.amax; ++a)
        for (long long b = -pb.bmax; b <= pb.bmax; ++b) tasks.push_back({1, a, b});
    auto nb = negdisc_bounds(hi);
    double x = static_cast<double>(hi);
    for (long long a = 1; a <= nb.amax; ++a) {
        long long bmax = nb.bmax(a, x);
        for (long long b = -bmax; b <= bmax; ++b) tasks.push_back({2, a, b});
    }
    return tasks;
}

void run_task(const Task& t, long long lo, long long hi, const NegdiscBounds& nb,
              const PosdefBounds& pb, Sink& out, bool float_screen) {
    switch (t.kind) {
        case 0: scan_reducible_b(t.b, lo, hi, out); break;
        case 1: scan_posdef_ab(t.a, t.b, pb.hess_amax, lo, hi, out); break;
        case 2: scan_negdisc_ab(t.a, t.b, nb, lo, hi, out, float_screen); break;
    }
}

} // namespace

std::vector<OrbitRecord> enumerate_orbits_range(long long lo, long long hi,
                                                const EnumOptions& opts) {
    if (hi < 1 || lo < 0 || lo > hi) throw std::domain_error("bad enumeration range");
    auto tasks = make_tasks(hi);
    auto nb = negdisc_bounds(hi);
    auto pb = posdef_bounds(hi);

#ifdef _OPENMP
    int nt = opts.threads > 0 ? opts.threads : omp_get_max_threads();
    std::vector<Sink> buckets(nt);
#pragma omp parallel for schedule(dynamic, 4) num_threads(nt)
    for (size_t i = 0; i < tasks.size(); ++i)
        run_task(tasks[i], lo, hi, nb, pb, buckets[omp_get_thread_num()], true);
    Sink all;
    for (auto& bk : buckets) {
        all.insert(all.end(), bk.begin(), bk.end());
        bk.clear();
    }
#else
    (void)opts;
    Sink all;
    for (const auto& t : tasks) run_task(t, lo, hi, nb, pb, all, true);
#endif
    return finalize(std::move(all));
}

std::vector<OrbitRecord> enumerate_orbits(long long cutoff, const EnumOptions& opts) {
    return enumerate_orbits_range(0, cutoff, opts);
}

std::vector<OrbitRecord> enumerate_orbits_reference_range(long long lo, long long hi) {
    // Same proven boxes, single loop nest, exact tests only, reduce() on
    // every surviving candidate.
    Sink all;
    for (long long b = 1; b <= reducible_bmax(hi); ++b) scan_reducible_b(b, lo, hi, all);
    auto pb = posdef_bounds(hi);
    for (long long a = 1; a <= pb.amax; ++a)
        for (long long b = -pb.bmax; b <= pb.bmax; ++b)
            scan_posdef_ab(a, b, pb.hess_amax, lo, hi, all);
    auto nb = negdisc_bounds(hi);
    for (long long a = 1; a <= nb.amax; ++a) {
        long long bmax = nb.bmax(a, static_cast<double>(hi));
        for (long long b = -bmax; b <= bmax; ++b)
            scan_negdisc_ab(a, b, nb, lo, hi, all, false);
    }
    return finalize(std::move(all));
}

std::vector<OrbitRecord> enumerate_orbits_reference(long long cutoff) {
    return enumerate_orbits_reference_range(0, cutoff);
}

// ---- brute-force oracle ---------------------------------------------------

namespace {

// Forms with |coeff| <= B are enumerated by solving the discriminant bound
// for d over each (a, b, c); closure runs inside a working box of width
// 2B + 16 and uses, besides S and T, whole lower-shear segments
// (1 0; r 1) as chords, so that a path never has to leave the working box
// through the huge intermediate forms a step-by-step walk would visit.
std::map<long long, long long> component_counts(long long cutoff, long long B,
                                                std::vector<BinaryCubicForm>* reps_out) {
    const long long W = 2 * B + 16;
    auto inside = [&](const BinaryCubicForm& x) {
        return std::abs(x.a) <= W && std::abs(x.b) <= W && std::abs(x.c) <= W &&
               std::abs(x.d) <= W;
    };
    auto pack = [&](const BinaryCubicForm& x) {
        uint64_t k = 0;
        for (long long t : {x.a, x.b, x.c, x.d}) k = (k << 16) | static_cast<uint64_t>(t + W);
        return k;
    };
    auto lower_shear = [](const BinaryCubicForm& x, long long r) {
        return BinaryCubicForm{x.a, 3 * r * x.a + x.b, 3 * r * r * x.a + 2 * r * x.b + x.c,
                               r * r * r * x.a + r * r * x.b + r * x.c + x.d};
    };

    std::unordered_set<uint64_t> visited;
    std::map<long long, long long> counts;
    std::deque<BinaryCubicForm> queue;

    auto explore = [&](const BinaryCubicForm& x0) {
        if (!visited.insert(pack(x0)).second) return;
        queue.clear();
        queue.push_back(x0);
        BinaryCubicForm best = x0;
        auto push = [&](const BinaryCubicForm& y) {
            if (inside(y) && visited.insert(pack(y)).second) queue.push_back(y);
        };
        while (!queue.empty()) {
            BinaryCubicForm x = queue.front();
            queue.pop_front();
            if (lex_less(x, best)) best = x;
            push(act(kGenS, x));
            push(act(kGenT, x));
            push(act(kGenTInv, x));
            // Complete shear window: the image coefficient linear in r caps
            // how far a shear can stay inside the working box.
            long long rmax = x.a != 0 ? (W + std::abs(x.b)) / (3 * std::abs(x.a))
                                      : (W + std::abs(x.c)) / (2 * std::abs(x.b));
            for (long long r = -rmax - 1; r <= rmax + 1; ++r) {
                if (r == 0) continue;
                push(lower_shear(x, r));
            }
        }
        counts[discriminant(best)]++;
        if (reps_out) reps_out->push_back(best);
    };

    auto consider = [&](long long a, long long b, long long c, long long d) {
        if (std::abs(d) > B) return;
        __int128 p = disc128(a, b, c, d);
        if (p != 0 && in_range(p, 0, cutoff)) explore({a, b, c, d});
    };

    for (long long a = -B; a <= B; ++a)
        for (long long b = -B; b <= B; ++b)
            for (long long c = -B; c <= B; ++c) {
                if (a != 0) {
                    // disc is a downward parabola in d; scan the real window
                    // where |disc| can be small, with generous slack.
                    double A2 = -27.0 * double(a) * a;
                    double A1 = 18.0 * double(a) * b * c - 4.0 * double(b) * b * b;
                    double A0 = double(b) * b * c * c - 4.0 * double(a) * c * c * c;
                    double vertex = -A1 / (2.0 * A2);
                    double span = std::sqrt(std::max(
                                      0.0, (double(cutoff) + std::abs(A0) +
                                            std::abs(A1) * std::abs(vertex)) /
                                               27.0)) /
                                      std::abs(double(a)) +
                                  2.0;
                    long long lo = std::max(-B, static_cast<long long>(vertex - span) - 2);
                    long long hi = std::min(B, static_cast<long long>(vertex + span) + 2);
                    for (long long d = lo; d <= hi; ++d) consider(a, b, c, d);
                } else if (b != 0) {
                    // disc = b^2 c^2 - 4 b^3 d is linear in d.
                    long long num_lo = b * b * c * c - cutoff, num_hi = b * b * c * c + cutoff;
                    long long den = 4 * b * b * b;
                    long long lo =
                        std::max(-B, std::min(floor_div(num_lo, den), floor_div(num_hi, den)) - 1);
                    long long hi =
                        std::min(B, std::max(floor_div(num_lo, den), floor_div(num_hi, den)) + 1);
                    for (long long d = lo; d <= hi; ++d) consider(a, b, c, d);
                }
            }
    return counts;
}

} // namespace

BruteForceResult brute_force_orbits(long long cutoff, long long box_half_width) {
    if (box_half_width < 6) throw std::domain_error("box half-width must be at least 6");
    auto prev = component_counts(cutoff, box_half_width - 5, nullptr);
    std::vector<BinaryCubicForm> reps;
    auto cur = component_counts(cutoff, box_half_width, &reps);
    BruteForceResult res;
    res.box_half_width = box_half_width;
    res.stabilized = (prev == cur);
    for (const auto& r : reps) {
        OrbitRecord rec;
        rec.rep = r;
        rec.disc = discriminant(r);
        rec.stab = stabilizer_order(r);
        rec.membership = membership_mask(r);
        res.records.push_back(rec);
    }
    std::sort(res.records.begin(), res.records.end(), record_less);
    return res;
}

// ---- congruence-subgroup decomposition ------------------------------------

std::vector<IntMat2> right_coset_representatives(const SubgroupSpec& sub) {
    long long index = sub.index_in_sl2z();
    std::vector<IntMat2> reps{kIdentity};
    std::deque<IntMat2> frontier{kIdentity};
    auto same_coset = [&](const IntMat2& g, const IntMat2& h) {
        // Gamma' g == Gamma' h  iff  g h^-1 in Gamma'.
        return sub.contains(g * h.inverse_unimodular());
    };
    while (!frontier.empty() && static_cast<long long>(reps.size()) < index) {
        IntMat2 g = frontier.front();
        frontier.pop_front();
        for (const IntMat2& s : {kGenS, kGenT, kGenTInv}) {
            IntMat2 h = g * s;
            bool fresh = true;
            for (const auto& r : reps) fresh = fresh && !same_coset(h, r);
            if (fresh) {
                reps.push_back(h);
                frontier.push_back(h);
            }
        }
    }
    if (static_cast<long long>(reps.size()) != index)
        throw std::logic_error("coset enumeration incomplete");
    return reps;
}

std::vector<std::pair<BinaryCubicForm, int>> decompose_orbit(const BinaryCubicForm& rep,
                                                             const SubgroupSpec& sub) {
    auto stab = stabilizer_elements(rep);
    auto cosets = right_coset_representatives(sub);
    int n = static_cast<int>(cosets.size());
    int stab_order = static_cast<int>(stab.size());

    // The right action of the stabilizer on Gamma' \ SL_2(Z); its orbits are
    // the double cosets, one per Gamma'-orbit inside the SL_2(Z)-orbit.
    std::vector<bool> used(n, false);
    std::vector<std::pair<BinaryCubicForm, int>> out;
    long long weight_total = 0;
    for (int k = 0; k < n; ++k) {
        if (used[k]) continue;
        // Cycle of k under every stabilizer generator.
        std::vector<int> cycle{k};
        used[k] = true;
        for (size_t idx = 0; idx < cycle.size(); ++idx) {
            for (const auto& w : stab) {
                IntMat2 gw = cosets[cycle[idx]] * w;
                int to = -1;
                for (int j = 0; j < n; ++j)
                    if (sub.contains(gw * cosets[j].inverse_unimodular())) { to = j; break; }
                if (to < 0) throw std::logic_error("coset action undefined");
                if (!used[to]) {
                    used[to] = true;
                    cycle.push_back(to);
                }
            }
        }
        int orbit_len = static_cast<int>(cycle.size());
        if (stab_order % orbit_len != 0)
            throw std::logic_error("double-coset orbit length must divide the stabilizer order");
        // |stab_sub(y)| = |stab(rep)| / orbit length; the weight contributed
        // to the counting identity is the orbit length itself.
        int sub_stab = stab_order / orbit_len;
        out.emplace_back(act(cosets[k], rep), sub_stab);
        weight_total += orbit_len;
    }
    if (weight_total != n) throw std::logic_error("decomposition weights do not sum to the index");
    return out;
}

} // namespace cubiczeta
