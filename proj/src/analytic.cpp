#include "cubiczeta/analytic.hpp"

#include <cmath>
#include <random>

namespace cubiczeta {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

Complex gamma_lanczos(Complex s, int terms) {
    static const double coeff[9] = {0.99999999999980993,
                                    676.5203681218851,
                                    -1259.1392167224028,
                                    771.32342877765313,
                                    -176.61502916214059,
                                    12.507343278686905,
                                    -0.13857109526572012,
                                    9.9843695780195716e-6,
                                    1.5056327351493116e-7};
    if (s.real() < 0.5) {
        // Reflection through sin.
        return kPi / (std::sin(kPi * s) * gamma_lanczos(1.0 - s, terms));
    }
    s -= 1.0;
    Complex x = coeff[0];
    for (int i = 1; i < terms; ++i) x += coeff[i] / (s + Complex(i, 0));
    Complex t = s + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, s + 0.5) * std::exp(-t) * x;
}

} // namespace

Complex gamma_complex(Complex s) { return gamma_lanczos(s, 9); }
Complex gamma_complex_lowprec(Complex s) { return gamma_lanczos(s, 5); }

double zeta_real(double s) {
    if (s == 1.0) throw std::domain_error("zeta has a pole at 1");
    // Alternating series with Chebyshev-weighted acceleration.
    const int n = 50;
    std::vector<double> d(n + 1);
    double acc = 1.0; // (n+i-1)! 4^i / ((n-i)! (2i)!)
    d[0] = acc;
    for (int i = 1; i <= n; ++i) {
        acc *= 4.0 * (n + i - 1) * (n - i + 1) / (2.0 * i * (2.0 * i - 1));
        d[i] = d[i - 1] + acc;
    }
    for (int i = 0; i <= n; ++i) d[i] *= n;
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        double term = (d[k] - d[n]) / std::pow(k + 1.0, s);
        sum += (k % 2 == 0) ? term : -term;
    }
    return -sum / (d[n] * (1.0 - std::pow(2.0, 1.0 - s)));
}

Complex delta_factor(int sign, Complex s) {
    if (sign != 1 && sign != -1) throw std::domain_error("sign must be +-1");
    double base = 16.0 * 27.0 / std::pow(kPi, 4.0);
    Complex pre = std::exp(0.5 * s * std::log(base));
    Complex g = gamma_complex(s / 2.0) * gamma_complex(s / 2.0 + 0.5);
    if (sign > 0)
        g *= gamma_complex(s / 2.0 - 1.0 / 12.0) * gamma_complex(s / 2.0 + 1.0 / 12.0);
    else
        g *= gamma_complex(s / 2.0 + 5.0 / 12.0) * gamma_complex(s / 2.0 + 7.0 / 12.0);
    return pre * g;
}

std::array<std::array<Complex, 2>, 2> m_matrix(Complex s) {
    Complex pre = std::exp((3.0 * s - 2.0) * std::log(3.0)) /
                  (2.0 * std::exp(4.0 * s * std::log(kPi)));
    Complex g = gamma_complex(s) * gamma_complex(s) * gamma_complex(s - 1.0 / 6.0) *
                gamma_complex(s + 1.0 / 6.0);
    Complex s2 = std::sin(2.0 * kPi * s), s1 = std::sin(kPi * s);
    Complex f = pre * g;
    return {{{f * s2, f * s1}, {3.0 * f * s1, f * s2}}};
}

namespace {

double sym_residual(Complex s, bool mutate_pairing, bool lowprec) {
    auto gamma = lowprec ? gamma_complex_lowprec : gamma_complex;
    auto delta = [&](int sign, Complex s) {
        double base = 16.0 * 27.0 / std::pow(kPi, 4.0);
        Complex pre = std::exp(0.5 * s * std::log(base));
        Complex g = gamma(s / 2.0) * gamma(s / 2.0 + 0.5);
        if (sign > 0)
            g *= gamma(s / 2.0 - 1.0 / 12.0) * gamma(s / 2.0 + 1.0 / 12.0);
        else
            g *= gamma(s / 2.0 + 5.0 / 12.0) * gamma(s / 2.0 + 7.0 / 12.0);
        return pre * g;
    };
    auto mmat = [&](Complex s) {
        Complex pre = std::exp((3.0 * s - 2.0) * std::log(3.0)) /
                      (2.0 * std::exp(4.0 * s * std::log(kPi)));
        Complex g = gamma(s) * gamma(s) * gamma(s - 1.0 / 6.0) * gamma(s + 1.0 / 6.0);
        Complex s2 = std::sin(2.0 * kPi * s), s1 = std::sin(kPi * s);
        Complex f = pre * g;
        return std::array<std::array<Complex, 2>, 2>{
            {{f * s2, f * s1}, {3.0 * f * s1, f * s2}}};
    };

    const double sqrt3 = std::sqrt(3.0);
    auto M = mmat(s);
    // lhs = Delta(1-s) T M(s) A, rhs = Delta(s) T.
    Complex dp1 = delta(+1, 1.0 - s), dm1 = delta(-1, 1.0 - s);
    Complex dp = delta(+1, s), dm = delta(-1, s);
    // T M(s):
    Complex tm[2][2] = {{sqrt3 * M[0][0] + M[1][0], sqrt3 * M[0][1] + M[1][1]},
                        {sqrt3 * M[0][0] - M[1][0], sqrt3 * M[0][1] - M[1][1]}};
    // (T M) A with A = (0 1; 3 0), or A = I for the control:
    Complex tma[2][2];
    if (mutate_pairing) {
        tma[0][0] = tm[0][0]; tma[0][1] = tm[0][1];
        tma[1][0] = tm[1][0]; tma[1][1] = tm[1][1];
    } else {
        tma[0][0] = 3.0 * tm[0][1]; tma[0][1] = tm[0][0];
        tma[1][0] = 3.0 * tm[1][1]; tma[1][1] = tm[1][0];
    }
    Complex lhs[2][2] = {{dp1 * tma[0][0], dp1 * tma[0][1]},
                         {dm1 * tma[1][0], dm1 * tma[1][1]}};
    Complex rhs[2][2] = {{dp * sqrt3, dp}, {dm * sqrt3, -dm}};
    double worst = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            worst = std::max(worst, std::abs(lhs[i][j] - rhs[i][j]) / std::abs(rhs[i][j]));
    return worst;
}

} // namespace

double symmetrization_residual_at(Complex s) { return sym_residual(s, false, false); }

double check_symmetrization(int samples, uint64_t seed, bool mutate_pairing, bool lowprec) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> re(0.1, 0.9), im(-5.0, 5.0);
    double worst = 0.0;
    int done = 0;
    while (done < samples) {
        Complex s(re(rng), im(rng));
        // Stay away from the poles of the gamma factors in the strip.
        if (std::abs(s - Complex(1.0 / 6.0, 0)) < 0.05 ||
            std::abs(s - Complex(5.0 / 6.0, 0)) < 0.05)
            continue;
        ++done;
        worst = std::max(worst, sym_residual(s, mutate_pairing, lowprec));
    }
    return worst;
}

double check_gamma_zeta_identity(bool mutate) {
    double g13 = gamma_complex(Complex(1.0 / 3.0, 0)).real();
    double g23 = gamma_complex(Complex(2.0 / 3.0, 0)).real();
    double z13 = zeta_real(1.0 / 3.0);
    double z23 = zeta_real(2.0 / 3.0);
    double lhs = std::cbrt(2.0 * kPi) * g13 * z23 / (3.0 * g23);
    double pow_g13 = mutate ? g13 * g13 : g13 * g13 * g13;
    double rhs = pow_g13 * z13 / (2.0 * kPi);
    return std::abs(lhs - rhs) / std::abs(rhs);
}

double ResidueEntry::residue_at_1() const {
    return residue1_coeff.to_double() * kPi * kPi;
}

double ResidueEntry::residue_at_5_6() const {
    if (residue56_coeff == 0) return 0.0;
    double g13 = gamma_complex(Complex(1.0 / 3.0, 0)).real();
    double z13 = zeta_real(1.0 / 3.0);
    return static_cast<double>(residue56_coeff) * std::pow(2.0, cbrt2_pow / 3.0) * g13 * g13 *
           g13 * z13 / kPi;
}

std::vector<ResidueEntry> residue_table() {
    // Residues at 1: (u + v sqrt3) pi^2 read off columnwise; at 5/6 the plus
    // series carry rational multiples of Gamma(1/3)^3 zeta(1/3) / pi (with a
    // cube root of 2 for the two combined series); the minus series are
    // regular there.
    std::vector<ResidueEntry> t;
    auto plus = [&](const std::string& nm, Rat u, Rat v, Rat r56, int cbrt, int pow2) {
        t.push_back({nm, QRoot3(u, v), r56, cbrt, pow2});
    };
    auto minus = [&](const std::string& nm, Rat u, Rat v, int pow2) {
        t.push_back({nm, QRoot3(u, v), Rat(0), 0, pow2});
    };
    plus("xi1+", Rat(3, 18), Rat(2, 18), Rat(1, 3), 0, 4);
    plus("xi2+", Rat(3, 72), Rat(2, 72), Rat(1, 12), 0, 8);
    plus("xi3+", Rat(3, 72), Rat(2, 72), Rat(1, 12), 0, 8);
    plus("theta+", Rat(9, 72), Rat(7, 72), Rat(1, 3), -1, 6);
    plus("eta+", Rat(9, 72), Rat(5, 72), Rat(1, 3), -1, 6);
    minus("xi1-", Rat(-3, 18), Rat(2, 18), 4);
    minus("xi2-", Rat(-3, 72), Rat(2, 72), 8);
    minus("xi3-", Rat(-3, 72), Rat(2, 72), 8);
    minus("theta-", Rat(-9, 72), Rat(7, 72), 6);
    minus("eta-", Rat(-9, 72), Rat(5, 72), 6);
    return t;
}

int a_exponent(int i) {
    if (i < 1 || i > 5) throw std::domain_error("lattice index out of range");
    return i == 1 ? 0 : 2;
}

double tauberian_deviation(const DirichletSeries& s, double r1, double r56, long long X) {
    if (Rat(X) > s.cutoff)
        throw std::domain_error("partial sum bound exceeds the reliable cutoff");
    if (r1 == 0.0) return 0.0;
    QRoot3 sum;
    for (const auto& [q, v] : s.coeff) {
        if (q > Rat(X)) break;
        sum += v;
    }
    double estimate = r1 * double(X) + 1.2 * r56 * std::pow(double(X), 5.0 / 6.0);
    return std::abs(sum.to_double() - estimate) / (r1 * double(X));
}

} // namespace cubiczeta
