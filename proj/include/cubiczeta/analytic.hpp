#pragma once

#include "cubiczeta/series.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace cubiczeta {

using Complex = std::complex<double>;

// Gamma function on C via a rational approximation with reflection for
// Re s < 1/2; relative error below 1e-12 on 0 <= Re s <= 2, |Im s| <= 10.
Complex gamma_complex(Complex s);

// Deliberately truncated variant (fewer terms), used to demonstrate that the
// symmetrization residual tracks the precision of the gamma evaluation.
Complex gamma_complex_lowprec(Complex s);

// Riemann zeta on the real line (s != 1), alternating-series acceleration;
// absolute error below 1e-12 on [1/4, 3/4] and for moderate s > 0.
double zeta_real(double s);

// The two archimedean factors of the self-dual functional equation.
Complex delta_factor(int sign, Complex s);

// The 2x2 gamma-sine matrix of the functional equation.
std::array<std::array<Complex, 2>, 2> m_matrix(Complex s);

// Max entrywise relative residual of Delta(1-s) T M(s) A = Delta(s) T over
// random samples in 0.1 <= Re s <= 0.9, |Im s| <= 5, away from poles.
// mutate_pairing replaces A by the identity (negative control).
double check_symmetrization(int samples, uint64_t seed = 12345, bool mutate_pairing = false,
                            bool lowprec = false);

// The same residual at a single point.
double symmetrization_residual_at(Complex s);

// Relative residual of  (2 pi)^{1/3} G(1/3) z(2/3) / (3 G(2/3))
//                     =  G(1/3)^3 z(1/3) / (2 pi).
// mutate drops one power of G(1/3) (negative control).
double check_gamma_zeta_identity(bool mutate = false);

// Residues and conductors of the ten combined series. The residue at 1 is
// (coefficient) * pi^2 with the coefficient exact in Q(sqrt 3); the residue
// at 5/6 is (rational) * 2^(cbrt2_pow/3) * Gamma(1/3)^3 zeta(1/3) / pi, zero
// for the minus series. Conductor 2^pow2 * 27, recorded as metadata.
struct ResidueEntry {
    std::string series;
    QRoot3 residue1_coeff;
    Rat residue56_coeff;
    int cbrt2_pow = 0;
    int conductor_pow2 = 4;

    double residue_at_1() const;
    double residue_at_5_6() const;
};

std::vector<ResidueEntry> residue_table();
int a_exponent(int i); // 0 for the full lattice, 2 otherwise

// Relative deviation of the partial sum of the series against
// r1 X + (6/5) r56 X^(5/6). Diagnostic only; 0 when r1 == 0.
double tauberian_deviation(const DirichletSeries& s, double r1, double r56, long long X);

} // namespace cubiczeta
