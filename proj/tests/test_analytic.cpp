#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubiczeta/analytic.hpp"
#include "cubiczeta/relations.hpp"

#include <cmath>
#include <random>

using namespace cubiczeta;

TEST_CASE("gamma spot values and functional equation") {
    CHECK(std::abs(gamma_complex(Complex(1, 0)) - Complex(1, 0)) < 1e-13);
    CHECK(std::abs(gamma_complex(Complex(0.5, 0)) - Complex(std::sqrt(M_PI), 0)) < 1e-12);
    CHECK(std::abs(gamma_complex(Complex(5, 0)) - Complex(24, 0)) < 1e-10);

    std::mt19937_64 rng(991);
    std::uniform_real_distribution<double> re(0.05, 2.0), im(-10.0, 10.0);
    for (int i = 0; i < 50; ++i) {
        Complex s(re(rng), im(rng));
        Complex lhs = gamma_complex(s + Complex(1, 0));
        Complex rhs = s * gamma_complex(s);
        CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-11);
    }
}

TEST_CASE("zeta spot values") {
    CHECK(std::abs(zeta_real(2.0) - M_PI * M_PI / 6.0) < 1e-12);
    CHECK(std::abs(zeta_real(0.0) + 0.5) < 1e-12);
    CHECK(std::abs(zeta_real(3.0) - 1.2020569031595942854) < 1e-12);
    CHECK(zeta_real(1.0 / 3.0) < 0);
    CHECK(zeta_real(2.0 / 3.0) < 0);
    CHECK_THROWS_AS(zeta_real(1.0), std::domain_error);
}

TEST_CASE("archimedean factors evaluate finitely") {
    Complex s(0.3, 0.7);
    CHECK(std::isfinite(std::abs(delta_factor(+1, s))));
    CHECK(std::isfinite(std::abs(delta_factor(-1, s))));
    auto m = m_matrix(s);
    for (auto& row : m)
        for (auto& e : row) CHECK(std::isfinite(std::abs(e)));
    // The lower-left entry carries the factor 3 against the upper-right one.
    CHECK(std::abs(m[1][0] - 3.0 * m[0][1]) < 1e-12 * std::abs(m[1][0]));
}

TEST_CASE("symmetrization of the functional equation") {
    double r = check_symmetrization(100, 20240601);
    CHECK(r <= 1e-9);
    // The identity is its own reflection: s and 1-s give residuals of the
    // same (tiny) size.
    for (Complex s0 : {Complex(0.31, 1.7), Complex(0.62, -3.1), Complex(0.44, 0.2)}) {
        double a = symmetrization_residual_at(s0);
        double b = symmetrization_residual_at(1.0 - s0);
        CHECK(a <= 1e-10);
        CHECK(b <= 1e-10);
    }
    // Replacing the pairing matrix by the identity destroys the identity.
    double control = check_symmetrization(100, 20240601, true);
    CHECK(control > 1e-3);
    // The residual tracks the precision of the gamma evaluation.
    double sloppy = check_symmetrization(100, 20240601, false, true);
    CHECK(sloppy > 100 * std::max(r, 1e-15));
}

TEST_CASE("gamma-zeta identity") {
    CHECK(check_gamma_zeta_identity() <= 1e-10);
    CHECK(check_gamma_zeta_identity(true) > 1e-2);
}

TEST_CASE("residue table signs are exact") {
    auto table = residue_table();
    REQUIRE(table.size() == 10);
    for (const auto& e : table) {
        bool minus = e.series.back() == '-';
        if (minus) {
            CHECK(e.residue56_coeff == 0);
            CHECK(e.residue_at_5_6() == 0.0);
        } else {
            CHECK(e.residue1_coeff.sign() == 1);
            // zeta(1/3) < 0 makes every plus-series residue at 5/6 negative.
            CHECK(e.residue_at_5_6() < 0);
        }
    }
    // 2 sqrt3 - 3 > 0 and 7 sqrt3 - 9 > 0, but 5 sqrt3 - 9 < 0.
    auto sign_of_entry = [&](const std::string& name) {
        for (const auto& e : table)
            if (e.series == name) return e.residue1_coeff.sign();
        return -2;
    };
    CHECK(sign_of_entry("xi1-") == 1);
    CHECK(sign_of_entry("xi2-") == 1);
    CHECK(sign_of_entry("xi3-") == 1);
    CHECK(sign_of_entry("theta-") == 1);
    CHECK(sign_of_entry("eta-") == -1);
    CHECK(a_exponent(1) == 0);
    CHECK(a_exponent(2) == 2);
    CHECK(a_exponent(3) == 2);
}

TEST_CASE("partial sums track the residues (smoke scale)") {
    SeriesWorkbench wb(enumerate_orbits(2000), 2000);
    auto table = residue_table();
    double dev_plus = tauberian_deviation(combine_pm(wb.xi(1), +1), table[0].residue_at_1(),
                                          table[0].residue_at_5_6(), 2000);
    double dev_minus = tauberian_deviation(combine_pm(wb.xi(1), -1), table[5].residue_at_1(),
                                           table[5].residue_at_5_6(), 2000);
    CHECK(dev_plus < 0.5);
    CHECK(dev_minus < 0.5);
    DirichletSeries zero;
    zero.cutoff = Rat(2000);
    CHECK(tauberian_deviation(zero, 0.0, 0.0, 2000) == 0.0);
    CHECK_THROWS_AS(tauberian_deviation(zero, 1.0, 0.0, 5000), std::domain_error);
}
