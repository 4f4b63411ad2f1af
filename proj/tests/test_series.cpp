#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubiczeta/orbits.hpp"
#include "cubiczeta/series.hpp"

using namespace cubiczeta;

namespace {

SeriesPair sample_pair() {
    SeriesPair s;
    s.first.cutoff = s.second.cutoff = Rat(64);
    s.first.set(Rat(1), QRoot3(Rat(1, 3)));
    s.first.set(Rat(4), QRoot3(Rat(2)));
    s.first.set(Rat(16), QRoot3(Rat(1), Rat(1)));
    s.second.set(Rat(3), QRoot3(Rat(5)));
    s.second.set(Rat(23), QRoot3(Rat(0), Rat(2)));
    return s;
}

} // namespace

TEST_CASE("index validity") {
    CHECK(valid_index(Rat(1)));
    CHECK(valid_index(Rat(5, 16)));
    CHECK_FALSE(valid_index(Rat(1, 3)));
    CHECK_FALSE(valid_index(Rat(0)));
    CHECK_FALSE(valid_index(Rat(-2)));
    DirichletSeries f;
    CHECK_THROWS_AS(f.set(Rat(1, 3), QRoot3(Rat(1))), std::domain_error);
}

TEST_CASE("tables to series") {
    auto orbits = enumerate_orbits(54);
    auto tables = build_tables(orbits, 54);
    SeriesPair xi1 = from_table(tables[0], false);
    CHECK(xi1.first.at(Rat(1)) == QRoot3(Rat(1, 3)));
    CHECK(xi1.first.cutoff == Rat(54));

    ClassNumberTable empty;
    empty.cutoff = 10;
    SeriesPair z = from_table(empty, false);
    CHECK(z.first.is_zero());
    CHECK(z.second.is_zero());

    // Dual tables land at n, not 27n.
    SeriesPair xi1v = from_table(tables[5], true);
    CHECK(xi1v.first.cutoff == Rat(2));
    for (const auto& [q, v] : xi1v.first.coeff) {
        (void)v;
        CHECK(q <= Rat(2));
    }
    CHECK_THROWS_AS(from_table(tables[5], false), std::domain_error);
}

TEST_CASE("linear combinations") {
    SeriesPair s = sample_pair();
    SeriesPair zero = linear_combine({{QRoot3(Rat(1)), s}, {QRoot3(Rat(-1)), s}});
    CHECK(zero.first.is_zero());
    CHECK(zero.second.is_zero());
    CHECK(zero.first.cutoff == s.first.cutoff);

    SeriesPair tripled = linear_combine({{QRoot3(Rat(3)), s}});
    CHECK(tripled.first.at(Rat(4)) == QRoot3(Rat(6)));

    DirichletSeries plus = combine_pm(s, +1);
    CHECK(plus.at(Rat(1)) == QRoot3(Rat(0), Rat(1, 3))); // sqrt3 * 1/3
    CHECK(plus.at(Rat(3)) == QRoot3(Rat(5)));
    DirichletSeries minus = combine_pm(s, -1);
    CHECK(minus.at(Rat(3)) == QRoot3(Rat(-5)));
}

TEST_CASE("twists move indices and cutoffs") {
    SeriesPair s = sample_pair();
    SeriesPair up = twist(s, 2, 2); // multiply by 2^{2s}
    CHECK(up.first.at(Rat(1)) == QRoot3(Rat(2)));
    CHECK(up.first.at(Rat(4)) == QRoot3(Rat(1), Rat(1)));
    CHECK(up.first.at(Rat(1, 4)) == QRoot3(Rat(1, 3)));
    CHECK(up.first.cutoff == Rat(16));

    SeriesPair back = twist(up, 2, -2);
    CHECK(back.first.coeff == s.first.coeff);
    CHECK(back.second.coeff == s.second.coeff);
    CHECK(back.first.cutoff == s.first.cutoff);

    // 2^{1-4s} S: the coefficient at q comes from q/16, scaled by 2.
    SeriesPair shifted = scale(QRoot3(Rat(2)), twist(s, 2, -4));
    CHECK(shifted.first.at(Rat(16)) == QRoot3(Rat(2, 3)));
    CHECK(shifted.first.at(Rat(64)) == QRoot3(Rat(4)));
    CHECK(shifted.first.cutoff == Rat(64 * 16));

    // Twisting is additive in the exponent and commutes with sums.
    SeriesPair t1 = twist(twist(s, 2, 3), 2, -1);
    SeriesPair t2 = twist(s, 2, 2);
    CHECK(t1.first.coeff == t2.first.coeff);
    CHECK(t1.first.cutoff == t2.first.cutoff);
    SeriesPair sum_then = twist(add(s, up), 2, 1);
    SeriesPair then_sum = add(twist(s, 2, 1), twist(up, 2, 1));
    CHECK(sum_then.first.coeff == then_sum.first.coeff);

    // Base-3 twists must divide the index lattice exactly.
    DirichletSeries f;
    f.cutoff = Rat(27);
    f.set(Rat(27), QRoot3(Rat(1)));
    DirichletSeries g = twist(f, 3, 3);
    CHECK(g.at(Rat(1)) == QRoot3(Rat(1)));
    DirichletSeries h;
    h.cutoff = Rat(4);
    h.set(Rat(4), QRoot3(Rat(1)));
    CHECK_THROWS_AS(twist(h, 3, 1), std::domain_error);
}

TEST_CASE("pairing matrix action") {
    SeriesPair s = sample_pair();
    SeriesPair a = apply_A(s);
    CHECK(a.first.coeff == s.second.coeff);
    CHECK(a.second.at(Rat(4)) == QRoot3(Rat(6)));
    SeriesPair aa = apply_A(a);
    SeriesPair three = scale(QRoot3(Rat(3)), s);
    CHECK(aa.first.coeff == three.first.coeff);
    CHECK(aa.second.coeff == three.second.coeff);
}

TEST_CASE("exact comparison with first discrepancy") {
    SeriesPair s = sample_pair();
    CHECK_FALSE(equal_up_to(s, s, Rat(64)).has_value());

    SeriesPair bumped = s;
    bumped.first.set(Rat(5), QRoot3(Rat(1)));
    auto d = equal_up_to(s, bumped, Rat(64));
    REQUIRE(d.has_value());
    CHECK(d->q == Rat(5));
    CHECK(d->component == 1);
    CHECK(d->lhs == QRoot3());
    CHECK(d->rhs == QRoot3(Rat(1)));

    // Comparison never reads beyond the trusted region.
    CHECK_THROWS_AS(equal_up_to(s, s, Rat(65)), std::domain_error);

    // The earliest discrepancy wins across components.
    SeriesPair early = s;
    early.second.set(Rat(3), QRoot3(Rat(4)));
    SeriesPair late = s;
    late.first.set(Rat(4), QRoot3(Rat(7)));
    auto d2 = equal_up_to(early, late, Rat(64));
    REQUIRE(d2.has_value());
    CHECK(d2->q == Rat(3));
    CHECK(d2->component == 2);
}

TEST_CASE("integer support detection") {
    SeriesPair s = sample_pair();
    CHECK(integrality_check(s));
    SeriesPair shifted = twist(s, 2, 2);
    CHECK_FALSE(integrality_check(shifted)); // coefficient lands at 1/4
}

TEST_CASE("csv dump shape") {
    SeriesPair s = sample_pair();
    std::string csv = series_to_csv(s.first);
    CHECK(csv.rfind("q_num,q_den,coeff_u_num,coeff_u_den,coeff_v_num,coeff_v_den\n", 0) == 0);
    CHECK(csv.find("1,1,1,3,0,1") != std::string::npos);
    CHECK(csv.find("16,1,1,1,1,1") != std::string::npos);
}
