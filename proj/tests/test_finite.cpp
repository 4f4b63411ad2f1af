#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubiczeta/finite_checks.hpp"
#include "cubiczeta/forms.hpp"
#include "helpers.hpp"

using namespace cubiczeta;
namespace czt = cubiczeta::testing;

TEST_CASE("classification of disc = 4 mod 16") {
    auto rep = check_lemma_mod16();
    CHECK(rep.pass);
    CHECK(rep.universe == 65536);
    CHECK(rep.witness.empty());

    // Spot cases: the all-ones form misses every condition, the shifted one
    // hits the third.
    CHECK(discriminant(BinaryCubicForm{1, 1, 1, 1}) == -16);
    CHECK(mod_reduce(discriminant(BinaryCubicForm{1, 1, 1, 1}), 16) != 4);
    CHECK(mod_reduce(1 + 1 + 1 + 1, 4) != 2); // condition (1) fails on the sum
    CHECK(discriminant(BinaryCubicForm{0, 2, 1, 0}) == 4);
}

TEST_CASE("partition of the two classes mod 32") {
    auto rep = check_partition_mod32();
    CHECK(rep.pass);
    CHECK(rep.universe == 1048576);
}

TEST_CASE("level-2 induction criterion") {
    auto rep = check_induction_criterion();
    CHECK(rep.pass);
    CHECK(rep.universe == 384 * (64 + 64 + 128));

    // Stability over the integers, not just residues: random subgroup
    // elements keep random box members inside the box.
    std::mt19937_64 rng(881);
    SubgroupSpec g0 = SubgroupSpec::gamma0(2);
    int done = 0;
    while (done < 100) {
        IntMat2 g = czt::random_sl2(rng, 10);
        if (!g0.contains(g)) continue;
        std::uniform_int_distribution<long long> any(-20, 20);
        BinaryCubicForm x{any(rng), 2 * any(rng) + 1, 4 * any(rng) + 2, 8 * any(rng)};
        REQUIRE(box_X1().contains(x));
        CHECK(box_X1().contains(act(g, x)));
        ++done;
    }
}

TEST_CASE("six orbits mod 2") {
    auto rep = check_L1_mod2_orbits();
    CHECK(rep.pass);
    CHECK(rep.universe == 96);
}

TEST_CASE("orbit-counting identity") {
    auto rep = check_counting_lemma(100, 12345);
    CHECK(rep.pass);
    CHECK(rep.universe == 100);
    // Determinism under a fixed seed.
    auto rep2 = check_counting_lemma(100, 12345);
    CHECK(rep2.pass == rep.pass);
    CHECK(rep2.witness == rep.witness);
}

TEST_CASE("mod-2 membership counts") {
    auto rep = check_mod2_membership_counts();
    CHECK(rep.pass);
}

TEST_CASE("runner covers every check") {
    for (const auto& name : all_finite_checks()) {
        auto rep = run_finite_check(name, 777);
        CHECK(rep.check == name);
        CHECK(rep.pass);
        std::string j = rep.to_json(false);
        CHECK(j.find("\"status\":\"pass\"") != std::string::npos);
    }
    CHECK_THROWS_AS(run_finite_check("nonsense"), std::domain_error);
}
