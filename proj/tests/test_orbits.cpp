#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubiczeta/lattices.hpp"
#include "cubiczeta/orbits.hpp"
#include "cubiczeta/reduce.hpp"
#include "helpers.hpp"

#include <map>
#include <set>

using namespace cubiczeta;
namespace czt = cubiczeta::testing;

namespace {

using Key = std::tuple<long long, int, uint16_t>;

std::multiset<Key> key_multiset(const std::vector<OrbitRecord>& recs) {
    std::multiset<Key> out;
    for (const auto& r : recs) out.insert({r.disc, r.stab, r.membership});
    return out;
}

} // namespace

TEST_CASE("tiny cutoffs") {
    auto one = enumerate_orbits(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].disc == 1);
    CHECK(one[0].stab == 3);
    CHECK(one[0].rep == reduce(BinaryCubicForm{0, 1, 1, 0}));

    auto two = enumerate_orbits(2);
    CHECK(two.size() == 1); // no orbit with |disc| = 2
}

TEST_CASE("oracle box scan at cutoff 1") {
    auto res = brute_force_orbits(1, 8);
    if (!res.stabilized) res = brute_force_orbits(1, 13);
    CHECK(res.stabilized);
    REQUIRE(res.records.size() == 1);
    CHECK(res.records[0].disc == 1);
    CHECK(reduce(res.records[0].rep) == reduce(BinaryCubicForm{0, 1, 1, 0}));
}

TEST_CASE("oracle sees the cube-sum orbit at cutoff 27") {
    BruteForceResult res;
    for (long long box = 12; box <= 32; box += 5) {
        res = brute_force_orbits(27, box);
        if (res.stabilized) break;
    }
    CHECK(res.stabilized);
    bool found = false;
    BinaryCubicForm cube_sum = reduce(BinaryCubicForm{1, 0, 0, 1});
    for (const auto& r : res.records)
        if (r.disc == -27 && reduce(r.rep) == cube_sum) {
            found = true;
            CHECK(r.stab == 1);
        }
    CHECK(found);
}

TEST_CASE("oracle and production enumeration agree to cutoff 120") {
    BruteForceResult oracle;
    for (long long box = 16; box <= 36; box += 5) {
        oracle = brute_force_orbits(120, box);
        if (oracle.stabilized) break;
    }
    CHECK(oracle.stabilized);
    auto fast = enumerate_orbits(120);
    CHECK(key_multiset(oracle.records) == key_multiset(fast));
}

TEST_CASE("discriminants are 0 or 1 mod 4 and stabilizers trivial below zero") {
    auto recs = enumerate_orbits(400);
    for (const auto& r : recs) {
        CHECK(mod_reduce(r.disc, 4) != 2);
        CHECK(mod_reduce(r.disc, 4) != 3);
        if (r.disc < 0) CHECK(r.stab == 1);
        CHECK((r.membership & 1) == 1);
        CHECK(r.rep == reduce(r.rep));
        CHECK(discriminant(r.rep) == r.disc);
    }
    // Stream order is by (|disc|, sign, representative).
    for (size_t i = 1; i < recs.size(); ++i) CHECK(record_less(recs[i - 1], recs[i]));
}

TEST_CASE("random forms always reduce onto an enumerated representative") {
    // Completeness probe independent of the scan bounds: whatever random
    // orbit we hit, its canonical representative must be in the stream.
    const long long cutoff = 5000;
    auto recs = enumerate_orbits(cutoff);
    std::set<std::array<long long, 4>> reps;
    for (const auto& r : recs) reps.insert({r.rep.a, r.rep.b, r.rep.c, r.rep.d});

    std::mt19937_64 rng(613);
    int hits = 0, trials = 0;
    while (hits < 400 && trials < 2000000) {
        ++trials;
        BinaryCubicForm x = czt::random_form(rng, 35);
        long long p = discriminant(x);
        if (p == 0 || std::abs(p) > cutoff) continue;
        ++hits;
        BinaryCubicForm r = reduce(x);
        CHECK(reps.count({r.a, r.b, r.c, r.d}) == 1);
    }
    CHECK(hits == 400);
}

TEST_CASE("parallel kernel matches the serial reference") {
    auto fast = enumerate_orbits(600);
    auto ref = enumerate_orbits_reference(600);
    REQUIRE(fast.size() == ref.size());
    for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == ref[i]);
}

TEST_CASE("range enumeration splits cleanly") {
    auto whole = enumerate_orbits(300);
    auto low = enumerate_orbits_range(0, 150);
    auto high = enumerate_orbits_range(150, 300);
    std::vector<OrbitRecord> glued = low;
    glued.insert(glued.end(), high.begin(), high.end());
    std::sort(glued.begin(), glued.end(), record_less);
    REQUIRE(glued.size() == whole.size());
    for (size_t i = 0; i < whole.size(); ++i) CHECK(glued[i] == whole[i]);
}

TEST_CASE("coset representatives") {
    for (auto sub : {SubgroupSpec::gamma(2), SubgroupSpec::gamma0(2),
                     SubgroupSpec::gamma_upper0(2), SubgroupSpec::gamma(1)}) {
        auto reps = right_coset_representatives(sub);
        CHECK(static_cast<long long>(reps.size()) == sub.index_in_sl2z());
        for (size_t i = 0; i < reps.size(); ++i)
            for (size_t j = i + 1; j < reps.size(); ++j)
                CHECK_FALSE(sub.contains(reps[i] * reps[j].inverse_unimodular()));
    }
    CHECK_THROWS_AS(right_coset_representatives(SubgroupSpec::gamma(3)), std::domain_error);
}

TEST_CASE("orbit decomposition weights") {
    BinaryCubicForm split = reduce(BinaryCubicForm{0, 1, 1, 0}); // stabilizer 3
    BinaryCubicForm plain = reduce(BinaryCubicForm{0, 1, 0, -1}); // stabilizer 1

    auto full = decompose_orbit(split, SubgroupSpec::gamma(1));
    REQUIRE(full.size() == 1);
    CHECK(full[0].first == split);
    CHECK(full[0].second == 3);

    auto six = decompose_orbit(plain, SubgroupSpec::gamma(2));
    CHECK(six.size() == 6);
    for (const auto& [y, st] : six) {
        CHECK(st == 1);
        CHECK(discriminant(y) == discriminant(plain));
    }

    // Weighted counts always sum to the index.
    std::mt19937_64 rng(301);
    for (int i = 0; i < 40; ++i) {
        BinaryCubicForm x = reduce(czt::random_nonsingular_form(rng, 6));
        for (auto sub : {SubgroupSpec::gamma(2), SubgroupSpec::gamma0(2),
                         SubgroupSpec::gamma_upper0(2)}) {
            long long total = 0;
            int stab = stabilizer_order(x);
            for (const auto& [y, st] : decompose_orbit(x, sub)) {
                (void)y;
                total += stab / st;
            }
            CHECK(total == sub.index_in_sl2z());
        }
    }

    // A stabilizer-3 orbit splits over the principal level-2 subgroup into
    // pieces whose weights sum to six.
    long long total = 0;
    for (const auto& [y, st] : decompose_orbit(split, SubgroupSpec::gamma(2))) {
        (void)y;
        total += 3 / st;
    }
    CHECK(total == 6);
}

TEST_CASE("decomposition entries stay in the ambient orbit and are distinct") {
    BinaryCubicForm x = reduce(BinaryCubicForm{1, 0, -1, -1});
    auto parts = decompose_orbit(x, SubgroupSpec::gamma(2));
    std::set<std::array<long long, 4>> seen;
    for (const auto& [y, st] : parts) {
        (void)st;
        CHECK(reduce(y) == x);
        CHECK(seen.insert({y.a, y.b, y.c, y.d}).second);
    }
}
