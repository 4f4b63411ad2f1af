#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubiczeta/lattices.hpp"
#include "cubiczeta/orbits.hpp"
#include "helpers.hpp"

using namespace cubiczeta;
namespace czt = cubiczeta::testing;

TEST_CASE("membership on pinned forms") {
    CHECK_FALSE(member(BinaryCubicForm{1, 0, 0, 1}, LatticeId::L5));
    CHECK(member(BinaryCubicForm{2, 0, 0, 2}, LatticeId::L5));
    CHECK(member(BinaryCubicForm{2, 0, 0, 2}, LatticeId::L4));
    CHECK(member(BinaryCubicForm{1, 3, 3, 1}, LatticeId::L1v));
    CHECK_FALSE(member(BinaryCubicForm{1, 3, 3, 1}, LatticeId::L2v));
    CHECK(member(BinaryCubicForm{1, 0, 0, 1}, LatticeId::L1));
}

TEST_CASE("lattice indices via parity rank") {
    CHECK(lattice_index(LatticeId::L1) == 1);
    CHECK(lattice_index(LatticeId::L2) == 4);
    CHECK(lattice_index(LatticeId::L3) == 4);
    CHECK(lattice_index(LatticeId::L4) == 2);
    CHECK(lattice_index(LatticeId::L5) == 8);
    CHECK(lattice_index(LatticeId::L1v) == 1);
    CHECK(lattice_index(LatticeId::L2v) == 4);
    CHECK(lattice_index(LatticeId::L3v) == 4);
    CHECK(lattice_index(LatticeId::L4v) == 8);
    CHECK(lattice_index(LatticeId::L5v) == 2);

    // Independent count: the index equals 16 / #solutions among classes mod 2.
    for (LatticeId id : kAllLattices) {
        int solutions = 0;
        for (int v = 0; v < 16; ++v) {
            BinaryCubicForm x{v >> 3 & 1, v >> 2 & 1, v >> 1 & 1, v & 1};
            // Strip the mod-3 dual condition: only parity matters here.
            BinaryCubicForm scaled{x.a, 3 * x.b, 3 * x.c, x.d};
            solutions += member(is_dual(id) ? scaled : x, id) ? 1 : 0;
        }
        CHECK(lattice_index(id) == 16 / solutions);
    }
}

TEST_CASE("membership is invariant along orbits") {
    std::mt19937_64 rng(211);
    for (int i = 0; i < 200; ++i) {
        BinaryCubicForm x = czt::random_form(rng, 15);
        IntMat2 g = czt::random_sl2(rng);
        CHECK(membership_mask(x) == membership_mask(act(g, x)));
    }
}

TEST_CASE("membership respects the inclusion diagrams") {
    std::mt19937_64 rng(223);
    auto edges = lattice_inclusions();
    for (int i = 0; i < 3000; ++i) {
        BinaryCubicForm x = czt::random_form(rng, 20);
        for (auto [sub, sup] : edges)
            if (member(x, sub)) CHECK(member(x, sup));
    }
}

TEST_CASE("tables from the orbit stream") {
    auto orbits = enumerate_orbits(432);
    auto tables = build_tables(orbits, 432);

    const ClassNumberTable& t1 = tables[0];
    CHECK(t1.row(1) == std::pair<Rat, Rat>{Rat(1, 3), Rat(0)});
    for (const auto& [n, hv] : t1.rows) {
        // Discriminants are 0 or 1 mod 4, so each sign sees two classes.
        if (hv.first != 0) CHECK((n % 4 == 0 || n % 4 == 1));
        if (hv.second != 0) CHECK((n % 4 == 0 || n % 4 == 3));
        CHECK(rat_den(hv.second) == 1);
        CHECK((rat_den(hv.first) == 1 || rat_den(hv.first) == 3));
    }

    // Sub-lattice monotonicity along every inclusion edge.
    auto table_of = [&](LatticeId id) -> const ClassNumberTable& {
        return tables[static_cast<int>(id)];
    };
    for (auto [sub, sup] : lattice_inclusions()) {
        const auto& ts = table_of(sub);
        const auto& tl = table_of(sup);
        long long bound = std::min(ts.cutoff, tl.cutoff);
        for (const auto& [n, hv] : ts.rows) {
            if (n > bound) continue;
            auto big = tl.row(n);
            CHECK(hv.first <= big.first);
            CHECK(hv.second <= big.second);
        }
    }

    // Dual rows index |disc|/27.
    const ClassNumberTable& tv = tables[5];
    CHECK(tv.cutoff == 432 / 27);
    for (const auto& [n, hv] : tv.rows) {
        (void)hv;
        CHECK(n <= 16);
    }

    // Rebuilding from the same stream is bit-identical.
    auto again = build_tables(orbits, 432);
    for (int i = 0; i < kLatticeCount; ++i) CHECK(again[i].rows == tables[i].rows);

    CHECK_THROWS_AS(build_table(orbits, LatticeId::L1v, 100, 432), std::domain_error);
}

TEST_CASE("table csv shape") {
    auto orbits = enumerate_orbits(32);
    auto t = build_table(orbits, LatticeId::L1, 32, 32);
    std::string csv = table_to_csv(t);
    CHECK(csv.rfind("lattice,n,h_plus_num,h_plus_den,h_minus_num,h_minus_den\n", 0) == 0);
    CHECK(csv.find("L1,1,1,3,0,1") != std::string::npos);
}
