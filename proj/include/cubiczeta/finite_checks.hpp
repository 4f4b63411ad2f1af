#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cubiczeta {

struct FiniteCheckReport {
    std::string check;
    long long universe = 0; // number of states scanned
    bool pass = false;
    std::string witness; // first failure, empty on pass
    double wall_time_ms = 0;

    std::string to_json(bool with_timing = true) const;
};

// disc = 4 (mod 16) holds iff exactly one of five residue conditions does;
// full scan of (Z/16)^4, including pairwise disjointness of the conditions.
FiniteCheckReport check_lemma_mod16();

// The two disc classes mod 32 partition into the nine congruence boxes;
// full scan of (Z/32)^4, plus the rotation/shear images of the boxes and the
// dual restatement on the sublattice with b, c divisible by 3.
FiniteCheckReport check_partition_mod32();

// The level-2 induction criterion: {e, S, sigma} hit the three cosets of the
// lower-triangular subgroup mod 2, membership in each box is preserved by
// every matrix with even lower-left entry and destroyed by every matrix with
// odd lower-left entry, scanned over all of SL_2(Z/8).
FiniteCheckReport check_induction_criterion();

// The six orbits of SL_2(Z/2) on (Z/2)^4 and their exact member lists.
FiniteCheckReport check_L1_mod2_orbits();

// Randomized instances of the orbit-counting identity
//   sum_{y in H\Gx} |G_x| / |H_y| = [G : H]
// over SL_2(Z/2) and SL_2(Z/4) with random generated subgroups.
FiniteCheckReport check_counting_lemma(int trials, uint64_t seed = 12345);

// Which classes mod 2 lie in each of the five models, matched against the
// coefficients of the level-2 splitting identities.
FiniteCheckReport check_mod2_membership_counts();

std::vector<std::string> all_finite_checks();
FiniteCheckReport run_finite_check(const std::string& name, uint64_t seed = 12345);

} // namespace cubiczeta
