#pragma once

#include "cubiczeta/forms.hpp"

#include <cstdint>
#include <vector>

namespace cubiczeta {

struct OrbitRecord {
    BinaryCubicForm rep; // canonical representative (reduce() fixed point)
    long long disc = 0;
    int stab = 1;              // 1 or 3; always 1 for disc < 0
    uint16_t membership = 0;   // bit i: rep lies in kAllLattices[i]

    bool operator==(const OrbitRecord&) const = default;
};

// Deterministic stream order: (|disc|, sign with positive first, rep).
bool record_less(const OrbitRecord& a, const OrbitRecord& b);

struct EnumOptions {
    int threads = 0; // 0: OpenMP default
};

// One record per SL_2(Z)-orbit of integral forms with 0 < |disc| <= cutoff.
// OpenMP-parallel kernel; output independent of thread count.
std::vector<OrbitRecord> enumerate_orbits(long long cutoff, const EnumOptions& opts = {});

// Orbits with lo < |disc| <= hi (cache extension).
std::vector<OrbitRecord> enumerate_orbits_range(long long lo, long long hi,
                                                const EnumOptions& opts = {});

// Serial reference kernel: same proven coefficient bounds, no parallelism,
// no floating-point prefilter; every candidate goes through reduce().
std::vector<OrbitRecord> enumerate_orbits_reference(long long cutoff);
std::vector<OrbitRecord> enumerate_orbits_reference_range(long long lo, long long hi);

// Independent oracle: scans the coefficient box |a|,|b|,|c|,|d| <= B, groups
// forms with 0 < |disc| <= cutoff by closure under S, T, T^-1 within the
// box, and emits one record per component (lex-least member as the
// representative). stabilized reports whether per-discriminant component
// counts are unchanged between box widths B-5 and B.
struct BruteForceResult {
    std::vector<OrbitRecord> records;
    long long box_half_width = 0;
    bool stabilized = false;
};
BruteForceResult brute_force_orbits(long long cutoff, long long box_half_width);

// Representatives of the right cosets Gamma' \ SL_2(Z); levels 1 and 2.
std::vector<IntMat2> right_coset_representatives(const SubgroupSpec& sub);

// The Gamma'-orbits inside the SL_2(Z)-orbit of rep, each with its
// stabilizer order. The weights satisfy
//   sum_y |stab(rep)| / |stab_{Gamma'}(y)| = [SL_2(Z) : Gamma'].
std::vector<std::pair<BinaryCubicForm, int>> decompose_orbit(const BinaryCubicForm& rep,
                                                             const SubgroupSpec& sub);

} // namespace cubiczeta
