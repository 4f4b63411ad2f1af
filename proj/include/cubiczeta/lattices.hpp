#pragma once

#include "cubiczeta/forms.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cubiczeta {

// The ten integral models: the standard lattice with its four index-2^k
// refinements, and their contragredient duals (b, c divisible by 3).
enum class LatticeId : int { L1, L2, L3, L4, L5, L1v, L2v, L3v, L4v, L5v };

inline constexpr int kLatticeCount = 10;
extern const std::array<LatticeId, kLatticeCount> kAllLattices;

const char* lattice_name(LatticeId id);
LatticeId lattice_from_name(const std::string& name);
bool is_dual(LatticeId id);

bool member(const BinaryCubicForm& x, LatticeId id);

// Bit i set iff x lies in kAllLattices[i]; bit 0 (the full lattice) is
// always set for integral forms.
uint16_t membership_mask(const BinaryCubicForm& x);

// Index of the model in the full lattice (duals measured inside the dual of
// the full lattice): 2^rank of the defining parity conditions over F_2.
long long lattice_index(LatticeId id);

// Direct inclusions of the two Hasse diagrams, as (sub, super) pairs.
std::vector<std::pair<LatticeId, LatticeId>> lattice_inclusions();

struct OrbitRecord; // orbits.hpp

// Weighted class numbers: row n holds (h+(n), h-(n)), sums of 1/|stab| over
// orbits with disc = +n / -n (primal) or +27n / -27n (dual). Absent row
// means zero; denominators divide 3.
struct ClassNumberTable {
    LatticeId lattice = LatticeId::L1;
    long long cutoff = 0; // rows trusted for n <= cutoff
    std::map<long long, std::pair<Rat, Rat>> rows;

    std::pair<Rat, Rat> row(long long n) const;
};

// raw_cutoff is the bound on |disc| the orbit stream is complete to.
// Primal tables get cutoff raw_cutoff, dual tables raw_cutoff/27.
std::array<ClassNumberTable, kLatticeCount> build_tables(
    const std::vector<OrbitRecord>& orbits, long long raw_cutoff);

ClassNumberTable build_table(const std::vector<OrbitRecord>& orbits, LatticeId id,
                             long long table_cutoff, long long raw_cutoff);

std::string table_to_csv(const ClassNumberTable& t);

} // namespace cubiczeta
