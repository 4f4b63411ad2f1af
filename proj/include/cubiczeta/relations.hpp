#pragma once

#include "cubiczeta/orbits.hpp"
#include "cubiczeta/series.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cubiczeta {

// Every displayed coefficient identity, one id each.
enum class RelationId {
    ON,          // dual pairing for the full lattice
    STY2,        // dual pairing for the second model
    STY3,        // dual pairing for the third model
    MAIN_THETA,  // theta^v = A theta
    MAIN_ETA,    // eta^v = A eta
    KSR1,        // disc = 4 (32) slice in terms of the lattice zetas
    KSR2,        // dual disc = -20 (32) slice
    KSR3,        // disc = 20 (32) slice
    KSR4,        // dual disc = -4 (32) slice
    MOD2_SET,    // level-2 class decompositions of the five models
    MOD2_SOLVED, // the sixteen level-2 partial zetas solved in lattice zetas
    REMARK38,    // residue-class expressions for xi_2..xi_5
    GCD_SUPPORT, // gcd of the coefficient support of the ten combined series
    PROP33_4,    // zeta against a finite-index subgroup scales by the index
    SUPPORT_INTEGRALITY, // theta, eta and their duals live on integer indices
};

const char* relation_name(RelationId id);
std::vector<RelationId> all_relations();
RelationId relation_from_name(const std::string& name);

// Default verification depth and the |disc| coverage the orbit stream needs
// to verify the relation to that depth.
long long default_cutoff(RelationId id);
long long required_raw_cutoff(RelationId id, long long cutoff);

// A congruence-restricted partial zeta function.
struct PartialZetaSpec {
    enum class Kind {
        DiscResidue,     // disc = l (mod N), full-level orbits
        DualDiscResidue, // disc/27 = l (mod N) on the dual model
        Mod2Class,       // coefficients in a fixed class mod 2, level-2 orbits
        BoxSubgroup,     // a congruence box with its invariance subgroup
    };
    Kind kind = Kind::DiscResidue;
    long long residue = 0, modulus = 1;
    int klass = 0; // bits (a,b,c,d) packed as a*8 + b*4 + c*2 + d
    CongruenceBox box;
    SubgroupSpec subgroup;

    static PartialZetaSpec disc_residue(long long l, long long n);
    static PartialZetaSpec dual_disc_residue(long long l, long long n);
    static PartialZetaSpec mod2_class(int a, int b, int c, int d);
    static PartialZetaSpec box_subgroup(CongruenceBox box, SubgroupSpec sub);
};

struct RelationReport {
    std::string relation;
    long long cutoff = 0;
    bool pass = false;
    std::optional<Discrepancy> first_discrepancy;
    double wall_time_ms = 0;
    std::string detail;

    std::string to_json(bool with_timing = true) const;
};

// All series derived from one complete orbit stream.
class SeriesWorkbench {
  public:
    SeriesWorkbench(std::vector<OrbitRecord> orbits, long long raw_cutoff);

    long long raw_cutoff() const { return raw_cutoff_; }
    const std::vector<OrbitRecord>& orbits() const { return orbits_; }

    const SeriesPair& xi(int i) const;      // 1..5
    const SeriesPair& xi_dual(int i) const; // 1..5

    SeriesPair theta() const;
    SeriesPair eta() const;
    SeriesPair theta_dual() const;
    SeriesPair eta_dual() const;

    SeriesPair partial_zeta(const PartialZetaSpec& spec, long long cutoff) const;

    // Zeta of the full lattice against a finite-index subgroup.
    SeriesPair subgroup_zeta(const SubgroupSpec& sub, long long cutoff) const;

  private:
    const SeriesPair& mod2_series(int cls, long long cutoff) const;

    std::vector<OrbitRecord> orbits_;
    long long raw_cutoff_;
    std::array<SeriesPair, 5> xi_, xiv_;
    mutable std::array<SeriesPair, 16> mod2_;
    mutable long long mod2_cutoff_ = -1;
};

RelationReport verify(RelationId id, const SeriesWorkbench& wb, long long cutoff);
RelationReport verify(RelationId id, const SeriesWorkbench& wb); // default cutoff

} // namespace cubiczeta
