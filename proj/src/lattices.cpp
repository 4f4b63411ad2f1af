#include "cubiczeta/lattices.hpp"

#include "cubiczeta/orbits.hpp"

#include <sstream>

namespace cubiczeta {

const std::array<LatticeId, kLatticeCount> kAllLattices = {
    LatticeId::L1,  LatticeId::L2,  LatticeId::L3,  LatticeId::L4,  LatticeId::L5,
    LatticeId::L1v, LatticeId::L2v, LatticeId::L3v, LatticeId::L4v, LatticeId::L5v};

const char* lattice_name(LatticeId id) {
    switch (id) {
        case LatticeId::L1: return "L1";
        case LatticeId::L2: return "L2";
        case LatticeId::L3: return "L3";
        case LatticeId::L4: return "L4";
        case LatticeId::L5: return "L5";
        case LatticeId::L1v: return "L1v";
        case LatticeId::L2v: return "L2v";
        case LatticeId::L3v: return "L3v";
        case LatticeId::L4v: return "L4v";
        case LatticeId::L5v: return "L5v";
    }
    return "?";
}

LatticeId lattice_from_name(const std::string& name) {
    for (LatticeId id : kAllLattices)
        if (name == lattice_name(id)) return id;
    throw std::domain_error("unknown lattice: " + name);
}

bool is_dual(LatticeId id) { return static_cast<int>(id) >= 5; }

namespace {

bool even(long long t) { return mod_reduce(t, 2) == 0; }

bool member_primal(const BinaryCubicForm& x, LatticeId id) {
    switch (id) {
        case LatticeId::L1: return true;
        case LatticeId::L2: return even(x.a + x.b + x.d) && even(x.a + x.c + x.d);
        case LatticeId::L3: return even(x.a + x.b + x.c) && even(x.b + x.c + x.d);
        case LatticeId::L4: return even(x.b + x.c);
        case LatticeId::L5: return even(x.a) && even(x.d) && even(x.b + x.c);
        default: break;
    }
    throw std::domain_error("not a primal lattice");
}

} // namespace

bool member(const BinaryCubicForm& x, LatticeId id) {
    bool in_dual1 = mod_reduce(x.b, 3) == 0 && mod_reduce(x.c, 3) == 0;
    switch (id) {
        case LatticeId::L1:
        case LatticeId::L2:
        case LatticeId::L3:
        case LatticeId::L4:
        case LatticeId::L5: return member_primal(x, id);
        case LatticeId::L1v: return in_dual1;
        case LatticeId::L2v: return in_dual1 && member_primal(x, LatticeId::L3);
        case LatticeId::L3v: return in_dual1 && member_primal(x, LatticeId::L2);
        case LatticeId::L4v: return in_dual1 && member_primal(x, LatticeId::L5);
        case LatticeId::L5v: return in_dual1 && member_primal(x, LatticeId::L4);
    }
    return false;
}

uint16_t membership_mask(const BinaryCubicForm& x) {
    uint16_t m = 0;
    for (int i = 0; i < kLatticeCount; ++i)
        if (member(x, kAllLattices[i])) m |= static_cast<uint16_t>(1u << i);
    return m;
}

namespace {

// Parity conditions cutting the model out of its ambient lattice.
std::vector<std::array<int, 4>> parity_conditions(LatticeId id) {
    switch (id) {
        case LatticeId::L1: return {};
        case LatticeId::L2: return {{1, 1, 0, 1}, {1, 0, 1, 1}};
        case LatticeId::L3: return {{1, 1, 1, 0}, {0, 1, 1, 1}};
        case LatticeId::L4: return {{0, 1, 1, 0}};
        case LatticeId::L5: return {{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 1, 0}};
        case LatticeId::L1v: return {};
        case LatticeId::L2v: return parity_conditions(LatticeId::L3);
        case LatticeId::L3v: return parity_conditions(LatticeId::L2);
        case LatticeId::L4v: return parity_conditions(LatticeId::L5);
        case LatticeId::L5v: return parity_conditions(LatticeId::L4);
    }
    return {};
}

} // namespace

long long lattice_index(LatticeId id) {
    auto rows = parity_conditions(id);
    // Rank over the field with two elements; vectors packed into 4 bits.
    std::vector<unsigned> basis;
    for (const auto& r : rows) {
        unsigned v = 0;
        for (int i = 0; i < 4; ++i)
            if (r[i] & 1) v |= 1u << i;
        for (unsigned b : basis) {
            unsigned lead = b & ~(b - 1);
            if (v & lead) v ^= b;
        }
        if (v) basis.push_back(v);
    }
    return 1LL << basis.size();
}

std::vector<std::pair<LatticeId, LatticeId>> lattice_inclusions() {
    using L = LatticeId;
    return {{L::L4, L::L1},  {L::L3, L::L1},  {L::L2, L::L4},  {L::L5, L::L4},
            {L::L5, L::L3},  {L::L5v, L::L1v}, {L::L2v, L::L1v}, {L::L3v, L::L5v},
            {L::L4v, L::L5v}, {L::L4v, L::L2v}};
}

std::pair<Rat, Rat> ClassNumberTable::row(long long n) const {
    auto it = rows.find(n);
    if (it == rows.end()) return {Rat(0), Rat(0)};
    return it->second;
}

ClassNumberTable build_table(const std::vector<OrbitRecord>& orbits, LatticeId id,
                             long long table_cutoff, long long raw_cutoff) {
    long long needed = is_dual(id) ? 27 * table_cutoff : table_cutoff;
    if (needed > raw_cutoff)
        throw std::domain_error(std::string("orbit stream too short for ") + lattice_name(id) +
                                ": need |disc| <= " + std::to_string(needed) + ", have " +
                                std::to_string(raw_cutoff));
    ClassNumberTable t;
    t.lattice = id;
    t.cutoff = table_cutoff;
    int bit = static_cast<int>(id);
    for (const auto& rec : orbits) {
        if (!(rec.membership >> bit & 1)) continue;
        long long n = std::abs(rec.disc);
        if (is_dual(id)) {
            if (n % 27 != 0) throw std::logic_error("dual-lattice discriminant not divisible by 27");
            n /= 27;
        }
        if (n > table_cutoff) continue;
        Rat w = Rat(1, rec.stab);
        auto& row = t.rows[n];
        (rec.disc > 0 ? row.first : row.second) += w;
    }
    return t;
}

std::array<ClassNumberTable, kLatticeCount> build_tables(const std::vector<OrbitRecord>& orbits,
                                                         long long raw_cutoff) {
    std::array<ClassNumberTable, kLatticeCount> out;
    for (int i = 0; i < kLatticeCount; ++i) {
        LatticeId id = kAllLattices[i];
        long long cut = is_dual(id) ? raw_cutoff / 27 : raw_cutoff;
        out[i] = build_table(orbits, id, cut, raw_cutoff);
    }
    return out;
}

std::string table_to_csv(const ClassNumberTable& t) {
    std::ostringstream os;
    os << "lattice,n,h_plus_num,h_plus_den,h_minus_num,h_minus_den\n";
    for (const auto& [n, hv] : t.rows) {
        os << lattice_name(t.lattice) << ',' << n << ',' << rat_num(hv.first) << ','
           << rat_den(hv.first) << ',' << rat_num(hv.second) << ',' << rat_den(hv.second)
           << '\n';
    }
    return os.str();
}

} // namespace cubiczeta
