#include "cubiczeta/relations.hpp"

#include "cubiczeta/lattices.hpp"

#include <json.hpp>

#include <chrono>
#include <numeric>
#include <random>

namespace cubiczeta {

const char* relation_name(RelationId id) {
    switch (id) {
        case RelationId::ON: return "ohno_nakagawa";
        case RelationId::STY2: return "dual_pairing_xi2";
        case RelationId::STY3: return "dual_pairing_xi3";
        case RelationId::MAIN_THETA: return "main_theta";
        case RelationId::MAIN_ETA: return "main_eta";
        case RelationId::KSR1: return "ksr1";
        case RelationId::KSR2: return "ksr2";
        case RelationId::KSR3: return "ksr3";
        case RelationId::KSR4: return "ksr4";
        case RelationId::MOD2_SET: return "mod2_set";
        case RelationId::MOD2_SOLVED: return "mod2_solved";
        case RelationId::REMARK38: return "residue_class_expressions";
        case RelationId::GCD_SUPPORT: return "gcd_support";
        case RelationId::PROP33_4: return "subgroup_index_scaling";
        case RelationId::SUPPORT_INTEGRALITY: return "support_integrality";
    }
    return "?";
}

std::vector<RelationId> all_relations() {
    using R = RelationId;
    return {R::ON,   R::STY2, R::STY3, R::MAIN_THETA, R::MAIN_ETA,
            R::KSR1, R::KSR2, R::KSR3, R::KSR4,       R::MOD2_SET,
            R::MOD2_SOLVED, R::REMARK38, R::GCD_SUPPORT, R::PROP33_4,
            R::SUPPORT_INTEGRALITY};
}

RelationId relation_from_name(const std::string& name) {
    for (RelationId id : all_relations())
        if (name == relation_name(id)) return id;
    throw std::domain_error("unknown relation: " + name);
}

long long default_cutoff(RelationId id) {
    switch (id) {
        case RelationId::ON:
        case RelationId::STY2:
        case RelationId::STY3: return 300;
        case RelationId::GCD_SUPPORT: return 1000;
        case RelationId::PROP33_4: return 50;
        default: return 100;
    }
}

long long required_raw_cutoff(RelationId id, long long q) {
    switch (id) {
        case RelationId::ON:
        case RelationId::STY2:
        case RelationId::STY3:
        case RelationId::KSR2:
        case RelationId::KSR4: return 27 * q;
        case RelationId::MAIN_THETA:
        case RelationId::MAIN_ETA:
        case RelationId::SUPPORT_INTEGRALITY: return 27 * 4 * q;
        case RelationId::REMARK38:
        case RelationId::GCD_SUPPORT: return 4 * q;
        case RelationId::KSR1:
        case RelationId::KSR3:
        case RelationId::MOD2_SET:
        case RelationId::MOD2_SOLVED:
        case RelationId::PROP33_4: return q;
    }
    return q;
}

PartialZetaSpec PartialZetaSpec::disc_residue(long long l, long long n) {
    PartialZetaSpec s;
    s.kind = Kind::DiscResidue;
    s.residue = mod_reduce(l, n);
    s.modulus = n;
    return s;
}

PartialZetaSpec PartialZetaSpec::dual_disc_residue(long long l, long long n) {
    PartialZetaSpec s;
    s.kind = Kind::DualDiscResidue;
    s.residue = mod_reduce(l, n);
    s.modulus = n;
    return s;
}

PartialZetaSpec PartialZetaSpec::mod2_class(int a, int b, int c, int d) {
    PartialZetaSpec s;
    s.kind = Kind::Mod2Class;
    s.klass = a * 8 + b * 4 + c * 2 + d;
    return s;
}

PartialZetaSpec PartialZetaSpec::box_subgroup(CongruenceBox box, SubgroupSpec sub) {
    PartialZetaSpec s;
    s.kind = Kind::BoxSubgroup;
    s.box = std::move(box);
    s.subgroup = sub;
    return s;
}

std::string RelationReport::to_json(bool with_timing) const {
    nlohmann::json j;
    j["relation"] = relation;
    j["cutoff"] = cutoff;
    j["status"] = pass ? "pass" : "fail";
    if (first_discrepancy) {
        nlohmann::json d;
        d["q"] = to_string(first_discrepancy->q);
        d["component"] = first_discrepancy->component;
        d["lhs"] = to_string(first_discrepancy->lhs);
        d["rhs"] = to_string(first_discrepancy->rhs);
        j["first_discrepancy"] = d;
    } else {
        j["first_discrepancy"] = nullptr;
    }
    if (with_timing) j["wall_time_ms"] = wall_time_ms;
    if (!detail.empty()) j["detail"] = detail;
    return j.dump();
}

// ---- workbench -------------------------------------------------------------

SeriesWorkbench::SeriesWorkbench(std::vector<OrbitRecord> orbits, long long raw_cutoff)
    : orbits_(std::move(orbits)), raw_cutoff_(raw_cutoff) {
    auto tables = build_tables(orbits_, raw_cutoff_);
    for (int i = 0; i < 5; ++i) {
        xi_[i] = from_table(tables[i], false);
        xiv_[i] = from_table(tables[5 + i], true);
    }
}

const SeriesPair& SeriesWorkbench::xi(int i) const {
    if (i < 1 || i > 5) throw std::domain_error("lattice index out of range");
    return xi_[i - 1];
}

const SeriesPair& SeriesWorkbench::xi_dual(int i) const {
    if (i < 1 || i > 5) throw std::domain_error("lattice index out of range");
    return xiv_[i - 1];
}

namespace {

QRoot3 qr(long long n) { return QRoot3(Rat(n)); }
SeriesPair t2(const SeriesPair& f, long long k) { return twist(f, 2, k); }

} // namespace

SeriesPair SeriesWorkbench::theta() const {
    return linear_combine({{qr(1), xi(1)}, {qr(-2), xi(3)}, {qr(-1), xi(4)}, {qr(4), xi(5)}});
}

SeriesPair SeriesWorkbench::eta() const {
    SeriesPair inner = linear_combine(
        {{qr(1), xi(4)}, {qr(-1), xi(2)}, {qr(-1), xi(5)}, {qr(2), t2(xi(1), -4)}});
    return t2(inner, 2);
}

SeriesPair SeriesWorkbench::theta_dual() const {
    SeriesPair inner = linear_combine(
        {{qr(1), xi_dual(5)}, {qr(-1), xi_dual(3)}, {qr(-1), xi_dual(4)}, {qr(2), t2(xi_dual(1), -4)}});
    return t2(inner, 2);
}

SeriesPair SeriesWorkbench::eta_dual() const {
    return linear_combine(
        {{qr(1), xi_dual(1)}, {qr(-2), xi_dual(2)}, {qr(-1), xi_dual(5)}, {qr(4), xi_dual(4)}});
}

const SeriesPair& SeriesWorkbench::mod2_series(int cls, long long cutoff) const {
    if (cutoff > mod2_cutoff_) {
        if (cutoff > raw_cutoff_)
            throw std::domain_error("level-2 split needs orbit data to |disc| <= " +
                                    std::to_string(cutoff));
        for (auto& s : mod2_) s = SeriesPair{};
        SubgroupSpec gamma2 = SubgroupSpec::gamma(2);
        for (const auto& rec : orbits_) {
            long long n = std::abs(rec.disc);
            if (n > cutoff) continue;
            for (const auto& [y, st] : decompose_orbit(rec.rep, gamma2)) {
                int c = static_cast<int>(mod_reduce(y.a, 2) * 8 + mod_reduce(y.b, 2) * 4 +
                                         mod_reduce(y.c, 2) * 2 + mod_reduce(y.d, 2));
                auto& comp = rec.disc > 0 ? mod2_[c].first : mod2_[c].second;
                comp.set(Rat(n), comp.at(Rat(n)) + QRoot3(Rat(1, st)));
            }
        }
        for (auto& s : mod2_) s.first.cutoff = s.second.cutoff = Rat(cutoff);
        mod2_cutoff_ = cutoff;
    }
    return mod2_[cls];
}

SeriesPair SeriesWorkbench::partial_zeta(const PartialZetaSpec& spec, long long cutoff) const {
    using K = PartialZetaSpec::Kind;
    if (spec.kind == K::Mod2Class) {
        SeriesPair out = mod2_series(spec.klass, cutoff);
        return out;
    }
    SeriesPair out;
    if (spec.kind == K::DiscResidue) {
        if (cutoff > raw_cutoff_)
            throw std::domain_error("partial zeta needs orbit data to |disc| <= " +
                                    std::to_string(cutoff));
        for (const auto& rec : orbits_) {
            long long n = std::abs(rec.disc);
            if (n > cutoff) continue;
            if (mod_reduce(rec.disc - spec.residue, spec.modulus) != 0) continue;
            auto& comp = rec.disc > 0 ? out.first : out.second;
            comp.set(Rat(n), comp.at(Rat(n)) + QRoot3(Rat(1, rec.stab)));
        }
    } else if (spec.kind == K::DualDiscResidue) {
        if (27 * cutoff > raw_cutoff_)
            throw std::domain_error("dual partial zeta needs orbit data to |disc| <= " +
                                    std::to_string(27 * cutoff));
        for (const auto& rec : orbits_) {
            if (!(rec.membership >> 5 & 1)) continue; // dual full lattice
            long long n27 = rec.disc / 27;
            long long n = std::abs(n27);
            if (n > cutoff) continue;
            if (mod_reduce(n27 - spec.residue, spec.modulus) != 0) continue;
            auto& comp = rec.disc > 0 ? out.first : out.second;
            comp.set(Rat(n), comp.at(Rat(n)) + QRoot3(Rat(1, rec.stab)));
        }
    } else { // BoxSubgroup
        if (cutoff > raw_cutoff_)
            throw std::domain_error("partial zeta needs orbit data to |disc| <= " +
                                    std::to_string(cutoff));
        // Elements of the subgroup for the invariance spot check.
        std::vector<IntMat2> probes;
        {
            std::mt19937_64 rng(7);
            std::uniform_int_distribution<int> pick(0, 2);
            while (probes.size() < 8) {
                IntMat2 g = kIdentity;
                for (int i = 0; i < 12; ++i) {
                    const IntMat2 gens[3] = {kGenS, kGenT, kGenTInv};
                    g = g * gens[pick(rng)];
                }
                if (spec.subgroup.contains(g)) probes.push_back(g);
            }
        }
        int checked = 0;
        for (const auto& rec : orbits_) {
            long long n = std::abs(rec.disc);
            if (n > cutoff) continue;
            for (const auto& [y, st] : decompose_orbit(rec.rep, spec.subgroup)) {
                bool in = spec.box.contains(y);
                if (checked < 64) {
                    // The box must be constant on subgroup orbits.
                    for (const auto& g : probes)
                        if (spec.box.contains(act(g, y)) != in)
                            throw std::logic_error("congruence box is not invariant under the subgroup");
                    ++checked;
                }
                if (!in) continue;
                auto& comp = rec.disc > 0 ? out.first : out.second;
                comp.set(Rat(n), comp.at(Rat(n)) + QRoot3(Rat(1, st)));
            }
        }
    }
    out.first.cutoff = out.second.cutoff = Rat(std::min(cutoff, raw_cutoff_));
    return out;
}

SeriesPair SeriesWorkbench::subgroup_zeta(const SubgroupSpec& sub, long long cutoff) const {
    if (cutoff > raw_cutoff_)
        throw std::domain_error("subgroup zeta needs orbit data to |disc| <= " +
                                std::to_string(cutoff));
    SeriesPair out;
    for (const auto& rec : orbits_) {
        long long n = std::abs(rec.disc);
        if (n > cutoff) continue;
        for (const auto& [y, st] : decompose_orbit(rec.rep, sub)) {
            (void)y;
            auto& comp = rec.disc > 0 ? out.first : out.second;
            comp.set(Rat(n), comp.at(Rat(n)) + QRoot3(Rat(1, st)));
        }
    }
    out.first.cutoff = out.second.cutoff = Rat(cutoff);
    return out;
}

// ---- verification ----------------------------------------------------------

namespace {

struct SubIdentity {
    std::string name;
    SeriesPair lhs, rhs;
};

QRoot3 qrr(const Rat& r) { return QRoot3(r); }

std::vector<SubIdentity> build_identities(RelationId id, const SeriesWorkbench& wb,
                                          long long q) {
    using R = RelationId;
    auto& w = wb;
    auto part = [&](long long l, long long n, long long cut) {
        return w.partial_zeta(PartialZetaSpec::disc_residue(l, n), cut);
    };
    auto dpart = [&](long long l, long long n, long long cut) {
        return w.partial_zeta(PartialZetaSpec::dual_disc_residue(l, n), cut);
    };
    auto m2 = [&](int a, int b, int c, int d) {
        return w.partial_zeta(PartialZetaSpec::mod2_class(a, b, c, d), q);
    };
    switch (id) {
        case R::ON:
            return {{"xi1v = A.xi1", w.xi_dual(1), apply_A(w.xi(1))}};
        case R::STY2:
            return {{"xi2v = A.xi2", w.xi_dual(2), apply_A(w.xi(2))}};
        case R::STY3:
            return {{"xi3v = A.xi3", w.xi_dual(3), apply_A(w.xi(3))}};
        case R::MAIN_THETA:
            return {{"thetav = A.theta", w.theta_dual(), apply_A(w.theta())}};
        case R::MAIN_ETA:
            return {{"etav = A.eta", w.eta_dual(), apply_A(w.eta())}};
        case R::KSR1:
            return {{"disc=4(32) slice", part(4, 32, q),
                     scale(qr(3), t2(add(w.xi(5), scale(qr(-1), t2(w.xi(1), -4))), -2))}};
        case R::KSR2:
            return {{"dual disc=-20(32) slice", dpart(-20, 32, q),
                     scale(qr(3), t2(add(w.xi_dual(4), scale(qr(-1), t2(w.xi_dual(1), -4))), -2))}};
        case R::KSR3: {
            SeriesPair rhs = linear_combine({{qr(1), w.xi(4)},
                                             {qr(-1), w.xi(2)},
                                             {qr(-1), w.xi(5)},
                                             {qr(2), t2(w.xi(1), -4)}});
            rhs = add(rhs, t2(linear_combine({{qr(1), w.xi(1)},
                                              {qr(-1), w.xi(4)},
                                              {qr(-2), w.xi(3)},
                                              {qr(4), w.xi(5)}}),
                              -4));
            rhs = add(rhs, scale(qr(-1), t2(linear_combine({{qr(1), w.xi(1)},
                                                            {qr(-1), w.xi(3)},
                                                            {qr(-2), w.xi(2)},
                                                            {qr(5), t2(w.xi(1), -4)}}),
                                            -2)));
            return {{"disc=20(32) slice", part(20, 32, q), rhs}};
        }
        case R::KSR4: {
            SeriesPair rhs = linear_combine({{qr(1), w.xi_dual(5)},
                                             {qr(-1), w.xi_dual(3)},
                                             {qr(-1), w.xi_dual(4)},
                                             {qr(2), t2(w.xi_dual(1), -4)}});
            rhs = add(rhs, t2(linear_combine({{qr(1), w.xi_dual(1)},
                                              {qr(-1), w.xi_dual(5)},
                                              {qr(-2), w.xi_dual(2)},
                                              {qr(4), w.xi_dual(4)}}),
                              -4));
            rhs = add(rhs, scale(qr(-1), t2(linear_combine({{qr(1), w.xi_dual(1)},
                                                            {qr(-1), w.xi_dual(2)},
                                                            {qr(-2), w.xi_dual(3)},
                                                            {qr(5), t2(w.xi_dual(1), -4)}}),
                                            -2)));
            return {{"dual disc=-4(32) slice", dpart(-4, 32, q), rhs}};
        }
        case R::MOD2_SET: {
            std::vector<SubIdentity> eqs;
            auto same = [&](const char* nm, int a1, int b1, int c1, int d1, int a2, int b2,
                            int c2, int d2) {
                eqs.push_back({nm, m2(a1, b1, c1, d1), m2(a2, b2, c2, d2)});
            };
            same("0001~1000", 0, 0, 0, 1, 1, 0, 0, 0);
            same("0001~1111", 0, 0, 0, 1, 1, 1, 1, 1);
            same("0010~0100", 0, 0, 1, 0, 0, 1, 0, 0);
            same("0010~0011", 0, 0, 1, 0, 0, 0, 1, 1);
            same("0010~1100", 0, 0, 1, 0, 1, 1, 0, 0);
            same("0010~0101", 0, 0, 1, 0, 0, 1, 0, 1);
            same("0010~1010", 0, 0, 1, 0, 1, 0, 1, 0);
            same("0111~1110", 0, 1, 1, 1, 1, 1, 1, 0);
            same("0111~1001", 0, 1, 1, 1, 1, 0, 0, 1);
            same("1011~1101", 1, 0, 1, 1, 1, 1, 0, 1);
            eqs.push_back({"6 xi1 split", scale(qr(6), w.xi(1)),
                           linear_combine({{qr(1), m2(0, 0, 0, 0)},
                                           {qr(3), m2(0, 0, 0, 1)},
                                           {qr(6), m2(0, 0, 1, 0)},
                                           {qr(1), m2(0, 1, 1, 0)},
                                           {qr(3), m2(0, 1, 1, 1)},
                                           {qr(2), m2(1, 0, 1, 1)}})});
            eqs.push_back({"6 xi2 split", scale(qr(6), w.xi(2)),
                           add(m2(0, 0, 0, 0), scale(qr(3), m2(0, 1, 1, 1)))});
            eqs.push_back({"6 xi3 split", scale(qr(6), w.xi(3)),
                           linear_combine({{qr(1), m2(0, 0, 0, 0)},
                                           {qr(1), m2(0, 1, 1, 0)},
                                           {qr(2), m2(1, 0, 1, 1)}})});
            eqs.push_back({"6 xi4 split", scale(qr(6), w.xi(4)),
                           linear_combine({{qr(1), m2(0, 0, 0, 0)},
                                           {qr(3), m2(0, 0, 0, 1)},
                                           {qr(1), m2(0, 1, 1, 0)},
                                           {qr(3), m2(0, 1, 1, 1)}})});
            eqs.push_back({"6 xi5 split", scale(qr(6), w.xi(5)),
                           add(m2(0, 0, 0, 0), m2(0, 1, 1, 0))});
            eqs.push_back({"6.2^{-4s} xi1 = class 0", scale(qr(6), t2(w.xi(1), -4)),
                           m2(0, 0, 0, 0)});
            return eqs;
        }
        case R::MOD2_SOLVED: {
            std::vector<SubIdentity> eqs;
            SeriesPair x1s = t2(w.xi(1), -4);
            eqs.push_back({"class 0000", m2(0, 0, 0, 0), scale(qr(6), x1s)});
            eqs.push_back({"class 0001", m2(0, 0, 0, 1),
                           scale(qr(2), linear_combine({{qr(1), w.xi(4)},
                                                        {qr(-1), w.xi(2)},
                                                        {qr(-1), w.xi(5)},
                                                        {qr(1), x1s}}))});
            eqs.push_back({"class 0010", m2(0, 0, 1, 0),
                           linear_combine({{qr(1), w.xi(1)},
                                           {qr(1), w.xi(5)},
                                           {qr(-1), w.xi(3)},
                                           {qr(-1), w.xi(4)}})});
            eqs.push_back({"class 0110", m2(0, 1, 1, 0),
                           scale(qr(6), add(w.xi(5), scale(qr(-1), x1s)))});
            eqs.push_back({"class 0111", m2(0, 1, 1, 1),
                           scale(qr(2), add(w.xi(2), scale(qr(-1), x1s)))});
            eqs.push_back({"class 1011", m2(1, 0, 1, 1),
                           scale(qr(3), add(w.xi(3), scale(qr(-1), w.xi(5))))});
            return eqs;
        }
        case R::REMARK38: {
            std::vector<SubIdentity> eqs;
            SeriesPair p58 = part(5, 8, q), p18 = part(1, 8, q);
            SeriesPair p432 = part(4, 32, 4 * q), p2032 = part(20, 32, q);
            SeriesPair x1s = t2(w.xi(1), -4);
            eqs.push_back({"disc=5(8) slice", p58, add(w.xi(2), scale(qr(-1), x1s))});
            eqs.push_back({"disc=1(8) slice", p18, add(w.xi(3), scale(qr(-1), x1s))});
            eqs.push_back({"xi2 recovered", w.xi(2), add(p58, x1s)});
            eqs.push_back({"xi3 recovered", w.xi(3), add(p18, x1s)});
            eqs.push_back({"xi5 recovered", w.xi(5),
                           add(scale(qrr(Rat(1, 3)), t2(p432, 2)), x1s)});
            // (1 - 2^{-4s}) xi4 expressed through the slices.
            SeriesPair lhs4 = add(w.xi(4), scale(qr(-1), t2(w.xi(4), -4)));
            SeriesPair term2 = linear_combine({{qr(1), t2(w.xi(1), -2)},
                                               {qr(2), t2(w.xi(1), -6)},
                                               {qr(-1), t2(w.xi(1), -4)},
                                               {qr(-2), t2(w.xi(1), -8)}});
            SeriesPair g = add(p58, scale(qr(-1), t2(p18, -2)));
            g = add(g, scale(qrr(Rat(1, 3)), add(t2(p432, 2), scale(qr(2), p432))));
            SeriesPair rhs4 = add(add(p2032, term2), add(g, scale(qr(-2), t2(g, -2))));
            eqs.push_back({"xi4 recovered", lhs4, rhs4});
            return eqs;
        }
        case R::PROP33_4: {
            std::vector<SubIdentity> eqs;
            eqs.push_back({"level 2 principal, index 6",
                           w.subgroup_zeta(SubgroupSpec::gamma(2), q), scale(qr(6), w.xi(1))});
            eqs.push_back({"lower-left level 2, index 3",
                           w.subgroup_zeta(SubgroupSpec::gamma0(2), q), scale(qr(3), w.xi(1))});
            eqs.push_back({"upper-right level 2, index 3",
                           w.subgroup_zeta(SubgroupSpec::gamma_upper0(2), q),
                           scale(qr(3), w.xi(1))});
            return eqs;
        }
        default: break;
    }
    throw std::logic_error("relation has a dedicated verifier");
}

// gcd of the integer support of a combined series up to the bound.
long long support_gcd(const DirichletSeries& f, long long bound, bool& integral) {
    if (Rat(bound) > f.cutoff) throw std::domain_error("gcd bound exceeds the reliable cutoff");
    long long g = 0;
    integral = true;
    for (const auto& [qq, v] : f.coeff) {
        (void)v;
        if (qq > bound) break;
        if (rat_den(qq) != 1) {
            integral = false;
            continue;
        }
        g = std::gcd(g, checked_i64(rat_num(qq), "support_gcd"));
    }
    return g;
}

} // namespace

RelationReport verify(RelationId id, const SeriesWorkbench& wb, long long cutoff) {
    auto start = std::chrono::steady_clock::now();
    RelationReport rep;
    rep.relation = relation_name(id);
    rep.cutoff = cutoff;

    long long need = required_raw_cutoff(id, cutoff);
    if (need > wb.raw_cutoff())
        throw std::domain_error(std::string("relation ") + relation_name(id) +
                                " at cutoff " + std::to_string(cutoff) +
                                " needs orbit data to |disc| <= " + std::to_string(need) +
                                ", have " + std::to_string(wb.raw_cutoff()));

    if (id == RelationId::GCD_SUPPORT) {
        std::vector<std::pair<std::string, DirichletSeries>> series;
        for (int i = 1; i <= 3; ++i) {
            series.emplace_back("xi" + std::to_string(i) + "+", combine_pm(wb.xi(i), +1));
            series.emplace_back("xi" + std::to_string(i) + "-", combine_pm(wb.xi(i), -1));
        }
        series.emplace_back("theta+", combine_pm(wb.theta(), +1));
        series.emplace_back("theta-", combine_pm(wb.theta(), -1));
        series.emplace_back("eta+", combine_pm(wb.eta(), +1));
        series.emplace_back("eta-", combine_pm(wb.eta(), -1));
        rep.pass = true;
        std::string detail;
        for (const auto& [nm, s] : series) {
            bool integral = true;
            long long g = support_gcd(s, cutoff, integral);
            if (!integral || g != 1) rep.pass = false;
            detail += (detail.empty() ? "" : ", ") + nm + ": gcd " + std::to_string(g) +
                      (integral ? "" : " (non-integer support)");
        }
        rep.detail = detail;
    } else if (id == RelationId::SUPPORT_INTEGRALITY) {
        rep.pass = true;
        std::string bad;
        auto check = [&](const char* nm, const SeriesPair& s) {
            if (Rat(cutoff) > s.first.cutoff || Rat(cutoff) > s.second.cutoff)
                throw std::domain_error("integrality bound exceeds the reliable cutoff");
            for (const DirichletSeries* f : {&s.first, &s.second})
                for (const auto& [qq, v] : f->coeff) {
                    (void)v;
                    if (qq > Rat(cutoff)) break;
                    if (rat_den(qq) != 1) {
                        rep.pass = false;
                        if (bad.empty()) bad = std::string(nm) + " at q = " + to_string(qq);
                    }
                }
        };
        check("theta", wb.theta());
        check("eta", wb.eta());
        check("thetav", wb.theta_dual());
        check("etav", wb.eta_dual());
        rep.detail = rep.pass ? "theta, eta, thetav, etav supported on integers" : bad;
    } else {
        auto eqs = build_identities(id, wb, cutoff);
        rep.pass = true;
        for (const auto& e : eqs) {
            auto d = equal_up_to(e.lhs, e.rhs, Rat(cutoff));
            if (d) {
                rep.pass = false;
                rep.first_discrepancy = d;
                rep.detail = e.name;
                break;
            }
        }
    }

    rep.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return rep;
}

RelationReport verify(RelationId id, const SeriesWorkbench& wb) {
    return verify(id, wb, default_cutoff(id));
}

} // namespace cubiczeta
