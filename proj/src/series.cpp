#include "cubiczeta/series.hpp"

#include <sstream>

namespace cubiczeta {

bool valid_index(const Rat& q) {
    if (q <= 0) return false;
    BigInt den = rat_den(q);
    while (den % 2 == 0) den /= 2;
    return den == 1;
}

QRoot3 DirichletSeries::at(const Rat& q) const {
    auto it = coeff.find(q);
    return it == coeff.end() ? QRoot3() : it->second;
}

void DirichletSeries::set(const Rat& q, const QRoot3& v) {
    if (!valid_index(q)) throw std::domain_error("series index must be positive with 2-power denominator");
    if (v.is_zero())
        coeff.erase(q);
    else
        coeff[q] = v;
}

DirichletSeries scale(const QRoot3& s, const DirichletSeries& f) {
    DirichletSeries out;
    out.cutoff = f.cutoff;
    if (s.is_zero()) return out;
    for (const auto& [q, v] : f.coeff) out.coeff.emplace(q, s * v);
    return out;
}

DirichletSeries add(const DirichletSeries& f, const DirichletSeries& g) {
    DirichletSeries out;
    out.cutoff = std::min(f.cutoff, g.cutoff);
    out.coeff = f.coeff;
    for (const auto& [q, v] : g.coeff) {
        auto [it, fresh] = out.coeff.emplace(q, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) out.coeff.erase(it);
        }
    }
    return out;
}

DirichletSeries twist(const DirichletSeries& f, long long base, long long k) {
    if (base != 2 && base != 3) throw std::domain_error("twist base must be 2 or 3");
    Rat factor = 1; // base^{-k}
    for (long long i = 0; i < std::abs(k); ++i)
        factor *= (k > 0) ? Rat(1, base) : Rat(base);
    DirichletSeries out;
    out.cutoff = f.cutoff * factor;
    for (const auto& [q, v] : f.coeff) {
        Rat nq = q * factor;
        if (!valid_index(nq))
            throw std::domain_error("base-3 twist needs indices divisible by the shift");
        out.coeff.emplace(nq, v);
    }
    return out;
}

SeriesPair from_table(const ClassNumberTable& t, bool dual_normalization) {
    if (dual_normalization != is_dual(t.lattice))
        throw std::domain_error("dual_normalization must match the table's lattice");
    SeriesPair s;
    s.first.cutoff = s.second.cutoff = Rat(t.cutoff);
    for (const auto& [n, hv] : t.rows) {
        if (hv.first != 0) s.first.coeff.emplace(Rat(n), QRoot3(hv.first));
        if (hv.second != 0) s.second.coeff.emplace(Rat(n), QRoot3(hv.second));
    }
    return s;
}

SeriesPair scale(const QRoot3& s, const SeriesPair& f) {
    return {scale(s, f.first), scale(s, f.second)};
}

SeriesPair add(const SeriesPair& f, const SeriesPair& g) {
    return {add(f.first, g.first), add(f.second, g.second)};
}

SeriesPair linear_combine(const std::vector<std::pair<QRoot3, SeriesPair>>& terms) {
    if (terms.empty()) throw std::domain_error("linear_combine needs at least one term");
    SeriesPair acc = scale(terms[0].first, terms[0].second);
    for (size_t i = 1; i < terms.size(); ++i) acc = add(acc, scale(terms[i].first, terms[i].second));
    return acc;
}

SeriesPair twist(const SeriesPair& f, long long base, long long k) {
    return {twist(f.first, base, k), twist(f.second, base, k)};
}

SeriesPair apply_A(const SeriesPair& f) {
    return {f.second, scale(QRoot3(Rat(3)), f.first)};
}

DirichletSeries combine_pm(const SeriesPair& f, int sign) {
    if (sign != 1 && sign != -1) throw std::domain_error("sign must be +-1");
    return add(scale(QRoot3::sqrt3(), f.first), scale(QRoot3(Rat(sign)), f.second));
}

namespace {

std::optional<Discrepancy> compare_component(const DirichletSeries& a, const DirichletSeries& b,
                                             const Rat& bound, int comp) {
    if (bound > a.cutoff || bound > b.cutoff)
        throw std::domain_error("comparison bound exceeds a reliable cutoff");
    auto ia = a.coeff.begin(), ib = b.coeff.begin();
    while (true) {
        bool ha = ia != a.coeff.end() && ia->first <= bound;
        bool hb = ib != b.coeff.end() && ib->first <= bound;
        if (!ha && !hb) return std::nullopt;
        Rat q = ha && (!hb || ia->first <= ib->first) ? ia->first : ib->first;
        QRoot3 va = (ha && ia->first == q) ? ia->second : QRoot3();
        QRoot3 vb = (hb && ib->first == q) ? ib->second : QRoot3();
        if (va != vb) return Discrepancy{q, comp, va, vb};
        if (ha && ia->first == q) ++ia;
        if (hb && ib->first == q) ++ib;
    }
}

} // namespace

std::optional<Discrepancy> equal_up_to(const SeriesPair& lhs, const SeriesPair& rhs,
                                       const Rat& bound) {
    auto d1 = compare_component(lhs.first, rhs.first, bound, 1);
    auto d2 = compare_component(lhs.second, rhs.second, bound, 2);
    if (d1 && d2) return d1->q <= d2->q ? d1 : d2;
    return d1 ? d1 : d2;
}

bool integrality_check(const DirichletSeries& f) {
    for (const auto& [q, v] : f.coeff) {
        (void)v;
        if (q > f.cutoff) break;
        if (rat_den(q) != 1) return false;
    }
    return true;
}

bool integrality_check(const SeriesPair& f) {
    return integrality_check(f.first) && integrality_check(f.second);
}

std::string series_to_csv(const DirichletSeries& f) {
    std::ostringstream os;
    os << "q_num,q_den,coeff_u_num,coeff_u_den,coeff_v_num,coeff_v_den\n";
    for (const auto& [q, v] : f.coeff) {
        if (q > f.cutoff) break;
        os << rat_num(q) << ',' << rat_den(q) << ',' << rat_num(v.u) << ',' << rat_den(v.u)
           << ',' << rat_num(v.v) << ',' << rat_den(v.v) << '\n';
    }
    return os.str();
}

} // namespace cubiczeta
