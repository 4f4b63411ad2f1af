#pragma once

#include "cubiczeta/lattices.hpp"
#include "cubiczeta/numeric.hpp"

#include <map>
#include <optional>
#include <vector>

namespace cubiczeta {

// Formal Dirichlet series sum_q a_q q^{-s} with exact coefficients in the
// quadratic field Q(sqrt 3), indexed by positive rationals whose denominator
// is a power of two. Coefficients are trusted only for q <= cutoff; every
// operation propagates the cutoff so that no combination ever reads an index
// outside the region its inputs were built for.
struct DirichletSeries {
    std::map<Rat, QRoot3> coeff; // sparse, nonzero values only
    Rat cutoff = 0;

    QRoot3 at(const Rat& q) const;
    void set(const Rat& q, const QRoot3& v);
    bool is_zero() const { return coeff.empty(); }
};

bool valid_index(const Rat& q); // q > 0, denominator a power of 2

DirichletSeries scale(const QRoot3& s, const DirichletSeries& f);
DirichletSeries add(const DirichletSeries& f, const DirichletSeries& g);

// Multiplication by base^{k s}: the coefficient at q moves to q * base^{-k}.
// The trusted region scales by base^{-k}. Base 3 with k > 0 requires every
// index to be divisible by 3^k (the index lattice keeps denominator 2^j).
DirichletSeries twist(const DirichletSeries& f, long long base, long long k);

// The (disc > 0, disc < 0) components of one zeta vector.
struct SeriesPair {
    DirichletSeries first;  // j = 1, positive discriminants
    DirichletSeries second; // j = 2, negative discriminants
};

// Series of a class-number table: coefficient at integer n is the table row.
// dual_normalization must match the table's lattice; dual tables are indexed
// by |disc|/27 already, which absorbs the 3^{3s} normalization.
SeriesPair from_table(const ClassNumberTable& t, bool dual_normalization);

SeriesPair scale(const QRoot3& s, const SeriesPair& f);
SeriesPair add(const SeriesPair& f, const SeriesPair& g);
SeriesPair linear_combine(const std::vector<std::pair<QRoot3, SeriesPair>>& terms);
SeriesPair twist(const SeriesPair& f, long long base, long long k);

// Left multiplication by the pairing matrix (0 1; 3 0): (f, g) -> (g, 3f).
SeriesPair apply_A(const SeriesPair& f);

// sqrt(3) * first + sign * second, the self-dual combination.
DirichletSeries combine_pm(const SeriesPair& f, int sign);

struct Discrepancy {
    Rat q;
    int component = 1; // 1 or 2
    QRoot3 lhs, rhs;
};

// Exact coefficientwise comparison for all q <= bound; throws if the bound
// exceeds either reliable cutoff. Returns the least discrepant index.
std::optional<Discrepancy> equal_up_to(const SeriesPair& lhs, const SeriesPair& rhs,
                                       const Rat& bound);

// True iff every nonzero coefficient with q <= cutoff sits at an integer q.
bool integrality_check(const SeriesPair& f);
bool integrality_check(const DirichletSeries& f);

std::string series_to_csv(const DirichletSeries& f);

} // namespace cubiczeta
