#pragma once

#include "cubiczeta/numeric.hpp"

#include <array>
#include <optional>
#include <tuple>
#include <vector>

namespace cubiczeta {

// Integral binary cubic form a u^3 + b u^2 v + c u v^2 + d v^3.
struct BinaryCubicForm {
    long long a = 0, b = 0, c = 0, d = 0;

    bool operator==(const BinaryCubicForm&) const = default;
    BinaryCubicForm operator-() const { return {-a, -b, -c, -d}; }
};

// Deterministic tie-break order on forms: lexicographic on
// (|a|, a, |b|, b, |c|, c, |d|, d).
std::array<long long, 8> lex_key(const BinaryCubicForm& x);
bool lex_less(const BinaryCubicForm& x, const BinaryCubicForm& y);

// Cubic form with rational coefficients; results of the twisted action.
using RationalCubicForm = std::array<Rat, 4>;

RationalCubicForm to_rational(const BinaryCubicForm& x);
bool is_integral(const RationalCubicForm& x);
BinaryCubicForm to_integral(const RationalCubicForm& x); // throws if not integral

// disc = b^2 c^2 + 18 a b c d - 4 a c^3 - 4 b^3 d - 27 a^2 d^2.
long long discriminant(const BinaryCubicForm& x);
Rat discriminant(const RationalCubicForm& x);

// Hessian covariant (b^2 - 3ac, bc - 9ad, c^2 - 3bd); a binary quadratic
// form whose discriminant equals -3 * disc(x).
std::array<long long, 3> hessian(const BinaryCubicForm& x);

// Element of GL_2(Q) with nonzero determinant, acting on cubic forms by the
// determinant-twisted substitution (g.x)(u,v) = x(pu+rv, qu+sv) / det(g).
struct GroupElement {
    Rat p, q, r, s;

    Rat det() const { return p * s - q * r; }
    GroupElement inverse() const;
    GroupElement operator*(const GroupElement& o) const {
        return {p * o.p + q * o.r, p * o.q + q * o.s,
                r * o.p + s * o.r, r * o.q + s * o.s};
    }
    bool operator==(const GroupElement&) const = default;
};

// Integer 2x2 matrix, used for SL_2(Z) words on the fast paths.
struct IntMat2 {
    long long p = 1, q = 0, r = 0, s = 1;

    long long det() const { return p * s - q * r; }
    IntMat2 operator*(const IntMat2& o) const {
        return {p * o.p + q * o.r, p * o.q + q * o.s,
                r * o.p + s * o.r, r * o.q + s * o.s};
    }
    IntMat2 inverse_unimodular() const; // requires det == 1
    bool operator==(const IntMat2&) const = default;
    GroupElement to_group_element() const {
        return {Rat(p), Rat(q), Rat(r), Rat(s)};
    }
};

inline const IntMat2 kIdentity{1, 0, 0, 1};
inline const IntMat2 kGenS{0, -1, 1, 0};            // order 4; (a,b,c,d) -> (-d,c,-b,a)
inline const IntMat2 kGenT{1, 1, 0, 1};
inline const IntMat2 kGenTInv{1, -1, 0, 1};
inline const IntMat2 kSigma{1, 1, -1, 0};           // order 6

// Twisted action of GL_2(Q); caller asserts integrality where required.
RationalCubicForm act(const GroupElement& g, const RationalCubicForm& x);
RationalCubicForm act(const GroupElement& g, const BinaryCubicForm& x);

// SL_2(Z) action on integral forms (always integral, discriminant preserved).
BinaryCubicForm act(const IntMat2& g, const BinaryCubicForm& x);

// 4x4 matrix m with m * (a,b,c,d)^T = coefficients of g.x.
std::array<std::array<Rat, 4>, 4> action_matrix(const GroupElement& g);

// Congruence subgroups of SL_2(Z).
struct SubgroupSpec {
    enum class Kind { FullLevel, LowerLeft, UpperRight }; // Gamma(N), Gamma_0(N), Gamma^0(N)
    Kind kind = Kind::FullLevel;
    long long level = 1;

    static SubgroupSpec gamma(long long n) { return {Kind::FullLevel, n}; }
    static SubgroupSpec gamma0(long long n) { return {Kind::LowerLeft, n}; }
    static SubgroupSpec gamma_upper0(long long n) { return {Kind::UpperRight, n}; }

    bool contains(const IntMat2& g) const;
    long long index_in_sl2z() const; // supported for level 1 and 2
    std::string name() const;
};

// Subset of Z^4 cut out by congruence conditions; each constraint restricts
// an integer linear combination of (a,b,c,d) to a set of residues.
struct CongruenceConstraint {
    std::array<long long, 4> coeff{};
    long long modulus = 1;
    std::vector<long long> residues; // sorted, in [0, modulus)
};

struct CongruenceBox {
    std::vector<CongruenceConstraint> constraints;

    bool contains(const BinaryCubicForm& x) const;
    // Least common multiple of the constraint moduli.
    long long residue_level() const;
};

// Perimeter constraint builders: E = 2Z, O = 2Z+1 and their dilates.
CongruenceConstraint coord_in(int coord, long long modulus,
                              std::vector<long long> residues);
CongruenceConstraint sum_in(std::array<long long, 4> coeff, long long modulus,
                            std::vector<long long> residues);

// The congruence boxes used by the level-2 decomposition arguments.
CongruenceBox box_X1();
CongruenceBox box_X2();
CongruenceBox box_X3();
CongruenceBox box_X1p();
CongruenceBox box_X2p();
CongruenceBox box_X3p();
CongruenceBox box_X1pp();
CongruenceBox box_X2pp();
CongruenceBox box_X3pp();

} // namespace cubiczeta
