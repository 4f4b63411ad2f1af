#include "cubiczeta/forms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cubiczeta {

std::string to_string(const Rat& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

std::string to_string(const QRoot3& x) {
    std::ostringstream os;
    os << x.u;
    if (x.v != 0) os << (x.v > 0 ? "+" : "") << x.v << "*sqrt3";
    return os.str();
}

std::array<long long, 8> lex_key(const BinaryCubicForm& x) {
    auto abs64 = [](long long t) { return t < 0 ? -t : t; };
    return {abs64(x.a), x.a, abs64(x.b), x.b, abs64(x.c), x.c, abs64(x.d), x.d};
}

bool lex_less(const BinaryCubicForm& x, const BinaryCubicForm& y) {
    return lex_key(x) < lex_key(y);
}

RationalCubicForm to_rational(const BinaryCubicForm& x) {
    return {Rat(x.a), Rat(x.b), Rat(x.c), Rat(x.d)};
}

bool is_integral(const RationalCubicForm& x) {
    for (const auto& t : x)
        if (rat_den(t) != 1) return false;
    return true;
}

BinaryCubicForm to_integral(const RationalCubicForm& x) {
    if (!is_integral(x)) throw std::domain_error("form has non-integer coefficients");
    return {checked_i64(rat_num(x[0]), "to_integral"),
            checked_i64(rat_num(x[1]), "to_integral"),
            checked_i64(rat_num(x[2]), "to_integral"),
            checked_i64(rat_num(x[3]), "to_integral")};
}

long long discriminant(const BinaryCubicForm& x) {
    using I = __int128;
    I a = x.a, b = x.b, c = x.c, d = x.d;
    I p = b * b * c * c + 18 * a * b * c * d - 4 * a * c * c * c - 4 * b * b * b * d -
          27 * a * a * d * d;
    if (p > I(INT64_MAX) || p < I(INT64_MIN))
        throw std::overflow_error("discriminant exceeds 64 bits");
    return static_cast<long long>(p);
}

Rat discriminant(const RationalCubicForm& x) {
    const Rat &a = x[0], &b = x[1], &c = x[2], &d = x[3];
    return b * b * c * c + 18 * a * b * c * d - 4 * a * c * c * c - 4 * b * b * b * d -
           27 * a * a * d * d;
}

std::array<long long, 3> hessian(const BinaryCubicForm& x) {
    using I = __int128;
    I a = x.a, b = x.b, c = x.c, d = x.d;
    I A = b * b - 3 * a * c;
    I B = b * c - 9 * a * d;
    I C = c * c - 3 * b * d;
    auto chk = [](I t) {
        if (t > I(INT64_MAX) || t < I(INT64_MIN))
            throw std::overflow_error("hessian exceeds 64 bits");
        return static_cast<long long>(t);
    };
    return {chk(A), chk(B), chk(C)};
}

GroupElement GroupElement::inverse() const {
    Rat dt = det();
    if (dt == 0) throw std::domain_error("singular group element");
    return {s / dt, -q / dt, -r / dt, p / dt};
}

IntMat2 IntMat2::inverse_unimodular() const {
    if (det() != 1) throw std::domain_error("matrix is not unimodular");
    return {s, -q, -r, p};
}

std::array<std::array<Rat, 4>, 4> action_matrix(const GroupElement& g) {
    const Rat &p = g.p, &q = g.q, &r = g.r, &s = g.s;
    Rat dt = g.det();
    if (dt == 0) throw std::domain_error("singular group element");
    std::array<std::array<Rat, 4>, 4> m = {{
        {p * p * p, p * p * q, p * q * q, q * q * q},
        {3 * p * p * r, p * p * s + 2 * p * q * r, q * q * r + 2 * p * q * s, 3 * q * q * s},
        {3 * p * r * r, q * r * r + 2 * p * r * s, p * s * s + 2 * q * r * s, 3 * q * s * s},
        {r * r * r, r * r * s, r * s * s, s * s * s},
    }};
    for (auto& row : m)
        for (auto& e : row) e /= dt;
    return m;
}

RationalCubicForm act(const GroupElement& g, const RationalCubicForm& x) {
    auto m = action_matrix(g);
    RationalCubicForm y;
    for (int i = 0; i < 4; ++i) {
        Rat t = 0;
        for (int j = 0; j < 4; ++j) t += m[i][j] * x[j];
        y[i] = t;
    }
    return y;
}

RationalCubicForm act(const GroupElement& g, const BinaryCubicForm& x) {
    return act(g, to_rational(x));
}

BinaryCubicForm act(const IntMat2& g, const BinaryCubicForm& x) {
    using I = __int128;
    I p = g.p, q = g.q, r = g.r, s = g.s;
    I dt = p * s - q * r;
    if (dt != 1 && dt != -1) throw std::domain_error("integer action requires det +-1");
    I a = x.a, b = x.b, c = x.c, d = x.d;
    I y0 = p * p * p * a + p * p * q * b + p * q * q * c + q * q * q * d;
    I y1 = 3 * p * p * r * a + (p * p * s + 2 * p * q * r) * b + (q * q * r + 2 * p * q * s) * c +
           3 * q * q * s * d;
    I y2 = 3 * p * r * r * a + (q * r * r + 2 * p * r * s) * b + (p * s * s + 2 * q * r * s) * c +
           3 * q * s * s * d;
    I y3 = r * r * r * a + r * r * s * b + r * s * s * c + s * s * s * d;
    auto chk = [](I t) {
        if (t > I(INT64_MAX) || t < I(INT64_MIN))
            throw std::overflow_error("action result exceeds 64 bits");
        return static_cast<long long>(t);
    };
    if (dt == 1) return {chk(y0), chk(y1), chk(y2), chk(y3)};
    return {chk(-y0), chk(-y1), chk(-y2), chk(-y3)};
}

bool SubgroupSpec::contains(const IntMat2& g) const {
    if (g.det() != 1) return false;
    long long n = level;
    switch (kind) {
        case Kind::FullLevel:
            return mod_reduce(g.p - 1, n) == 0 && mod_reduce(g.q, n) == 0 &&
                   mod_reduce(g.r, n) == 0 && mod_reduce(g.s - 1, n) == 0;
        case Kind::LowerLeft:
            return mod_reduce(g.r, n) == 0;
        case Kind::UpperRight:
            return mod_reduce(g.q, n) == 0;
    }
    return false;
}

long long SubgroupSpec::index_in_sl2z() const {
    if (level == 1) return 1;
    if (level == 2) {
        switch (kind) {
            case Kind::FullLevel: return 6;
            case Kind::LowerLeft: return 3;
            case Kind::UpperRight: return 3;
        }
    }
    throw std::domain_error("subgroup index supported for levels 1 and 2 only");
}

std::string SubgroupSpec::name() const {
    std::string n = std::to_string(level);
    switch (kind) {
        case Kind::FullLevel: return "Gamma(" + n + ")";
        case Kind::LowerLeft: return "Gamma_0(" + n + ")";
        case Kind::UpperRight: return "Gamma^0(" + n + ")";
    }
    return "?";
}

bool CongruenceBox::contains(const BinaryCubicForm& x) const {
    for (const auto& cc : constraints) {
        long long v = mod_reduce(cc.coeff[0] * x.a + cc.coeff[1] * x.b + cc.coeff[2] * x.c +
                                     cc.coeff[3] * x.d,
                                 cc.modulus);
        if (!std::binary_search(cc.residues.begin(), cc.residues.end(), v)) return false;
    }
    return true;
}

long long CongruenceBox::residue_level() const {
    long long l = 1;
    for (const auto& cc : constraints) l = std::lcm(l, cc.modulus);
    return l;
}

CongruenceConstraint coord_in(int coord, long long modulus, std::vector<long long> residues) {
    CongruenceConstraint cc;
    cc.coeff[coord] = 1;
    cc.modulus = modulus;
    cc.residues = std::move(residues);
    std::sort(cc.residues.begin(), cc.residues.end());
    return cc;
}

CongruenceConstraint sum_in(std::array<long long, 4> coeff, long long modulus,
                            std::vector<long long> residues) {
    CongruenceConstraint cc;
    cc.coeff = coeff;
    cc.modulus = modulus;
    cc.residues = std::move(residues);
    std::sort(cc.residues.begin(), cc.residues.end());
    return cc;
}

// b odd, c in 2O, d in 4E.
CongruenceBox box_X1() {
    return {{coord_in(1, 2, {1}), coord_in(2, 4, {2}), coord_in(3, 8, {0})}};
}
// b odd, c in 2O, d in 4O.
CongruenceBox box_X2() {
    return {{coord_in(1, 2, {1}), coord_in(2, 4, {2}), coord_in(3, 8, {4})}};
}
// a odd, b and c even, d in 2O.
CongruenceBox box_X3() {
    return {{coord_in(0, 2, {1}), coord_in(1, 2, {0}), coord_in(2, 2, {0}),
             coord_in(3, 4, {2})}};
}
CongruenceBox box_X1p() {
    return {{coord_in(2, 2, {1}), coord_in(1, 4, {2}), coord_in(0, 8, {0})}};
}
CongruenceBox box_X2p() {
    return {{coord_in(2, 2, {1}), coord_in(1, 4, {2}), coord_in(0, 8, {4})}};
}
CongruenceBox box_X3p() {
    return {{coord_in(3, 2, {1}), coord_in(1, 2, {0}), coord_in(2, 2, {0}),
             coord_in(0, 4, {2})}};
}
// b+c odd, a+c in 2E, a+b+c+d in 4E.
CongruenceBox box_X1pp() {
    return {{sum_in({0, 1, 1, 0}, 2, {1}), sum_in({1, 0, 1, 0}, 4, {0}),
             sum_in({1, 1, 1, 1}, 8, {0})}};
}
CongruenceBox box_X2pp() {
    return {{sum_in({0, 1, 1, 0}, 2, {1}), sum_in({1, 0, 1, 0}, 4, {0}),
             sum_in({1, 1, 1, 1}, 8, {4})}};
}
// all coordinates odd, a+b+c+d in 2O.
CongruenceBox box_X3pp() {
    return {{coord_in(0, 2, {1}), coord_in(1, 2, {1}), coord_in(2, 2, {1}),
             coord_in(3, 2, {1}), sum_in({1, 1, 1, 1}, 4, {2})}};
}

} // namespace cubiczeta
