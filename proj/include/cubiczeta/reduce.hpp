#pragma once

#include "cubiczeta/forms.hpp"
#include "cubiczeta/quadratic.hpp"

#include <utility>
#include <vector>

namespace cubiczeta {

// Primitive projective rational zeros (u, v) of x, normalized to v > 0 or
// (1, 0). A nonzero form has at most three.
std::vector<std::pair<long long, long long>> rational_roots(const BinaryCubicForm& x);

// Whether x has a rational linear factor.
bool is_reducible(const BinaryCubicForm& x);

// Canonical representative of the SL_2(Z)-orbit of x; requires disc != 0.
// reduce(act(g, x)) == reduce(x) for every g in SL_2(Z), and reduce is
// idempotent. Reducible forms are normalized to a = 0 with the translation
// freedom pinned; irreducible forms with positive discriminant are pinned by
// Gauss-reducing the Hessian; irreducible forms with negative discriminant
// are pinned by moving the complex root pair into the classical fundamental
// domain, with all comparisons done in exact integer arithmetic.
BinaryCubicForm reduce(const BinaryCubicForm& x);

// Order of {g in SL_2(Z) : g.x = x}; always 1 or 3 for disc != 0.
int stabilizer_order(const BinaryCubicForm& x);

// The stabilizer itself ({I} or {I, w, w^2}).
std::vector<IntMat2> stabilizer_elements(const BinaryCubicForm& x);

// Exact test used by the negative-discriminant enumeration: x irreducible,
// disc < 0, a > 0, and the complex root pair lies strictly inside the
// fundamental domain |Re z| < 1/2, |z| > 1. (Boundary cases cannot occur for
// cubic irrationalities.)
bool negdisc_reduced(const BinaryCubicForm& x);

} // namespace cubiczeta
