#pragma once

#include "cubiczeta/forms.hpp"

#include <vector>

namespace cubiczeta {

// Integral binary quadratic form A u^2 + B uv + C v^2.
struct QuadraticForm {
    long long A = 0, B = 0, C = 0;

    bool operator==(const QuadraticForm&) const = default;
    long long disc() const;
    bool positive_definite() const { return disc() < 0 && A > 0; }
};

// Substitution action (u,v) -> (pu+rv, qu+sv), same pattern as on cubics;
// left action for det = 1 matrices.
QuadraticForm quad_act(const IntMat2& g, const QuadraticForm& f);

// Gauss reduction of a positive definite form. Returns the unique reduced
// form (-A < B <= A <= C, and B >= 0 when A == C) together with g such that
// quad_act(g, f) is the reduced form.
struct ReducedQuadratic {
    QuadraticForm form;
    IntMat2 transform;
};
ReducedQuadratic gauss_reduce(const QuadraticForm& f);

// All g in SL_2(Z) with quad_act(g, f) == f, for f positive definite.
// Size is 2, 4 or 6 according to the discriminant of the primitive part.
std::vector<IntMat2> proper_automorphisms(const QuadraticForm& f);

} // namespace cubiczeta
