#pragma once

#include "cubiczeta/forms.hpp"

#include <random>

namespace cubiczeta::testing {

inline IntMat2 random_sl2(std::mt19937_64& rng, int words = 8) {
    std::uniform_int_distribution<int> pick(0, 2);
    IntMat2 g = kIdentity;
    for (int i = 0; i < words; ++i) {
        const IntMat2 gens[3] = {kGenS, kGenT, kGenTInv};
        g = g * gens[pick(rng)];
    }
    return g;
}

inline BinaryCubicForm random_form(std::mt19937_64& rng, long long half_width) {
    std::uniform_int_distribution<long long> coeff(-half_width, half_width);
    return {coeff(rng), coeff(rng), coeff(rng), coeff(rng)};
}

inline BinaryCubicForm random_nonsingular_form(std::mt19937_64& rng, long long half_width) {
    while (true) {
        BinaryCubicForm x = random_form(rng, half_width);
        if (discriminant(x) != 0) return x;
    }
}

inline GroupElement random_rational_element(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-5, 5);
    std::uniform_int_distribution<long long> den(1, 4);
    while (true) {
        GroupElement g{Rat(num(rng), den(rng)), Rat(num(rng), den(rng)),
                       Rat(num(rng), den(rng)), Rat(num(rng), den(rng))};
        if (g.det() != 0) return g;
    }
}

} // namespace cubiczeta::testing
