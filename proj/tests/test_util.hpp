// Shared helpers for the unit suites: deterministic random matrices,
// subspaces and scalars over GF(p) and the rationals.

#pragma once

#include <random>

#include "covalg/matrix.hpp"
#include "covalg/subspace.hpp"

namespace covalg::testutil {

inline std::mt19937& rng() {
    static std::mt19937 gen(20240811u);
    return gen;
}

template <FieldModel F>
typename F::Elem random_scalar(const F& f) {
    if constexpr (std::is_same_v<F, PrimeField>) {
        std::uniform_int_distribution<std::uint32_t> d(0, f.modulus() - 1);
        return d(rng());
    } else {
        std::uniform_int_distribution<int> num(-6, 6);
        std::uniform_int_distribution<int> den(1, 4);
        return f.div(f.from_int(num(rng())), f.from_int(den(rng())));
    }
}

template <FieldModel F>
Mat<F> random_mat(const F& f, std::size_t r, std::size_t c) {
    Mat<F> m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = random_scalar(f);
    return m;
}

template <FieldModel F>
Subspace<F> random_subspace(const F& f, std::size_t ambient, std::size_t gens) {
    return Subspace<F>::span(random_mat(f, gens, ambient));
}

}  // namespace covalg::testutil
