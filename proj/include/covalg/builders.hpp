// Constructors for the worked examples: function algebras on finite sets,
// restriction surjections, the square-zero algebra whose three line ideals
// generate a non-distributive lattice, cyclic group algebras, comodule
// structures on function algebras of free cyclic-group sets, and the
// root-of-unity smash product.

#pragma once

#include "covalg/hopf_glue.hpp"

namespace covalg::builders {

// Fun(X) for X = {0..size-1}: pointwise multiplication of delta functions.
template <FieldModel F>
Algebra<F> function_algebra(const F& f, std::size_t size) {
    Mat<F> mul(f, size, size * size);
    for (std::size_t i = 0; i < size; ++i) mul.at(i, i * size + i) = f.one();
    Mat<F> unit(f, size, 1);
    for (std::size_t i = 0; i < size; ++i) unit.at(i, 0) = f.one();
    return Algebra<F>::create(f, std::move(mul), std::move(unit), false);
}

// restriction Fun(X) -> Fun(S) for S a list of points of X
template <FieldModel F>
AlgebraMorphism<F> restriction(const Algebra<F>& fun, const std::vector<std::size_t>& points) {
    const F& f = fun.field();
    Algebra<F> target = function_algebra(f, points.size());
    Mat<F> m(f, points.size(), fun.dim());
    for (std::size_t r = 0; r < points.size(); ++r) {
        if (points[r] >= fun.dim()) throw std::invalid_argument("restriction: point out of range");
        m.at(r, points[r]) = f.one();
    }
    return {fun, target, std::move(m)};
}

// k (+) V with dim V = 2 and V^2 = 0; basis (1, v1, v2). Every subspace of V
// is a two-sided ideal.
template <FieldModel F>
Algebra<F> square_zero_algebra(const F& f) {
    const std::size_t n = 3;
    Mat<F> mul(f, n, n * n);
    auto put = [&](std::size_t i, std::size_t j, std::size_t k) { mul.at(k, i * n + j) = f.one(); };
    put(0, 0, 0);
    put(0, 1, 1);
    put(1, 0, 1);
    put(0, 2, 2);
    put(2, 0, 2);
    // v_i v_j = 0
    return Algebra<F>::create(f, std::move(mul), Mat<F>::basis_col(f, n, 0), false);
}

// the three quotients of the square-zero algebra by the line ideals
// span(v1), span(v2), span(v1+v2): a weak covering that is not a covering
template <FieldModel F>
std::vector<AlgebraMorphism<F>> square_zero_line_quotients(const Algebra<F>& a) {
    const F& f = a.field();
    std::vector<Mat<F>> lines;
    for (int which = 0; which < 3; ++which) {
        Mat<F> v(f, 3, 1);
        if (which == 0) v.at(1, 0) = f.one();
        if (which == 1) v.at(2, 0) = f.one();
        if (which == 2) { v.at(1, 0) = f.one(); v.at(2, 0) = f.one(); }
        lines.push_back(std::move(v));
    }
    std::vector<AlgebraMorphism<F>> out;
    for (const auto& v : lines) {
        auto q = quotient_algebra(a, Subspace<F>::span(v.transpose()));
        out.push_back(q.proj);
    }
    return out;
}

// group algebra of Z/m: basis g^0..g^{m-1}, group-like coproduct
template <FieldModel F>
HopfAlgebra<F> cyclic_group_algebra(const F& f, std::size_t m) {
    if (m == 0) throw std::invalid_argument("cyclic_group_algebra: need m >= 1");
    Mat<F> mul(f, m, m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) mul.at((i + j) % m, i * m + j) = f.one();
    Algebra<F> h = Algebra<F>::create(f, std::move(mul), Mat<F>::basis_col(f, m, 0), false);
    Mat<F> cop(f, m * m, m), counit(f, 1, m), antipode(f, m, m);
    for (std::size_t j = 0; j < m; ++j) {
        cop.at(j * m + j, j) = f.one();
        counit.at(0, j) = f.one();
        antipode.at((m - j) % m, j) = f.one();
    }
    return HopfAlgebra<F>::create(std::move(h), std::move(cop), std::move(counit),
                                  std::move(antipode));
}

// P = H coacting on itself by the coproduct
template <FieldModel F>
ComoduleAlgebra<F> regular_comodule(const HopfAlgebra<F>& h) {
    return ComoduleAlgebra<F>::create(h.algebra, h, h.coproduct);
}

// p |-> p (x) 1
template <FieldModel F>
ComoduleAlgebra<F> trivial_comodule(const Algebra<F>& p, const HopfAlgebra<F>& h) {
    const F& f = p.field();
    return ComoduleAlgebra<F>::create(
        p, h, Mat<F>::kron(Mat<F>::identity(f, p.dim()), h.algebra.unit()));
}

// a primitive m-th root of unity; exists in GF(p) iff m | p-1, and in the
// rationals only for m <= 2
template <FieldModel F>
typename F::Elem primitive_root_of_unity(const F& f, std::size_t m) {
    if (m == 1) return f.one();
    if constexpr (std::is_same_v<F, PrimeField>) {
        for (std::uint32_t a = 2; a < f.modulus(); ++a) {
            typename F::Elem pw = f.one();
            bool primitive = true;
            for (std::size_t t = 1; t < m; ++t) {
                pw = f.mul(pw, a);
                if (pw == f.one()) { primitive = false; break; }
            }
            if (primitive && f.mul(pw, a) == f.one()) return a;
        }
        throw bad_input("no primitive root of unity of order " + std::to_string(m) + " in GF(" +
                        std::to_string(f.modulus()) + ")");
    } else {
        if (m == 2) return f.from_int(-1);
        throw bad_input("the rationals have no primitive root of unity of order " +
                        std::to_string(m));
    }
}

// an action of Z/m on {0..|perm|-1}: perm is the image of each point under
// the chosen generator and must have order dividing m
struct CyclicAction {
    std::size_t m = 1;
    std::vector<std::size_t> perm;

    std::size_t size() const { return perm.size(); }
    bool free() const {
        for (std::size_t x = 0; x < perm.size(); ++x) {
            std::size_t y = x;
            for (std::size_t t = 1; t < m; ++t) {
                y = perm[y];
                if (y == x) return false;
            }
        }
        return true;
    }
    void validate() const {
        for (std::size_t x : perm)
            if (x >= perm.size()) throw std::invalid_argument("CyclicAction: point out of range");
        std::vector<std::size_t> y(perm.size());
        for (std::size_t x = 0; x < perm.size(); ++x) y[x] = x;
        for (std::size_t t = 0; t < m; ++t)
            for (std::size_t x = 0; x < perm.size(); ++x) y[x] = perm[y[x]];
        for (std::size_t x = 0; x < perm.size(); ++x)
            if (y[x] != x) throw std::invalid_argument("CyclicAction: generator order does not divide m");
    }
};

// Fun(X) as a comodule algebra over the group algebra of Z/m, via the
// eigenspace grading of the translation automorphism. Needs a primitive
// m-th root of unity in the field.
template <FieldModel F>
ComoduleAlgebra<F> gset_comodule(const F& f, const CyclicAction& action) {
    action.validate();
    const std::size_t m = action.m, nx = action.size();
    auto h = cyclic_group_algebra(f, m);
    auto fun = function_algebra(f, nx);
    auto omega = primitive_root_of_unity(f, m);
    auto minv = f.inv(f.from_int(static_cast<long long>(m)));
    std::vector<typename F::Elem> pow(m);  // pow[k] = omega^k
    {
        auto w = f.one();
        for (std::size_t k = 0; k < m; ++k) {
            pow[k] = w;
            w = f.mul(w, omega);
        }
    }
    Mat<F> coaction(f, nx * m, nx);
    for (std::size_t x = 0; x < nx; ++x) {
        std::size_t y = x;
        for (std::size_t t = 0; t < m; ++t) {
            // degree-j component weight: omega^{-jt} / m
            for (std::size_t j = 0; j < m; ++j) {
                auto weight = f.mul(minv, pow[j * ((m - t) % m) % m]);
                coaction.at(y * m + j, x) = f.add(coaction.at(y * m + j, x), weight);
            }
            y = action.perm[y];
        }
    }
    return ComoduleAlgebra<F>::create(std::move(fun), std::move(h), std::move(coaction));
}

// restriction of a g-set comodule to a stable subset, as a colinear surjection
template <FieldModel F>
ComoduleSurjection<F> stable_restriction(const ComoduleAlgebra<F>& p, const CyclicAction& action,
                                         const std::vector<std::size_t>& subset) {
    const F& f = p.field();
    std::vector<std::size_t> where(action.size(), SIZE_MAX);
    for (std::size_t i = 0; i < subset.size(); ++i) where[subset[i]] = i;
    CyclicAction sub{action.m, {}};
    sub.perm.resize(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i) {
        std::size_t img = action.perm[subset[i]];
        if (img >= where.size() || where[img] == SIZE_MAX)
            throw std::invalid_argument("stable_restriction: subset is not stable");
        sub.perm[i] = where[img];
    }
    auto target = gset_comodule(f, sub);
    Mat<F> mat(f, subset.size(), action.size());
    for (std::size_t i = 0; i < subset.size(); ++i) mat.at(i, subset[i]) = f.one();
    ComoduleSurjection<F> s{p, std::move(target), std::move(mat)};
    s.require_valid("stable_restriction");
    return s;
}

// B = k[u]/(u^n - 1) acted on by Z/n via u |-> q u for a primitive n-th
// root q; the smash product is the finite model of the twisted Laurent ring
template <FieldModel F>
SmashProduct<F> root_of_unity_smash(const F& f, std::size_t n) {
    Mat<F> mul(f, n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mul.at((i + j) % n, i * n + j) = f.one();
    Algebra<F> b = Algebra<F>::create(f, std::move(mul), Mat<F>::basis_col(f, n, 0), false);
    auto h = cyclic_group_algebra(f, n);
    auto q = primitive_root_of_unity(f, n);
    Mat<F> act(f, n, n * n);  // act(v^t (x) u^a) = q^{ta} u^a
    for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t a = 0; a < n; ++a) {
            auto w = f.one();
            for (std::size_t e = 0; e < t * a % n; ++e) w = f.mul(w, q);
            act.at(a, t * n + a) = w;
        }
    }
    return smash_product(b, h, act);
}

// the vanishing ideal of u - 1 inside k[u]/(u^n - 1)
template <FieldModel F>
Subspace<F> augmentation_style_ideal(const F& f, std::size_t n) {
    // spanned by u^{a+1} - u^a
    Mat<F> rows(f, n - 1, n);
    for (std::size_t a = 0; a + 1 < n; ++a) {
        rows.at(a, a + 1) = f.one();
        rows.at(a, a) = f.neg(f.one());
    }
    return Subspace<F>::span(rows);
}

}  // namespace covalg::builders
