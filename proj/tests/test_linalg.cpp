#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "covalg/matrix.hpp"
#include "covalg/subspace.hpp"
#include "test_util.hpp"

using namespace covalg;
using testutil::random_mat;
using testutil::random_subspace;

namespace {
const PrimeField gf5(5);
const RationalField qq;

template <FieldModel F>
Mat<F> mat(const F& f, std::size_t r, std::size_t c, std::initializer_list<long long> vals) {
    std::vector<typename F::Elem> data;
    for (long long v : vals) data.push_back(f.from_int(v));
    return Mat<F>::from_rows(f, r, c, std::move(data));
}
}  // namespace

TEST_CASE("solve_affine: identity, zero and underdetermined systems") {
    auto id2 = Mat<RationalField>::identity(qq, 2);
    auto b = mat(qq, 2, 1, {1, 0});
    auto x = solve_affine(id2, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    auto zero = Mat<RationalField>::zero(qq, 2, 2);
    auto zb = Mat<RationalField>::zero(qq, 2, 1);
    auto zx = solve_affine(zero, zb);
    REQUIRE(zx.has_value());
    CHECK(zx->is_zero());

    // no solution
    CHECK_FALSE(solve_affine(zero, b).has_value());

    PrimeField gf2(2);
    auto a = mat(gf2, 1, 2, {1, 1});
    auto b2 = mat(gf2, 1, 1, {1});
    auto x2 = solve_affine(a, b2);
    REQUIRE(x2.has_value());
    CHECK(a * *x2 == b2);  // any valid representative
}

TEST_CASE("solve_affine: dimension mismatch throws") {
    auto a = Mat<RationalField>::identity(qq, 2);
    auto b = Mat<RationalField>::zero(qq, 3, 1);
    CHECK_THROWS_AS(solve_affine(a, b), std::invalid_argument);
}

TEST_CASE("subspace_combine: trivial cases") {
    auto u = random_subspace(gf5, 4, 2);
    CHECK(subspace_combine(u, u, CombineMode::sum) == u);
    CHECK(subspace_combine(u, u, CombineMode::intersection) == u);

    auto e1 = Subspace<RationalField>::span(mat(qq, 1, 2, {1, 0}));
    auto e2 = Subspace<RationalField>::span(mat(qq, 1, 2, {0, 1}));
    CHECK(e1.sum(e2) == Subspace<RationalField>::full(qq, 2));
    CHECK(e1.intersect(e2) == Subspace<RationalField>::zero(qq, 2));
}

TEST_CASE("three distinct lines in a plane: canonical non-distributivity witness") {
    auto l1 = Subspace<PrimeField>::span(mat(gf5, 1, 2, {1, 0}));
    auto l2 = Subspace<PrimeField>::span(mat(gf5, 1, 2, {0, 1}));
    auto l3 = Subspace<PrimeField>::span(mat(gf5, 1, 2, {1, 1}));
    CHECK(l1.intersect(l2.sum(l3)) == l1);
    CHECK(l1.intersect(l2).sum(l1.intersect(l3)) == Subspace<PrimeField>::zero(gf5, 2));
}

TEST_CASE("quotient_maps: projection, section, kernel") {
    // J = 0: quotient is the whole space
    auto j0 = Subspace<RationalField>::zero(qq, 3);
    auto q0 = quotient_maps(j0);
    CHECK(q0.proj.rows() == 3);
    CHECK(q0.proj * q0.section == Mat<RationalField>::identity(qq, 3));

    // J = ambient: quotient dimension 0
    auto jfull = Subspace<RationalField>::full(qq, 3);
    auto qf = quotient_maps(jfull);
    CHECK(qf.proj.rows() == 0);

    // ambient 3, J = span(e3)
    auto j = Subspace<RationalField>::span(mat(qq, 1, 3, {0, 0, 1}));
    auto q = quotient_maps(j);
    CHECK(q.proj.rows() == 2);
    CHECK(q.proj * q.section == Mat<RationalField>::identity(qq, 2));
    CHECK(kernel_space(q.proj) == j);

    // preferred lift becomes a section value
    auto u = mat(qq, 3, 1, {1, 1, 0});
    auto qu = quotient_maps(j, &u);
    CHECK(qu.section * (qu.proj * u) == u);
}

TEST_CASE("tensor: identities and the kernel intersection identity") {
    auto idm = Mat<PrimeField>::identity(gf5, 2);
    auto idn = Mat<PrimeField>::identity(gf5, 3);
    CHECK(Mat<PrimeField>::kron(idm, idn) == Mat<PrimeField>::identity(gf5, 6));

    auto f = random_mat(gf5, 3, 2);
    auto z = Mat<PrimeField>::zero(gf5, 2, 2);
    CHECK(Mat<PrimeField>::kron(f, z).is_zero());

    // ker(f (x) id) cap (id (x) f) = ker f (x) ker f on a 2x2 example
    auto f22 = mat(gf5, 2, 2, {1, 2, 2, 4});  // rank 1
    auto id2 = Mat<PrimeField>::identity(gf5, 2);
    auto kf = f22.kernel();  // rows = basis of ker f
    REQUIRE(kf.rows() == 1);
    auto lhs = kernel_space(Mat<PrimeField>::kron(f22, id2))
                   .intersect(kernel_space(Mat<PrimeField>::kron(id2, f22)));
    auto kcol = kf.transpose();
    auto rhs = Subspace<PrimeField>::span_cols(Mat<PrimeField>::kron(kcol, kcol));
    CHECK(lhs == rhs);
}

TEST_CASE("echelon canonicity: sum/intersection are commutative, associative, idempotent") {
    for (int trial = 0; trial < 25; ++trial) {
        auto u = random_subspace(gf5, 5, 2);
        auto v = random_subspace(gf5, 5, 3);
        auto w = random_subspace(gf5, 5, 2);
        CHECK(u.sum(v) == v.sum(u));
        CHECK(u.intersect(v) == v.intersect(u));
        CHECK(u.sum(u) == u);
        CHECK(u.intersect(u) == u);
        CHECK(u.sum(v.sum(w)) == u.sum(v).sum(w));
        CHECK(u.intersect(v.intersect(w)) == u.intersect(v).intersect(w));
        // dimension formula
        CHECK(u.sum(v).dim() + u.intersect(v).dim() == u.dim() + v.dim());
    }
}

TEST_CASE("modularity of the subspace lattice") {
    for (int trial = 0; trial < 25; ++trial) {
        auto u = random_subspace(gf5, 5, 3);
        // W inside U: span of random combinations of U's basis
        auto coeffs = random_mat(gf5, 2, u.dim());
        auto w = u.dim() == 0 ? Subspace<PrimeField>::zero(gf5, 5)
                              : Subspace<PrimeField>::span(coeffs * u.basis());
        auto v = random_subspace(gf5, 5, 2);
        CHECK(u.intersect(v.sum(w)) == u.intersect(v).sum(w));
    }
}

TEST_CASE("rank-nullity on random maps, both fields") {
    for (int trial = 0; trial < 15; ++trial) {
        auto a = random_mat(gf5, 4, 6);
        CHECK(a.rank() + a.kernel().rows() == a.cols());
        auto b = random_mat(qq, 3, 5);
        CHECK(b.rank() + b.kernel().rows() == b.cols());
    }
}

TEST_CASE("solve returns exact solutions over the rationals") {
    for (int trial = 0; trial < 10; ++trial) {
        auto a = random_mat(qq, 4, 4);
        auto x0 = random_mat(qq, 4, 1);
        auto b = a * x0;
        auto x = a.solve(b);
        REQUIRE(x.has_value());
        CHECK(a * *x == b);
    }
}

TEST_CASE("scalar parsing and printing round-trips") {
    CHECK(qq.to_string(qq.parse("3/4")) == "3/4");
    CHECK(qq.to_string(qq.parse("-6/8")) == "-3/4");
    CHECK(qq.to_string(qq.parse("5")) == "5");
    CHECK(gf5.parse("7") == 2);
    CHECK(gf5.parse("-1") == 4);
    CHECK(gf5.to_string(gf5.parse("3")) == "3");
    CHECK_THROWS_AS(qq.parse("1/0"), bad_input);
    CHECK_THROWS_AS(qq.parse("x"), bad_input);
    CHECK_THROWS_AS(PrimeField(6), bad_input);
}
