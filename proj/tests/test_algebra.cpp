#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "covalg/algebra.hpp"
#include "covalg/builders.hpp"
#include "test_util.hpp"

using namespace covalg;
using namespace covalg::builders;
using testutil::random_mat;

namespace {
const PrimeField gf5(5);

template <FieldModel F>
Mat<F> col(const F& f, std::initializer_list<long long> vals) {
    Mat<F> m(f, vals.size(), 1);
    std::size_t i = 0;
    for (long long v : vals) m.at(i++, 0) = f.from_int(v);
    return m;
}
}  // namespace

TEST_CASE("function algebra: associative, unital, idempotent basis") {
    auto fun = function_algebra(gf5, 3);
    CHECK(fun.is_associative());
    CHECK(fun.is_unital());
    auto d0 = Mat<PrimeField>::basis_col(gf5, 3, 0);
    CHECK(fun.multiply(d0, d0) == d0);
    CHECK(fun.multiply(d0, Mat<PrimeField>::basis_col(gf5, 3, 1)).is_zero());
}

TEST_CASE("structure constant validation rejects broken data") {
    // delta_0 * delta_0 = delta_1 is not associative together with unit axioms
    Mat<PrimeField> mul(gf5, 2, 4);
    mul.at(1, 0) = gf5.one();
    Mat<PrimeField> unit(gf5, 2, 1);
    unit.at(0, 0) = gf5.one();
    CHECK_THROWS_AS(Algebra<PrimeField>::create(gf5, mul, unit), bad_input);
}

TEST_CASE("ideal_generated") {
    auto fun = function_algebra(gf5, 3);
    // generated by the unit: the whole algebra
    CHECK(ideal_generated(fun, {fun.unit()}).dim() == 3);
    // generated by nothing: zero
    CHECK(ideal_generated(fun, {}).dim() == 0);
    // generated by delta_0: the line through delta_0
    auto d0 = Mat<PrimeField>::basis_col(gf5, 3, 0);
    auto j = ideal_generated(fun, {d0});
    CHECK(j.dim() == 1);
    CHECK(j.contains(d0));
    CHECK(is_ideal(fun, j));
}

TEST_CASE("square-zero algebra: every subspace of V is an ideal") {
    auto a = square_zero_algebra(gf5);
    CHECK(a.is_associative());
    CHECK(a.is_unital());
    auto v12 = col(gf5, {0, 1, 3});
    CHECK(is_ideal(a, Subspace<PrimeField>::span(v12.transpose())));
    // but a line through the unit is not
    CHECK_FALSE(is_ideal(a, Subspace<PrimeField>::span(col(gf5, {1, 1, 0}).transpose())));
}

TEST_CASE("quotient_algebra: trivial cases and Fun(3)/vanishing ideal") {
    auto fun = function_algebra(gf5, 3);

    auto q0 = quotient_algebra(fun, Subspace<PrimeField>::zero(gf5, 3));
    CHECK(q0.algebra.dim() == 3);
    CHECK(q0.proj.is_multiplicative());
    CHECK(q0.proj.is_unital());

    auto qfull = quotient_algebra(fun, Subspace<PrimeField>::full(gf5, 3));
    CHECK(qfull.algebra.is_zero_algebra());
    CHECK(qfull.proj.is_unital());  // maps into the zero algebra vacuously

    // functions vanishing on {1,2} = span(delta_2): quotient is Fun({1,2})
    auto j = ideal_generated(fun, {Mat<PrimeField>::basis_col(gf5, 3, 2)});
    auto q = quotient_algebra(fun, j);
    CHECK(q.algebra.dim() == 2);
    CHECK(q.proj.is_multiplicative());
    CHECK(q.proj.is_unital());
    CHECK(q.proj.kernel_space() == j);
    // canonical comparison with Fun(2): d_i -> class(delta_i) is an isomorphism
    auto fun2 = function_algebra(gf5, 2);
    Mat<PrimeField> phi(gf5, 2, 2);
    phi.set_col(0, q.proj.matrix * Mat<PrimeField>::basis_col(gf5, 3, 0));
    phi.set_col(1, q.proj.matrix * Mat<PrimeField>::basis_col(gf5, 3, 1));
    AlgebraMorphism<PrimeField> iso{fun2, q.algebra, phi};
    CHECK(iso.is_multiplicative());
    CHECK(iso.is_unital());
    CHECK(iso.is_injective());
    CHECK(iso.is_surjective());
}

TEST_CASE("fibre product: degenerate and function-algebra cases") {
    auto fun3 = function_algebra(gf5, 3);
    auto r12 = restriction(fun3, {0, 1});
    auto fun2 = r12.target;

    SUBCASE("second leg the identity: graph of the first") {
        auto fp = fibre_product(r12, identity_morphism(fun2));
        CHECK(fp.algebra.dim() == 3);
        CHECK(fp.pr1.is_multiplicative());
        CHECK(fp.pr1.kernel_space().intersect(fp.pr2.kernel_space()).dim() == 0);
    }

    SUBCASE("zero overlap algebra: direct sum") {
        auto z = Algebra<PrimeField>::zero(gf5);
        AlgebraMorphism<PrimeField> to_zero1{fun3, z, Mat<PrimeField>(gf5, 0, 3)};
        AlgebraMorphism<PrimeField> to_zero2{fun2, z, Mat<PrimeField>(gf5, 0, 2)};
        auto fp = fibre_product(to_zero1, to_zero2);
        CHECK(fp.algebra.dim() == 5);
    }

    SUBCASE("Fun(12) x_{Fun(2)} Fun(23) is Fun(123)") {
        // glue Fun({0,1}) and Fun({1,2}) over the middle point
        auto a1 = function_algebra(gf5, 2);
        auto a2 = function_algebra(gf5, 2);
        auto p1 = restriction(a1, {1});  // value at the shared point
        auto p2 = restriction(a2, {0});
        auto fp = fibre_product(p1, p2);
        CHECK(fp.algebra.dim() == 3);
        CHECK(fp.algebra.is_associative());
        CHECK(fp.algebra.is_unital());
        CHECK(fp.pr1.is_multiplicative());
        CHECK(fp.pr2.is_multiplicative());
        CHECK(fp.pr1.is_surjective());
        // commutative with idempotent basis: a function algebra in disguise
        for (std::size_t i = 0; i < 3; ++i) {
            auto e = Mat<PrimeField>::basis_col(gf5, 3, i);
            CHECK(fp.algebra.multiply(e, e) == e);
        }
    }
}

TEST_CASE("surjectivity criterion (vector-space level)") {
    auto fun3 = function_algebra(gf5, 3);
    auto r1 = restriction(fun3, {0, 1});
    auto r2 = restriction(fun3, {1, 2});
    auto s1 = restriction(r1.target, {1});  // Fun({0,1}) -> Fun({1})
    auto s2 = restriction(r2.target, {0});  // Fun({1,2}) -> Fun({1})

    SUBCASE("full function algebra: criterion holds") {
        auto cert = surjectivity_criterion(r1.matrix, r2.matrix, s1.matrix, s2.matrix);
        CHECK(cert.surjective);
        CHECK(cert.ker_composite == cert.ker_sum);
        CHECK(cert.ker_eta == kernel_space(r1.matrix).intersect(kernel_space(r2.matrix)));
    }

    SUBCASE("subalgebra {f(0) = f(2)}: criterion fails") {
        // basis of the subalgebra: delta_0 + delta_2, delta_1
        Mat<PrimeField> incl(gf5, 3, 2);
        incl.at(0, 0) = gf5.one();
        incl.at(2, 0) = gf5.one();
        incl.at(1, 1) = gf5.one();
        auto phi1 = r1.matrix * incl;
        auto phi2 = r2.matrix * incl;
        auto cert = surjectivity_criterion(phi1, phi2, s1.matrix, s2.matrix);
        CHECK_FALSE(cert.surjective);
        CHECK(cert.ker_composite.dim() > cert.ker_sum.dim());
    }
}

TEST_CASE("covering_check: function algebra restrictions form a covering") {
    auto fun3 = function_algebra(gf5, 3);
    auto c = covering_check(fun3, {restriction(fun3, {0, 1}), restriction(fun3, {1, 2})});
    CHECK(c.all_surjective());
    CHECK(c.weak);
    CHECK(c.distributivity.distributive);
    CHECK(c.is_covering());
}

TEST_CASE("covering_check: N=1 identity is a covering") {
    auto fun2 = function_algebra(gf5, 2);
    auto c = covering_check(fun2, {identity_morphism(fun2)});
    CHECK(c.is_covering());
}

TEST_CASE("covering_check: square-zero line ideals are weak but not distributive") {
    auto a = square_zero_algebra(gf5);
    auto c = covering_check(a, square_zero_line_quotients(a));
    CHECK(c.all_surjective());
    CHECK(c.weak);
    CHECK_FALSE(c.distributivity.distributive);
    REQUIRE(c.distributivity.witness.has_value());
    // the witness is a concrete pair of antichains violating one law
    auto w = *c.distributivity.witness;
    auto oracle = c.ideal_oracle();
    auto r1 = R_map(oracle, w.l1), r2 = R_map(oracle, w.l2);
    if (w.law == LatticeLaw::meet)
        CHECK_FALSE(R_map(oracle, antichain_meet(w.l1, w.l2)) == oracle.meet(r1, r2));
    else
        CHECK_FALSE(R_map(oracle, antichain_join(w.l1, w.l2)) == oracle.join(r1, r2));
}

TEST_CASE("ideal oracle consistency: a <= b iff a + b = a") {
    auto fun3 = function_algebra(gf5, 3);
    auto c = covering_check(fun3, {restriction(fun3, {0, 1}), restriction(fun3, {1, 2})});
    auto o = c.ideal_oracle();
    auto all = enumerate_antichains(2);
    for (const auto& l1 : all)
        for (const auto& l2 : all) {
            auto a = R_map(o, l1), b = R_map(o, l2);
            CHECK(o.leq(a, b) == (o.meet(a, b) == a));
        }
}

TEST_CASE("reconstruct: multi-pullback isomorphism") {
    SUBCASE("N=1") {
        auto fun2 = function_algebra(gf5, 2);
        auto c = covering_check(fun2, {identity_morphism(fun2)});
        auto mp = reconstruct(c);
        CHECK(mp.verified);
        CHECK(mp.algebra.dim() == 2);
    }
    SUBCASE("N=2 function algebra") {
        auto fun3 = function_algebra(gf5, 3);
        auto c = covering_check(fun3, {restriction(fun3, {0, 1}), restriction(fun3, {1, 2})});
        auto mp = reconstruct(c);
        CHECK(mp.verified);
        CHECK(mp.algebra.dim() == 3);
        CHECK(mp.iso.rank() == 3);
    }
    SUBCASE("N=3 overlapping restrictions of Fun(4)") {
        auto fun4 = function_algebra(gf5, 4);
        auto c = covering_check(fun4, {restriction(fun4, {0, 1}), restriction(fun4, {1, 2}),
                                       restriction(fun4, {2, 3})});
        REQUIRE(c.is_covering());
        auto mp = reconstruct(c);
        CHECK(mp.verified);
        CHECK(mp.algebra.dim() == 4);
        CHECK(mp.iso.rank() == 4);
        AlgebraMorphism<PrimeField> iso{fun4, mp.algebra, mp.iso};
        CHECK(iso.is_multiplicative());
        CHECK(iso.is_unital());
    }
}

TEST_CASE("crt_glue: pairwise and triple gluing on function algebras") {
    auto fun3 = function_algebra(gf5, 3);
    auto c = covering_check(fun3, {restriction(fun3, {0, 1}), restriction(fun3, {1, 2})});
    auto a1 = Antichain::from_members(2, {0b01});
    auto a2 = Antichain::from_members(2, {0b10});

    SUBCASE("single open: identity") {
        auto out = crt_glue(c, {a1}, {col(gf5, {1, 2, 0})});
        CHECK(out.ok);
        CHECK(out.ambiguity_dim == open_set_ideal(c, a1).dim());
    }

    SUBCASE("glue f on the first piece and g on the second with matching overlap value") {
        // local data: lift of (f(1),f(2)) = (3,4) and of (g(2),g(3)) = (4,2)
        auto out = crt_glue(c, {a1, a2}, {col(gf5, {3, 4, 0}), col(gf5, {0, 4, 2})});
        REQUIRE(out.ok);
        CHECK(out.ambiguity_dim == 0);  // union is the whole space, kernel 0
        CHECK(out.lift == col(gf5, {3, 4, 2}));
    }

    SUBCASE("incompatible data is rejected") {
        auto out = crt_glue(c, {a1, a2}, {col(gf5, {3, 4, 0}), col(gf5, {0, 1, 2})});
        CHECK_FALSE(out.ok);
        CHECK(!out.error.empty());
    }

    SUBCASE("non-covering refused") {
        auto sz = square_zero_algebra(gf5);
        auto bad = covering_check(sz, square_zero_line_quotients(sz));
        CHECK_THROWS_AS(crt_glue(bad, {a1}, {col(gf5, {1, 0, 0})}), refused);
    }
}

TEST_CASE("crt_glue: triple overlap on Fun(4), order independence") {
    auto fun4 = function_algebra(gf5, 4);
    auto c = covering_check(fun4, {restriction(fun4, {0, 1}), restriction(fun4, {1, 2}),
                                   restriction(fun4, {2, 3})});
    REQUIRE(c.is_covering());
    auto u1 = Antichain::from_members(3, {0b001});
    auto u2 = Antichain::from_members(3, {0b010});
    auto u3 = Antichain::from_members(3, {0b100});
    // global function (1,2,3,4) restricted to the three pieces, lifted arbitrarily
    auto p1 = col(gf5, {1, 2, 0, 0});
    auto p2 = col(gf5, {0, 2, 3, 0});
    auto p3 = col(gf5, {0, 0, 3, 4});
    auto out = crt_glue(c, {u1, u2, u3}, {p1, p2, p3});
    REQUIRE(out.ok);
    CHECK(out.ambiguity_dim == 0);
    CHECK(out.lift == col(gf5, {1, 2, 3, 4}));
    // permuted order gives the same global element
    auto out2 = crt_glue(c, {u3, u1, u2}, {p3, p1, p2});
    REQUIRE(out2.ok);
    CHECK(out2.lift == out.lift);
}

TEST_CASE("section-then-glue identity on random global elements") {
    auto fun4 = function_algebra(gf5, 4);
    auto c = covering_check(fun4, {restriction(fun4, {0, 1}), restriction(fun4, {1, 2}),
                                   restriction(fun4, {2, 3})});
    std::vector<Antichain> opens;
    for (int i = 0; i < 3; ++i) opens.push_back(Antichain::from_members(3, {SubsetMask(1) << i}));
    for (int trial = 0; trial < 20; ++trial) {
        auto p = random_mat(gf5, 4, 1);
        // restriction of p to U_i is represented by the lift p itself
        auto out = crt_glue(c, opens, {p, p, p});
        REQUIRE(out.ok);
        CHECK(out.lift == p);
    }
}

TEST_CASE("kereta identity on every fibre product built") {
    auto a1 = function_algebra(gf5, 3);
    auto a2 = function_algebra(gf5, 2);
    auto m1 = restriction(a1, {2});
    auto m2 = restriction(a2, {1});
    auto fp = fibre_product(m1, m2);
    CHECK(fp.pr1.kernel_space().intersect(fp.pr2.kernel_space()).dim() == 0);
}
