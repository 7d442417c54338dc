#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "covalg/projspace.hpp"

using namespace covalg;

TEST_CASE("subbasic open sets") {
    CHECK(subbasic(1, 1).points() == std::vector<PointMask>{1});
    CHECK(subbasic(1, 2).points() == std::vector<PointMask>({0b01, 0b11}));
    for (int n = 1; n <= 5; ++n) {
        auto meet = OpenSet::whole(n);
        for (int i = 1; i <= n; ++i) {
            CHECK(subbasic(i, n).point_count() == (1 << (n - 1)));
            meet = meet.set_intersection(subbasic(i, n));
        }
        // intersection of all subbasic sets is the all-ones point
        CHECK(meet.points() == std::vector<PointMask>{(PointMask(1) << n) - 1});
    }
    CHECK_THROWS_AS(subbasic(3, 2), std::invalid_argument);
}

TEST_CASE("enumerate_topology: cardinalities and bounds") {
    CHECK(enumerate_topology(1).size() == 2);
    CHECK(enumerate_topology(2).size() == 5);
    CHECK(enumerate_topology(3).size() == 19);
    CHECK(enumerate_topology(4).size() == 167);
    CHECK_THROWS_AS(enumerate_topology(7), cap_exceeded);

    for (int n = 1; n <= 4; ++n) {
        auto opens = enumerate_topology(n);
        std::set<OpenSet> set(opens.begin(), opens.end());
        CHECK(set.count(OpenSet::empty(n)) == 1);
        CHECK(set.count(OpenSet::whole(n)) == 1);
        // closed under both operations
        for (const auto& a : opens)
            for (const auto& b : opens) {
                CHECK(set.count(a.set_union(b)) == 1);
                CHECK(set.count(a.set_intersection(b)) == 1);
            }
    }
}

TEST_CASE("topology coincides pointwise with the antichain image") {
    for (int n = 1; n <= 4; ++n) {
        auto opens = enumerate_topology(n);
        std::set<OpenSet> set(opens.begin(), opens.end());
        std::set<OpenSet> image;
        for (const auto& l : enumerate_antichains(n)) image.insert(open_from_antichain(l));
        CHECK(set == image);
    }
}

TEST_CASE("open_from_antichain / antichain_from_open are mutually inverse") {
    // {{1,2}} -> points with bits 1 and 2 set
    auto l = Antichain::from_members(3, {0b011});
    auto u = open_from_antichain(l);
    for (PointMask p : u.points()) CHECK((p & 0b011) == 0b011);
    CHECK(u.point_count() == 2);

    CHECK(open_from_antichain(Antichain(3)) == OpenSet::empty(3));

    for (int n = 1; n <= 3; ++n) {
        for (const auto& a : enumerate_antichains(n))
            CHECK(antichain_from_open(open_from_antichain(a)) == a);
        for (const auto& o : enumerate_topology(n))
            CHECK(open_from_antichain(antichain_from_open(o)) == o);
    }
}

TEST_CASE("quotient_and_embed: self-covering of the projective space is generic") {
    for (int n = 2; n <= 3; ++n) {
        // X = the space itself, U_i = A_i; elements indexed by point mask - 1
        CoveredSet x;
        x.size = (std::size_t(1) << n) - 1;
        x.covers.resize(n);
        for (int i = 1; i <= n; ++i)
            for (PointMask p : subbasic(i, n).points()) x.covers[i - 1].push_back(p - 1);
        auto res = quotient_and_embed(x);
        CHECK(res.generic);
        CHECK(res.classes.size() == x.size);  // signatures are the points themselves
        std::set<PointMask> sigs(res.signatures.begin(), res.signatures.end());
        CHECK(sigs.size() == x.size);
    }
}

TEST_CASE("quotient_and_embed: degenerate and disjoint covers") {
    // X = {a}, U_1 = U_2 = {a}: one class at (1,1), not generic
    CoveredSet x{1, {{0}, {0}}};
    auto res = quotient_and_embed(x);
    CHECK(res.classes.size() == 1);
    CHECK(res.signatures == std::vector<PointMask>{0b11});
    CHECK_FALSE(res.generic);

    // two disjoint covers -> classes at (1,0) and (0,1)
    CoveredSet y{2, {{0}, {1}}};
    auto res2 = quotient_and_embed(y);
    CHECK(res2.classes.size() == 2);
    std::set<PointMask> sigs(res2.signatures.begin(), res2.signatures.end());
    CHECK(sigs == std::set<PointMask>{0b01, 0b10});

    // covering violated
    CoveredSet bad{2, {{0}, {0}}};
    CHECK_THROWS_AS(quotient_and_embed(bad), std::invalid_argument);
}

TEST_CASE("image of the embedding is open-detecting") {
    // covered set: 4 elements, U_1 = {0,1,2}, U_2 = {1,2,3}; classes by
    // signature: {0} -> 01, {1,2} -> 11, {3} -> 10
    CoveredSet x{4, {{0, 1, 2}, {1, 2, 3}}};
    auto res = quotient_and_embed(x);
    REQUIRE(res.classes.size() == 3);

    // opens of the quotient: unions of intersections of the cover images;
    // encode sets of classes as bitmasks
    auto class_of = [&](std::size_t e) {
        for (std::size_t k = 0; k < res.classes.size(); ++k)
            for (auto m : res.classes[k])
                if (m == e) return k;
        throw std::logic_error("element not classified");
    };
    std::uint32_t u1 = 0, u2 = 0;
    for (auto e : x.covers[0]) u1 |= 1u << class_of(e);
    for (auto e : x.covers[1]) u2 |= 1u << class_of(e);
    std::set<std::uint32_t> quotient_opens = {0, u1, u2, u1 & u2, u1 | u2};

    // patterns cut out by members of the open-set lattice on the image
    std::set<std::uint32_t> traces;
    for (const auto& o : enumerate_topology(2)) {
        std::uint32_t t = 0;
        for (std::size_t k = 0; k < res.signatures.size(); ++k)
            if (o.contains(res.signatures[k])) t |= 1u << k;
        traces.insert(t);
    }
    CHECK(traces == quotient_opens);
}
