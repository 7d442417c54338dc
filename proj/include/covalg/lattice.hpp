// Presentation maps between antichains and a client lattice, plus a
// terminating distributivity decision procedure.
//
// A lattice oracle supplies N generators, meet, join, a partial order and
// the bottom element (the value of the empty join). Two oracles are used in
// this project: open subsets of the finite projective space (meet = cap,
// join = cup, leq = subset) and ideal lattices (meet = +, join = cap,
// leq = reverse inclusion, so the unit ideal is the bottom).

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "covalg/antichain.hpp"

namespace covalg {

template <class O>
concept LatticeOracleModel = requires(const O& o, const typename O::Elem& a, const typename O::Elem& b, int i) {
    typename O::Elem;
    { o.generator_count() } -> std::convertible_to<int>;
    { o.generator(i) } -> std::convertible_to<typename O::Elem>;
    { o.meet(a, b) } -> std::convertible_to<typename O::Elem>;
    { o.join(a, b) } -> std::convertible_to<typename O::Elem>;
    { o.leq(a, b) } -> std::convertible_to<bool>;
    { o.bottom() } -> std::convertible_to<typename O::Elem>;
    { a == b } -> std::convertible_to<bool>;
};

// R(l) = join over members {i1..ik} of (g_i1 /\ ... /\ g_ik);
// the empty antichain maps to the bottom element (empty join).
template <LatticeOracleModel O>
typename O::Elem R_map(const O& oracle, const Antichain& l) {
    if (l.generators() != oracle.generator_count())
        throw std::invalid_argument("R_map: generator count mismatch");
    std::optional<typename O::Elem> acc;
    for (SubsetMask u : l.members()) {
        std::optional<typename O::Elem> m;
        for (int i = 0; i < l.generators(); ++i)
            if (u & (SubsetMask(1) << i)) {
                auto g = oracle.generator(i);
                m = m ? oracle.meet(*m, g) : g;
            }
        acc = acc ? oracle.join(*acc, *m) : *m;
    }
    return acc ? *acc : oracle.bottom();
}

// L(x) = min{ u nonempty : meet of generators over u <= x }
template <LatticeOracleModel O>
Antichain L_map(const O& oracle, const typename O::Elem& x) {
    const int n = oracle.generator_count();
    std::vector<SubsetMask> below;
    for (SubsetMask u = 1; u < (SubsetMask(1) << n); ++u) {
        std::optional<typename O::Elem> m;
        for (int i = 0; i < n; ++i)
            if (u & (SubsetMask(1) << i)) {
                auto g = oracle.generator(i);
                m = m ? oracle.meet(*m, g) : g;
            }
        if (oracle.leq(*m, x)) below.push_back(u);
    }
    return min_antichain(n, below);
}

enum class LatticeLaw { meet, join };

struct DistributivityWitness {
    Antichain l1, l2;
    LatticeLaw law;
};

template <class ElemT>
struct DistributivityVerdict {
    bool distributive = false;
    std::optional<DistributivityWitness> witness;
    // generated lattice carrier when distributive: images R(l) in enumeration order
    std::vector<ElemT> carrier;
};

// Decides whether the lattice generated by the oracle's generators is
// distributive. For every pair of antichains it compares R(l1 /\ l2) with
// R(l1) /\ R(l2) and likewise for joins; if all pairs agree, the image of R
// is closed under both operations and is a homomorphic image of the
// distributive antichain lattice, hence distributive. A failing pair is the
// reported witness (first in canonical pair order). Always terminates.
template <LatticeOracleModel O>
DistributivityVerdict<typename O::Elem> distributivity_check(const O& oracle, int cap = kDefaultEnumCap) {
    const int n = oracle.generator_count();
    DistributivityVerdict<typename O::Elem> verdict;
    auto antichains = enumerate_antichains(n, cap);
    std::map<Antichain, typename O::Elem> cache;
    auto r_of = [&](const Antichain& l) -> const typename O::Elem& {
        auto it = cache.find(l);
        if (it == cache.end()) it = cache.emplace(l, R_map(oracle, l)).first;
        return it->second;
    };
    for (std::size_t i = 0; i < antichains.size(); ++i)
        for (std::size_t j = 0; j < antichains.size(); ++j) {
            if (!(r_of(antichain_meet(antichains[i], antichains[j])) ==
                  oracle.meet(r_of(antichains[i]), r_of(antichains[j])))) {
                verdict.witness = DistributivityWitness{antichains[i], antichains[j], LatticeLaw::meet};
                return verdict;
            }
            if (!(r_of(antichain_join(antichains[i], antichains[j])) ==
                  oracle.join(r_of(antichains[i]), r_of(antichains[j])))) {
                verdict.witness = DistributivityWitness{antichains[i], antichains[j], LatticeLaw::join};
                return verdict;
            }
        }
    for (const auto& l : antichains) verdict.carrier.push_back(r_of(l));
    verdict.distributive = true;
    return verdict;
}

}  // namespace covalg
