#include "covalg/projspace.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace covalg {

std::uint64_t OpenSet::full_mask(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("OpenSet: need 1 <= n <= 6 (64-bit point sets)");
    return (std::uint64_t(1) << ((1 << n) - 1)) - 1;  // bits 0 .. 2^n-2
}

int OpenSet::point_count() const { return std::popcount(points_); }

std::vector<PointMask> OpenSet::points() const {
    std::vector<PointMask> ps;
    for (PointMask p = 1; p < (PointMask(1) << n_); ++p)
        if (contains(p)) ps.push_back(p);
    return ps;
}

OpenSet subbasic(int i, int n) {
    if (i < 1 || i > n) throw std::invalid_argument("subbasic: index out of range");
    std::uint64_t bits = 0;
    for (PointMask p = 1; p < (PointMask(1) << n); ++p)
        if (p & (PointMask(1) << (i - 1))) bits |= std::uint64_t(1) << (p - 1);
    return OpenSet(n, bits);
}

std::vector<OpenSet> enumerate_topology(int n, int cap) {
    if (n > cap)
        throw cap_exceeded("enumerate_topology: n = " + std::to_string(n) + " exceeds cap " +
                           std::to_string(cap));
    OpenSet::full_mask(n);  // range check
    std::set<std::uint64_t> known;
    std::vector<std::uint64_t> elems;
    auto add = [&](std::uint64_t bits) {
        if (known.insert(bits).second) elems.push_back(bits);
    };
    add(0);
    for (int i = 1; i <= n; ++i) add(subbasic(i, n).point_bits());
    // worklist closure under pairwise union and intersection
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            add(elems[i] | elems[j]);
            add(elems[i] & elems[j]);
        }
    std::vector<OpenSet> out;
    out.reserve(known.size());
    for (std::uint64_t bits : known) out.emplace_back(n, bits);
    return out;
}

OpenSet open_from_antichain(const Antichain& l) {
    return R_map(OpenSetOracle{l.generators()}, l);
}

Antichain antichain_from_open(const OpenSet& u) {
    return L_map(OpenSetOracle{u.generators()}, u);
}

EmbeddingResult quotient_and_embed(const CoveredSet& x, int cap) {
    const int n = static_cast<int>(x.covers.size());
    if (n < 1 || n > cap)
        throw cap_exceeded("quotient_and_embed: cover count " + std::to_string(n) +
                           " outside 1..cap");
    std::vector<PointMask> sig(x.size, 0);
    for (int i = 0; i < n; ++i)
        for (std::size_t e : x.covers[i]) {
            if (e >= x.size) throw std::invalid_argument("quotient_and_embed: element out of range");
            sig[e] |= PointMask(1) << i;
        }
    for (std::size_t e = 0; e < x.size; ++e)
        if (sig[e] == 0)
            throw std::invalid_argument("quotient_and_embed: element " + std::to_string(e) +
                                        " lies outside every cover (not a covering)");
    std::map<PointMask, std::vector<std::size_t>> fibres;
    for (std::size_t e = 0; e < x.size; ++e) fibres[sig[e]].push_back(e);

    EmbeddingResult res;
    for (auto& [s, members] : fibres) {
        res.signatures.push_back(s);
        res.classes.push_back(std::move(members));
    }

    // generic position: every intersection of chosen covers with complements
    // of a disjoint index set is nonempty (nonempty choice of covers)
    res.generic = true;
    const PointMask all = (PointMask(1) << n) - 1;
    for (PointMask lam = 1; lam <= all && res.generic; ++lam) {
        for (PointMask gam = 0; gam <= all; ++gam) {
            if ((lam & gam) != 0) continue;
            bool hit = false;
            for (PointMask s : res.signatures)
                if ((s & lam) == lam && (s & gam) == 0) { hit = true; break; }
            if (!hit) { res.generic = false; break; }
        }
    }
    return res;
}

}  // namespace covalg
