// The finite space of nonzero N-bit vectors with the topology generated by
// the coordinate subbasis, its open-set lattice, and the embedding of
// arbitrary finite covered sets into it.
//
// A point is a nonzero bitmask over {1..N}; an open set is a bitset over the
// 2^N - 1 points (bit m-1 <=> point with mask m), so everything fits a
// 64-bit word for N <= 6, the enumeration cap.

#pragma once

#include <cstdint>
#include <vector>

#include "covalg/antichain.hpp"
#include "covalg/lattice.hpp"

namespace covalg {

using PointMask = std::uint32_t;  // nonzero, bit i-1 = coordinate i

class OpenSet {
  public:
    OpenSet(int n, std::uint64_t points) : n_(n), points_(points) {}
    static OpenSet empty(int n) { return OpenSet(n, 0); }
    static OpenSet whole(int n) { return OpenSet(n, full_mask(n)); }

    int generators() const { return n_; }
    std::uint64_t point_bits() const { return points_; }
    bool contains(PointMask p) const { return points_ >> (p - 1) & 1; }
    int point_count() const;
    std::vector<PointMask> points() const;

    OpenSet set_union(const OpenSet& o) const { return OpenSet(n_, points_ | o.points_); }
    OpenSet set_intersection(const OpenSet& o) const { return OpenSet(n_, points_ & o.points_); }
    bool subset_of(const OpenSet& o) const { return (points_ & ~o.points_) == 0; }

    friend bool operator==(const OpenSet&, const OpenSet&) = default;
    friend bool operator<(const OpenSet& a, const OpenSet& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.points_ < b.points_;
    }

    static std::uint64_t full_mask(int n);

  private:
    int n_;
    std::uint64_t points_;
};

// A_i = { points with coordinate i set }, 1 <= i <= n; |A_i| = 2^(n-1)
OpenSet subbasic(int i, int n);

struct OpenSetOracle {
    using Elem = OpenSet;
    int n;
    int generator_count() const { return n; }
    OpenSet generator(int i) const { return subbasic(i + 1, n); }
    OpenSet meet(const OpenSet& a, const OpenSet& b) const { return a.set_intersection(b); }
    OpenSet join(const OpenSet& a, const OpenSet& b) const { return a.set_union(b); }
    bool leq(const OpenSet& a, const OpenSet& b) const { return a.subset_of(b); }
    OpenSet bottom() const { return OpenSet::empty(n); }
};

// Closes {A_i} and the empty set under union and intersection to a fixpoint
// by combining all pairs; the result is sorted by point bitset. Quadratic in
// the answer, practical through n = 5.
std::vector<OpenSet> enumerate_topology(int n, int cap = kDefaultEnumCap);

OpenSet open_from_antichain(const Antichain& l);
Antichain antichain_from_open(const OpenSet& u);

// A finite set with n covering subsets; elements are 0..size-1.
struct CoveredSet {
    std::size_t size = 0;
    std::vector<std::vector<std::size_t>> covers;  // covers[i] = indices in U_{i+1}
};

struct EmbeddingResult {
    // classes of the relation "same cover membership signature"
    std::vector<std::vector<std::size_t>> classes;
    std::vector<PointMask> signatures;  // signatures[k] = image of classes[k]
    bool generic = false;               // true iff the embedding is a homeomorphism
};

// Quotients a covered set by the signature relation and embeds the quotient
// into the projective space. Throws if some element lies outside every cover.
EmbeddingResult quotient_and_embed(const CoveredSet& x, int cap = kDefaultEnumCap);

}  // namespace covalg
