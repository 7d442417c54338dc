// Antichains of nonempty subsets of {1..N} and their lattice arithmetic.
//
// These are the canonical forms of elements of the free distributive lattice
// on N generators: meet and join are computed by the min-reduction formulas,
// and every finitely generated distributive lattice is an image of this one.
// Members are restricted to nonempty subsets; the empty antichain is the
// bottom element. Subsets are bitmasks (bit i-1 <=> element i).

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace covalg {

using SubsetMask = std::uint32_t;

inline constexpr int kDefaultEnumCap = 6;

class cap_exceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class Antichain {
  public:
    // the empty antichain (lattice bottom)
    explicit Antichain(int n);

    // validates: members nonempty, within {1..n}, pairwise incomparable
    static Antichain from_members(int n, std::vector<SubsetMask> members);

    int generators() const { return n_; }
    const std::vector<SubsetMask>& members() const { return members_; }
    bool empty() const { return members_.empty(); }

    friend bool operator==(const Antichain&, const Antichain&) = default;
    friend bool operator<(const Antichain& a, const Antichain& b);

    std::string to_string() const;  // e.g. [[1],[2,3]]

  private:
    int n_;
    std::vector<SubsetMask> members_;  // canonically sorted
};

// inclusion-minimal members of a family of nonempty subsets of {1..n}
Antichain min_antichain(int n, const std::vector<SubsetMask>& family);

// all supersets (within {1..n}) of some member
std::vector<SubsetMask> upper_set(const Antichain& l);

// l1 /\ l2 = min{u1 | u2 : u1 in l1, u2 in l2};  l1 \/ l2 = min(l1 | l2)
Antichain antichain_meet(const Antichain& l1, const Antichain& l2);
Antichain antichain_join(const Antichain& l1, const Antichain& l2);

// a <= b in the antichain lattice (a /\ b == a)
bool antichain_leq(const Antichain& a, const Antichain& b);

// All antichains of nonempty subsets of {1..n}, empty antichain included,
// in a deterministic order. Counts follow the Dedekind numbers minus one:
// 2, 5, 19, 167, 7580, ... for n = 1, 2, 3, 4, 5.
std::vector<Antichain> enumerate_antichains(int n, int cap = kDefaultEnumCap);

std::string subset_to_string(SubsetMask m);

}  // namespace covalg
