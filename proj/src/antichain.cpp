#include "covalg/antichain.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace covalg {

namespace {

// lexicographic order on the sorted element lists, e.g. {1,2} < {1,3} < {2}
bool subset_lex_less(SubsetMask a, SubsetMask b) {
    while (a != 0 && b != 0) {
        int ea = std::countr_zero(a), eb = std::countr_zero(b);
        if (ea != eb) return ea < eb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

void check_range(int n, SubsetMask m) {
    if (n < 0 || n > 31) throw std::invalid_argument("antichain: generator count out of range");
    if (m == 0) throw std::invalid_argument("antichain: empty member not allowed");
    if (m >= (SubsetMask(1) << n)) throw std::invalid_argument("antichain: member out of range");
}

}  // namespace

Antichain::Antichain(int n) : n_(n) {
    if (n < 0 || n > 31) throw std::invalid_argument("antichain: generator count out of range");
}

Antichain Antichain::from_members(int n, std::vector<SubsetMask> members) {
    for (SubsetMask m : members) check_range(n, m);
    std::sort(members.begin(), members.end(), subset_lex_less);
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j)
            if (i != j && (members[i] & members[j]) == members[i])
                throw std::invalid_argument("antichain: members are comparable");
    Antichain a(n);
    a.members_ = std::move(members);
    return a;
}

bool operator<(const Antichain& a, const Antichain& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return std::lexicographical_compare(a.members_.begin(), a.members_.end(),
                                        b.members_.begin(), b.members_.end(), subset_lex_less);
}

std::string subset_to_string(SubsetMask m) {
    std::string s = "[";
    bool first = true;
    for (int i = 0; i < 32; ++i)
        if (m & (SubsetMask(1) << i)) {
            if (!first) s += ',';
            s += std::to_string(i + 1);
            first = false;
        }
    return s + "]";
}

std::string Antichain::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) s += ',';
        s += subset_to_string(members_[i]);
    }
    return s + "]";
}

Antichain min_antichain(int n, const std::vector<SubsetMask>& family) {
    for (SubsetMask m : family) check_range(n, m);
    std::vector<SubsetMask> minimal;
    for (SubsetMask u : family) {
        bool has_proper_subset = false;
        for (SubsetMask v : family)
            if (v != u && (v & u) == v) { has_proper_subset = true; break; }
        if (!has_proper_subset) minimal.push_back(u);
    }
    return Antichain::from_members(n, std::move(minimal));
}

std::vector<SubsetMask> upper_set(const Antichain& l) {
    std::vector<SubsetMask> up;
    if (l.generators() == 0) return up;
    const SubsetMask all = (SubsetMask(1) << l.generators()) - 1;
    for (SubsetMask u = 1; u <= all; ++u)
        for (SubsetMask v : l.members())
            if ((v & u) == v) { up.push_back(u); break; }
    return up;
}

Antichain antichain_meet(const Antichain& l1, const Antichain& l2) {
    if (l1.generators() != l2.generators())
        throw std::invalid_argument("antichain_meet: generator count mismatch");
    std::vector<SubsetMask> unions;
    for (SubsetMask u1 : l1.members())
        for (SubsetMask u2 : l2.members()) unions.push_back(u1 | u2);
    return min_antichain(l1.generators(), unions);
}

Antichain antichain_join(const Antichain& l1, const Antichain& l2) {
    if (l1.generators() != l2.generators())
        throw std::invalid_argument("antichain_join: generator count mismatch");
    std::vector<SubsetMask> all = l1.members();
    all.insert(all.end(), l2.members().begin(), l2.members().end());
    return min_antichain(l1.generators(), all);
}

bool antichain_leq(const Antichain& a, const Antichain& b) {
    return antichain_meet(a, b) == a;
}

std::vector<Antichain> enumerate_antichains(int n, int cap) {
    if (n < 1) throw std::invalid_argument("enumerate_antichains: need n >= 1");
    if (n > cap)
        throw cap_exceeded("enumerate_antichains: n = " + std::to_string(n) +
                           " exceeds cap " + std::to_string(cap));
    // candidate members in canonical order
    std::vector<SubsetMask> subsets;
    for (SubsetMask m = 1; m < (SubsetMask(1) << n); ++m) subsets.push_back(m);
    std::sort(subsets.begin(), subsets.end(), subset_lex_less);

    std::vector<Antichain> out;
    std::vector<SubsetMask> chosen;
    auto dfs = [&](auto&& self, std::size_t start) -> void {
        Antichain a(n);
        {
            // chosen is pairwise incomparable by construction
            std::vector<SubsetMask> copy = chosen;
            a = Antichain::from_members(n, std::move(copy));
        }
        out.push_back(std::move(a));
        for (std::size_t i = start; i < subsets.size(); ++i) {
            SubsetMask cand = subsets[i];
            bool ok = true;
            for (SubsetMask c : chosen)
                if ((c & cand) == c || (c & cand) == cand) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back(cand);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0);
    return out;
}

}  // namespace covalg
