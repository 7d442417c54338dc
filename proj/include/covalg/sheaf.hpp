// Flabby sheaves of algebras over the finite projective space, stored as
// one section algebra per canonical antichain plus restriction matrices for
// comparable pairs, and the two mutually inverse functors between coverings
// and such sheaves.

#pragma once

#include <map>

#include "covalg/algebra.hpp"
#include "covalg/projspace.hpp"

namespace covalg {

inline Antichain antichain_top(int n) {
    std::vector<SubsetMask> singles;
    for (int i = 0; i < n; ++i) singles.push_back(SubsetMask(1) << i);
    return Antichain::from_members(n, std::move(singles));
}

inline Antichain basic_antichain(int n, SubsetMask m) {
    return Antichain::from_members(n, {m});
}

template <FieldModel F>
struct SheafData {
    int n = 0;
    std::map<Antichain, Algebra<F>> sections;
    // restriction (U' -> U) for strictly comparable pairs U < U'; key (sup, sub)
    std::map<std::pair<Antichain, Antichain>, Mat<F>> restrictions;

    const Algebra<F>& section(const Antichain& u) const {
        auto it = sections.find(u);
        if (it == sections.end()) throw std::invalid_argument("SheafData: unknown open " + u.to_string());
        return it->second;
    }

    Mat<F> restriction(const Antichain& sup, const Antichain& sub) const {
        if (sup == sub) return Mat<F>::identity(section(sup).field(), section(sup).dim());
        auto it = restrictions.find({sup, sub});
        if (it == restrictions.end())
            throw std::invalid_argument("SheafData: missing restriction " + sup.to_string() + " -> " +
                                        sub.to_string());
        return it->second;
    }
};

template <FieldModel F>
struct SheafCheck {
    bool ok = true;
    std::string witness;
    explicit operator bool() const { return ok; }
};

template <FieldModel F>
struct SheafFromCovering {
    SheafData<F> sheaf;
    std::map<Antichain, QuotientAlgebra<F>> quotients;  // presentation of each section as P/ideal
};

// U |-> P / (intersection over the canonical antichain of sums of kernels),
// with the induced quotient maps as restrictions. Flabby by construction.
template <FieldModel F>
SheafFromCovering<F> from_covering(const CoveringData<F>& c, int cap = kDefaultEnumCap) {
    if (!c.is_covering())
        throw refused("from_covering: the family is not a covering (needs surjectivity, trivial "
                      "kernel intersection and a distributive ideal lattice)");
    const int n = c.count();
    SheafFromCovering<F> out;
    out.sheaf.n = n;
    auto oracle = c.ideal_oracle();
    auto antichains = enumerate_antichains(n, cap);
    for (const auto& l : antichains) {
        auto q = quotient_algebra(c.algebra, R_map(oracle, l));
        out.sheaf.sections.emplace(l, q.algebra);
        out.quotients.emplace(l, std::move(q));
    }
    for (const auto& lsup : antichains)
        for (const auto& lsub : antichains) {
            if (lsup == lsub || !antichain_leq(lsub, lsup)) continue;
            const auto& qsup = out.quotients.at(lsup);
            const auto& qsub = out.quotients.at(lsub);
            out.sheaf.restrictions.emplace(std::make_pair(lsup, lsub),
                                           qsub.proj.matrix * qsup.section);
        }
    return out;
}

// presheaf sanity: all canonical opens present, zero algebra at the bottom,
// restrictions multiplicative/unital and functorial
template <FieldModel F>
SheafCheck<F> verify_presheaf(const SheafData<F>& s, int cap = kDefaultEnumCap) {
    auto antichains = enumerate_antichains(s.n, cap);
    for (const auto& l : antichains)
        if (!s.sections.count(l)) return {false, "missing section over " + l.to_string()};
    if (!s.section(Antichain(s.n)).is_zero_algebra())
        return {false, "section over the empty set is not the zero algebra"};
    for (const auto& lsup : antichains)
        for (const auto& lsub : antichains) {
            if (lsup == lsub || !antichain_leq(lsub, lsup)) continue;
            AlgebraMorphism<F> r{s.section(lsup), s.section(lsub), s.restriction(lsup, lsub)};
            if (r.matrix.rows() != r.target.dim() || r.matrix.cols() != r.source.dim())
                return {false, "restriction shape mismatch at " + lsup.to_string()};
            if (!r.is_multiplicative() || !r.is_unital())
                return {false, "restriction " + lsup.to_string() + " -> " + lsub.to_string() +
                                   " is not an algebra map"};
        }
    for (const auto& a : antichains)
        for (const auto& b : antichains) {
            if (a == b || !antichain_leq(b, a)) continue;
            for (const auto& cc : antichains) {
                if (b == cc || !antichain_leq(cc, b)) continue;
                if (!(s.restriction(b, cc) * s.restriction(a, b) == s.restriction(a, cc)))
                    return {false, "functoriality fails on " + a.to_string() + " -> " + b.to_string() +
                                       " -> " + cc.to_string()};
            }
        }
    return {};
}

template <FieldModel F>
SheafCheck<F> verify_flabby(const SheafData<F>& s, int cap = kDefaultEnumCap) {
    auto antichains = enumerate_antichains(s.n, cap);
    for (const auto& lsup : antichains)
        for (const auto& lsub : antichains) {
            if (lsup == lsub || !antichain_leq(lsub, lsup)) continue;
            if (s.restriction(lsup, lsub).rank() != s.section(lsub).dim())
                return {false, "restriction " + lsup.to_string() + " -> " + lsub.to_string() +
                                   " is not surjective"};
        }
    return {};
}

enum class SheafAxiomMode { basis, all };

namespace detail {

// irredundant covers of `u` by opens strictly below-or-equal it: antichain
// families with union u where no member is inside the union of the others
template <FieldModel F>
std::vector<std::vector<Antichain>> covers_of(const SheafData<F>&, const Antichain& u,
                                              const std::vector<Antichain>& all) {
    std::vector<Antichain> below;
    OpenSet target = open_from_antichain(u);
    for (const auto& l : all)
        if (!l.empty() && antichain_leq(l, u)) below.push_back(l);
    std::vector<std::vector<Antichain>> covers;
    const std::size_t m = below.size();
    if (m > 24) throw cap_exceeded("sheaf axiom (all covers): too many opens below " + u.to_string());
    std::vector<OpenSet> opens;
    for (const auto& l : below) opens.push_back(open_from_antichain(l));
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
        std::uint64_t uni = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) uni |= opens[i].point_bits();
        if (uni != target.point_bits()) continue;
        bool irredundant = true;
        for (std::size_t i = 0; i < m && irredundant; ++i) {
            if (!(mask >> i & 1)) continue;
            std::uint64_t rest = 0;
            for (std::size_t jj = 0; jj < m; ++jj)
                if (jj != i && (mask >> jj & 1)) rest |= opens[jj].point_bits();
            if ((opens[i].point_bits() & ~rest) == 0) irredundant = false;
        }
        if (!irredundant) continue;
        std::vector<Antichain> cover;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) cover.push_back(below[i]);
        covers.push_back(std::move(cover));
    }
    return covers;
}

// gluing is exact for one cover: sections inject into the product of the
// pieces and hit exactly the families compatible on pairwise overlaps
template <FieldModel F>
SheafCheck<F> check_equalizer(const SheafData<F>& s, const Antichain& u,
                              const std::vector<Antichain>& cover) {
    const F& f = s.section(u).field();
    const std::size_t du = s.section(u).dim();
    std::vector<std::size_t> offs{0};
    for (const auto& l : cover) offs.push_back(offs.back() + s.section(l).dim());
    const std::size_t total = offs.back();

    Mat<F> phi(f, total, du);
    for (std::size_t i = 0; i < cover.size(); ++i) {
        Mat<F> r = s.restriction(u, cover[i]);
        for (std::size_t a = 0; a < r.rows(); ++a)
            for (std::size_t b = 0; b < du; ++b) phi.at(offs[i] + a, b) = r.at(a, b);
    }
    if (phi.kernel().rows() != 0)
        return {false, "uniqueness fails over " + u.to_string()};

    // difference map into the overlaps
    std::vector<Mat<F>> blocks;
    for (std::size_t i = 0; i < cover.size(); ++i)
        for (std::size_t j = i + 1; j < cover.size(); ++j) {
            Antichain overlap = antichain_meet(cover[i], cover[j]);
            const std::size_t dv = s.section(overlap).dim();
            Mat<F> row(f, dv, total);
            Mat<F> ri = s.restriction(cover[i], overlap);
            Mat<F> rj = s.restriction(cover[j], overlap);
            for (std::size_t a = 0; a < dv; ++a) {
                for (std::size_t b = 0; b < ri.cols(); ++b) row.at(a, offs[i] + b) = ri.at(a, b);
                for (std::size_t b = 0; b < rj.cols(); ++b)
                    row.at(a, offs[j] + b) = f.neg(rj.at(a, b));
            }
            blocks.push_back(std::move(row));
        }
    Subspace<F> compatible = Subspace<F>::full(f, total);
    if (!blocks.empty()) {
        Mat<F> d = blocks[0];
        for (std::size_t i = 1; i < blocks.size(); ++i) d = Mat<F>::vcat(d, blocks[i]);
        compatible = kernel_space(d);
    }
    if (!(image(phi) == compatible))
        return {false, "existence fails over " + u.to_string() + " (" +
                           std::to_string(compatible.dim() - image(phi).dim()) +
                           " unglueable dimensions)"};
    return {};
}

}  // namespace detail

// Existence and uniqueness of gluings for every open and every cover of it:
// canonical covers by basic opens in mode `basis`, every irredundant open
// cover in mode `all` (exponential; gated to n <= 3).
template <FieldModel F>
SheafCheck<F> verify_sheaf_axiom(const SheafData<F>& s, SheafAxiomMode mode = SheafAxiomMode::basis,
                                 int cap = kDefaultEnumCap) {
    if (mode == SheafAxiomMode::all && s.n > 3)
        throw cap_exceeded("sheaf axiom mode 'all' is gated to n <= 3");
    auto antichains = enumerate_antichains(s.n, cap);
    for (const auto& u : antichains) {
        if (u.empty()) continue;  // nothing to glue over the empty set
        if (mode == SheafAxiomMode::basis) {
            std::vector<Antichain> cover;
            for (SubsetMask m : u.members()) cover.push_back(basic_antichain(s.n, m));
            auto check = detail::check_equalizer(s, u, cover);
            if (!check.ok) return check;
        } else {
            for (const auto& cover : detail::covers_of(s, u, antichains)) {
                auto check = detail::check_equalizer(s, u, cover);
                if (!check.ok) return check;
            }
        }
    }
    return {};
}

// kernels of the restrictions out of the top section turn unions into
// intersections and intersections into sums
template <FieldModel F>
SheafCheck<F> verify_kernel_lattice(const SheafData<F>& s, int cap = kDefaultEnumCap) {
    auto antichains = enumerate_antichains(s.n, cap);
    Antichain top = antichain_top(s.n);
    std::map<Antichain, Subspace<F>> ker;
    for (const auto& l : antichains) ker.emplace(l, kernel_space(s.restriction(top, l)));
    for (const auto& a : antichains)
        for (const auto& b : antichains) {
            if (!(ker.at(antichain_join(a, b)) == ker.at(a).intersect(ker.at(b))))
                return {false, "union/intersection kernel identity fails at " + a.to_string() + ", " +
                                   b.to_string()};
            if (!(ker.at(antichain_meet(a, b)) == ker.at(a).sum(ker.at(b))))
                return {false, "intersection/sum kernel identity fails at " + a.to_string() + ", " +
                                   b.to_string()};
        }
    return {};
}

// global sections with the restrictions to the subbasic opens
template <FieldModel F>
CoveringData<F> to_covering(const SheafData<F>& s, int cap = kDefaultEnumCap) {
    if (auto c = verify_presheaf(s, cap); !c.ok) throw refused("to_covering: not a presheaf: " + c.witness);
    if (auto c = verify_flabby(s, cap); !c.ok) throw refused("to_covering: not flabby: " + c.witness);
    if (auto c = verify_sheaf_axiom(s, SheafAxiomMode::basis, cap); !c.ok)
        throw refused("to_covering: sheaf axiom fails: " + c.witness);
    Antichain top = antichain_top(s.n);
    const Algebra<F>& p = s.section(top);
    std::vector<AlgebraMorphism<F>> pis;
    for (int i = 0; i < s.n; ++i) {
        Antichain ai = basic_antichain(s.n, SubsetMask(1) << i);
        pis.push_back(AlgebraMorphism<F>{p, s.section(ai), s.restriction(top, ai)});
    }
    return covering_check(p, std::move(pis), cap);
}

// covering -> sheaf -> covering reproduces the covering up to the canonical
// isomorphisms induced by the quotient presentations
template <FieldModel F>
SheafCheck<F> roundtrip_covering(const CoveringData<F>& c, int cap = kDefaultEnumCap) {
    auto fc = from_covering(c, cap);
    auto c2 = to_covering(fc.sheaf, cap);
    if (!c2.is_covering()) return {false, "recovered family is not a covering"};
    Antichain top = antichain_top(fc.sheaf.n);
    const auto& phi_top = fc.quotients.at(top).proj;  // P -> S(top)
    if (!phi_top.is_injective() || !phi_top.is_surjective())
        return {false, "global sections are not canonically the covered algebra"};
    for (int i = 0; i < c.count(); ++i) {
        Antichain ai = basic_antichain(fc.sheaf.n, SubsetMask(1) << i);
        // canonical P_i -> S(A_i): factor the section quotient through pi_i
        auto sec_i = c.surjections[i].matrix.solve(Mat<F>::identity(c.algebra.field(), c.surjections[i].target.dim()));
        if (!sec_i) return {false, "piece surjection has no linear section"};
        Mat<F> phi_i = fc.quotients.at(ai).proj.matrix * *sec_i;
        AlgebraMorphism<F> iso{c.surjections[i].target, fc.sheaf.section(ai), phi_i};
        if (!iso.is_multiplicative() || !iso.is_unital() || !iso.is_injective() || !iso.is_surjective())
            return {false, "piece " + std::to_string(i) + " is not canonically isomorphic"};
        // naturality square with the recovered restriction
        if (!(phi_i * c.surjections[i].matrix == c2.surjections[i].matrix * phi_top.matrix))
            return {false, "piece " + std::to_string(i) + " does not commute with the restrictions"};
        if (!(kernel_space(c2.surjections[i].matrix * phi_top.matrix) == c.kernels[i]))
            return {false, "piece " + std::to_string(i) + " kernel mismatch"};
    }
    return {};
}

// sheaf -> covering -> sheaf reproduces all sections and restrictions via
// S(U) isomorphic to S(top)/ker(restriction to U), ker = the lattice ideal
template <FieldModel F>
SheafCheck<F> roundtrip_sheaf(const SheafData<F>& s, int cap = kDefaultEnumCap) {
    auto c = to_covering(s, cap);
    auto fc = from_covering(c, cap);
    Antichain top = antichain_top(s.n);
    auto oracle = c.ideal_oracle();
    auto antichains = enumerate_antichains(s.n, cap);
    std::map<Antichain, Mat<F>> psi;  // S2(U) -> S(U)
    for (const auto& u : antichains) {
        // the ideal cut out by u equals the kernel of the restriction to u
        Subspace<F> ideal = R_map(oracle, u);
        Mat<F> pi_u = s.restriction(top, u);
        if (!(kernel_space(pi_u) == ideal))
            return {false, "kernel of restriction to " + u.to_string() +
                               " differs from the lattice ideal"};
        Mat<F> m = pi_u * fc.quotients.at(u).section;
        AlgebraMorphism<F> iso{fc.sheaf.section(u), s.section(u), m};
        if (!iso.is_multiplicative() || !iso.is_unital() || !iso.is_injective() || !iso.is_surjective())
            return {false, "section over " + u.to_string() + " not canonically isomorphic"};
        psi.emplace(u, std::move(m));
    }
    for (const auto& usup : antichains)
        for (const auto& usub : antichains) {
            if (usup == usub || !antichain_leq(usub, usup)) continue;
            if (!(s.restriction(usup, usub) * psi.at(usup) ==
                  psi.at(usub) * fc.sheaf.restriction(usup, usub)))
                return {false, "restriction " + usup.to_string() + " -> " + usub.to_string() +
                                   " does not commute with the canonical isomorphisms"};
        }
    return {};
}

template <FieldModel F>
struct SheafMorphism {
    std::map<Antichain, Mat<F>> components;
    bool verified = false;
};

// a covering morphism (xi, xi_i) induces per-open maps of the associated
// sheaves; requires eta_i o xi = xi_i o pi_i
template <FieldModel F>
SheafMorphism<F> morphism_from_covering_morphism(const CoveringData<F>& cp, const CoveringData<F>& cq,
                                                 const Mat<F>& xi, const std::vector<Mat<F>>& xis,
                                                 int cap = kDefaultEnumCap) {
    if (cp.count() != cq.count()) throw std::invalid_argument("covering morphism: length mismatch");
    AlgebraMorphism<F> xi_m{cp.algebra, cq.algebra, xi};
    xi_m.require_valid("covering morphism");
    for (int i = 0; i < cp.count(); ++i)
        if (!(cq.surjections[i].matrix * xi == xis[i] * cp.surjections[i].matrix))
            throw std::invalid_argument("covering morphism: square " + std::to_string(i) +
                                        " does not commute");
    auto fp = from_covering(cp, cap);
    auto fq = from_covering(cq, cap);
    SheafMorphism<F> out;
    out.verified = true;
    auto antichains = enumerate_antichains(cp.count(), cap);
    for (const auto& u : antichains) {
        // well-definedness: xi maps the ideal of u into the ideal of u
        Subspace<F> ip = R_map(cp.ideal_oracle(), u);
        Subspace<F> iq = R_map(cq.ideal_oracle(), u);
        for (std::size_t r = 0; r < ip.dim(); ++r)
            if (!iq.contains(xi * ip.basis().transpose().col(r))) out.verified = false;
        Mat<F> comp = fq.quotients.at(u).proj.matrix * xi * fp.quotients.at(u).section;
        out.components.emplace(u, std::move(comp));
    }
    for (const auto& usup : antichains)
        for (const auto& usub : antichains) {
            if (usup == usub || !antichain_leq(usub, usup)) continue;
            if (!(fq.sheaf.restriction(usup, usub) * out.components.at(usup) ==
                  out.components.at(usub) * fp.sheaf.restriction(usup, usub)))
                out.verified = false;
        }
    return out;
}

}  // namespace covalg
