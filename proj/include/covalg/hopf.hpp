// Finite-dimensional Hopf algebras with bijective antipode, comodule
// algebras, and strong connections.
//
// Principality is decided by exact linear feasibility: all four defining
// conditions of a strong connection (unitality, two colinearities and the
// splitting of the lifted canonical map) are affine-linear in the entries of
// ell : H -> P (x) P, so one assembled system decides existence, and a found
// solution is re-verified against every axiom.

#pragma once

#include "covalg/algebra.hpp"

namespace covalg {

template <FieldModel F>
struct HopfAlgebra {
    Algebra<F> algebra;   // H
    Mat<F> coproduct;     // nH^2 x nH
    Mat<F> counit;        // 1 x nH
    Mat<F> antipode;      // nH x nH
    Mat<F> antipode_inv;  // nH x nH

    std::size_t dim() const { return algebra.dim(); }
    const F& field() const { return algebra.field(); }

    static HopfAlgebra create(Algebra<F> h, Mat<F> coproduct, Mat<F> counit, Mat<F> antipode,
                              std::optional<Mat<F>> antipode_inv = std::nullopt, bool verify = true) {
        const F& f = h.field();
        const std::size_t n = h.dim();
        if (coproduct.rows() != n * n || coproduct.cols() != n || counit.rows() != 1 ||
            counit.cols() != n || antipode.rows() != n || antipode.cols() != n)
            throw std::invalid_argument("HopfAlgebra: structure map shapes mismatch");
        Mat<F> sinv(f, n, n);
        if (antipode_inv) {
            sinv = *antipode_inv;
        } else {
            auto inv = antipode.inverse();
            if (!inv) throw bad_input("HopfAlgebra: antipode is not bijective");
            sinv = *inv;
        }
        HopfAlgebra hopf{std::move(h), std::move(coproduct), std::move(counit), std::move(antipode),
                         std::move(sinv)};
        if (verify) {
            auto bad = hopf.failed_axiom();
            if (!bad.empty()) throw bad_input("HopfAlgebra: axiom fails: " + bad);
        }
        return hopf;
    }

    // empty string when every axiom holds
    std::string failed_axiom() const {
        const F& f = field();
        const std::size_t n = dim();
        auto id = Mat<F>::identity(f, n);
        const auto& mul = algebra.mul_map();
        const auto& u = algebra.unit();
        if (!(Mat<F>::kron(coproduct, id) * coproduct == Mat<F>::kron(id, coproduct) * coproduct))
            return "coassociativity";
        if (!(Mat<F>::kron(counit, id) * coproduct == id) ||
            !(Mat<F>::kron(id, counit) * coproduct == id))
            return "counit law";
        Mat<F> mul_hh = Mat<F>::kron(mul, mul) *
                        Mat<F>::kron(id, Mat<F>::kron(swap_tensor(f, n, n), id));
        if (!(coproduct * mul == mul_hh * Mat<F>::kron(coproduct, coproduct)))
            return "coproduct multiplicativity";
        if (!(coproduct * u == Mat<F>::kron(u, u))) return "coproduct unitality";
        if (!(counit * mul == Mat<F>::kron(counit, counit))) return "counit multiplicativity";
        if (!(counit * u == Mat<F>::identity(f, 1))) return "counit unitality";
        Mat<F> ue = u * counit;
        if (!(mul * Mat<F>::kron(antipode, id) * coproduct == ue) ||
            !(mul * Mat<F>::kron(id, antipode) * coproduct == ue))
            return "antipode law";
        if (!(antipode * antipode_inv == id) || !(antipode_inv * antipode == id))
            return "antipode inverse";
        return "";
    }
};

template <FieldModel F>
struct ComoduleAlgebra {
    Algebra<F> algebra;   // P
    HopfAlgebra<F> hopf;  // H
    Mat<F> coaction;      // nP*nH x nP

    std::size_t dim() const { return algebra.dim(); }
    std::size_t hdim() const { return hopf.dim(); }
    const F& field() const { return algebra.field(); }

    static ComoduleAlgebra create(Algebra<F> p, HopfAlgebra<F> h, Mat<F> coaction,
                                  bool verify = true) {
        if (coaction.rows() != p.dim() * h.dim() || coaction.cols() != p.dim())
            throw std::invalid_argument("ComoduleAlgebra: coaction shape mismatch");
        ComoduleAlgebra c{std::move(p), std::move(h), std::move(coaction)};
        if (verify) {
            auto bad = c.failed_axiom();
            if (!bad.empty()) throw bad_input("ComoduleAlgebra: axiom fails: " + bad);
        }
        return c;
    }

    std::string failed_axiom() const {
        const F& f = field();
        const std::size_t np = dim(), nh = hdim();
        auto idp = Mat<F>::identity(f, np);
        auto idh = Mat<F>::identity(f, nh);
        Mat<F> mul_ph = Mat<F>::kron(algebra.mul_map(), hopf.algebra.mul_map()) *
                        Mat<F>::kron(idp, Mat<F>::kron(swap_tensor(f, nh, np), idh));
        if (!(coaction * algebra.mul_map() == mul_ph * Mat<F>::kron(coaction, coaction)))
            return "coaction multiplicativity";
        if (!(coaction * algebra.unit() == Mat<F>::kron(algebra.unit(), hopf.algebra.unit())))
            return "coaction unitality";
        if (!(Mat<F>::kron(idp, hopf.counit) * coaction == idp)) return "coaction counitality";
        if (!(Mat<F>::kron(coaction, idh) * coaction == Mat<F>::kron(idp, hopf.coproduct) * coaction))
            return "coaction coassociativity";
        return "";
    }

    // p |-> S^{-1}(p_(1)) (x) p_(0), an H (x) P valued left coaction
    Mat<F> left_coaction() const {
        const F& f = field();
        return swap_tensor(f, dim(), hdim()) *
               Mat<F>::kron(Mat<F>::identity(f, dim()), hopf.antipode_inv) * coaction;
    }
};

// p (x) q |-> p q_(0) (x) q_(1), on the full tensor square
template <FieldModel F>
Mat<F> lifted_canonical_map(const ComoduleAlgebra<F>& p) {
    const F& f = p.field();
    return Mat<F>::kron(p.algebra.mul_map(), Mat<F>::identity(f, p.hdim())) *
           Mat<F>::kron(Mat<F>::identity(f, p.dim()), p.coaction);
}

template <FieldModel F>
struct Coinvariants {
    Subspace<F> space;   // inside P
    Algebra<F> algebra;  // on the canonical subspace basis
    Mat<F> incl;         // algebra -> P
};

template <FieldModel F>
Coinvariants<F> coinvariants(const ComoduleAlgebra<F>& p) {
    const F& f = p.field();
    const std::size_t np = p.dim();
    Mat<F> into_trivial = Mat<F>::kron(Mat<F>::identity(f, np), p.hopf.algebra.unit());
    Subspace<F> b = kernel_space(p.coaction - into_trivial);
    Mat<F> incl = b.basis().transpose();
    const std::size_t nb = b.dim();

    if (!b.contains(p.algebra.unit()))
        throw std::logic_error("coinvariants: unit is not coaction-invariant");
    Mat<F> mul(f, nb, nb * nb);
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            Mat<F> prod = p.algebra.multiply(incl.col(i), incl.col(j));
            auto coords = b.reduce(prod.transpose());
            if (!coords) throw std::logic_error("coinvariants: not closed under multiplication");
            for (std::size_t k = 0; k < nb; ++k) mul.at(k, i * nb + j) = (*coords)[k];
        }
    auto unit_coords = b.reduce(p.algebra.unit().transpose());
    Mat<F> unit(f, nb, 1);
    for (std::size_t k = 0; k < nb; ++k) unit.at(k, 0) = (*unit_coords)[k];
    return {std::move(b), Algebra<F>::create(f, std::move(mul), std::move(unit), false),
            std::move(incl)};
}

template <FieldModel F>
struct CanonicalMaps {
    Mat<F> can_tilde;    // P (x) P -> P (x) H
    Mat<F> pbp_proj;     // P (x) P -> P (x)_B P
    Mat<F> pbp_section;  // P (x)_B P -> P (x) P
    Mat<F> can;          // P (x)_B P -> P (x) H
    bool galois = false;
};

// realizes P (x)_B P as the quotient of P (x) P by span{pb (x) q - p (x) bq}
template <FieldModel F>
CanonicalMaps<F> canonical_map(const ComoduleAlgebra<F>& p, const Coinvariants<F>& b) {
    const F& f = p.field();
    const std::size_t np = p.dim(), nh = p.hdim(), nb = b.algebra.dim();
    Mat<F> can_tilde = lifted_canonical_map(p);

    Mat<F> rel(f, np * nb * np, np * np);
    std::size_t row = 0;
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t k = 0; k < nb; ++k)
            for (std::size_t j = 0; j < np; ++j, ++row) {
                auto ei = Mat<F>::basis_col(f, np, i);
                auto ej = Mat<F>::basis_col(f, np, j);
                auto bk = b.incl.col(k);
                Mat<F> v = Mat<F>::kron(p.algebra.multiply(ei, bk), ej) -
                           Mat<F>::kron(ei, p.algebra.multiply(bk, ej));
                for (std::size_t c = 0; c < np * np; ++c) rel.at(row, c) = v.at(c, 0);
            }
    Subspace<F> relations = Subspace<F>::span(rel);
    // relations die under the lifted canonical map (B is coinvariant)
    for (std::size_t r = 0; r < relations.dim(); ++r)
        if (!(can_tilde * relations.basis().transpose().col(r)).is_zero())
            throw std::logic_error("canonical_map: relation escapes the kernel");
    auto qm = quotient_maps(relations);
    Mat<F> can = can_tilde * qm.section;
    bool galois = qm.proj.rows() == np * nh && can.rank() == np * nh;
    return {std::move(can_tilde), std::move(qm.proj), std::move(qm.section), std::move(can), galois};
}

struct ConnectionVerdict {
    bool ok = false;
    std::string failed_axiom;  // empty when ok
};

// exact check of unitality, both colinearities, the splitting property, and
// the derived multiplicativity-to-counit identity
template <FieldModel F>
ConnectionVerdict strong_connection_verify(const ComoduleAlgebra<F>& p, const Mat<F>& ell) {
    const F& f = p.field();
    const std::size_t np = p.dim(), nh = p.hdim();
    if (ell.rows() != np * np || ell.cols() != nh) return {false, "shape"};
    auto idp = Mat<F>::identity(f, np);
    auto idh = Mat<F>::identity(f, nh);
    const auto& u = p.algebra.unit();
    if (!(ell * p.hopf.algebra.unit() == Mat<F>::kron(u, u))) return {false, "unitality"};
    if (!(Mat<F>::kron(idp, p.coaction) * ell == Mat<F>::kron(ell, idh) * p.hopf.coproduct))
        return {false, "right colinearity"};
    if (!(Mat<F>::kron(p.left_coaction(), idp) * ell ==
          Mat<F>::kron(idh, ell) * p.hopf.coproduct))
        return {false, "left colinearity"};
    if (!(lifted_canonical_map(p) * ell == Mat<F>::kron(u, idh)))
        return {false, "splitting of the lifted canonical map"};
    if (!(p.algebra.mul_map() * ell == u * p.hopf.counit))
        return {false, "product collapse to the counit"};
    return {true, ""};
}

template <FieldModel F>
struct StrongConnection {
    Mat<F> ell;  // nP^2 x nH
    bool verified = false;
};

template <FieldModel F>
struct SolveOutcome {
    std::optional<StrongConnection<F>> connection;
    // on infeasibility: the first inconsistent cumulative block of conditions
    std::string infeasible_block;
};

namespace detail {

// Assembles the affine system for the unknown entries of ell, flattened as
// idx(x, c) = x*nH + c. Blocks, in order: unitality, right colinearity,
// left colinearity, splitting.
template <FieldModel F>
void connection_system(const ComoduleAlgebra<F>& p, std::vector<Mat<F>>& blocks,
                       std::vector<Mat<F>>& rhss, std::vector<std::string>& names) {
    const F& f = p.field();
    const std::size_t np = p.dim(), nh = p.hdim();
    const std::size_t unknowns = np * np * nh;
    const auto& delta = p.hopf.coproduct;

    {
        Mat<F> a(f, np * np, unknowns), rhs(f, np * np, 1);
        const auto& uh = p.hopf.algebra.unit();
        Mat<F> w = Mat<F>::kron(p.algebra.unit(), p.algebra.unit());
        for (std::size_t x = 0; x < np * np; ++x) {
            for (std::size_t c = 0; c < nh; ++c) a.at(x, x * nh + c) = uh.at(c, 0);
            rhs.at(x, 0) = w.at(x, 0);
        }
        blocks.push_back(std::move(a));
        rhss.push_back(std::move(rhs));
        names.push_back("unitality");
    }
    {
        // (id (x) coaction) ell = (ell (x) id) coproduct
        Mat<F> m1 = Mat<F>::kron(Mat<F>::identity(f, np), p.coaction);
        Mat<F> a(f, m1.rows() * nh, unknowns);
        for (std::size_t rho = 0; rho < m1.rows(); ++rho) {
            const std::size_t xt = rho / nh, k = rho % nh;
            for (std::size_t c = 0; c < nh; ++c) {
                std::size_t r = rho * nh + c;
                for (std::size_t x = 0; x < np * np; ++x) {
                    const auto& v = m1.at(rho, x);
                    if (!f.is_zero(v)) a.at(r, x * nh + c) = v;
                }
                for (std::size_t cp = 0; cp < nh; ++cp) {
                    const auto& d = delta.at(cp * nh + k, c);
                    if (!f.is_zero(d))
                        a.at(r, xt * nh + cp) = f.sub(a.at(r, xt * nh + cp), d);
                }
            }
        }
        blocks.push_back(std::move(a));
        rhss.push_back(Mat<F>(f, m1.rows() * nh, 1));
        names.push_back("right colinearity");
    }
    {
        // (left_coaction (x) id) ell = (id (x) ell) coproduct
        Mat<F> m2 = Mat<F>::kron(p.left_coaction(), Mat<F>::identity(f, np));
        Mat<F> a(f, m2.rows() * nh, unknowns);
        for (std::size_t rho = 0; rho < m2.rows(); ++rho) {
            const std::size_t k = rho / (np * np), xt = rho % (np * np);
            for (std::size_t c = 0; c < nh; ++c) {
                std::size_t r = rho * nh + c;
                for (std::size_t x = 0; x < np * np; ++x) {
                    const auto& v = m2.at(rho, x);
                    if (!f.is_zero(v)) a.at(r, x * nh + c) = v;
                }
                for (std::size_t b = 0; b < nh; ++b) {
                    const auto& d = delta.at(k * nh + b, c);
                    if (!f.is_zero(d)) a.at(r, xt * nh + b) = f.sub(a.at(r, xt * nh + b), d);
                }
            }
        }
        blocks.push_back(std::move(a));
        rhss.push_back(Mat<F>(f, m2.rows() * nh, 1));
        names.push_back("left colinearity");
    }
    {
        // can_tilde ell = 1 (x) id
        Mat<F> ct = lifted_canonical_map(p);
        Mat<F> k = Mat<F>::kron(p.algebra.unit(), Mat<F>::identity(f, nh));
        Mat<F> a(f, ct.rows() * nh, unknowns), rhs(f, ct.rows() * nh, 1);
        for (std::size_t i = 0; i < ct.rows(); ++i)
            for (std::size_t c = 0; c < nh; ++c) {
                std::size_t r = i * nh + c;
                for (std::size_t x = 0; x < np * np; ++x) {
                    const auto& v = ct.at(i, x);
                    if (!f.is_zero(v)) a.at(r, x * nh + c) = v;
                }
                rhs.at(r, 0) = k.at(i, c);
            }
        blocks.push_back(std::move(a));
        rhss.push_back(std::move(rhs));
        names.push_back("splitting");
    }
}

}  // namespace detail

// Decides principality: assembles the four condition blocks and solves
// exactly. Feasible => a verified strong connection; infeasible => no strong
// connection exists, and the first inconsistent cumulative block is named.
template <FieldModel F>
SolveOutcome<F> strong_connection_solve(const ComoduleAlgebra<F>& p) {
    const F& f = p.field();
    const std::size_t np = p.dim(), nh = p.hdim();
    std::vector<Mat<F>> blocks, rhss;
    std::vector<std::string> names;
    detail::connection_system(p, blocks, rhss, names);
    Mat<F> a = blocks[0], rhs = rhss[0];
    for (std::size_t i = 1; i < blocks.size(); ++i) {
        a = Mat<F>::vcat(a, blocks[i]);
        rhs = Mat<F>::vcat(rhs, rhss[i]);
    }
    auto sol = a.solve(rhs);
    if (!sol) {
        // identify the first cumulative prefix that is already inconsistent
        Mat<F> acc = blocks[0], accr = rhss[0];
        for (std::size_t i = 0;; ++i) {
            if (!acc.solve(accr)) return {std::nullopt, names[i]};
            acc = Mat<F>::vcat(acc, blocks[i + 1]);
            accr = Mat<F>::vcat(accr, rhss[i + 1]);
        }
    }
    Mat<F> ell(f, np * np, nh);
    for (std::size_t x = 0; x < np * np; ++x)
        for (std::size_t c = 0; c < nh; ++c) ell.at(x, c) = sol->at(x * nh + c, 0);
    auto verdict = strong_connection_verify(p, ell);
    if (!verdict.ok)
        throw std::logic_error("strong_connection_solve: solution failed verification: " +
                               verdict.failed_axiom);
    return {StrongConnection<F>{std::move(ell), true}, ""};
}

// p (x) h |-> p ell(h)^<1> (x)_B ell(h)^<2>, the two-sided inverse of can
template <FieldModel F>
Mat<F> can_inverse_from_connection(const ComoduleAlgebra<F>& p, const Mat<F>& ell,
                                   const CanonicalMaps<F>& maps) {
    const F& f = p.field();
    return maps.pbp_proj *
           Mat<F>::kron(p.algebra.mul_map(), Mat<F>::identity(f, p.dim())) *
           Mat<F>::kron(Mat<F>::identity(f, p.dim()), ell);
}

}  // namespace covalg
