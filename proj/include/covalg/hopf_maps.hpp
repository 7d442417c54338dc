// Maps induced by a strong connection: the projectivity splittings, the
// coinvariant retraction, colinear splittings of comodule surjections,
// quotient connections, smash products and the contraction of comodule
// ideals to the coinvariant base.

#pragma once

#include "covalg/hopf.hpp"

namespace covalg {

// s(p) = p_(0) ell(p_(1))^<1> (x) ell(p_(1))^<2>, lands in B (x) P
template <FieldModel F>
Mat<F> splitting_left(const ComoduleAlgebra<F>& p, const Mat<F>& ell) {
    const F& f = p.field();
    auto idp = Mat<F>::identity(f, p.dim());
    return Mat<F>::kron(p.algebra.mul_map(), idp) * Mat<F>::kron(idp, ell) * p.coaction;
}

// s'(p) = ell(S^{-1}(p_(1)))^<1> (x) ell(S^{-1}(p_(1)))^<2> p_(0), in P (x) B
template <FieldModel F>
Mat<F> splitting_right(const ComoduleAlgebra<F>& p, const Mat<F>& ell) {
    const F& f = p.field();
    auto idp = Mat<F>::identity(f, p.dim());
    return Mat<F>::kron(idp, p.algebra.mul_map()) *
           Mat<F>::kron(ell * p.hopf.antipode_inv, idp) *
           swap_tensor(f, p.dim(), p.hdim()) * p.coaction;
}

struct SplittingChecks {
    bool splits = false;        // multiplication o s = id
    bool lands_in_base = false; // image inside B (x) P, resp. P (x) B
    bool module_linear = false; // left (resp. right) B-linearity
    bool colinear = false;      // right (resp. left) H-colinearity
    bool all() const { return splits && lands_in_base && module_linear && colinear; }
};

template <FieldModel F>
SplittingChecks verify_splitting_left(const ComoduleAlgebra<F>& p, const Coinvariants<F>& b,
                                      const Mat<F>& s) {
    const F& f = p.field();
    auto idp = Mat<F>::identity(f, p.dim());
    auto idh = Mat<F>::identity(f, p.hdim());
    SplittingChecks c;
    c.splits = (p.algebra.mul_map() * s == idp);
    c.lands_in_base = image(Mat<F>::kron(b.incl, idp)).contains(image(s));
    c.module_linear = (s * p.algebra.mul_map() * Mat<F>::kron(b.incl, idp) ==
                       Mat<F>::kron(p.algebra.mul_map(), idp) * Mat<F>::kron(b.incl, s));
    c.colinear = (Mat<F>::kron(idp, p.coaction) * s == Mat<F>::kron(s, idh) * p.coaction);
    return c;
}

template <FieldModel F>
SplittingChecks verify_splitting_right(const ComoduleAlgebra<F>& p, const Coinvariants<F>& b,
                                       const Mat<F>& sp) {
    const F& f = p.field();
    auto idp = Mat<F>::identity(f, p.dim());
    auto idh = Mat<F>::identity(f, p.hdim());
    auto lc = p.left_coaction();
    SplittingChecks c;
    c.splits = (p.algebra.mul_map() * sp == idp);
    c.lands_in_base = image(Mat<F>::kron(idp, b.incl)).contains(image(sp));
    c.module_linear = (sp * p.algebra.mul_map() * Mat<F>::kron(idp, b.incl) ==
                       Mat<F>::kron(idp, p.algebra.mul_map()) * Mat<F>::kron(sp, b.incl));
    c.colinear = (Mat<F>::kron(lc, idp) * sp == Mat<F>::kron(idh, sp) * lc);
    return c;
}

// the unit-pivot functional, normalized so phi(1) = 1
template <FieldModel F>
Mat<F> default_unital_functional(const Algebra<F>& p) {
    const F& f = p.field();
    Mat<F> phi(f, 1, p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i)
        if (!f.is_zero(p.unit().at(i, 0))) {
            phi.at(0, i) = f.inv(p.unit().at(i, 0));
            return phi;
        }
    throw std::logic_error("default_unital_functional: zero unit");
}

// sigma(p) = p_(0) ell(p_(1))^<1> phi(ell(p_(1))^<2>): a left B-linear
// retraction of the inclusion B in P, for any unital functional phi
template <FieldModel F>
Mat<F> coinvariant_retraction(const ComoduleAlgebra<F>& p, const Mat<F>& ell, const Mat<F>& phi) {
    const F& f = p.field();
    auto idp = Mat<F>::identity(f, p.dim());
    return p.algebra.mul_map() * Mat<F>::kron(idp, Mat<F>::kron(idp, phi) * ell) * p.coaction;
}

// colinear algebra surjection between comodule algebras over the same Hopf
// algebra
template <FieldModel F>
struct ComoduleSurjection {
    ComoduleAlgebra<F> source;
    ComoduleAlgebra<F> target;
    Mat<F> matrix;

    void require_valid(const std::string& what) const {
        AlgebraMorphism<F> m{source.algebra, target.algebra, matrix};
        m.require_valid(what);
        if (!m.is_surjective()) throw bad_input(what + ": not surjective");
        const F& f = source.field();
        if (!(target.coaction * matrix ==
              Mat<F>::kron(matrix, Mat<F>::identity(f, source.hdim())) * source.coaction))
            throw bad_input(what + ": not colinear");
    }
};

// restriction of pi to the coinvariants, in their canonical bases
template <FieldModel F>
Mat<F> coinvariant_restriction(const ComoduleSurjection<F>& pi, const Coinvariants<F>& bsrc,
                               const Coinvariants<F>& btgt) {
    auto sol = btgt.incl.solve(pi.matrix * bsrc.incl);
    if (!sol) throw std::logic_error("coinvariant_restriction: image leaves the coinvariants");
    return *sol;
}

// unital linear splitting of the coinvariant restriction; `variant` selects
// a second basis completion when the kernel permits one
template <FieldModel F>
Mat<F> coinvariant_splitting(const ComoduleSurjection<F>& pi, const Coinvariants<F>& bsrc,
                             const Coinvariants<F>& btgt, int variant = 0) {
    const F& f = pi.source.field();
    Mat<F> pico = coinvariant_restriction(pi, bsrc, btgt);
    const std::size_t nq = pico.rows(), npb = pico.cols();
    auto alpha = pico.solve(Mat<F>::identity(f, nq));
    if (!alpha) throw bad_input("coinvariant_splitting: restriction is not surjective");
    // unit coordinates on both sides
    auto uq = btgt.space.reduce(pi.target.algebra.unit().transpose());
    auto up = bsrc.space.reduce(pi.source.algebra.unit().transpose());
    Mat<F> uqc(f, nq, 1), upc(f, npb, 1);
    for (std::size_t i = 0; i < nq; ++i) uqc.at(i, 0) = (*uq)[i];
    for (std::size_t i = 0; i < npb; ++i) upc.at(i, 0) = (*up)[i];
    // correct so that alpha(1) = 1: subtract (alpha(1)-1) w^T with w(1) = 1
    Mat<F> defect = *alpha * uqc - upc;
    Mat<F> w(f, 1, nq);
    for (std::size_t i = 0; i < nq; ++i)
        if (!f.is_zero(uqc.at(i, 0))) {
            w.at(0, i) = f.inv(uqc.at(i, 0));
            break;
        }
    Mat<F> a = *alpha - defect * w;
    if (variant != 0) {
        Mat<F> ker = pico.kernel();  // rows
        Mat<F> vker = uqc.transpose().kernel();
        if (ker.rows() > 0 && vker.rows() > 0) {
            Mat<F> kcol(f, npb, 1), vrow(f, 1, nq);
            for (std::size_t i = 0; i < npb; ++i) kcol.at(i, 0) = ker.at(0, i);
            for (std::size_t i = 0; i < nq; ++i) vrow.at(0, i) = vker.at(0, i);
            a = a + kcol * vrow;
        }
    }
    return a;
}

// varsigma(q) = alpha(q_(0) pi(ell(q_(1))^<1>)) ell(q_(1))^<2>: a unital
// colinear splitting of pi built from a strong connection on the source and
// a unital splitting alpha of the coinvariant restriction
template <FieldModel F>
Mat<F> colinear_splitting(const ComoduleSurjection<F>& pi, const Mat<F>& ell,
                          const Coinvariants<F>& bsrc, const Coinvariants<F>& btgt,
                          const Mat<F>& alpha) {
    const F& f = pi.source.field();
    const std::size_t np = pi.source.dim(), nq = pi.target.dim();
    auto idp = Mat<F>::identity(f, np);
    auto idq = Mat<F>::identity(f, nq);
    // q |-> q_(0) pi(ell(q_(1))^<1>) (x) ell(q_(1))^<2> in Q (x) P
    Mat<F> m = Mat<F>::kron(pi.target.algebra.mul_map(), idp) *
               Mat<F>::kron(idq, Mat<F>::kron(pi.matrix, idp) * ell) * pi.target.coaction;
    // the Q-leg lies in the coinvariants; factor through them
    auto mprime = Mat<F>::kron(btgt.incl, idp).solve(m);
    if (!mprime)
        throw std::logic_error("colinear_splitting: first tensor leg escaped the coinvariants");
    return pi.source.algebra.mul_map() * Mat<F>::kron(bsrc.incl * alpha, idp) * *mprime;
}

// (pi (x) pi) o ell: a strong connection on the quotient
template <FieldModel F>
Mat<F> quotient_connection(const ComoduleSurjection<F>& pi, const Mat<F>& ell) {
    return Mat<F>::kron(pi.matrix, pi.matrix) * ell;
}

// ---------------------------------------------------------------------------
// smash products

// H-module algebra action verification: act : H (x) B -> B
template <FieldModel F>
std::string module_algebra_failed_axiom(const Algebra<F>& b, const HopfAlgebra<F>& h,
                                        const Mat<F>& act) {
    const F& f = b.field();
    const std::size_t nb = b.dim(), nh = h.dim();
    auto idb = Mat<F>::identity(f, nb);
    auto idh = Mat<F>::identity(f, nh);
    if (act.rows() != nb || act.cols() != nh * nb) return "shape";
    if (!(act * Mat<F>::kron(h.algebra.unit(), idb) == idb)) return "unit acts as identity";
    if (!(act * Mat<F>::kron(h.algebra.mul_map(), idb) ==
          act * Mat<F>::kron(idh, act)))
        return "action associativity";
    if (!(act * Mat<F>::kron(idh, b.mul_map()) ==
          b.mul_map() * Mat<F>::kron(act, act) *
              Mat<F>::kron(idh, Mat<F>::kron(swap_tensor(f, nh, nb), idb)) *
              Mat<F>::kron(h.coproduct, Mat<F>::kron(idb, idb))))
        return "action multiplicativity";
    if (!(act * Mat<F>::kron(idh, b.unit()) == b.unit() * h.counit)) return "action on the unit";
    return "";
}

template <FieldModel F>
struct SmashProduct {
    ComoduleAlgebra<F> comodule;  // B (x) H with twisted multiplication
    Mat<F> incl_base;             // B -> P, b |-> b # 1
};

// (b # h)(b' # h') = b (h_(1) |> b') # h_(2) h', with coaction id (x) Delta
template <FieldModel F>
SmashProduct<F> smash_product(const Algebra<F>& b, const HopfAlgebra<F>& h, const Mat<F>& act) {
    if (auto bad = module_algebra_failed_axiom(b, h, act); !bad.empty())
        throw bad_input("smash_product: module-algebra axiom fails: " + bad);
    const F& f = b.field();
    const std::size_t nb = b.dim(), nh = h.dim(), n = nb * nh;
    Mat<F> mul(f, n, n * n);
    for (std::size_t bi = 0; bi < nb; ++bi)
        for (std::size_t hi = 0; hi < nh; ++hi)
            for (std::size_t bj = 0; bj < nb; ++bj)
                for (std::size_t hj = 0; hj < nh; ++hj) {
                    const std::size_t colv = (bi * nh + hi) * n + (bj * nh + hj);
                    for (std::size_t k = 0; k < nh; ++k)
                        for (std::size_t l = 0; l < nh; ++l) {
                            const auto& c = h.coproduct.at(k * nh + l, hi);
                            if (f.is_zero(c)) continue;
                            Mat<F> acted = act * Mat<F>::kron(Mat<F>::basis_col(f, nh, k),
                                                              Mat<F>::basis_col(f, nb, bj));
                            Mat<F> bpart = b.multiply(Mat<F>::basis_col(f, nb, bi), acted);
                            Mat<F> hpart = h.algebra.multiply(Mat<F>::basis_col(f, nh, l),
                                                              Mat<F>::basis_col(f, nh, hj));
                            for (std::size_t x = 0; x < nb; ++x)
                                for (std::size_t y = 0; y < nh; ++y)
                                    mul.at(x * nh + y, colv) =
                                        f.add(mul.at(x * nh + y, colv),
                                              f.mul(c, f.mul(bpart.at(x, 0), hpart.at(y, 0))));
                        }
                }
    Mat<F> unit = Mat<F>::kron(b.unit(), h.algebra.unit());
    Algebra<F> p = Algebra<F>::create(f, std::move(mul), std::move(unit));
    Mat<F> coaction = Mat<F>::kron(Mat<F>::identity(f, nb), h.coproduct);
    auto comodule = ComoduleAlgebra<F>::create(std::move(p), h, std::move(coaction));
    Mat<F> incl = Mat<F>::kron(Mat<F>::identity(f, nb), h.algebra.unit());
    return {std::move(comodule), std::move(incl)};
}

// a supplied map is a trivialization iff it is a colinear algebra isomorphism
// onto the smash product
template <FieldModel F>
bool verify_trivialization(const ComoduleAlgebra<F>& piece, const SmashProduct<F>& smash,
                           const Mat<F>& iso) {
    const F& f = piece.field();
    AlgebraMorphism<F> m{piece.algebra, smash.comodule.algebra, iso};
    if (m.matrix.rows() != smash.comodule.dim() || m.matrix.cols() != piece.dim()) return false;
    if (!m.is_multiplicative() || !m.is_unital() || !m.is_injective() || !m.is_surjective())
        return false;
    return smash.comodule.coaction * iso ==
           Mat<F>::kron(iso, Mat<F>::identity(f, piece.hdim())) * piece.coaction;
}

// ---------------------------------------------------------------------------
// comodule ideals and their contraction to the base

template <FieldModel F>
bool is_subcomodule(const ComoduleAlgebra<F>& p, const Subspace<F>& j) {
    const F& f = p.field();
    Subspace<F> jh = image(Mat<F>::kron(j.basis().transpose(), Mat<F>::identity(f, p.hdim())));
    for (std::size_t r = 0; r < j.dim(); ++r)
        if (!jh.contains(p.coaction * j.basis().transpose().col(r))) return false;
    return true;
}

template <FieldModel F>
bool is_comodule_ideal(const ComoduleAlgebra<F>& p, const Subspace<F>& j) {
    return is_ideal(p.algebra, j) && is_subcomodule(p, j);
}

// span{ x_i w_k } over basis x of the algebra and w of the subspace
template <FieldModel F>
Subspace<F> subspace_product(const Algebra<F>& p, const Subspace<F>& left,
                             const Subspace<F>& right) {
    const F& f = p.field();
    Mat<F> rows(f, left.dim() * right.dim(), p.dim());
    std::size_t r = 0;
    for (std::size_t i = 0; i < left.dim(); ++i)
        for (std::size_t k = 0; k < right.dim(); ++k, ++r) {
            Mat<F> prod =
                p.multiply(left.basis().transpose().col(i), right.basis().transpose().col(k));
            for (std::size_t c = 0; c < p.dim(); ++c) rows.at(r, c) = prod.at(c, 0);
        }
    return Subspace<F>::span(rows);
}

template <FieldModel F>
struct ContractionReport {
    Subspace<F> contracted;       // J cap B
    bool left_splitting_maps_in = false;   // s(J) inside (J cap B) (x) P
    bool right_splitting_maps_in = false;  // s'(J) inside P (x) (J cap B)
    bool regenerates_left = false;         // (J cap B) P = J
    bool regenerates_right = false;        // P (J cap B) = J
    bool ok() const {
        return left_splitting_maps_in && right_splitting_maps_in && regenerates_left &&
               regenerates_right;
    }
};

template <FieldModel F>
ContractionReport<F> ideal_contraction(const ComoduleAlgebra<F>& p, const Coinvariants<F>& b,
                                       const Mat<F>& ell, const Subspace<F>& j) {
    if (!is_comodule_ideal(p, j))
        throw std::invalid_argument("ideal_contraction: not an ideal that is a subcomodule");
    const F& f = p.field();
    auto idp = Mat<F>::identity(f, p.dim());
    Subspace<F> jb = j.intersect(b.space);
    Mat<F> jb_cols = jb.basis().transpose();
    Mat<F> s = splitting_left(p, ell);
    Mat<F> sp = splitting_right(p, ell);
    ContractionReport<F> rep{jb, false, false, false, false};

    Subspace<F> jb_p = image(Mat<F>::kron(jb_cols, idp));
    Subspace<F> p_jb = image(Mat<F>::kron(idp, jb_cols));
    rep.left_splitting_maps_in = rep.right_splitting_maps_in = true;
    for (std::size_t r = 0; r < j.dim(); ++r) {
        Mat<F> v = j.basis().transpose().col(r);
        if (!jb_p.contains(s * v)) rep.left_splitting_maps_in = false;
        if (!p_jb.contains(sp * v)) rep.right_splitting_maps_in = false;
    }
    rep.regenerates_left = (subspace_product(p.algebra, jb, Subspace<F>::full(f, p.dim())) == j);
    rep.regenerates_right = (subspace_product(p.algebra, Subspace<F>::full(f, p.dim()), jb) == j);
    return rep;
}

struct ContractionLatticeReport {
    bool preserves_sum = true;
    bool preserves_intersection = true;
    bool injective = true;
    bool ok() const { return preserves_sum && preserves_intersection && injective; }
};

// the contraction J |-> J cap B on a family of comodule ideals: a lattice
// monomorphism
template <FieldModel F>
ContractionLatticeReport contraction_lattice_check(const ComoduleAlgebra<F>&,
                                                   const Coinvariants<F>& b,
                                                   const std::vector<Subspace<F>>& family) {
    ContractionLatticeReport rep;
    auto contract = [&](const Subspace<F>& j) { return j.intersect(b.space); };
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t k = 0; k < family.size(); ++k) {
            if (!(contract(family[i].sum(family[k])) ==
                  contract(family[i]).sum(contract(family[k]))))
                rep.preserves_sum = false;
            if (!(contract(family[i].intersect(family[k])) ==
                  contract(family[i]).intersect(contract(family[k]))))
                rep.preserves_intersection = false;
            if (i != k && !(family[i] == family[k]) && contract(family[i]) == contract(family[k]))
                rep.injective = false;
        }
    return rep;
}

}  // namespace covalg
