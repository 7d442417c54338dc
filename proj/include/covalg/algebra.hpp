// Finite-dimensional unital associative algebras by structure constants,
// with ideals, quotients, fibre products, covering verification and
// Chinese-remainder gluing of local data.
//
// An algebra stores its multiplication as a linear map P (x) P -> P (an
// n x n^2 matrix over the tensor basis ordering of matrix.hpp) plus the unit
// vector. The zero algebra (dimension 0) is a valid value; maps into it are
// vacuously multiplicative and unital, and it has no unital map to anything
// but itself.

#pragma once

#include <string>

#include "covalg/lattice.hpp"
#include "covalg/subspace.hpp"

namespace covalg {

template <FieldModel F>
class Algebra {
  public:
    static Algebra create(const F& f, Mat<F> mul, Mat<F> unit, bool verify = true) {
        const std::size_t n = mul.rows();
        if (mul.cols() != n * n || unit.rows() != n || unit.cols() != 1)
            throw std::invalid_argument("Algebra: multiplication/unit shape mismatch");
        Algebra a(f, n, std::move(mul), std::move(unit));
        if (verify) {
            if (!a.is_associative()) throw bad_input("Algebra: structure constants not associative");
            if (!a.is_unital()) throw bad_input("Algebra: unit vector is not a two-sided identity");
        }
        return a;
    }

    static Algebra zero(const F& f) {
        return Algebra(f, 0, Mat<F>(f, 0, 0), Mat<F>(f, 0, 1));
    }

    const F& field() const { return fld_; }
    std::size_t dim() const { return dim_; }
    bool is_zero_algebra() const { return dim_ == 0; }
    const Mat<F>& mul_map() const { return mul_; }  // n x n^2
    const Mat<F>& unit() const { return unit_; }    // n x 1

    Mat<F> multiply(const Mat<F>& a, const Mat<F>& b) const {
        return mul_ * Mat<F>::kron(a, b);
    }

    // operator of left multiplication by a: x -> a x
    Mat<F> left_mult(const Mat<F>& a) const {
        return mul_ * Mat<F>::kron(a, Mat<F>::identity(fld_, dim_));
    }
    Mat<F> right_mult(const Mat<F>& a) const {
        return mul_ * Mat<F>::kron(Mat<F>::identity(fld_, dim_), a);
    }

    bool is_associative() const {
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) {
                auto ej = Mat<F>::basis_col(fld_, dim_, j);
                auto ek = Mat<F>::basis_col(fld_, dim_, k);
                auto jk = multiply(ej, ek);
                if (!(right_mult(jk) == right_mult(ek) * right_mult(ej))) return false;
            }
        return true;
    }

    bool is_unital() const {
        auto id = Mat<F>::identity(fld_, dim_);
        return left_mult(unit_) == id && right_mult(unit_) == id;
    }

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.dim_ == b.dim_ && a.mul_ == b.mul_ && a.unit_ == b.unit_ && a.fld_ == b.fld_;
    }

    static Algebra direct_sum(const Algebra& a, const Algebra& b) {
        const F& f = a.fld_;
        const std::size_t n1 = a.dim_, n2 = b.dim_, n = n1 + n2;
        Mat<F> mul(f, n, n * n);
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n1; ++j)
                for (std::size_t k = 0; k < n1; ++k)
                    mul.at(k, i * n + j) = a.mul_.at(k, i * n1 + j);
        for (std::size_t i = 0; i < n2; ++i)
            for (std::size_t j = 0; j < n2; ++j)
                for (std::size_t k = 0; k < n2; ++k)
                    mul.at(n1 + k, (n1 + i) * n + (n1 + j)) = b.mul_.at(k, i * n2 + j);
        Mat<F> unit = Mat<F>::vcat(a.unit_, b.unit_);
        return create(f, std::move(mul), std::move(unit), false);
    }

  private:
    Algebra(F f, std::size_t n, Mat<F> mul, Mat<F> unit)
        : fld_(std::move(f)), dim_(n), mul_(std::move(mul)), unit_(std::move(unit)) {}

    F fld_;
    std::size_t dim_;
    Mat<F> mul_;
    Mat<F> unit_;
};

template <FieldModel F>
struct AlgebraMorphism {
    Algebra<F> source;
    Algebra<F> target;
    Mat<F> matrix;  // target.dim x source.dim

    bool is_multiplicative() const {
        return matrix * source.mul_map() ==
               target.mul_map() * Mat<F>::kron(matrix, matrix);
    }
    bool is_unital() const {
        if (target.is_zero_algebra()) return true;  // maps into 0 are vacuously unital
        if (source.is_zero_algebra()) return false; // 0 has unital maps only to itself
        return matrix * source.unit() == target.unit();
    }
    bool is_surjective() const { return matrix.rank() == target.dim(); }
    bool is_injective() const { return matrix.kernel().rows() == 0; }

    void require_valid(const std::string& what) const {
        if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
            throw std::invalid_argument(what + ": matrix shape mismatch");
        if (!is_multiplicative()) throw bad_input(what + ": not multiplicative");
        if (!is_unital()) throw bad_input(what + ": not unital");
    }

    Subspace<F> kernel_space() const { return covalg::kernel_space(matrix); }
};

template <FieldModel F>
AlgebraMorphism<F> identity_morphism(const Algebra<F>& a) {
    return {a, a, Mat<F>::identity(a.field(), a.dim())};
}

template <FieldModel F>
AlgebraMorphism<F> compose(const AlgebraMorphism<F>& f, const AlgebraMorphism<F>& g) {
    return {g.source, f.target, f.matrix * g.matrix};
}

// closure under two-sided multiplication
template <FieldModel F>
bool is_ideal(const Algebra<F>& p, const Subspace<F>& s) {
    if (s.ambient() != p.dim()) throw std::invalid_argument("is_ideal: ambient mismatch");
    for (std::size_t r = 0; r < s.dim(); ++r) {
        Mat<F> v = s.basis().transpose().col(r);
        for (std::size_t i = 0; i < p.dim(); ++i) {
            auto e = Mat<F>::basis_col(p.field(), p.dim(), i);
            if (!s.contains(p.multiply(e, v)) || !s.contains(p.multiply(v, e))) return false;
        }
    }
    return true;
}

// smallest two-sided ideal containing the given vectors (columns)
template <FieldModel F>
Subspace<F> ideal_generated(const Algebra<F>& p, const std::vector<Mat<F>>& vectors) {
    Subspace<F> s = Subspace<F>::zero(p.field(), p.dim());
    for (const auto& v : vectors) {
        Mat<F> row = v.transpose();
        s = s.sum(Subspace<F>::span(row));
    }
    for (;;) {
        Subspace<F> next = s;
        for (std::size_t r = 0; r < s.dim(); ++r) {
            Mat<F> v = s.basis().transpose().col(r);
            for (std::size_t i = 0; i < p.dim(); ++i) {
                auto e = Mat<F>::basis_col(p.field(), p.dim(), i);
                next = next.sum(Subspace<F>::span(p.multiply(e, v).transpose()));
                next = next.sum(Subspace<F>::span(p.multiply(v, e).transpose()));
            }
        }
        if (next == s) return s;
        s = next;
    }
}

template <FieldModel F>
struct QuotientAlgebra {
    Algebra<F> algebra;
    AlgebraMorphism<F> proj;  // P -> Q
    Mat<F> section;           // Q -> P, linear; sends class of 1 to 1
};

template <FieldModel F>
QuotientAlgebra<F> quotient_algebra(const Algebra<F>& p, const Subspace<F>& j) {
    if (!is_ideal(p, j)) throw bad_input("quotient_algebra: subspace is not a two-sided ideal");
    const F& f = p.field();
    Mat<F> unit = p.unit();
    auto qm = quotient_maps(j, &unit);
    const std::size_t q = qm.proj.rows();
    Mat<F> mul(f, q, q * q);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) {
            Mat<F> prod = qm.proj * p.multiply(qm.section.col(a), qm.section.col(b));
            for (std::size_t k = 0; k < q; ++k) mul.at(k, a * q + b) = prod.at(k, 0);
        }
    Algebra<F> alg = Algebra<F>::create(f, std::move(mul), qm.proj * unit, false);
    return {alg, AlgebraMorphism<F>{p, alg, qm.proj}, qm.section};
}

// P/J -> P/J' for J inside J', as induced on the chosen quotient bases
template <FieldModel F>
AlgebraMorphism<F> induced_quotient_map(const QuotientAlgebra<F>& small, const QuotientAlgebra<F>& big) {
    return {small.algebra, big.algebra, big.proj.matrix * small.section};
}

template <FieldModel F>
struct FibreProduct {
    Algebra<F> algebra;        // matching pairs inside P1 (+) P2
    AlgebraMorphism<F> pr1, pr2;
    Mat<F> incl;               // algebra -> P1 (+) P2, columns = chosen basis
    Algebra<F> ambient;        // P1 (+) P2
};

template <FieldModel F>
FibreProduct<F> fibre_product(const AlgebraMorphism<F>& m12, const AlgebraMorphism<F>& m21) {
    if (!(m12.target == m21.target)) throw std::invalid_argument("fibre_product: target mismatch");
    const F& f = m12.source.field();
    const Algebra<F>& p1 = m12.source;
    const Algebra<F>& p2 = m21.source;
    Algebra<F> d = Algebra<F>::direct_sum(p1, p2);
    Mat<F> diff = Mat<F>::hcat(m12.matrix, -m21.matrix);
    Subspace<F> w = kernel_space(diff);
    const std::size_t nw = w.dim();
    Mat<F> incl = w.basis().transpose();  // (n1+n2) x nw

    Mat<F> mul(f, nw, nw * nw);
    for (std::size_t a = 0; a < nw; ++a)
        for (std::size_t b = 0; b < nw; ++b) {
            Mat<F> prod = d.multiply(incl.col(a), incl.col(b));
            auto coords = w.reduce(prod.transpose());
            if (!coords) throw std::logic_error("fibre_product: product left the subalgebra");
            for (std::size_t k = 0; k < nw; ++k) mul.at(k, a * nw + b) = (*coords)[k];
        }
    auto unit_coords = w.reduce(d.unit().transpose());
    if (!unit_coords) throw bad_input("fibre_product: (1,1) is not in the fibre product");
    Mat<F> unit(f, nw, 1);
    for (std::size_t k = 0; k < nw; ++k) unit.at(k, 0) = (*unit_coords)[k];

    Algebra<F> w_alg = Algebra<F>::create(f, std::move(mul), std::move(unit), false);
    Mat<F> top(f, p1.dim(), nw), bottom(f, p2.dim(), nw);
    for (std::size_t i = 0; i < p1.dim(); ++i)
        for (std::size_t c = 0; c < nw; ++c) top.at(i, c) = incl.at(i, c);
    for (std::size_t i = 0; i < p2.dim(); ++i)
        for (std::size_t c = 0; c < nw; ++c) bottom.at(i, c) = incl.at(p1.dim() + i, c);
    return {w_alg,
            AlgebraMorphism<F>{w_alg, p1, std::move(top)},
            AlgebraMorphism<F>{w_alg, p2, std::move(bottom)},
            std::move(incl), std::move(d)};
}

// Exactness data for the commuting square over a fibre product: the induced
// map into the pullback is surjective iff ker(pi o phi) = ker phi1 + ker phi2.
template <FieldModel F>
struct SurjectivityCertificate {
    bool surjective = false;
    Subspace<F> ker_composite;  // ker(pi1 o phi1) = ker(pi2 o phi2)
    Subspace<F> ker_sum;        // ker phi1 + ker phi2
    Subspace<F> ker_eta;        // ker phi1 cap ker phi2
};

template <FieldModel F>
SurjectivityCertificate<F> surjectivity_criterion(const Mat<F>& phi1, const Mat<F>& phi2,
                                                  const Mat<F>& pi1, const Mat<F>& pi2) {
    if (!(pi1 * phi1 == pi2 * phi2))
        throw std::invalid_argument("surjectivity_criterion: square does not commute");
    if (phi1.rank() != phi1.rows() || phi2.rank() != phi2.rows() ||
        pi1.rank() != pi1.rows() || pi2.rank() != pi2.rows())
        throw std::invalid_argument("surjectivity_criterion: maps must be surjective");
    auto k1 = kernel_space(phi1), k2 = kernel_space(phi2);
    SurjectivityCertificate<F> cert{
        false, kernel_space(pi1 * phi1), k1.sum(k2), k1.intersect(k2)};
    cert.surjective = (cert.ker_composite == cert.ker_sum);
    return cert;
}

// Lattice oracle over ideals generated by covering kernels:
// meet = +, join = cap, leq = reverse inclusion, bottom = unit ideal.
template <FieldModel F>
struct IdealOracle {
    using Elem = Subspace<F>;
    F fld;
    std::size_t ambient = 0;
    std::vector<Subspace<F>> gens;

    int generator_count() const { return static_cast<int>(gens.size()); }
    Subspace<F> generator(int i) const { return gens[i]; }
    Subspace<F> meet(const Subspace<F>& a, const Subspace<F>& b) const { return a.sum(b); }
    Subspace<F> join(const Subspace<F>& a, const Subspace<F>& b) const { return a.intersect(b); }
    bool leq(const Subspace<F>& a, const Subspace<F>& b) const { return a.contains(b); }
    Subspace<F> bottom() const { return Subspace<F>::full(fld, ambient); }
};

template <FieldModel F>
struct CoveringData {
    Algebra<F> algebra;
    std::vector<AlgebraMorphism<F>> surjections;
    std::vector<Subspace<F>> kernels;
    std::vector<bool> surjective;
    bool weak = false;
    DistributivityVerdict<Subspace<F>> distributivity;

    int count() const { return static_cast<int>(surjections.size()); }
    bool all_surjective() const {
        for (bool s : surjective)
            if (!s) return false;
        return true;
    }
    bool is_covering() const { return all_surjective() && weak && distributivity.distributive; }

    IdealOracle<F> ideal_oracle() const {
        return {algebra.field(), algebra.dim(), kernels};
    }
};

template <FieldModel F>
CoveringData<F> covering_check(const Algebra<F>& p, std::vector<AlgebraMorphism<F>> pis,
                               int cap = kDefaultEnumCap) {
    if (pis.empty()) throw std::invalid_argument("covering_check: need at least one surjection");
    CoveringData<F> c{p, std::move(pis), {}, {}, false, {}};
    Subspace<F> inter = Subspace<F>::full(p.field(), p.dim());
    for (auto& m : c.surjections) {
        if (!(m.source == p)) throw std::invalid_argument("covering_check: source mismatch");
        m.require_valid("covering_check");
        c.surjective.push_back(m.is_surjective());
        c.kernels.push_back(m.kernel_space());
        inter = inter.intersect(c.kernels.back());
    }
    c.weak = (inter.dim() == 0);
    c.distributivity = distributivity_check(c.ideal_oracle(), cap);
    return c;
}

class refused : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// ideal cut out by an open set: intersection over the canonical antichain of
// sums of kernels
template <FieldModel F>
Subspace<F> open_set_ideal(const CoveringData<F>& c, const Antichain& open) {
    return R_map(c.ideal_oracle(), open);
}

template <FieldModel F>
struct GlueOutcome {
    bool ok = false;
    std::string error;
    Antichain union_open{1};
    Mat<F> lift;                  // representative in the covered algebra
    std::size_t ambiguity_dim = 0;  // dim of the ideal of the union; 0 = unique lift
};

// Chinese-remainder gluing of local data p_i over opens U_i: finds p with
// p = p_i mod ideal(U_i). Locals are given by lifts in the covered algebra.
// Refuses non-distributive coverings (the uniqueness argument needs the
// generated ideal lattice to be distributive).
template <FieldModel F>
GlueOutcome<F> crt_glue(const CoveringData<F>& c, const std::vector<Antichain>& opens,
                        const std::vector<Mat<F>>& local_lifts) {
    if (!c.is_covering())
        throw refused("crt_glue: refusing to glue over a family that is not a covering "
                      "(surjective + trivial kernel intersection + distributive ideal lattice)");
    if (opens.empty() || opens.size() != local_lifts.size())
        throw std::invalid_argument("crt_glue: need matching nonempty opens/locals");

    std::vector<Subspace<F>> ideals;
    for (const auto& u : opens) ideals.push_back(open_set_ideal(c, u));

    GlueOutcome<F> out{false, "", opens[0], local_lifts[0], 0};
    // pairwise compatibility on overlaps: p_i - p_j in ideal(U_i) + ideal(U_j)
    for (std::size_t i = 0; i < opens.size(); ++i)
        for (std::size_t j = i + 1; j < opens.size(); ++j) {
            auto overlap = ideals[i].sum(ideals[j]);
            Mat<F> d = local_lifts[i] - local_lifts[j];
            if (!overlap.contains(d)) {
                out.error = "incompatible local data on opens " + std::to_string(i) + "," +
                            std::to_string(j);
                return out;
            }
        }

    Subspace<F> cur_ideal = ideals[0];
    Antichain cur_open = opens[0];
    Mat<F> x = local_lifts[0];
    for (std::size_t k = 1; k < opens.size(); ++k) {
        // solve x' = x + j1 = p_k + j2 with j1 in cur_ideal, j2 in ideal_k
        Mat<F> d = local_lifts[k] - x;
        Mat<F> stacked = Mat<F>::hcat(cur_ideal.basis().transpose(), ideals[k].basis().transpose());
        auto sol = stacked.solve(d);
        if (!sol) {
            out.error = "gluing system inconsistent at step " + std::to_string(k);
            return out;
        }
        Mat<F> coeffs(x.field(), cur_ideal.dim(), 1);
        for (std::size_t r = 0; r < cur_ideal.dim(); ++r) coeffs.at(r, 0) = sol->at(r, 0);
        x = x + cur_ideal.basis().transpose() * coeffs;
        cur_open = antichain_join(cur_open, opens[k]);
        cur_ideal = cur_ideal.intersect(ideals[k]);
    }
    for (std::size_t i = 0; i < opens.size(); ++i)
        if (!ideals[i].contains(x - local_lifts[i]))
            throw std::logic_error("crt_glue: internal consistency failure");
    out.ok = true;
    out.union_open = cur_open;
    out.lift = x;
    out.ambiguity_dim = cur_ideal.dim();
    return out;
}

template <FieldModel F>
struct MultiPullback {
    Algebra<F> algebra;      // iterated fibre product
    Mat<F> iso;              // covered algebra -> multi-pullback, bijective when weak
    bool verified = false;   // each induction step an algebra isomorphism
};

// Rebuilds the covered algebra as an iterated fibre product of its pieces,
// following quotients by J_1, J_1 cap J_2, ... and pairwise pullbacks over
// the overlap quotients. Requires a weak covering.
template <FieldModel F>
MultiPullback<F> reconstruct(const CoveringData<F>& c) {
    if (!c.weak) throw refused("reconstruct: kernels do not intersect to zero");
    const Algebra<F>& p = c.algebra;
    const F& f = p.field();

    Subspace<F> accum = c.kernels[0];
    QuotientAlgebra<F> cur = quotient_algebra(p, accum);
    bool verified = true;
    for (int i = 1; i < c.count(); ++i) {
        Subspace<F> next_ideal = accum.intersect(c.kernels[i]);
        QuotientAlgebra<F> piece = quotient_algebra(p, c.kernels[i]);
        QuotientAlgebra<F> overlap = quotient_algebra(p, accum.sum(c.kernels[i]));
        auto tau1 = induced_quotient_map(cur, overlap);
        auto tau2 = induced_quotient_map(piece, overlap);
        FibreProduct<F> fp = fibre_product(tau1, tau2);
        QuotientAlgebra<F> next = quotient_algebra(p, next_ideal);
        // canonical map P/(accum cap J_i) -> fibre product
        Mat<F> eta(f, fp.algebra.dim(), next.algebra.dim());
        for (std::size_t b = 0; b < next.algebra.dim(); ++b) {
            Mat<F> v = next.section.col(b);
            Mat<F> pair = Mat<F>::vcat(cur.proj.matrix * v, piece.proj.matrix * v);
            auto sol = fp.incl.solve(pair);
            if (!sol) throw std::logic_error("reconstruct: image missed the fibre product");
            eta.set_col(b, *sol);
        }
        AlgebraMorphism<F> eta_m{next.algebra, fp.algebra, eta};
        verified = verified && eta_m.is_multiplicative() && eta_m.is_unital() &&
                   eta_m.is_surjective() && eta_m.is_injective();
        auto eta_inv = eta.inverse();
        if (!eta_inv) throw std::logic_error("reconstruct: induction step is not an isomorphism");
        // continue with the pullback as the current algebra, transported back
        // to the quotient presentation so kernels stay subspaces of P
        cur = QuotientAlgebra<F>{fp.algebra,
                                 AlgebraMorphism<F>{p, fp.algebra, eta * next.proj.matrix},
                                 next.section * *eta_inv};
        accum = next_ideal;
    }
    return {cur.algebra, cur.proj.matrix, verified && accum.dim() == 0};
}

}  // namespace covalg
