// Subspaces of k^n in canonical reduced-echelon form.
//
// The canonical basis makes subspace equality a syntactic comparison, which
// the lattice machinery relies on. Sums, intersections and quotients are
// exact; dim(U+V) + dim(U cap V) = dim U + dim V always holds.

#pragma once

#include <optional>

#include "covalg/matrix.hpp"

namespace covalg {

template <FieldModel F>
class Subspace {
  public:
    // span of the rows, echelonized
    static Subspace span(const Mat<F>& rows) {
        Mat<F> r = rows.rref();
        std::size_t nz = 0;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            bool zero = true;
            for (std::size_t j = 0; j < r.cols(); ++j)
                if (!r.field().is_zero(r.at(i, j))) { zero = false; break; }
            if (!zero) ++nz;
            else break;  // rref sorts zero rows to the bottom
        }
        Mat<F> basis(r.field(), nz, r.cols());
        for (std::size_t i = 0; i < nz; ++i)
            for (std::size_t j = 0; j < r.cols(); ++j) basis.at(i, j) = r.at(i, j);
        return Subspace(rows.cols(), std::move(basis));
    }

    static Subspace span_cols(const Mat<F>& cols) { return span(cols.transpose()); }

    static Subspace zero(const F& f, std::size_t ambient) {
        return Subspace(ambient, Mat<F>(f, 0, ambient));
    }
    static Subspace full(const F& f, std::size_t ambient) {
        return Subspace(ambient, Mat<F>::identity(f, ambient));
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Mat<F>& basis() const { return basis_; }  // dim x ambient, RREF
    const F& field() const { return basis_.field(); }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

    bool contains(const Mat<F>& col) const {
        if (col.rows() != ambient_ || col.cols() != 1)
            throw std::invalid_argument("Subspace::contains: ambient mismatch");
        return reduce(col.transpose()).has_value();
    }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::contains: ambient mismatch");
        for (std::size_t i = 0; i < other.dim(); ++i) {
            Mat<F> row(field(), 1, ambient_);
            for (std::size_t j = 0; j < ambient_; ++j) row.at(0, j) = other.basis_.at(i, j);
            if (!reduce(row)) return false;
        }
        return true;
    }

    Subspace sum(const Subspace& other) const {
        require_same_ambient(other);
        return span(Mat<F>::vcat(basis_, other.basis_));
    }

    Subspace intersect(const Subspace& other) const {
        require_same_ambient(other);
        // x in U cap V iff x = U^T a = V^T b; solve [U^T | -V^T] null space
        Mat<F> ut = basis_.transpose();
        Mat<F> vt = other.basis_.transpose();
        Mat<F> stacked = Mat<F>::hcat(ut, -vt);
        Mat<F> ker = stacked.kernel();  // rows (a | b)
        Mat<F> vecs(field(), ker.rows(), ambient_);
        for (std::size_t r = 0; r < ker.rows(); ++r)
            for (std::size_t j = 0; j < ambient_; ++j) {
                auto acc = field().zero();
                for (std::size_t i = 0; i < dim(); ++i)
                    acc = field().add(acc, field().mul(ker.at(r, i), basis_.at(i, j)));
                vecs.at(r, j) = acc;
            }
        return span(vecs);
    }

    // coordinates of a row vector in the echelon basis, or nullopt if outside
    std::optional<std::vector<typename F::Elem>> reduce(const Mat<F>& row) const {
        const F& f = field();
        std::vector<typename F::Elem> rem(ambient_), coeff(dim(), f.zero());
        for (std::size_t j = 0; j < ambient_; ++j) rem[j] = row.at(0, j);
        for (std::size_t i = 0; i < dim(); ++i) {
            std::size_t p = pivot_col(i);
            const auto c = rem[p];
            if (f.is_zero(c)) continue;
            coeff[i] = c;
            for (std::size_t j = 0; j < ambient_; ++j)
                rem[j] = f.sub(rem[j], f.mul(c, basis_.at(i, j)));
        }
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!f.is_zero(rem[j])) return std::nullopt;
        return coeff;
    }

    std::size_t pivot_col(std::size_t i) const {
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!field().is_zero(basis_.at(i, j))) return j;
        throw std::logic_error("Subspace: zero basis row");
    }

  private:
    Subspace(std::size_t ambient, Mat<F> basis) : ambient_(ambient), basis_(std::move(basis)) {}

    void require_same_ambient(const Subspace& o) const {
        if (o.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    }

    std::size_t ambient_;
    Mat<F> basis_;
};

enum class CombineMode { sum, intersection };

template <FieldModel F>
Subspace<F> subspace_combine(const Subspace<F>& u, const Subspace<F>& v, CombineMode mode) {
    return mode == CombineMode::sum ? u.sum(v) : u.intersect(v);
}

// Linear data of the quotient k^n / J: a projection onto coordinates of a
// complement and a section picking representatives. proj * section = id on
// the quotient and ker(proj) = J. When a preferred lift outside J is given
// (typically an algebra unit) it becomes the first complement basis vector,
// so the section sends its class back to it exactly.
template <FieldModel F>
struct QuotientMaps {
    Mat<F> proj;     // q x n
    Mat<F> section;  // n x q, columns = complement basis
};

template <FieldModel F>
QuotientMaps<F> quotient_maps(const Subspace<F>& j, const Mat<F>* preferred_lift = nullptr) {
    const F& f = j.field();
    const std::size_t n = j.ambient();
    Mat<F> accum = j.basis();
    std::vector<Mat<F>> complement;
    auto try_add = [&](const Mat<F>& col) {
        Mat<F> cand = Mat<F>::vcat(accum, col.transpose());
        if (cand.rank() > accum.rows()) {
            accum = Subspace<F>::span(cand).basis();
            complement.push_back(col);
            return true;
        }
        return false;
    };
    if (preferred_lift != nullptr) try_add(*preferred_lift);
    for (std::size_t i = 0; i < n && accum.rows() < n; ++i) try_add(Mat<F>::basis_col(f, n, i));

    const std::size_t q = complement.size();
    Mat<F> section(f, n, q);
    for (std::size_t c = 0; c < q; ++c) section.set_col(c, complement[c]);

    // change of basis [J-basis rows; complement rows]: coordinates of v are
    // B^T x = v; proj takes the complement block of x
    Mat<F> b(f, n, n);
    for (std::size_t i = 0; i < j.dim(); ++i)
        for (std::size_t c = 0; c < n; ++c) b.at(i, c) = j.basis().at(i, c);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t c = 0; c < n; ++c) b.at(j.dim() + i, c) = complement[i].at(c, 0);
    auto binv = b.transpose().inverse();
    if (!binv) throw std::logic_error("quotient_maps: complement construction failed");
    Mat<F> proj(f, q, n);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t c = 0; c < n; ++c) proj.at(i, c) = binv->at(j.dim() + i, c);
    return {std::move(proj), std::move(section)};
}

template <FieldModel F>
std::optional<Mat<F>> solve_affine(const Mat<F>& a, const Mat<F>& b) {
    return a.solve(b);
}

// image of a linear map as a subspace of the target
template <FieldModel F>
Subspace<F> image(const Mat<F>& a) {
    return Subspace<F>::span(a.transpose());
}

template <FieldModel F>
Subspace<F> kernel_space(const Mat<F>& a) {
    return Subspace<F>::span(a.kernel());
}

}  // namespace covalg
