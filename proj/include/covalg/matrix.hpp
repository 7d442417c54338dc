// Dense exact matrices over a field model, with Gauss-Jordan elimination,
// affine solving, kernels and Kronecker products.
//
// Linear maps are matrices acting on column vectors; a vector is an n x 1
// matrix. Tensor products use the fixed row-major basis ordering
// e_i (x) e_j  |->  i * dim_second + j, consistently everywhere.

#pragma once

#include <optional>
#include <vector>

#include "covalg/field.hpp"

namespace covalg {

template <FieldModel F>
class Mat {
  public:
    using E = typename F::Elem;

    Mat(F field, std::size_t rows, std::size_t cols)
        : fld_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, fld_.zero()) {}

    static Mat identity(const F& f, std::size_t n) {
        Mat m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }
    static Mat zero(const F& f, std::size_t r, std::size_t c) { return Mat(f, r, c); }

    // n x 1 standard basis vector
    static Mat basis_col(const F& f, std::size_t n, std::size_t i) {
        Mat m(f, n, 1);
        m.at(i, 0) = f.one();
        return m;
    }

    static Mat from_rows(const F& f, std::size_t rows, std::size_t cols, std::vector<E> data) {
        Mat m(f, rows, cols);
        if (data.size() != rows * cols) throw std::invalid_argument("Mat::from_rows: size mismatch");
        m.a_ = std::move(data);
        return m;
    }

    const F& field() const { return fld_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    E& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const E& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    E* row_ptr(std::size_t r) { return a_.data() + r * cols_; }
    const E* row_ptr(std::size_t r) const { return a_.data() + r * cols_; }

    bool is_zero() const {
        for (const E& x : a_)
            if (!fld_.is_zero(x)) return false;
        return true;
    }

    bool same_shape(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    Mat operator+(const Mat& o) const {
        require_shape(o, "add");
        Mat r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = fld_.add(a_[i], o.a_[i]);
        return r;
    }
    Mat operator-(const Mat& o) const {
        require_shape(o, "sub");
        Mat r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = fld_.sub(a_[i], o.a_[i]);
        return r;
    }
    Mat scaled(const E& c) const {
        Mat r = *this;
        for (E& x : r.a_) x = fld_.mul(x, c);
        return r;
    }
    Mat operator-() const { return scaled(fld_.neg(fld_.one())); }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Mat::mul: dimension mismatch");
        Mat r(fld_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const E& aik = at(i, k);
                if (fld_.is_zero(aik)) continue;
                const E* orow = o.row_ptr(k);
                E* rrow = r.row_ptr(i);
                for (std::size_t j = 0; j < o.cols_; ++j)
                    rrow[j] = fld_.add(rrow[j], fld_.mul(aik, orow[j]));
            }
        return r;
    }

    Mat transpose() const {
        Mat r(fld_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Mat col(std::size_t j) const {
        Mat r(fld_, rows_, 1);
        for (std::size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
        return r;
    }

    void set_col(std::size_t j, const Mat& v) {
        for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v.at(i, 0);
    }

    static Mat hcat(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_) throw std::invalid_argument("Mat::hcat: row mismatch");
        Mat r(a.fld_, a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
        }
        return r;
    }
    static Mat vcat(const Mat& a, const Mat& b) {
        if (a.cols_ != b.cols_) throw std::invalid_argument("Mat::vcat: col mismatch");
        Mat r(a.fld_, a.rows_ + b.rows_, a.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
        return r;
    }

    // Kronecker product: (a (x) b)[(i*p+k), (j*q+l)] = a[i,j] * b[k,l].
    static Mat kron(const Mat& a, const Mat& b) {
        Mat r(a.fld_, a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) {
                const E& aij = a.at(i, j);
                if (a.fld_.is_zero(aij)) continue;
                for (std::size_t k = 0; k < b.rows_; ++k)
                    for (std::size_t l = 0; l < b.cols_; ++l)
                        r.at(i * b.rows_ + k, j * b.cols_ + l) = a.fld_.mul(aij, b.at(k, l));
            }
        return r;
    }

    // In-place reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref_in_place() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t sel = row;
            while (sel < rows_ && fld_.is_zero(at(sel, col))) ++sel;
            if (sel == rows_) continue;
            if (sel != row)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(row, j));
            const E piv_inv = fld_.inv(at(row, col));
            for (std::size_t j = col; j < cols_; ++j) at(row, j) = fld_.mul(at(row, j), piv_inv);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row) continue;
                const E factor = at(i, col);
                if (fld_.is_zero(factor)) continue;
                at(i, col) = fld_.zero();
                const E* prow = row_ptr(row);
                E* irow = row_ptr(i);
                for (std::size_t j = col + 1; j < cols_; ++j) {
                    if (fld_.is_zero(prow[j])) continue;
                    irow[j] = fld_.sub(irow[j], fld_.mul(factor, prow[j]));
                }
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    Mat rref(std::vector<std::size_t>* pivots_out = nullptr) const {
        Mat r = *this;
        auto piv = r.rref_in_place();
        if (pivots_out) *pivots_out = std::move(piv);
        return r;
    }

    std::size_t rank() const {
        Mat r = *this;
        return r.rref_in_place().size();
    }

    // Basis of the null space {x : Ax = 0}, one solution per row.
    Mat kernel() const {
        std::vector<std::size_t> piv;
        Mat r = rref(&piv);
        std::vector<bool> is_piv(cols_, false);
        for (auto c : piv) is_piv[c] = true;
        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0; c < cols_; ++c)
            if (!is_piv[c]) free_cols.push_back(c);
        Mat k(fld_, free_cols.size(), cols_);
        for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
            std::size_t fc = free_cols[fi];
            k.at(fi, fc) = fld_.one();
            for (std::size_t pi = 0; pi < piv.size(); ++pi)
                k.at(fi, piv[pi]) = fld_.neg(r.at(pi, fc));
        }
        return k;
    }

    // Exact solve A X = B (multi-rhs); free variables set to zero.
    std::optional<Mat> solve(const Mat& b) const {
        if (b.rows_ != rows_) throw std::invalid_argument("Mat::solve: rhs dimension mismatch");
        std::vector<std::size_t> piv;
        Mat aug = hcat(*this, b).rref(&piv);
        Mat x(fld_, cols_, b.cols_);
        for (auto c : piv)
            if (c >= cols_) return std::nullopt;  // pivot in rhs block: inconsistent
        for (std::size_t pi = 0; pi < piv.size(); ++pi)
            for (std::size_t j = 0; j < b.cols_; ++j) x.at(piv[pi], j) = aug.at(pi, cols_ + j);
        return x;
    }

    std::optional<Mat> inverse() const {
        if (rows_ != cols_) return std::nullopt;
        auto x = solve(identity(fld_, rows_));
        if (!x) return std::nullopt;
        if (rank() != rows_) return std::nullopt;
        return x;
    }

    std::vector<E> column_data(std::size_t j) const {
        std::vector<E> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }

  private:
    void require_shape(const Mat& o, const char* what) const {
        if (!same_shape(o)) throw std::invalid_argument(std::string("Mat::") + what + ": shape mismatch");
    }

    F fld_;
    std::size_t rows_, cols_;
    std::vector<E> a_;
};

// Permutation matrix for the flip V (x) W -> W (x) V,
// e_i (x) e_j |-> e_j (x) e_i with dim V = m, dim W = n.
template <FieldModel F>
Mat<F> swap_tensor(const F& f, std::size_t m, std::size_t n) {
    Mat<F> s(f, m * n, m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) s.at(j * m + i, i * n + j) = f.one();
    return s;
}

// e_i (x) e_j as a column vector of length dim(a) * dim(b).
template <FieldModel F>
Mat<F> kron_col(const Mat<F>& a, const Mat<F>& b) {
    return Mat<F>::kron(a, b);
}

}  // namespace covalg
