#pragma once

#include <utility>
#include <vector>

#include "regstab/field.hpp"

namespace regstab {

/// Dense row-major matrix over an exact field. Graded pieces here are small,
/// so dense Gaussian elimination with exact pivoting is the workhorse.
template <class F>
class DenseMatrix {
public:
    using Elem = typename F::Elem;

    DenseMatrix() : rows_(0), cols_(0) {}
    DenseMatrix(const F& K, int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, K.zero()) {}

    static DenseMatrix identity(const F& K, int n) {
        DenseMatrix m(K, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = K.one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Elem& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Elem& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    void append_row(const std::vector<Elem>& row) {
        a_.insert(a_.end(), row.begin(), row.end());
        ++rows_;
    }

    DenseMatrix mul(const F& K, const DenseMatrix& o) const {
        DenseMatrix r(K, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Elem& aik = at(i, k);
                if (K.is_zero(aik)) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const Elem& okj = o.at(k, j);
                    if (!K.is_zero(okj)) r.at(i, j) = K.add(r.at(i, j), K.mul(aik, okj));
                }
            }
        return r;
    }

    bool equals(const F& K, const DenseMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (size_t i = 0; i < a_.size(); ++i)
            if (!K.eq(a_[i], o.a_[i])) return false;
        return true;
    }

    std::vector<Elem> apply(const F& K, const std::vector<Elem>& v) const {
        std::vector<Elem> r(rows_, K.zero());
        for (int i = 0; i < rows_; ++i) {
            Elem s = K.zero();
            for (int j = 0; j < cols_; ++j)
                if (!K.is_zero(at(i, j)) && !K.is_zero(v[j])) s = K.add(s, K.mul(at(i, j), v[j]));
            r[i] = s;
        }
        return r;
    }

    /// In-place reduction to row echelon form. Returns the pivot columns in
    /// order. Pivot choice is the first nonzero entry, scanning rows top-down.
    std::vector<int> row_echelon(const F& K) {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int pr = -1;
            for (int i = r; i < rows_; ++i)
                if (!K.is_zero(at(i, c))) { pr = i; break; }
            if (pr < 0) continue;
            swap_rows(pr, r);
            Elem inv = K.inv(at(r, c));
            for (int j = c; j < cols_; ++j) at(r, j) = K.mul(at(r, j), inv);
            for (int i = 0; i < rows_; ++i) {
                if (i == r) continue;
                const Elem& f = at(i, c);
                if (K.is_zero(f)) continue;
                Elem nf = K.neg(f);
                for (int j = c; j < cols_; ++j)
                    at(i, j) = K.add(at(i, j), K.mul(nf, at(r, j)));
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank(const F& K) const {
        DenseMatrix tmp = *this;
        return static_cast<int>(tmp.row_echelon(K).size());
    }

private:
    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }

    int rows_, cols_;
    std::vector<Elem> a_;
};

/// Exact rank and a kernel basis: rank + |kernel| = cols. Kernel vectors are
/// the standard RREF back-substitution basis, one per free column.
template <class F>
std::pair<int, std::vector<std::vector<typename F::Elem>>> kernel_and_rank(const F& K, DenseMatrix<F> M) {
    std::vector<int> pivots = M.row_echelon(K);
    int rank = static_cast<int>(pivots.size());
    std::vector<std::vector<typename F::Elem>> kernel;
    std::vector<int> pivot_of_col(M.cols(), -1);
    for (int r = 0; r < rank; ++r) pivot_of_col[pivots[r]] = r;
    for (int c = 0; c < M.cols(); ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<typename F::Elem> v(M.cols(), K.zero());
        v[c] = K.one();
        for (int pc = 0; pc < M.cols(); ++pc) {
            int r = pivot_of_col[pc];
            if (r >= 0) v[pc] = K.neg(M.at(r, c));
        }
        kernel.push_back(std::move(v));
    }
    return {rank, std::move(kernel)};
}

} // namespace regstab
