#ifndef BRAIDSYM_LINALG_HPP
#define BRAIDSYM_LINALG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "braidsym/errors.hpp"

namespace braidsym {

/// Dense matrix over an exact field F (Rational or RatFunc), row-major.
template <class F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
        if (rows.empty()) return Matrix();
        Matrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                throw Error(ErrorCode::Internal, "Matrix::from_rows: ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    std::vector<F> row(std::size_t i) const {
        return std::vector<F>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorCode::Internal, "Matrix: size mismatch in product");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (aik.is_zero()) continue; // operator matrices are sparse
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const F& bkj = b(k, j);
                    if (!bkj.is_zero()) c(i, j) += aik * bkj;
                }
            }
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw Error(ErrorCode::Internal, "Matrix: size mismatch in difference");
        Matrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] - b.e_[i];
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    /// v -> M v on column vectors.
    std::vector<F> apply(const std::vector<F>& v) const {
        if (v.size() != cols_) throw Error(ErrorCode::Internal, "Matrix::apply: size mismatch");
        std::vector<F> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<F> e_;
};

/// In-place reduced row echelon form. Pivot = first nonzero entry scanning
/// left to right (no magnitude heuristics; the field is exact). Returns the
/// rank and, optionally, the pivot column per reduced row.
template <class F>
std::size_t rref_in_place(Matrix<F>& m, std::vector<std::size_t>* pivot_cols = nullptr) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    if (pivot_cols) pivot_cols->clear();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(r, j), m(p, j));
        F inv = m(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j)
            if (!m(r, j).is_zero()) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            F f = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

template <class F>
std::pair<Matrix<F>, std::size_t> rref(const Matrix<F>& m) {
    Matrix<F> a = m;
    std::size_t rank = rref_in_place(a);
    return {a, rank};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    Matrix<F> a = m;
    return rref_in_place(a);
}

/// Subspace of a labeled coordinate space, stored as an RREF row basis.
template <class F>
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0)
        : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    /// Row span of `rows`; reduced on construction.
    static Subspace span(const Matrix<F>& rows) {
        Subspace s(rows.cols());
        Matrix<F> a = rows;
        std::vector<std::size_t> piv;
        std::size_t rank = rref_in_place(a, &piv);
        Matrix<F> b(rank, rows.cols());
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = 0; j < rows.cols(); ++j) b(i, j) = a(i, j);
        s.basis_ = std::move(b);
        s.pivots_ = std::move(piv);
        return s;
    }

    static Subspace full(std::size_t ambient_dim) {
        return span(Matrix<F>::identity(ambient_dim));
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix<F>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

    /// Reduces v against the basis; the remainder is zero iff v lies in the
    /// subspace.
    std::vector<F> reduce(std::vector<F> v) const {
        if (v.size() != ambient_)
            throw AmbientMismatch("Subspace::reduce: ambient dimension mismatch");
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            const F& c = v[pivots_[i]];
            if (c.is_zero()) continue;
            F f = c;
            for (std::size_t j = pivots_[i]; j < ambient_; ++j)
                if (!basis_(i, j).is_zero()) v[j] -= f * basis_(i, j);
        }
        return v;
    }

    bool contains(const std::vector<F>& v) const {
        auto r = reduce(v);
        for (const auto& x : r)
            if (!x.is_zero()) return false;
        return true;
    }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_)
            throw AmbientMismatch("Subspace::contains: ambient dimension mismatch");
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_.row(i))) return false;
        return true;
    }

private:
    std::size_t ambient_;
    Matrix<F> basis_;
    std::vector<std::size_t> pivots_;
};

/// Incremental row-echelon accumulator. Rows are reduced fraction-free
/// against the pivots seen so far (scaled cross-elimination, then content
/// stripping via primitivize_row), so growing a span row by row never
/// normalizes pivots to 1 and never runs gcds on field elements.
template <class F>
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t ambient) : ambient_(ambient) {}

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }

    /// Reduces the row; returns the index of the stored row when the rank
    /// grew, or no value when the row was already in the span.
    std::optional<std::size_t> insert(std::vector<F> row) {
        if (row.size() != ambient_) throw AmbientMismatch("EchelonBasis::insert: size mismatch");
        if (!reduce_in_place(row)) return std::nullopt;
        std::size_t c = 0;
        while (row[c].is_zero()) ++c;
        pivot_row_[c] = rows_.size();
        rows_.push_back(std::move(row));
        return rows_.size() - 1;
    }

    bool in_span(std::vector<F> row) const {
        if (row.size() != ambient_) throw AmbientMismatch("EchelonBasis::in_span: size mismatch");
        return !reduce_in_place(row);
    }

    const std::vector<F>& row(std::size_t i) const { return rows_[i]; }

    Subspace<F> to_subspace() const {
        Matrix<F> m(rows_.size(), ambient_);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < ambient_; ++j)
                if (!rows_[i][j].is_zero()) m(i, j) = rows_[i][j];
        return Subspace<F>::span(m);
    }

private:
    // Returns true when a nonzero remainder is left in `row`.
    bool reduce_in_place(std::vector<F>& row) const {
        primitivize_row(row);
        for (std::size_t c = 0; c < ambient_; ++c) {
            if (row[c].is_zero()) continue;
            auto it = pivot_row_.find(c);
            if (it == pivot_row_.end()) return true;
            const auto& p = rows_[it->second];
            F a = p[c], b = row[c];
            for (std::size_t j = c; j < ambient_; ++j) {
                F t = row[j].is_zero() ? F(0) : a * row[j];
                if (!p[j].is_zero()) t -= b * p[j];
                row[j] = std::move(t);
            }
            primitivize_row(row);
        }
        return false;
    }

    std::size_t ambient_;
    std::vector<std::vector<F>> rows_;
    std::map<std::size_t, std::size_t> pivot_row_;
};

/// RREF basis of the right null space { x : m x = 0 }; dim = cols - rank.
template <class F>
Subspace<F> kernel(const Matrix<F>& m) {
    Matrix<F> a = m;
    std::vector<std::size_t> piv;
    std::size_t rank = rref_in_place(a, &piv);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : piv) is_pivot[c] = true;
    Matrix<F> null_rows(cols - rank, cols);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        null_rows(r, c) = F(1);
        for (std::size_t i = 0; i < rank; ++i) null_rows(r, piv[i]) = -a(i, c);
        ++r;
    }
    return Subspace<F>::span(null_rows);
}

template <class F>
Subspace<F> subspace_sum(const Subspace<F>& a, const Subspace<F>& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw AmbientMismatch("subspace_sum: ambient dimension mismatch");
    Matrix<F> stacked(a.dim() + b.dim(), a.ambient_dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.ambient_dim(); ++j) stacked(i, j) = a.basis()(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.ambient_dim(); ++j) stacked(a.dim() + i, j) = b.basis()(i, j);
    return Subspace<F>::span(stacked);
}

/// Intersection via the kernel of the stacked system [A^T | -B^T]: a vector
/// x A = y B lies in both row spans. Avoids needing a bilinear form on
/// Q(q)-spaces.
template <class F>
Subspace<F> subspace_intersection(const Subspace<F>& a, const Subspace<F>& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw AmbientMismatch("subspace_intersection: ambient dimension mismatch");
    const std::size_t da = a.dim(), db = b.dim(), n = a.ambient_dim();
    if (da == 0 || db == 0) return Subspace<F>(n);
    Matrix<F> sys(n, da + db);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < da; ++i) sys(j, i) = a.basis()(i, j);
        for (std::size_t i = 0; i < db; ++i) sys(j, da + i) = -b.basis()(i, j);
    }
    Subspace<F> sols = kernel(sys);
    Matrix<F> rows(sols.dim(), n);
    for (std::size_t s = 0; s < sols.dim(); ++s)
        for (std::size_t i = 0; i < da; ++i) {
            const F& c = sols.basis()(s, i);
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!a.basis()(i, j).is_zero()) rows(s, j) += c * a.basis()(i, j);
        }
    return Subspace<F>::span(rows);
}

} // namespace braidsym

#endif
