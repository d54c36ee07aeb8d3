#ifndef MSCKIT_MATRIX_HPP
#define MSCKIT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "msckit/errors.hpp"
#include "msckit/field.hpp"

namespace msc {

template <class F>
using Vec = std::vector<typename F::Elem>;

/// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
  public:
    using Elem = typename F::Elem;

    Matrix() = default;
    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), e_(rows * cols, field.zero()) {}

    static Matrix identity(F field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
        return m;
    }

    static Matrix from_ints(F field, std::size_t rows, std::size_t cols,
                            std::initializer_list<long long> vals) {
        Matrix m(field, rows, cols);
        std::size_t k = 0;
        for (long long v : vals) m.e_[k++] = field.from_int(v);
        if (k != rows * cols) throw DimensionMismatch("from_ints: wrong entry count");
        return m;
    }

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Elem& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Elem& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    const std::vector<Elem>& entries() const { return e_; }
    std::vector<Elem>& entries() { return e_; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
        Matrix r(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Elem& a = at(i, k);
                if (field_.is_zero(a)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) = field_.add(r.at(i, j), field_.mul(a, o.at(k, j)));
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape");
        Matrix r = *this;
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = field_.add(r.e_[k], o.e_[k]);
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape");
        Matrix r = *this;
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = field_.sub(r.e_[k], o.e_[k]);
        return r;
    }

    Matrix scaled(const Elem& c) const {
        Matrix r = *this;
        for (auto& x : r.e_) x = field_.mul(x, c);
        return r;
    }

    Vec<F> apply(const Vec<F>& v) const {
        if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape");
        Vec<F> r(rows_, field_.zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                r[i] = field_.add(r[i], field_.mul(at(i, j), v[j]));
        return r;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!field_.is_zero(x)) return false;
        return true;
    }

  private:
    F field_{};
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> e_;
};

/// B ⊗ C, the block matrix (b_ij · C).
template <class F>
Matrix<F> kronecker(const Matrix<F>& B, const Matrix<F>& C) {
    const F& field = B.field();
    Matrix<F> K(field, B.rows() * C.rows(), B.cols() * C.cols());
    for (std::size_t i = 0; i < B.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) {
            const auto& b = B.at(i, j);
            if (field.is_zero(b)) continue;
            for (std::size_t k = 0; k < C.rows(); ++k)
                for (std::size_t l = 0; l < C.cols(); ++l)
                    K.at(i * C.rows() + k, j * C.cols() + l) = field.mul(b, C.at(k, l));
        }
    return K;
}

template <class F>
Vec<F> kronecker_vec(const F& field, const Vec<F>& x, const Vec<F>& y) {
    Vec<F> r;
    r.reserve(x.size() * y.size());
    for (const auto& a : x)
        for (const auto& b : y) r.push_back(field.mul(a, b));
    return r;
}

/// Reduced row-echelon form with leading ones. Pivoting is deterministic:
/// first nonzero entry in column order. Returns (rref, rank).
template <class F>
std::pair<Matrix<F>, std::size_t> rref(Matrix<F> m) {
    const F field = m.field();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < m.rows() && field.is_zero(m.at(piv, col))) ++piv;
        if (piv == m.rows()) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(rank, j));
        const auto pivinv = field.inv(m.at(rank, col));
        for (std::size_t j = col; j < m.cols(); ++j) m.at(rank, j) = field.mul(m.at(rank, j), pivinv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || field.is_zero(m.at(i, col))) continue;
            const auto f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = field.sub(m.at(i, j), field.mul(f, m.at(rank, j)));
        }
        ++rank;
    }
    return {std::move(m), rank};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    return rref(m).second;
}

template <class F>
typename F::Elem trace(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("trace of non-square matrix");
    auto t = m.field().zero();
    for (std::size_t i = 0; i < m.rows(); ++i) t = m.field().add(t, m.at(i, i));
    return t;
}

template <class F>
typename F::Elem det(Matrix<F> m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
    const F field = m.field();
    auto d = field.one();
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && field.is_zero(m.at(piv, col))) ++piv;
        if (piv == n) return field.zero();
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            d = field.neg(d);
        }
        d = field.mul(d, m.at(col, col));
        const auto pivinv = field.inv(m.at(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            if (field.is_zero(m.at(i, col))) continue;
            const auto f = field.mul(m.at(i, col), pivinv);
            for (std::size_t j = col; j < n; ++j)
                m.at(i, j) = field.sub(m.at(i, j), field.mul(f, m.at(col, j)));
        }
    }
    return d;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
    const F field = m.field();
    const std::size_t n = m.rows();
    Matrix<F> aug(field, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = field.one();
    }
    auto [r, rk] = rref(std::move(aug));
    (void)rk;  // rank of [M | I] is always n; invertibility needs the left block = I
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i == j ? !field.eq(r.at(i, j), field.one()) : !field.is_zero(r.at(i, j)))
                return std::nullopt;
    Matrix<F> inv(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
    return inv;
}

/// Subspace of F^n held as a reduced-basis: rows in RREF, pivot columns
/// strictly increasing. Equality of subspaces is equality of reduced bases.
template <class F>
class Subspace {
  public:
    using Elem = typename F::Elem;

    Subspace() = default;
    Subspace(F field, std::size_t ambient) : field_(field), ambient_(ambient) {}

    static Subspace span(F field, std::size_t ambient, const std::vector<Vec<F>>& vectors) {
        Subspace s(field, ambient);
        for (const auto& v : vectors) s.extend(v);
        return s;
    }

    const F& field() const { return field_; }
    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    bool is_zero() const { return rows_.empty(); }
    bool is_full() const { return rows_.size() == ambient_; }
    const std::vector<Vec<F>>& basis() const { return rows_; }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && rows_ == o.rows_;
    }

    bool contains(const Vec<F>& v) const {
        Vec<F> r = v;
        reduce(r);
        for (const auto& x : r)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    /// Adds v to the span; returns true if the dimension grew.
    bool extend(const Vec<F>& v) {
        if (v.size() != ambient_) throw DimensionMismatch("subspace vector length");
        Vec<F> r = v;
        reduce(r);
        std::size_t lead = 0;
        while (lead < ambient_ && field_.is_zero(r[lead])) ++lead;
        if (lead == ambient_) return false;
        const auto s = field_.inv(r[lead]);
        for (auto& x : r) x = field_.mul(x, s);
        // eliminate the new pivot column from existing rows, keep pivot order
        for (auto& row : rows_) {
            if (field_.is_zero(row[lead])) continue;
            const auto f = row[lead];
            for (std::size_t j = 0; j < ambient_; ++j)
                row[j] = field_.sub(row[j], field_.mul(f, r[j]));
        }
        auto pos = rows_.begin();
        while (pos != rows_.end() && pivot_of(*pos) < lead) ++pos;
        rows_.insert(pos, std::move(r));
        return true;
    }

  private:
    std::size_t pivot_of(const Vec<F>& row) const {
        std::size_t j = 0;
        while (j < ambient_ && field_.is_zero(row[j])) ++j;
        return j;
    }

    void reduce(Vec<F>& v) const {
        for (const auto& row : rows_) {
            std::size_t p = pivot_of(row);
            if (field_.is_zero(v[p])) continue;
            const auto f = v[p];
            for (std::size_t j = 0; j < ambient_; ++j)
                v[j] = field_.sub(v[j], field_.mul(f, row[j]));
        }
    }

    F field_{};
    std::size_t ambient_ = 0;
    std::vector<Vec<F>> rows_;
};

/// Basis of {x : Mx = 0} as a Subspace; dim = cols - rank.
template <class F>
Subspace<F> kernel_basis(const Matrix<F>& m) {
    const F field = m.field();
    auto [r, rk] = rref(m);
    const std::size_t n = m.cols();
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < rk; ++i) {
        std::size_t j = 0;
        while (j < n && field.is_zero(r.at(i, j))) ++j;
        pivot_col.push_back(j);
        is_pivot[j] = true;
    }
    Subspace<F> ker(field, n);
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec<F> v(n, field.zero());
        v[free] = field.one();
        for (std::size_t i = 0; i < rk; ++i) v[pivot_col[i]] = field.neg(r.at(i, free));
        ker.extend(v);
    }
    return ker;
}

}  // namespace msc

#endif  // MSCKIT_MATRIX_HPP
