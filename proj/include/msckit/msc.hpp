#ifndef MSCKIT_MSC_HPP
#define MSCKIT_MSC_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "msckit/matrix.hpp"

namespace msc {

enum class Side { Left, Right };

/// An n-dimensional algebra, identified with its matrix of structure
/// constants: the n × n² matrix A with e_i·e_j = Σ_k a_ij^k e_k. Row k,
/// column (i-1)·n + (j-1) holds a_ij^k (0-based storage, 1-based math).
/// The basis is always the standard basis of F^n.
template <class F>
class Msc {
  public:
    using Elem = typename F::Elem;

    Msc() = default;
    Msc(F field, std::size_t n) : n_(n), a_(field, n, n * n) {}
    Msc(std::size_t n, Matrix<F> a) : n_(n), a_(std::move(a)) {
        if (a_.rows() != n_ || a_.cols() != n_ * n_)
            throw DimensionMismatch("MSC must be n x n^2");
    }

    static Msc from_ints(F field, std::size_t n, std::initializer_list<long long> vals) {
        return Msc(n, Matrix<F>::from_ints(field, n, n * n, vals));
    }

    /// The algebra with e_i^2 = e_i and e_i e_j = 0 for i ≠ j.
    static Msc diag_idempotent(F field, std::size_t n) {
        Msc m(field, n);
        for (std::size_t i = 0; i < n; ++i) m.entry(i, i, i) = field.one();
        return m;
    }

    static Msc zero_algebra(F field, std::size_t n) { return Msc(field, n); }

    const F& field() const { return a_.field(); }
    std::size_t dim() const { return n_; }
    const Matrix<F>& matrix() const { return a_; }
    Matrix<F>& matrix() { return a_; }

    /// a_{i+1,j+1}^{k+1} in math indexing; arguments are 0-based.
    Elem& entry(std::size_t k, std::size_t i, std::size_t j) { return a_.at(k, i * n_ + j); }
    const Elem& entry(std::size_t k, std::size_t i, std::size_t j) const {
        return a_.at(k, i * n_ + j);
    }

    bool operator==(const Msc& o) const { return n_ == o.n_ && a_ == o.a_; }

  private:
    std::size_t n_ = 0;
    Matrix<F> a_;
};

/// Coordinates of the product of u and v: A·(u ⊗ v).
template <class F>
Vec<F> multiply(const Msc<F>& A, const Vec<F>& u, const Vec<F>& v) {
    if (u.size() != A.dim() || v.size() != A.dim())
        throw DimensionMismatch("multiply: vector length must equal algebra dimension");
    return A.matrix().apply(kronecker_vec(A.field(), u, v));
}

/// MSC after the basis change with matrix g: g·A·(g⁻¹)^{⊗2}.
template <class F>
Msc<F> change_basis(const Msc<F>& A, const Matrix<F>& g) {
    if (g.rows() != A.dim() || g.cols() != A.dim())
        throw DimensionMismatch("change_basis: g must be n x n");
    auto gi = inverse(g);
    if (!gi) throw SingularBasisChange{};
    return Msc<F>(A.dim(), (g * A.matrix()) * kronecker(*gi, *gi));
}

/// Matrix of x ↦ e_i·x (Left) or x ↦ x·e_i (Right); i is the 1-based basis
/// index, as in the math.
template <class F>
Matrix<F> side_operator(const Msc<F>& A, std::size_t i, Side side) {
    const std::size_t n = A.dim();
    if (i < 1 || i > n) throw IndexOutOfRange("side_operator: index must be in [1, n]");
    Matrix<F> op(A.field(), n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            op.at(k, j) = side == Side::Left ? A.entry(k, i - 1, j) : A.entry(k, j, i - 1);
    return op;
}

/// [tr(A_1), ..., tr(A_n)].
template <class F>
Vec<F> trace_vector(const Msc<F>& A) {
    const F& field = A.field();
    Vec<F> t;
    for (std::size_t i = 1; i <= A.dim(); ++i) {
        auto op = side_operator(A, i, Side::Left);
        auto tr = field.zero();
        for (std::size_t k = 0; k < A.dim(); ++k) tr = field.add(tr, op.at(k, k));
        t.push_back(tr);
    }
    return t;
}

template <class F>
Vec<F> basis_vector(const F& field, std::size_t n, std::size_t i) {
    Vec<F> v(n, field.zero());
    v[i] = field.one();
    return v;
}

}  // namespace msc

#endif  // MSCKIT_MSC_HPP
