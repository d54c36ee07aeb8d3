#ifndef MSCKIT_DERIVATIONS_HPP
#define MSCKIT_DERIVATIONS_HPP

#include <vector>

#include "msckit/matrix.hpp"
#include "msckit/msc.hpp"

namespace msc {

/// The n³ × n² coefficient matrix M(A) of the linearized derivation equation
/// D·A = A·(D⊗I + I⊗D). The unknown D is flattened row-major: d_{km} sits in
/// slot (k-1)n + m. Equation (k,i,j) sits in row (k-1)n² + (i-1)n + j and
/// reads Σ_m d_{km} a_ij^m − Σ_m a_mj^k d_mi − Σ_l a_il^k d_lj = 0.
template <class F>
Matrix<F> derivation_matrix(const Msc<F>& A) {
    const F& field = A.field();
    const std::size_t n = A.dim();
    Matrix<F> M(field, n * n * n, n * n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t row = k * n * n + i * n + j;
                for (std::size_t v = 0; v < n; ++v)
                    M.at(row, k * n + v) = field.add(M.at(row, k * n + v), A.entry(v, i, j));
                for (std::size_t u = 0; u < n; ++u)
                    M.at(row, u * n + i) = field.sub(M.at(row, u * n + i), A.entry(k, u, j));
                for (std::size_t u = 0; u < n; ++u)
                    M.at(row, u * n + j) = field.sub(M.at(row, u * n + j), A.entry(k, i, u));
            }
    return M;
}

/// Direct Leibniz check D·A = A·(D⊗I + I⊗D), independent of M(A).
template <class F>
bool is_derivation(const Msc<F>& A, const Matrix<F>& D) {
    const std::size_t n = A.dim();
    if (D.rows() != n || D.cols() != n)
        throw DimensionMismatch("is_derivation: D must be n x n");
    auto I = Matrix<F>::identity(A.field(), n);
    auto lhs = D * A.matrix();
    auto rhs = A.matrix() * (kronecker(D, I) + kronecker(I, D));
    return lhs == rhs;
}

/// Basis of Der(A) = ker M(A), un-flattened to n×n matrices. Every element
/// passes the direct Leibniz check by construction of M(A).
template <class F>
std::vector<Matrix<F>> derivation_basis(const Msc<F>& A) {
    const std::size_t n = A.dim();
    auto ker = kernel_basis(derivation_matrix(A));
    std::vector<Matrix<F>> basis;
    for (const auto& flat : ker.basis()) {
        Matrix<F> D(A.field(), n, n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t m = 0; m < n; ++m) D.at(k, m) = flat[k * n + m];
        basis.push_back(std::move(D));
    }
    return basis;
}

template <class F>
std::size_t derivation_rank(const Msc<F>& A) {
    return rank(derivation_matrix(A));
}

/// Der(A) = {0}, decided by rank(M(A)) = n².
template <class F>
bool is_trivial_der(const Msc<F>& A) {
    return derivation_rank(A) == A.dim() * A.dim();
}

}  // namespace msc

#endif  // MSCKIT_DERIVATIONS_HPP
