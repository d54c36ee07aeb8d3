#ifndef MSCKIT_AUTOMORPHISMS_HPP
#define MSCKIT_AUTOMORPHISMS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "msckit/matrix.hpp"
#include "msckit/msc.hpp"

namespace msc {

inline constexpr unsigned long long kDefaultBudget = 10'000'000ull;

/// |GL(n,p)| = Π (p^n − p^i), saturated at UINT64_MAX on overflow.
inline unsigned long long gl_order(std::size_t n, std::uint64_t p) {
    unsigned __int128 pn = 1;
    for (std::size_t i = 0; i < n; ++i) {
        pn *= p;
        if (pn > (unsigned __int128)UINT64_MAX) return UINT64_MAX;
    }
    unsigned __int128 order = 1;
    unsigned __int128 pi = 1;
    for (std::size_t i = 0; i < n; ++i) {
        order *= (pn - pi);
        if (order > (unsigned __int128)UINT64_MAX) return UINT64_MAX;
        pi *= p;
    }
    return static_cast<unsigned long long>(order);
}

/// det(g) ≠ 0 and g·A = A·(g⊗g), checked exactly.
template <class F>
bool is_automorphism(const Msc<F>& A, const Matrix<F>& g) {
    const std::size_t n = A.dim();
    if (g.rows() != n || g.cols() != n)
        throw DimensionMismatch("is_automorphism: g must be n x n");
    if (A.field().is_zero(det(g))) return false;
    return (g * A.matrix()) == (A.matrix() * kronecker(g, g));
}

namespace detail {

// g·A = A·(g⊗g) column by column with early exit; no Kronecker temporaries.
// Compares Σ_m g_km a_ij^m against Σ_m g_mi (A_m g)_kj.
template <class F>
bool aut_equation_holds(const Msc<F>& A, const Matrix<F>& g) {
    const F& field = A.field();
    const std::size_t n = A.dim();
    // B_m = A_m · g
    std::vector<Matrix<F>> B;
    B.reserve(n);
    for (std::size_t m = 1; m <= n; ++m) B.push_back(side_operator(A, m, Side::Left) * g);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto lhs = field.zero();
                for (std::size_t m = 0; m < n; ++m)
                    lhs = field.add(lhs, field.mul(g.at(k, m), A.entry(m, i, j)));
                auto rhs = field.zero();
                for (std::size_t m = 0; m < n; ++m)
                    rhs = field.add(rhs, field.mul(g.at(m, i), B[m].at(k, j)));
                if (!field.eq(lhs, rhs)) return false;
            }
    return true;
}

/// Visits every invertible n×n matrix over GF(p) in lexicographic entry
/// order. Stops early when fn returns false.
template <class Fn>
void for_each_gl(const PrimeField& field, std::size_t n, Fn&& fn) {
    const std::uint64_t p = field.size();
    Matrix<PrimeField> g(field, n, n);
    std::vector<std::uint64_t> idx(n * n, 0);
    while (true) {
        for (std::size_t k = 0; k < n * n; ++k) g.at(k / n, k % n) = idx[k];
        if (!field.is_zero(det(g))) {
            if (!fn(g)) return;
        }
        std::size_t pos = n * n;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < p) break;
            idx[pos] = 0;
            if (pos == 0) return;
        }
    }
}

/// Complete automorphism-existence decision for n = 2 over GF(p) without
/// scanning GL(2,p). An automorphism is a pair (u,v) = (g e1, g e2) with
/// u·u = a_11^1 u + a_11^2 v        (linear in v)
/// u·v = a_12^1 u + a_12^2 v        (linear in v)
/// v·u = a_21^1 u + a_21^2 v        (linear in v)
/// v·v = a_22^1 u + a_22^2 v        (checked on the finitely many candidates)
/// For each of the p² choices of u the first three give a 6×2 linear system;
/// its affine solution set is enumerated and the quadratic condition plus
/// invertibility are verified. Returns a non-identity witness or nothing.
inline std::optional<Matrix<PrimeField>> aut2_nontrivial_witness(const Msc<PrimeField>& A) {
    if (A.dim() != 2) throw DimensionMismatch("aut2 decision requires n = 2");
    const PrimeField field = A.field();
    const std::uint64_t p = field.size();
    using E = PrimeField::Elem;

    auto prod = [&](E x1, E x2, E y1, E y2, E& r1, E& r2) {
        // x·y with x = (x1,x2), y = (y1,y2)
        E m11 = field.mul(x1, y1), m12 = field.mul(x1, y2);
        E m21 = field.mul(x2, y1), m22 = field.mul(x2, y2);
        r1 = field.add(field.add(field.mul(A.entry(0, 0, 0), m11), field.mul(A.entry(0, 0, 1), m12)),
                       field.add(field.mul(A.entry(0, 1, 0), m21), field.mul(A.entry(0, 1, 1), m22)));
        r2 = field.add(field.add(field.mul(A.entry(1, 0, 0), m11), field.mul(A.entry(1, 0, 1), m12)),
                       field.add(field.mul(A.entry(1, 1, 0), m21), field.mul(A.entry(1, 1, 1), m22)));
    };

    auto check_pair = [&](E u1, E u2, E v1, E v2) -> bool {
        if (u1 == 1 && u2 == 0 && v1 == 0 && v2 == 1) return false;  // identity
        if (field.is_zero(field.sub(field.mul(u1, v2), field.mul(u2, v1)))) return false;
        E r1, r2;
        prod(u1, u2, u1, u2, r1, r2);  // u·u
        if (r1 != field.add(field.mul(A.entry(0, 0, 0), u1), field.mul(A.entry(1, 0, 0), v1)) ||
            r2 != field.add(field.mul(A.entry(0, 0, 0), u2), field.mul(A.entry(1, 0, 0), v2)))
            return false;
        prod(u1, u2, v1, v2, r1, r2);  // u·v
        if (r1 != field.add(field.mul(A.entry(0, 0, 1), u1), field.mul(A.entry(1, 0, 1), v1)) ||
            r2 != field.add(field.mul(A.entry(0, 0, 1), u2), field.mul(A.entry(1, 0, 1), v2)))
            return false;
        prod(v1, v2, u1, u2, r1, r2);  // v·u
        if (r1 != field.add(field.mul(A.entry(0, 1, 0), u1), field.mul(A.entry(1, 1, 0), v1)) ||
            r2 != field.add(field.mul(A.entry(0, 1, 0), u2), field.mul(A.entry(1, 1, 0), v2)))
            return false;
        prod(v1, v2, v1, v2, r1, r2);  // v·v
        if (r1 != field.add(field.mul(A.entry(0, 1, 1), u1), field.mul(A.entry(1, 1, 1), v1)) ||
            r2 != field.add(field.mul(A.entry(0, 1, 1), u2), field.mul(A.entry(1, 1, 1), v2)))
            return false;
        return true;
    };

    for (std::uint64_t u1 = 0; u1 < p; ++u1)
        for (std::uint64_t u2 = 0; u2 < p; ++u2) {
            if (u1 == 0 && u2 == 0) continue;
            // linear-in-v rows: M v = rhs over the three bilinear equations
            E uu1, uu2, L11, L12, L21, L22, R11, R12, R21, R22;
            prod(u1, u2, u1, u2, uu1, uu2);
            // L_u (left multiplication by u) and R_u columns
            {
                E a1, a2;
                prod(u1, u2, 1, 0, a1, a2);
                L11 = a1;
                L21 = a2;
                prod(u1, u2, 0, 1, a1, a2);
                L12 = a1;
                L22 = a2;
                prod(1, 0, u1, u2, a1, a2);
                R11 = a1;
                R21 = a2;
                prod(0, 1, u1, u2, a1, a2);
                R12 = a1;
                R22 = a2;
            }
            E M[6][2];
            E rhs[6];
            // u·u = a_11^1 u + a_11^2 v
            M[0][0] = A.entry(1, 0, 0);
            M[0][1] = 0;
            rhs[0] = field.sub(uu1, field.mul(A.entry(0, 0, 0), u1));
            M[1][0] = 0;
            M[1][1] = A.entry(1, 0, 0);
            rhs[1] = field.sub(uu2, field.mul(A.entry(0, 0, 0), u2));
            // u·v = a_12^1 u + a_12^2 v  =>  (L_u − a_12^2 I) v = a_12^1 u
            M[2][0] = field.sub(L11, A.entry(1, 0, 1));
            M[2][1] = L12;
            rhs[2] = field.mul(A.entry(0, 0, 1), u1);
            M[3][0] = L21;
            M[3][1] = field.sub(L22, A.entry(1, 0, 1));
            rhs[3] = field.mul(A.entry(0, 0, 1), u2);
            // v·u = a_21^1 u + a_21^2 v  =>  (R_u − a_21^2 I) v = a_21^1 u
            M[4][0] = field.sub(R11, A.entry(1, 1, 0));
            M[4][1] = R12;
            rhs[4] = field.mul(A.entry(0, 1, 0), u1);
            M[5][0] = R21;
            M[5][1] = field.sub(R22, A.entry(1, 1, 0));
            rhs[5] = field.mul(A.entry(0, 1, 0), u2);

            // tiny Gaussian elimination on the 6×3 augmented system
            int prow = 0;
            int pivcol[2] = {-1, -1};
            for (int col = 0; col < 2 && prow < 6; ++col) {
                int pr = prow;
                while (pr < 6 && field.is_zero(M[pr][col])) ++pr;
                if (pr == 6) continue;
                std::swap(M[pr][0], M[prow][0]);
                std::swap(M[pr][1], M[prow][1]);
                std::swap(rhs[pr], rhs[prow]);
                E inv = field.inv(M[prow][col]);
                M[prow][0] = field.mul(M[prow][0], inv);
                M[prow][1] = field.mul(M[prow][1], inv);
                rhs[prow] = field.mul(rhs[prow], inv);
                for (int r = 0; r < 6; ++r) {
                    if (r == prow || field.is_zero(M[r][col])) continue;
                    E f = M[r][col];
                    M[r][0] = field.sub(M[r][0], field.mul(f, M[prow][0]));
                    M[r][1] = field.sub(M[r][1], field.mul(f, M[prow][1]));
                    rhs[r] = field.sub(rhs[r], field.mul(f, rhs[prow]));
                }
                pivcol[col] = prow;
                ++prow;
            }
            bool inconsistent = false;
            for (int r = prow; r < 6; ++r)
                if (!field.is_zero(rhs[r])) inconsistent = true;
            if (inconsistent) continue;

            auto emit = [&](E v1, E v2) { return check_pair(u1, u2, v1, v2); };
            const bool free1 = pivcol[0] < 0, free2 = pivcol[1] < 0;
            if (!free1 && !free2) {
                if (emit(rhs[pivcol[0]], rhs[pivcol[1]])) {
                    Matrix<PrimeField> g(field, 2, 2);
                    g.at(0, 0) = u1;
                    g.at(1, 0) = u2;
                    g.at(0, 1) = rhs[pivcol[0]];
                    g.at(1, 1) = rhs[pivcol[1]];
                    return g;
                }
            } else if (free1 != free2) {
                // one free coordinate: p candidates along a line
                for (std::uint64_t t = 0; t < p; ++t) {
                    E v1, v2;
                    if (free1) {
                        v1 = t;
                        v2 = field.sub(rhs[pivcol[1]], field.mul(M[pivcol[1]][0], t));
                    } else {
                        v2 = t;
                        v1 = field.sub(rhs[pivcol[0]], field.mul(M[pivcol[0]][1], t));
                    }
                    if (emit(v1, v2)) {
                        Matrix<PrimeField> g(field, 2, 2);
                        g.at(0, 0) = u1;
                        g.at(1, 0) = u2;
                        g.at(0, 1) = v1;
                        g.at(1, 1) = v2;
                        return g;
                    }
                }
            } else {
                for (std::uint64_t v1 = 0; v1 < p; ++v1)
                    for (std::uint64_t v2 = 0; v2 < p; ++v2)
                        if (emit(v1, v2)) {
                            Matrix<PrimeField> g(field, 2, 2);
                            g.at(0, 0) = u1;
                            g.at(1, 0) = u2;
                            g.at(0, 1) = v1;
                            g.at(1, 1) = v2;
                            return g;
                        }
            }
        }
    return std::nullopt;
}

}  // namespace detail

/// Complete list of automorphisms over GF(p) by exhaustive GL(n,p) scan, in
/// lexicographic order. Requires |GL(n,p)| ≤ budget.
template <class F>
std::vector<Matrix<F>> enumerate_automorphisms(const Msc<F>& A,
                                               unsigned long long budget = kDefaultBudget) {
    if constexpr (std::is_same_v<F, Rationals>) {
        (void)A;
        (void)budget;
        throw NotFiniteField("enumerate_automorphisms requires GF(p)");
    } else {
        const auto order = gl_order(A.dim(), A.field().size());
        if (order > budget)
            throw BudgetExceeded(order, "|GL(n,p)| = " + std::to_string(order) + " exceeds budget");
        std::vector<Matrix<F>> auts;
        detail::for_each_gl(A.field(), A.dim(), [&](const Matrix<F>& g) {
            if (detail::aut_equation_holds(A, g)) auts.push_back(g);
            return true;
        });
        return auts;
    }
}

enum class AutStatus { Trivial, NonTrivial, Unknown };
enum class AutMethod { Exhaustive, WitnessOnly };

template <class F>
struct AutVerdict {
    AutStatus status = AutStatus::Unknown;
    AutMethod method = AutMethod::WitnessOnly;
    std::optional<Matrix<F>> witness;               // nontrivial automorphism, if one is known
    std::optional<unsigned long long> order;        // |Aut(A)| when fully enumerated
};

namespace detail {

/// Bounded witness search usable over any field: permutations, signed
/// diagonals, and identity-plus-one-entry unipotents. Every automorphism
/// satisfies the linear relation tr(A_i) = Σ_j tr(A_j) g_ji, so candidates
/// are screened by it before the full bilinear check.
template <class F>
std::optional<Matrix<F>> heuristic_aut_witness(const Msc<F>& A) {
    const F& field = A.field();
    const std::size_t n = A.dim();
    auto I = Matrix<F>::identity(field, n);
    const auto tr = trace_vector(A);

    auto passes = [&](const Matrix<F>& g) {
        for (std::size_t i = 0; i < n; ++i) {
            auto rhs = field.zero();
            for (std::size_t j = 0; j < n; ++j) rhs = field.add(rhs, field.mul(tr[j], g.at(j, i)));
            if (!field.eq(tr[i], rhs)) return false;
        }
        return !(g == I) && is_automorphism(A, g);
    };

    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    do {
        Matrix<F> g(field, n, n);
        for (std::size_t j = 0; j < n; ++j) g.at(perm[j], j) = field.one();
        if (passes(g)) return g;
    } while (std::next_permutation(perm.begin(), perm.end()));

    const long long diag_pool[] = {1, -1, 2};
    std::vector<std::size_t> pick(n, 0);
    while (true) {
        Matrix<F> g(field, n, n);
        for (std::size_t i = 0; i < n; ++i) g.at(i, i) = field.from_int(diag_pool[pick[i]]);
        if (passes(g)) return g;
        std::size_t pos = n;
        bool done = false;
        while (pos > 0) {
            --pos;
            if (++pick[pos] < 3) break;
            pick[pos] = 0;
            if (pos == 0) done = true;
        }
        if (done) break;
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            for (long long lam : {1ll, -1ll, 2ll}) {
                Matrix<F> g = I;
                g.at(i, j) = field.from_int(lam);
                if (passes(g)) return g;
            }
        }
    return std::nullopt;
}

}  // namespace detail

/// Is Aut(A) = {I}? Over GF(p) the decision is exhaustive whenever the GL
/// scan (or, for n = 2, the per-column solver) fits the budget. Over ℚ a
/// bounded witness search can answer NonTrivial; Trivial is never reported
/// without an exhaustive method, so the remaining answer is Unknown.
template <class F>
AutVerdict<F> decide_trivial_aut(const Msc<F>& A, unsigned long long budget = kDefaultBudget) {
    AutVerdict<F> v;
    if constexpr (std::is_same_v<F, PrimeField>) {
        const std::uint64_t p = A.field().size();
        if (gl_order(A.dim(), p) <= budget) {
            v.method = AutMethod::Exhaustive;
            v.status = AutStatus::Trivial;
            const auto I = Matrix<F>::identity(A.field(), A.dim());
            detail::for_each_gl(A.field(), A.dim(), [&](const Matrix<F>& g) {
                if (!(g == I) && detail::aut_equation_holds(A, g)) {
                    v.status = AutStatus::NonTrivial;
                    v.witness = g;
                    return false;
                }
                return true;
            });
            return v;
        }
        if (A.dim() == 2 && static_cast<unsigned long long>(p) * p <= budget) {
            v.method = AutMethod::Exhaustive;
            auto w = detail::aut2_nontrivial_witness(A);
            v.status = w ? AutStatus::NonTrivial : AutStatus::Trivial;
            v.witness = w;
            return v;
        }
    }
    auto w = detail::heuristic_aut_witness(A);
    v.method = AutMethod::WitnessOnly;
    if (w) {
        v.status = AutStatus::NonTrivial;
        v.witness = w;
    } else {
        v.status = AutStatus::Unknown;
    }
    return v;
}

/// Exhaustive isomorphism test over GF(p): some g with change_basis(A,g) = B.
template <class F>
std::optional<Matrix<F>> are_isomorphic(const Msc<F>& A, const Msc<F>& B,
                                        unsigned long long budget = kDefaultBudget) {
    if (A.dim() != B.dim() || !(A.field().spec() == B.field().spec()))
        throw DimensionMismatch("are_isomorphic: same dimension and field required");
    if constexpr (std::is_same_v<F, Rationals>) {
        (void)budget;
        throw NotFiniteField("are_isomorphic requires GF(p)");
    } else {
        const auto order = gl_order(A.dim(), A.field().size());
        if (order > budget)
            throw BudgetExceeded(order, "|GL(n,p)| = " + std::to_string(order) + " exceeds budget");
        std::optional<Matrix<F>> found;
        detail::for_each_gl(A.field(), A.dim(), [&](const Matrix<F>& g) {
            if (change_basis(A, g) == B) {
                found = g;
                return false;
            }
            return true;
        });
        return found;
    }
}

}  // namespace msc

#endif  // MSCKIT_AUTOMORPHISMS_HPP
