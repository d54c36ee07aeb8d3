#ifndef MSCKIT_SIMPLICITY_HPP
#define MSCKIT_SIMPLICITY_HPP

#include <optional>
#include <vector>

#include "msckit/matrix.hpp"
#include "msckit/msc.hpp"
#include "msckit/poly.hpp"

namespace msc {

/// The multiplication operator system Ā = (A_1..A_n, A°_1..A°_n): an algebra
/// is simple iff this system has only the trivial invariant subspaces.
template <class F>
std::vector<Matrix<F>> operator_system(const Msc<F>& A) {
    std::vector<Matrix<F>> ops;
    ops.reserve(2 * A.dim());
    for (std::size_t i = 1; i <= A.dim(); ++i) ops.push_back(side_operator(A, i, Side::Left));
    for (std::size_t i = 1; i <= A.dim(); ++i) ops.push_back(side_operator(A, i, Side::Right));
    return ops;
}

/// Smallest Ā-invariant subspace containing v, by span saturation. Stable in
/// at most n rounds.
template <class F>
Subspace<F> closure(const Msc<F>& A, const Vec<F>& v) {
    if (v.size() != A.dim()) throw DimensionMismatch("closure: vector length");
    auto ops = operator_system(A);
    Subspace<F> W(A.field(), A.dim());
    W.extend(v);
    bool grew = true;
    while (grew && !W.is_full()) {
        grew = false;
        auto snapshot = W.basis();
        for (const auto& b : snapshot)
            for (const auto& T : ops)
                if (W.extend(T.apply(b))) grew = true;
    }
    return W;
}

enum class SimpleStatus { Simple, NotSimple, Unknown };
enum class SimpleMethod { ProjectiveScan, EigenlineSearch, CandidateClosures };

template <class F>
struct SimplicityVerdict {
    SimpleStatus status = SimpleStatus::Unknown;
    SimpleMethod method = SimpleMethod::CandidateClosures;
    std::optional<Subspace<F>> certificate;  // proper nonzero invariant subspace
    bool n1_convention = false;              // n = 1 decided by the bare criterion
};

namespace detail {

template <class F>
bool subspace_invariant(const std::vector<Matrix<F>>& ops, const Subspace<F>& W) {
    for (const auto& T : ops)
        for (const auto& b : W.basis())
            if (!W.contains(T.apply(b))) return false;
    return true;
}

template <class F>
bool line_invariant(const F& field, const std::vector<Matrix<F>>& ops, const Vec<F>& v) {
    const std::size_t n = v.size();
    for (const auto& T : ops) {
        auto w = T.apply(v);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                auto minor = field.sub(field.mul(w[i], v[j]), field.mul(w[j], v[i]));
                if (!field.is_zero(minor)) return false;
            }
    }
    return true;
}

template <class F>
bool is_scalar_matrix(const F& field, const Matrix<F>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i == j && !field.eq(m.at(i, j), m.at(0, 0))) return false;
            if (i != j && !field.is_zero(m.at(i, j))) return false;
        }
    return true;
}

/// Characteristic polynomial for n ≤ 3, by direct trace/minor formulas.
template <class F>
Polynomial<F> char_poly(const Matrix<F>& m) {
    const F& field = m.field();
    const std::size_t n = m.rows();
    if (n == 1) return Polynomial<F>(field, {field.neg(m.at(0, 0)), field.one()});
    if (n == 2) {
        auto tr = field.add(m.at(0, 0), m.at(1, 1));
        return Polynomial<F>(field, {det(m), field.neg(tr), field.one()});
    }
    if (n == 3) {
        auto tr = field.add(field.add(m.at(0, 0), m.at(1, 1)), m.at(2, 2));
        auto minor = [&](std::size_t a, std::size_t b) {
            return field.sub(field.mul(m.at(a, a), m.at(b, b)), field.mul(m.at(a, b), m.at(b, a)));
        };
        auto c2 = field.add(field.add(minor(0, 1), minor(0, 2)), minor(1, 2));
        return Polynomial<F>(field, {field.neg(det(m)), c2, field.neg(tr), field.one()});
    }
    throw DimensionMismatch("char_poly supports n <= 3");
}

/// A line fixed by every operator, or nothing. Complete for n ∈ {2,3} over ℚ
/// and GF(p): candidate lines live in eigenspaces of a non-scalar operator,
/// and inside a 2-dimensional eigenspace they solve an explicit quadratic.
template <class F>
std::optional<Vec<F>> common_eigenline(const F& field, std::size_t n,
                                       const std::vector<Matrix<F>>& ops) {
    const Matrix<F>* T = nullptr;
    for (const auto& op : ops)
        if (!is_scalar_matrix(field, op)) {
            T = &op;
            break;
        }
    if (!T) return basis_vector(field, n, 0);  // every line is invariant

    auto I = Matrix<F>::identity(field, n);
    for (const auto& lam : roots_in_field(char_poly(*T))) {
        auto E = kernel_basis(*T - I.scaled(lam));
        if (E.dim() == 1) {
            if (line_invariant(field, ops, E.basis()[0])) return E.basis()[0];
            continue;
        }
        if (E.dim() != 2) continue;  // dim n would mean T scalar
        const auto& b1 = E.basis()[0];
        const auto& b2 = E.basis()[1];
        // an operator that does not act as a scalar on E, if any
        const Matrix<F>* S = nullptr;
        for (const auto& op : ops) {
            auto s1 = op.apply(b1);
            auto s2 = op.apply(b2);
            bool scalar_on_E = false;
            // op scalar on E  <=>  s1 = mu b1 and s2 = mu b2 for one mu
            for (std::size_t k = 0; k < n && !scalar_on_E; ++k) {
                if (field.is_zero(b1[k])) continue;
                auto mu = field.div(s1[k], b1[k]);
                Vec<F> t1 = b1, t2 = b2;
                for (auto& x : t1) x = field.mul(x, mu);
                for (auto& x : t2) x = field.mul(x, mu);
                scalar_on_E = (s1 == t1) && (s2 == t2);
                break;
            }
            if (!scalar_on_E) {
                S = &op;
                break;
            }
        }
        if (!S) return b1;  // every operator scalar on E: any line of E works
        auto s1 = S->apply(b1);
        auto s2 = S->apply(b2);
        // lines x b1 + y b2 with S(w) || w: minors give quadratics in (x, y)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = k + 1; l < n; ++l) {
                auto c20 = field.sub(field.mul(s1[k], b1[l]), field.mul(s1[l], b1[k]));
                auto c02 = field.sub(field.mul(s2[k], b2[l]), field.mul(s2[l], b2[k]));
                auto c11 = field.add(field.sub(field.mul(s1[k], b2[l]), field.mul(s1[l], b2[k])),
                                     field.sub(field.mul(s2[k], b1[l]), field.mul(s2[l], b1[k])));
                if (field.is_zero(c20) && field.is_zero(c11) && field.is_zero(c02)) continue;
                std::vector<Vec<F>> cands;
                if (field.is_zero(c20)) cands.push_back(b1);  // (x, y) = (1, 0)
                Polynomial<F> q(field, {c02, c11, c20});
                if (!q.is_zero())
                    for (const auto& r : roots_in_field(q)) {
                        Vec<F> w = b2;
                        for (std::size_t m = 0; m < n; ++m)
                            w[m] = field.add(field.mul(r, b1[m]), b2[m]);
                        cands.push_back(w);
                    }
                for (const auto& w : cands)
                    if (line_invariant(field, ops, w)) return w;
                goto next_lambda;  // one nonzero quadratic pins all candidates
            }
    next_lambda:;
    }
    return std::nullopt;
}

}  // namespace detail

/// Simplicity via the invariant-subspace criterion.
///  • ProjectiveScan (GF(p), (p^n−1)/(p−1) lines within budget): closure of a
///    representative of every line; complete.
///  • EigenlineSearch (any field, n ≤ 3): dimension-1 subspaces are common
///    eigenlines, dimension-(n−1) ones are common eigenlines of the
///    transposed system; complete for n ∈ {2,3}.
///  • CandidateClosures (otherwise): closures of e_i and e_i + e_j; a proper
///    closure proves NotSimple, otherwise Unknown.
template <class F>
SimplicityVerdict<F> decide_simple(const Msc<F>& A,
                                   std::optional<SimpleMethod> force = std::nullopt,
                                   unsigned long long line_budget = 1'000'000ull) {
    const F& field = A.field();
    const std::size_t n = A.dim();
    SimplicityVerdict<F> verdict;

    if (n == 1) {
        // F^1 has only trivial subspaces, so the criterion holds vacuously.
        verdict.status = SimpleStatus::Simple;
        verdict.method = SimpleMethod::EigenlineSearch;
        verdict.n1_convention = true;
        return verdict;
    }

    auto ops = operator_system(A);
    auto finish_not_simple = [&](Subspace<F> W, SimpleMethod m) {
        if (W.dim() == 0 || W.dim() >= n || !detail::subspace_invariant(ops, W))
            throw Error("internal: invalid NotSimple certificate");
        verdict.status = SimpleStatus::NotSimple;
        verdict.method = m;
        verdict.certificate = std::move(W);
        return verdict;
    };

    SimpleMethod method;
    if (force) {
        method = *force;
    } else if constexpr (std::is_same_v<F, PrimeField>) {
        unsigned __int128 lines = 0;
        {
            unsigned __int128 pk = 1;
            for (std::size_t i = 0; i < n; ++i) {
                lines += pk;
                pk *= field.size();
            }
        }
        method = lines <= line_budget ? SimpleMethod::ProjectiveScan
                 : n <= 3            ? SimpleMethod::EigenlineSearch
                                     : SimpleMethod::CandidateClosures;
    } else {
        method = n <= 3 ? SimpleMethod::EigenlineSearch : SimpleMethod::CandidateClosures;
    }

    if (method == SimpleMethod::ProjectiveScan) {
        if constexpr (std::is_same_v<F, PrimeField>) {
            // canonical line representatives: first nonzero coordinate is 1
            const std::uint64_t p = field.size();
            Vec<F> v(n, field.zero());
            for (std::size_t lead = 0; lead < n; ++lead) {
                for (auto& x : v) x = field.zero();
                v[lead] = field.one();
                const std::size_t tail = n - 1 - lead;
                std::vector<std::uint64_t> idx(tail, 0);
                while (true) {
                    for (std::size_t t = 0; t < tail; ++t) v[lead + 1 + t] = idx[t];
                    auto W = closure(A, v);
                    if (!W.is_full()) return finish_not_simple(std::move(W), method);
                    if (tail == 0) break;
                    std::size_t pos = tail;
                    bool done = false;
                    while (pos > 0) {
                        --pos;
                        if (++idx[pos] < p) break;
                        idx[pos] = 0;
                        if (pos == 0) done = true;
                    }
                    if (done) break;
                }
            }
            verdict.status = SimpleStatus::Simple;
            verdict.method = method;
            return verdict;
        } else {
            throw NotFiniteField("ProjectiveScan requires GF(p)");
        }
    }

    if (method == SimpleMethod::EigenlineSearch) {
        if (n > 3) throw DimensionMismatch("EigenlineSearch supports n <= 3");
        if (auto line = detail::common_eigenline(field, n, ops)) {
            Subspace<F> W(field, n);
            W.extend(*line);
            return finish_not_simple(std::move(W), method);
        }
        if (n == 3) {
            // dim-2 invariant subspaces are annihilators of common eigenlines
            // of the transposed system
            std::vector<Matrix<F>> tops;
            for (const auto& T : ops) tops.push_back(T.transpose());
            if (auto u = detail::common_eigenline(field, n, tops)) {
                Matrix<F> row(field, 1, n);
                for (std::size_t j = 0; j < n; ++j) row.at(0, j) = (*u)[j];
                return finish_not_simple(kernel_basis(row), method);
            }
        }
        verdict.status = SimpleStatus::Simple;
        verdict.method = method;
        return verdict;
    }

    // CandidateClosures
    std::vector<Vec<F>> cands;
    for (std::size_t i = 0; i < n; ++i) cands.push_back(basis_vector(field, n, i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto v = basis_vector(field, n, i);
            v[j] = field.one();
            cands.push_back(v);
        }
    for (const auto& v : cands) {
        auto W = closure(A, v);
        if (!W.is_full()) return finish_not_simple(std::move(W), SimpleMethod::CandidateClosures);
    }
    verdict.status = SimpleStatus::Unknown;
    verdict.method = SimpleMethod::CandidateClosures;
    return verdict;
}

}  // namespace msc

#endif  // MSCKIT_SIMPLICITY_HPP
