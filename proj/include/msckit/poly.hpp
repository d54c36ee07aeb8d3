#ifndef MSCKIT_POLY_HPP
#define MSCKIT_POLY_HPP

#include <algorithm>
#include <vector>

#include "msckit/field.hpp"

namespace msc {

/// Dense univariate polynomial; coeffs[k] is the coefficient of t^k and
/// trailing zeros are trimmed (the zero polynomial has no coefficients).
template <class F>
class Polynomial {
  public:
    using Elem = typename F::Elem;

    Polynomial() = default;
    Polynomial(F field, std::vector<Elem> coeffs) : field_(field), coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial from_ints(F field, std::initializer_list<long long> cs) {
        std::vector<Elem> v;
        for (long long c : cs) v.push_back(field.from_int(c));
        return Polynomial(field, std::move(v));
    }

    const F& field() const { return field_; }
    const std::vector<Elem>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Elem eval(const Elem& x) const {
        Elem acc = field_.zero();
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = field_.add(field_.mul(acc, x), *it);
        return acc;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && field_.is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    F field_{};
    std::vector<Elem> coeffs_;
};

namespace detail {

inline std::vector<BigInt> positive_divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<BigInt> divs;
    BigInt i = 1;
    for (; i * i <= n; ++i) {
        if (n % i == 0) {
            divs.push_back(i);
            if (i * i != n) divs.push_back(n / i);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace detail

/// All roots of f in GF(p), found by evaluating at every residue. For the
/// zero polynomial every element is a root. Sorted ascending, duplicate-free.
inline std::vector<PrimeField::Elem> roots_in_field(const Polynomial<PrimeField>& f) {
    const PrimeField& F = f.field();
    std::vector<PrimeField::Elem> roots;
    for (std::uint64_t x = 0; x < F.size(); ++x) {
        if (f.is_zero() || F.is_zero(f.eval(x))) roots.push_back(x);
    }
    return roots;
}

/// All rational roots of f, by the rational root theorem on the
/// denominator-cleared integer polynomial. Complete for roots in ℚ at any
/// degree. Sorted ascending, duplicate-free.
inline std::vector<Rationals::Elem> roots_in_field(const Polynomial<Rationals>& f) {
    if (f.is_zero()) throw ZeroPolynomialOverInfiniteField{};
    const Rationals F;
    std::vector<Rationals::Elem> roots;
    if (f.degree() == 0) return roots;

    // clear denominators
    BigInt lcm = 1;
    for (const auto& c : f.coeffs()) {
        BigInt d = denominator(c);
        lcm = lcm / gcd(lcm, d) * d;
    }
    std::vector<BigInt> ic;
    for (const auto& c : f.coeffs()) ic.push_back(numerator(c) * (lcm / denominator(c)));

    std::size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) roots.push_back(Rationals::Elem(0));  // t^low divides f

    BigInt a0 = ic[low];
    BigInt an = ic.back();
    auto ints_eval_zero = [&](const Rationals::Elem& r) { return F.is_zero(f.eval(r)); };
    for (const BigInt& u : detail::positive_divisors(a0)) {
        for (const BigInt& v : detail::positive_divisors(an)) {
            if (gcd(u, v) != 1) continue;
            Rationals::Elem cand(u, v);
            if (ints_eval_zero(cand)) roots.push_back(cand);
            cand = -cand;
            if (ints_eval_zero(cand)) roots.push_back(cand);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

/// True iff f has at least one root in its field.
template <class F>
bool has_root_in_field(const Polynomial<F>& f) {
    if (f.is_zero()) return true;  // over GF(p) trivially; over ℚ every element works too
    if constexpr (std::is_same_v<F, Rationals>) {
        return !roots_in_field(f).empty();
    } else {
        const auto& K = f.field();
        for (std::uint64_t x = 0; x < K.size(); ++x)
            if (K.is_zero(f.eval(x))) return true;
        return false;
    }
}

}  // namespace msc

#endif  // MSCKIT_POLY_HPP
