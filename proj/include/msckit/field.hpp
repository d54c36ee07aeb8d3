#ifndef MSCKIT_FIELD_HPP
#define MSCKIT_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "msckit/errors.hpp"

namespace msc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) -> std::uint64_t {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
        std::uint64_t r = 1;
        a %= m;
        while (e) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Which ground field a computation runs over: the rationals or GF(p).
struct FieldSpec {
    enum class Kind { Rationals, PrimeField };
    Kind kind = Kind::Rationals;
    std::uint64_t p = 0;  // present iff PrimeField

    static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
    static FieldSpec prime(std::uint64_t p) {
        if (!is_prime_u64(p)) throw ValidationError("GF(p) requires prime p, got " + std::to_string(p));
        return FieldSpec{Kind::PrimeField, p};
    }

    bool operator==(const FieldSpec&) const = default;
    std::uint64_t characteristic() const { return kind == Kind::Rationals ? 0 : p; }
    std::string name() const {
        return kind == Kind::Rationals ? std::string("Q") : "GF(" + std::to_string(p) + ")";
    }
};

/// Exact arithmetic over ℚ. Elements are arbitrary-precision rationals kept in
/// lowest terms with positive denominator (cpp_rational canonicalizes).
class Rationals {
  public:
    using Elem = BigRational;

    FieldSpec spec() const { return FieldSpec::rationals(); }
    std::uint64_t characteristic() const { return 0; }
    bool finite() const { return false; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long v) const { return Elem(v); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw ZeroInverse{};
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    /// Numeric order; used to sort root lists deterministically.
    bool less(const Elem& a, const Elem& b) const { return a < b; }

    std::string to_string(const Elem& a) const { return a.str(); }

    /// Parses "a" or "a/b" with optional sign; rejects zero denominators.
    Elem parse(const std::string& s) const {
        if (s.empty()) throw ValidationError("empty scalar string");
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Elem(BigInt(s));
            BigInt num(s.substr(0, slash));
            BigInt den(s.substr(slash + 1));
            if (den == 0) throw ValidationError("zero denominator in scalar '" + s + "'");
            if (den < 0) {
                num = -num;
                den = -den;
            }
            return Elem(num, den);
        } catch (const std::exception&) {
            throw ValidationError("bad rational scalar '" + s + "'");
        }
    }
};

/// Exact arithmetic over GF(p), p prime. Elements are residues in [0, p).
class PrimeField {
  public:
    using Elem = std::uint64_t;

    PrimeField() : p_(2) {}
    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (!is_prime_u64(p)) throw ValidationError("GF(p) requires prime p, got " + std::to_string(p));
    }

    FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::PrimeField, p_}; }
    std::uint64_t characteristic() const { return p_; }
    bool finite() const { return true; }
    std::uint64_t size() const { return p_; }
    Elem element(std::uint64_t i) const { return i % p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Elem>(r);
    }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw ZeroInverse{};
        // extended Euclid; p prime so gcd is 1
        long long t = 0, newt = 1;
        long long r = static_cast<long long>(p_), newr = static_cast<long long>(a);
        while (newr != 0) {
            long long q = r / newr;
            t -= q * newt;
            std::swap(t, newt);
            r -= q * newr;
            std::swap(r, newr);
        }
        if (t < 0) t += static_cast<long long>(p_);
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    /// Residue order.
    bool less(Elem a, Elem b) const { return a < b; }

    std::string to_string(Elem a) const { return std::to_string(a); }

    /// Parses a decimal integer (sign and "a/b" allowed; reduced mod p).
    Elem parse(const std::string& s) const {
        if (s.empty()) throw ValidationError("empty scalar string");
        auto slash = s.find('/');
        try {
            if (slash != std::string::npos) {
                Elem num = parse(s.substr(0, slash));
                Elem den = parse(s.substr(slash + 1));
                return div(num, den);
            }
            BigInt v(s);
            BigInt m = v % BigInt(p_);
            if (m < 0) m += BigInt(p_);
            return static_cast<Elem>(m.convert_to<std::uint64_t>());
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            throw ValidationError("bad GF(p) scalar '" + s + "'");
        }
    }

  private:
    std::uint64_t p_;
};

/// Calls fn with the field object matching a runtime FieldSpec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.kind == FieldSpec::Kind::Rationals) return fn(Rationals{});
    return fn(PrimeField{spec.p});
}

}  // namespace msc

#endif  // MSCKIT_FIELD_HPP
