#ifndef MSCKIT_RNG_HPP
#define MSCKIT_RNG_HPP

#include <cstdint>
#include <random>

#include "msckit/field.hpp"

namespace msc {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Seeded generator with platform-independent uniform sampling.
/// std::uniform_int_distribution is implementation-defined, so bounded draws
/// use rejection sampling on raw mt19937_64 output instead.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, bound); bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % bound;
    }

    /// Uniform integer in [lo, hi] inclusive.
    long long between(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Independent stream for sample index k; the result does not depend on
    /// how samples are partitioned across workers.
    static Rng for_sample(std::uint64_t seed, std::uint64_t k) {
        return Rng(splitmix64(seed) ^ splitmix64(k + 0x51ed2701ull));
    }

  private:
    std::mt19937_64 eng_;
};

/// Uniform field element. Over GF(p) the bound is ignored; over ℚ draws an
/// integer scalar uniform in [-bound, bound].
inline Rationals::Elem sample_scalar(const Rationals& F, Rng& rng, long long bound) {
    (void)F;
    if (bound < 1) bound = 1;
    return Rationals::Elem(rng.between(-bound, bound));
}

inline PrimeField::Elem sample_scalar(const PrimeField& F, Rng& rng, long long /*bound*/ = 1) {
    return static_cast<PrimeField::Elem>(rng.below(F.size()));
}

}  // namespace msc

#endif  // MSCKIT_RNG_HPP
