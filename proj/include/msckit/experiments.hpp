#ifndef MSCKIT_EXPERIMENTS_HPP
#define MSCKIT_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "msckit/classify2d.hpp"
#include "msckit/rng.hpp"

namespace msc {

/// Finite-field census of the three properties. Zariski density itself is not
/// desk-verifiable; the mass of the complement over GF(q) is the honest proxy
/// and is labeled as such wherever the report surfaces.
struct DensityReport {
    FieldSpec field;
    std::size_t n = 2;
    bool exhaustive = false;
    std::uint64_t samples = 0;  // number of MSCs classified
    std::uint64_t seed = 0;     // meaningful only when not exhaustive
    std::uint64_t count_trivder = 0;
    std::uint64_t count_simple = 0;
    bool aut_available = false;  // trivial-Aut decidable within budget
    std::uint64_t count_trivaut = 0;
    std::uint64_t count_star = 0;
};

namespace detail {

template <class Fn>
void parallel_chunks(std::uint64_t total, std::size_t workers, Fn&& body) {
    if (workers <= 1 || total < 2) {
        body(0, 0, total);
        return;
    }
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::uint64_t lo = std::min<std::uint64_t>(w * chunk, total);
        const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, total);
        if (lo >= hi) break;
        pool.emplace_back([&, w, lo, hi] { body(w, lo, hi); });
    }
    for (auto& t : pool) t.join();
}

struct Tally {
    std::uint64_t trivder = 0, trivaut = 0, simple = 0, star = 0;
};

inline bool density_trivaut(const Msc<PrimeField>& A, unsigned long long budget, bool& available) {
    if (A.dim() == 2) {
        const std::uint64_t p = A.field().size();
        if (static_cast<unsigned long long>(p) * p <= budget)
            return !aut2_nontrivial_witness(A).has_value();
    }
    if (gl_order(A.dim(), A.field().size()) <= budget) {
        auto v = decide_trivial_aut(A, budget);
        return v.status == AutStatus::Trivial;
    }
    available = false;
    return false;
}

}  // namespace detail

struct Exhaustive {};

/// Classifies sampled or exhaustively enumerated MSCs with the three
/// checkers. Deterministic: sample k draws from an independent stream keyed
/// by (seed, k), so results do not depend on the worker count.
inline DensityReport density_scan(const PrimeField& field, std::size_t n, std::uint64_t samples,
                                  std::uint64_t seed, std::size_t workers = 1,
                                  unsigned long long budget = kDefaultBudget) {
    DensityReport rep;
    rep.field = field.spec();
    rep.n = n;
    rep.samples = samples;
    rep.seed = seed;
    rep.aut_available = true;

    const std::size_t cells = n * n * n;
    std::vector<detail::Tally> tallies(std::max<std::size_t>(workers, 1));
    std::vector<std::uint8_t> aut_ok(std::max<std::size_t>(workers, 1), 1);
    detail::parallel_chunks(samples, workers, [&](std::size_t w, std::uint64_t lo, std::uint64_t hi) {
        auto& tally = tallies[w];
        bool available = true;
        for (std::uint64_t k = lo; k < hi; ++k) {
            auto rng = Rng::for_sample(seed, k);
            Msc<PrimeField> A(field, n);
            for (std::size_t c = 0; c < cells; ++c)
                A.matrix().entries()[c] = sample_scalar(field, rng);
            bool td = is_trivial_der(A);
            bool sp = decide_simple(A).status == SimpleStatus::Simple;
            bool ta = detail::density_trivaut(A, budget, available);
            tally.trivder += td;
            tally.simple += sp;
            tally.trivaut += ta;
            tally.star += td && sp && ta && available;
        }
        if (!available) aut_ok[w] = 0;
    });
    for (std::size_t w = 0; w < tallies.size(); ++w) {
        rep.count_trivder += tallies[w].trivder;
        rep.count_trivaut += tallies[w].trivaut;
        rep.count_simple += tallies[w].simple;
        rep.count_star += tallies[w].star;
        if (!aut_ok[w]) rep.aut_available = false;
    }
    return rep;
}

/// Exhaustive variant over all p^(n·n²) MSCs; feasible for small p at n = 2.
inline DensityReport density_scan(const PrimeField& field, std::size_t n, Exhaustive,
                                  std::size_t workers = 1,
                                  unsigned long long budget = kDefaultBudget) {
    const std::size_t cells = n * n * n;
    unsigned __int128 total = 1;
    for (std::size_t i = 0; i < cells; ++i) total *= field.size();
    if (total > budget)
        throw BudgetExceeded(static_cast<unsigned long long>(
                                 total > UINT64_MAX ? UINT64_MAX : total),
                             "exhaustive density scan exceeds budget");

    DensityReport rep;
    rep.field = field.spec();
    rep.n = n;
    rep.exhaustive = true;
    rep.samples = static_cast<std::uint64_t>(total);

    std::vector<detail::Tally> tallies(std::max<std::size_t>(workers, 1));
    std::vector<std::uint8_t> aut_ok(std::max<std::size_t>(workers, 1), 1);
    detail::parallel_chunks(rep.samples, workers,
                            [&](std::size_t w, std::uint64_t lo, std::uint64_t hi) {
        auto& tally = tallies[w];
        bool available = true;
        const std::uint64_t p = field.size();
        for (std::uint64_t code = lo; code < hi; ++code) {
            Msc<PrimeField> A(field, n);
            std::uint64_t c = code;
            for (auto& x : A.matrix().entries()) {
                x = c % p;
                c /= p;
            }
            bool td = is_trivial_der(A);
            bool sp = decide_simple(A).status == SimpleStatus::Simple;
            bool ta = detail::density_trivaut(A, budget, available);
            tally.trivder += td;
            tally.simple += sp;
            tally.trivaut += ta;
            tally.star += td && sp && ta && available;
        }
        if (!available) aut_ok[w] = 0;
    });
    rep.aut_available = true;
    for (std::size_t w = 0; w < tallies.size(); ++w) {
        rep.count_trivder += tallies[w].trivder;
        rep.count_trivaut += tallies[w].trivaut;
        rep.count_simple += tallies[w].simple;
        rep.count_star += tallies[w].star;
        if (!aut_ok[w]) rep.aut_available = false;
    }
    return rep;
}

/// Plot-ready CSV line for a density report (exact counts rendered as
/// decimal fractions).
inline std::string density_csv_header() {
    return "p,n,samples,trivial_der,trivial_aut,simple,star\n";
}
inline std::string density_csv_row(const DensityReport& r) {
    auto frac = [&](std::uint64_t k) {
        return r.samples ? std::to_string(static_cast<double>(k) / static_cast<double>(r.samples))
                         : std::string("0");
    };
    std::string row = std::to_string(r.field.p) + "," + std::to_string(r.n) + "," +
                      std::to_string(r.samples) + "," + frac(r.count_trivder) + ",";
    row += r.aut_available ? frac(r.count_trivaut) : std::string("");
    row += "," + frac(r.count_simple) + ",";
    row += r.aut_available ? frac(r.count_star) : std::string("");
    return row + "\n";
}

/// Census of the difference sets TrivDer \ TrivAut and TrivAut \ TrivDer.
/// For exhaustive scans over GF(2)/GF(3) the members are matched, up to
/// isomorphism, against the classification's difference lists.
struct InclusionReport {
    FieldSpec field;
    bool exhaustive = false;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t der_not_aut = 0;
    std::uint64_t aut_not_der = 0;
    // filled for exhaustive runs at p in {2,3}
    std::optional<bool> der_not_aut_matches_list;
    std::optional<bool> aut_not_der_matches_list;
};

inline InclusionReport inclusion_scan(const PrimeField& field, std::uint64_t samples,
                                      std::uint64_t seed, std::size_t workers = 1) {
    InclusionReport rep;
    rep.field = field.spec();
    rep.samples = samples;
    rep.seed = seed;
    std::vector<std::uint64_t> dna(std::max<std::size_t>(workers, 1), 0);
    std::vector<std::uint64_t> and_(std::max<std::size_t>(workers, 1), 0);
    detail::parallel_chunks(samples, workers, [&](std::size_t w, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t k = lo; k < hi; ++k) {
            auto rng = Rng::for_sample(seed, k);
            Msc<PrimeField> A(field, 2);
            for (auto& x : A.matrix().entries()) x = sample_scalar(field, rng);
            bool td = is_trivial_der(A);
            bool ta = !detail::aut2_nontrivial_witness(A).has_value();
            if (td && !ta) ++dna[w];
            if (ta && !td) ++and_[w];
        }
    });
    for (std::size_t w = 0; w < dna.size(); ++w) {
        rep.der_not_aut += dna[w];
        rep.aut_not_der += and_[w];
    }
    return rep;
}

inline InclusionReport inclusion_scan(const PrimeField& field, Exhaustive,
                                      unsigned long long budget = kDefaultBudget) {
    const std::uint64_t p = field.size();
    unsigned __int128 total = 1;
    for (int i = 0; i < 8; ++i) total *= p;
    if (total > budget)
        throw BudgetExceeded(static_cast<unsigned long long>(total), "p^8 exceeds budget");

    InclusionReport rep;
    rep.field = field.spec();
    rep.exhaustive = true;
    rep.samples = static_cast<std::uint64_t>(total);

    std::vector<std::uint8_t> in_dna(rep.samples, 0), in_and(rep.samples, 0);
    for (std::uint64_t code = 0; code < rep.samples; ++code) {
        auto A = detail::unpack_msc2(field, code);
        bool td = is_trivial_der(A);
        bool ta = !detail::aut2_nontrivial_witness(A).has_value();
        if (td && !ta) {
            in_dna[code] = 1;
            ++rep.der_not_aut;
        }
        if (ta && !td) {
            in_and[code] = 1;
            ++rep.aut_not_der;
        }
    }

    if (p <= 3) {
        // orbit-union of the tabulated difference families must equal the scan
        std::vector<Matrix<PrimeField>> gl;
        detail::for_each_gl(field, 2, [&](const Matrix<PrimeField>& g) {
            gl.push_back(g);
            return true;
        });
        auto match = [&](Prop prop, const std::vector<std::uint8_t>& membership) {
            std::vector<std::uint8_t> covered(rep.samples, 0);
            for (const auto& fam : table(field.spec(), prop))
                for (const auto& inst : enumerate_instances(fam, field))
                    for (const auto& g : gl) covered[detail::pack_msc2(change_basis(inst, g))] = 1;
            for (std::uint64_t c = 0; c < rep.samples; ++c)
                if (covered[c] != membership[c]) return false;
            return true;
        };
        rep.der_not_aut_matches_list = match(Prop::DerNotAut, in_dna);
        rep.aut_not_der_matches_list = match(Prop::AutNotDer, in_and);
    }
    return rep;
}

}  // namespace msc

#endif  // MSCKIT_EXPERIMENTS_HPP
