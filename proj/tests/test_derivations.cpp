#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "msckit/derivations.hpp"
#include "test_support.hpp"

using namespace msc;
using namespace msctest;

TEST_CASE("derivation matrix shape and basic values") {
    Rationals Q;
    auto M = derivation_matrix(E2(Q));
    CHECK(M.rows() == 8);
    CHECK(M.cols() == 4);
    CHECK(rank(M) == 4);

    auto z = Msc<Rationals>::zero_algebra(Q, 2);
    CHECK(derivation_matrix(z).is_zero());
}

TEST_CASE("M(A) follows the documented row and column conventions") {
    // row (k,i,j) sits at (k-1)n^2 + (i-1)n + j and encodes
    // sum_m d_km a^m_ij - sum_m a^k_mj d_mi - sum_l a^k_il d_lj = 0 with the
    // unknown flattened row-major. For S0 (e2e1 = e1+e2, other products 0)
    // the equation (k,i,j) = (1,2,1) reduces to d_12 - d_22 = 0.
    Rationals Q;
    auto M = derivation_matrix(S0(Q));
    const std::size_t row = 0 * 4 + 1 * 2 + 0;  // zero-based (k,i,j) = (0,1,0)
    CHECK(M.at(row, 0) == Q.zero());   // d_11
    CHECK(M.at(row, 1) == Q.one());    // d_12
    CHECK(M.at(row, 2) == Q.zero());   // d_21
    CHECK(M.at(row, 3) == Q.from_int(-1));  // d_22
}

TEST_CASE("M(A) kernel route matches the direct Leibniz route") {
    Rng rng(41);
    Rationals Q;
    PrimeField F5(5);
    auto check_consistency = [&](const auto& field, auto& rng2) {
        for (int t = 0; t < 10; ++t) {
            auto A = random_msc(field, rng2, 2);
            auto M = derivation_matrix(A);
            for (int s = 0; s < 50; ++s) {
                auto D = random_invertible(field, rng2, 2);  // any matrix works; invertible is fine
                Vec<std::decay_t<decltype(field)>> flat;
                for (std::size_t k = 0; k < 2; ++k)
                    for (std::size_t m = 0; m < 2; ++m) flat.push_back(D.at(k, m));
                bool kernel_route = true;
                for (const auto& x : M.apply(flat))
                    if (!field.is_zero(x)) kernel_route = false;
                CHECK(kernel_route == is_derivation(A, D));
            }
        }
    };
    check_consistency(Q, rng);
    check_consistency(F5, rng);
}

TEST_CASE("derivation bases of the desk examples") {
    Rationals Q;
    CHECK(derivation_basis(E2(Q)).empty());
    CHECK(derivation_basis(S0(Q)).empty());
    CHECK(derivation_basis(Msc<Rationals>::zero_algebra(Q, 2)).size() == 4);
}

TEST_CASE("is_derivation on the desk examples") {
    Rationals Q;
    auto zero_map = Matrix<Rationals>(Q, 2, 2);
    CHECK(is_derivation(E2(Q), zero_map));
    CHECK(is_derivation(S0(Q), zero_map));
    CHECK_FALSE(is_derivation(E2(Q), Matrix<Rationals>::from_ints(Q, 2, 2, {1, 0, 0, 0})));
    Rng rng(8);
    auto z = Msc<Rationals>::zero_algebra(Q, 2);
    for (int t = 0; t < 20; ++t) CHECK(is_derivation(z, random_invertible(Q, rng, 2)));
}

TEST_CASE("trivial derivation verdicts") {
    Rationals Q;
    PrimeField F5(5);
    CHECK(is_trivial_der(E2(Q)));
    CHECK_FALSE(is_trivial_der(Msc<Rationals>::zero_algebra(Q, 2)));
    Rng rng(55);
    for (int t = 0; t < 20; ++t) {
        SeedParams<PrimeField> c{sample_scalar(F5, rng), sample_scalar(F5, rng),
                                 sample_scalar(F5, rng), sample_scalar(F5, rng)};
        CHECK(is_trivial_der(seed2(c, F5)));
    }
}

TEST_CASE("derivation dimension is a basis-change invariant") {
    Rng rng(66);
    PrimeField F3(3);
    Rationals Q;
    for (int t = 0; t < 25; ++t) {
        auto A = random_msc(F3, rng, 2);
        auto g = random_invertible(F3, rng, 2);
        CHECK(derivation_basis(change_basis(A, g)).size() == derivation_basis(A).size());
    }
    for (int t = 0; t < 10; ++t) {
        auto A = random_msc(Q, rng, 3);
        auto g = random_invertible(Q, rng, 3);
        CHECK(derivation_basis(change_basis(A, g)).size() == derivation_basis(A).size());
    }
}

TEST_CASE("derivations are closed under the Lie bracket") {
    Rng rng(31);
    PrimeField F2(2);
    int bracketed = 0;
    for (int t = 0; t < 200; ++t) {
        auto A = random_msc(F2, rng, 2);
        auto basis = derivation_basis(A);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) {
                auto bracket = basis[i] * basis[j] - basis[j] * basis[i];
                CHECK(is_derivation(A, bracket));
                ++bracketed;
            }
    }
    CHECK(bracketed > 50);
}

TEST_CASE("kernel route and direct route agree on random MSCs") {
    Rng rng(72);
    Rationals Q;
    PrimeField F3(3);
    for (int t = 0; t < 500; ++t) {
        auto A = random_msc(F3, rng, 2);
        auto basis = derivation_basis(A);
        for (const auto& D : basis) CHECK(is_derivation(A, D));
        CHECK((derivation_rank(A) == 4) == basis.empty());
    }
    for (int t = 0; t < 500; ++t) {
        auto A = random_msc(Q, rng, 2, 2);
        auto basis = derivation_basis(A);
        for (const auto& D : basis) CHECK(is_derivation(A, D));
        CHECK((derivation_rank(A) == 4) == basis.empty());
    }
}

TEST_CASE("rank criterion matches emptiness on all 256 MSCs over GF(2)") {
    PrimeField F2(2);
    int trivial = 0;
    for (const auto& A : all_msc2(F2)) {
        bool by_rank = is_trivial_der(A);
        bool by_basis = derivation_basis(A).empty();
        CHECK(by_rank == by_basis);
        if (by_rank) ++trivial;
    }
    CHECK(trivial > 0);
}
