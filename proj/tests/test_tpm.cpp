#include <doctest.h>

#include <cmath>
#include <random>

#include "infoconv/errors.hpp"
#include "infoconv/tpm.hpp"
#include "test_util.hpp"

using namespace infoconv;

TEST_CASE("Tpm validates shape") {
    // Side 3 is not a power of two.
    CHECK_THROWS_AS(Tpm(std::vector<std::vector<double>>{
                        {0.5, 0.5, 0.0}, {0.2, 0.3, 0.5}, {1.0, 0.0, 0.0}}),
                    ValidationError);
    CHECK_THROWS_AS(Tpm(std::vector<std::vector<double>>{{0.5, 0.6}, {0.5, 0.5}}),
                    ValidationError);
    Tpm ok(std::vector<std::vector<double>>{{0.0, 1.0}, {1.0, 0.0}});
    CHECK(ok.n_elements() == 1);
}

TEST_CASE("stationary distribution of a symmetric 2-cycle") {
    Tpm t(std::vector<std::vector<double>>{{0.0, 1.0}, {1.0, 0.0}});
    StateDistribution pi = stationary_distribution(t);
    CHECK(pi[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(pi[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("stationary tie on the identity TPM picks the lowest state") {
    // Every state is a fixed point; equal attractor sizes resolve to
    // the class containing state 0.
    Tpm t(std::vector<std::vector<double>>{{1.0, 0.0}, {0.0, 1.0}});
    StateDistribution pi = stationary_distribution(t);
    CHECK(pi[0] == doctest::Approx(1.0));
    CHECK(pi[1] == doctest::Approx(0.0));
}

TEST_CASE("stationary picks the largest recurrent class") {
    // State 0 is a fixed point; states 2 and 3 form a 2-cycle; state 1
    // is transient into both.
    Tpm t(std::vector<std::vector<double>>{{1.0, 0.0, 0.0, 0.0},
                                           {0.5, 0.0, 0.5, 0.0},
                                           {0.0, 0.0, 0.0, 1.0},
                                           {0.0, 0.0, 1.0, 0.0}});
    StateDistribution pi = stationary_distribution(t);
    CHECK(pi[0] == doctest::Approx(0.0));
    CHECK(pi[2] == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(pi[3] == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("stationary matches the dense kernel oracle on positive TPMs") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        StochasticMatrix m = testutil::random_stochastic(rng, 8);
        std::vector<double> pi = stationary_of(m);
        std::vector<double> oracle = testutil::stationary_kernel_oracle(m);
        for (std::size_t i = 0; i < 8; ++i)
            CHECK(pi[i] == doctest::Approx(oracle[i]).epsilon(1e-10));
    }
}

TEST_CASE("stationary output is a fixed point") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        StochasticMatrix m = testutil::random_sparse_stochastic(rng, 8);
        std::vector<double> pi = stationary_of(m);
        for (std::size_t y = 0; y < 8; ++y) {
            double v = 0.0;
            for (std::size_t x = 0; x < 8; ++x) v += pi[x] * m.at(x, y);
            CHECK(std::abs(v - pi[y]) < 1e-10);
        }
    }
}

TEST_CASE("doubly stochastic TPMs are stationary at uniform") {
    // Circulant shift mixed with its inverse keeps columns stochastic.
    const std::size_t n = 8;
    std::vector<double> rows(n * n, 0.0);
    for (std::size_t x = 0; x < n; ++x) {
        rows[x * n + (x + 1) % n] = 0.7;
        rows[x * n + (x + n - 1) % n] = 0.3;
    }
    StochasticMatrix m(std::move(rows), n);
    std::vector<double> pi = stationary_of(m);
    for (std::size_t i = 0; i < n; ++i) CHECK(pi[i] == doctest::Approx(1.0 / 8).epsilon(1e-10));
}

TEST_CASE("temporal MI of a permutation at uniform input is log2(n)") {
    Tpm t(std::vector<std::vector<double>>{{0, 1, 0, 0},
                                           {0, 0, 1, 0},
                                           {0, 0, 0, 1},
                                           {1, 0, 0, 0}});
    MIResult r = temporal_mutual_information(t, StateDistribution::uniform(2));
    CHECK(r.mi_bits == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("temporal MI vanishes on a point attractor at stationarity") {
    Tpm t(std::vector<std::vector<double>>{{1.0, 0.0}, {1.0, 0.0}});
    StateDistribution pi = stationary_distribution(t);
    CHECK(pi[0] == doctest::Approx(1.0));
    MIResult r = temporal_mutual_information(t, pi);
    CHECK(r.mi_bits == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("temporal MI rejects dimension mismatch") {
    Tpm t(std::vector<std::vector<double>>{{0.0, 1.0}, {1.0, 0.0}});
    CHECK_THROWS_AS(temporal_mutual_information(t, StateDistribution::uniform(2)),
                    ValidationError);
}

TEST_CASE("MI is symmetric under joint transposition and bounded by marginals") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 100; ++trial) {
        Tpm t(testutil::random_sparse_stochastic(rng, 8));
        MIResult r = temporal_mutual_information(t, StateDistribution::uniform(3));
        CHECK(r.mi_bits >= 0.0);
        double hx = entropy(std::span(r.joint.marginal_x()));
        double hy = entropy(std::span(r.joint.marginal_y()));
        CHECK(r.mi_bits <= std::min(hx, hy) + 1e-12);
        CHECK(mutual_information(r.joint.transposed()) ==
              doctest::Approx(r.mi_bits).epsilon(1e-12));
    }
}
