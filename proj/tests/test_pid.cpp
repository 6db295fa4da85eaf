#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "infoconv/errors.hpp"
#include "infoconv/pid.hpp"
#include "test_util.hpp"

using namespace infoconv;

namespace {

// Joint over two independent uniform binary sources with target f(x).
SourcesTarget two_source_target(const std::vector<int>& f, int target_arity) {
    std::vector<double> p(4 * target_arity, 0.0);
    for (std::size_t x = 0; x < 4; ++x) p[x * target_arity + f[x]] += 0.25;
    return SourcesTarget(std::move(p), {2, 2}, target_arity);
}

SourcesTarget xor_target() { return two_source_target({0, 1, 1, 0}, 2); }

// X2 duplicates X1 and the target copies them.
SourcesTarget copy_pair_target() {
    std::vector<double> p(4 * 2, 0.0);
    p[0 * 2 + 0] = 0.5; // x1=0, x2=0, y=0
    p[3 * 2 + 1] = 0.5; // x1=1, x2=1, y=1
    return SourcesTarget(std::move(p), {2, 2}, 2);
}

} // namespace

TEST_CASE("specific information of a perfect copy") {
    // Y = X1, X2 independent noise.
    SourcesTarget st = two_source_target({0, 1, 0, 1}, 2);
    CHECK(specific_information(st, 1, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(specific_information(st, 1, 1) == doctest::Approx(1.0).epsilon(1e-12));
    // The independent source discloses nothing about any outcome.
    CHECK(specific_information(st, 2, 0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(specific_information(st, 2, 1) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("single sources disclose nothing about a parity target") {
    SourcesTarget st = xor_target();
    CHECK(specific_information(st, 1, 0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(specific_information(st, 2, 0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(specific_information(st, 3, 0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("specific information rejects impossible outcomes") {
    SourcesTarget st = two_source_target({1, 1, 1, 1}, 2);
    CHECK_THROWS_AS(specific_information(st, 1, 0), ValidationError);
    CHECK_THROWS_AS(specific_information(st, 0, 1), ValidationError);
    CHECK_THROWS_AS(specific_information(st, 1, 5), ValidationError);
}

TEST_CASE("redundancy of the parity pair and of duplicated sources") {
    SourcesTarget st = xor_target();
    CHECK(redundancy_wb(st, Antichain({3}, 2)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(redundancy_wb(st, Antichain({1, 2}, 2)) == doctest::Approx(0.0).epsilon(1e-12));

    SourcesTarget dup = copy_pair_target();
    CHECK(redundancy_wb(dup, Antichain({1, 2}, 2)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("decompose the parity target: all information is joint") {
    PIDResult r = decompose(xor_target());
    const PILattice& l = *r.lattice;
    CHECK(r.atoms[l.index_of(Antichain({1, 2}, 2))] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.atoms[l.index_of(Antichain({1}, 2))] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.atoms[l.index_of(Antichain({2}, 2))] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.atoms[l.index_of(Antichain({3}, 2))] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.total_mi == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("decompose a copied source: all information is unique") {
    PIDResult r = decompose(two_source_target({0, 1, 0, 1}, 2));
    const PILattice& l = *r.lattice;
    CHECK(r.atoms[l.index_of(Antichain({1}, 2))] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.atoms[l.index_of(Antichain({1, 2}, 2))] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.atoms[l.index_of(Antichain({3}, 2))] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("decompose duplicated sources: all information is redundant") {
    PIDResult r = decompose(copy_pair_target());
    const PILattice& l = *r.lattice;
    CHECK(r.atoms[l.index_of(Antichain({1, 2}, 2))] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.atoms[l.index_of(Antichain({1}, 2))] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.atoms[l.index_of(Antichain({3}, 2))] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("spectrum of the pure parity decomposition") {
    PISpectrum s = spectrum_and_bias(decompose(xor_target()));
    CHECK(s.height == 2);
    CHECK(s.layer_mass[2] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.b_syn == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.b_red == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("bias is undefined at zero information") {
    // Target independent of both sources.
    std::vector<double> p(4 * 2, 0.125);
    PIDResult r = decompose(SourcesTarget(std::move(p), {2, 2}, 2));
    CHECK(r.total_mi == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(spectrum_and_bias(r), UndefinedBiasError);
}

TEST_CASE("pairwise identities on random two-source joints") {
    std::mt19937_64 rng(42);
    const PILattice& l = PILattice::for_sources(2);
    std::size_t bottom = l.index_of(Antichain({1, 2}, 2));
    std::size_t u1 = l.index_of(Antichain({1}, 2));
    std::size_t u2 = l.index_of(Antichain({2}, 2));
    std::size_t top = l.index_of(Antichain({3}, 2));
    for (int trial = 0; trial < 300; ++trial) {
        SourcesTarget st(testutil::random_joint(rng, 4, 3, trial % 2 == 0), {2, 2}, 3);
        PIDResult r = decompose(st);
        double red = r.atoms[bottom];
        // Joint MI splits into the four atoms.
        CHECK(red + r.atoms[u1] + r.atoms[u2] + r.atoms[top] ==
              doctest::Approx(r.total_mi).epsilon(1e-9));
        // Each single-source MI splits into redundancy plus its unique
        // part.
        CHECK(red + r.atoms[u1] ==
              doctest::Approx(testutil::single_source_mi(st, 0)).epsilon(1e-9));
        CHECK(red + r.atoms[u2] ==
              doctest::Approx(testutil::single_source_mi(st, 1)).epsilon(1e-9));
    }
}

TEST_CASE("atoms are nonnegative across randomized joints") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 1000; ++trial) {
        int n_sources = 2 + (trial % 2);
        std::size_t nx = std::size_t{1} << n_sources;
        SourcesTarget st(testutil::random_joint(rng, nx, 2, trial % 3 == 0),
                         std::vector<int>(n_sources, 2), 2);
        PIDResult r = decompose(st);
        for (double a : r.atoms) CHECK(a >= -1e-9);
    }
}

TEST_CASE("redundancy equals the accumulated atoms below") {
    std::mt19937_64 rng(44);
    for (int n_sources : {2, 3}) {
        const PILattice& l = PILattice::for_sources(n_sources);
        for (int trial = 0; trial < 25; ++trial) {
            std::size_t nx = std::size_t{1} << n_sources;
            SourcesTarget st(testutil::random_joint(rng, nx, 4), std::vector<int>(n_sources, 2),
                             4);
            PIDResult r = decompose(st);
            for (std::size_t j = 0; j < l.size(); ++j) {
                double below = r.atoms[j];
                for (std::uint32_t i : l.strict_down(j)) below += r.atoms[i];
                CHECK(below == doctest::Approx(r.redundancy[j]).epsilon(1e-9));
                // Spot-check the direct evaluation too.
                if (trial == 0)
                    CHECK(r.redundancy[j] ==
                          doctest::Approx(redundancy_wb(st, l.atom(j))).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("redundancy is monotone along the order") {
    std::mt19937_64 rng(45);
    const PILattice& l = PILattice::for_sources(3);
    for (int trial = 0; trial < 25; ++trial) {
        SourcesTarget st(testutil::random_joint(rng, 8, 3), {2, 2, 2}, 3);
        PIDResult r = decompose(st);
        for (std::size_t j = 0; j < l.size(); ++j)
            for (std::uint32_t i : l.strict_down(j))
                CHECK(r.redundancy[i] <= r.redundancy[j] + 1e-9);
    }
}

TEST_CASE("relabeling the target leaves atoms and bias unchanged") {
    std::mt19937_64 rng(46);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> p = testutil::random_joint(rng, 8, 4);
        // Apply a fixed bijection on target states.
        std::vector<int> perm = {2, 0, 3, 1};
        std::vector<double> q(p.size());
        for (std::size_t x = 0; x < 8; ++x)
            for (int y = 0; y < 4; ++y) q[x * 4 + perm[y]] = p[x * 4 + y];
        PIDResult a = decompose(SourcesTarget(std::move(p), {2, 2, 2}, 4));
        PIDResult b = decompose(SourcesTarget(std::move(q), {2, 2, 2}, 4));
        for (std::size_t j = 0; j < a.atoms.size(); ++j)
            CHECK(a.atoms[j] == doctest::Approx(b.atoms[j]).epsilon(1e-12));
        if (a.total_mi > 1e-6) {
            PISpectrum sa = spectrum_and_bias(a);
            PISpectrum sb = spectrum_and_bias(b);
            CHECK(sa.b_syn == doctest::Approx(sb.b_syn).epsilon(1e-12));
            CHECK(sa.b_syn >= 0.0);
            CHECK(sa.b_syn <= 1.0);
            CHECK(sa.b_syn + sa.b_red == doctest::Approx(1.0).epsilon(1e-12));
            double mass = std::accumulate(sa.layer_mass.begin(), sa.layer_mass.end(), 0.0);
            CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("temporal decomposition totals match the mutual information") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        Tpm t = testutil::random_tpm(rng, 3);
        StateDistribution pi = stationary_distribution(t);
        PIDResult r = temporal_pid(t, pi);
        MIResult mi = temporal_mutual_information(t, pi);
        CHECK(r.total_mi == doctest::Approx(mi.mi_bits).epsilon(1e-9));
        double sum = std::accumulate(r.atoms.begin(), r.atoms.end(), 0.0);
        CHECK(sum == doctest::Approx(mi.mi_bits).epsilon(1e-9));
    }
}

TEST_CASE("temporal decomposition of a point attractor is all zeros") {
    std::vector<std::vector<double>> rows(8, std::vector<double>(8, 0.0));
    for (auto& r : rows) r[0] = 1.0;
    Tpm t(rows);
    StateDistribution pi = stationary_distribution(t);
    PIDResult r = temporal_pid(t, pi);
    CHECK(r.total_mi == doctest::Approx(0.0).epsilon(1e-12));
    for (double a : r.atoms) CHECK(a == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("temporal decomposition caps at five elements") {
    std::mt19937_64 rng(48);
    Tpm t(testutil::random_stochastic(rng, 64));
    CHECK_THROWS_AS(temporal_pid(t, StateDistribution::uniform(6)), ValidationError);
}
