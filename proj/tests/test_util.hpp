#pragma once

#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <vector>

#include "infoconv/distribution.hpp"
#include "infoconv/pid.hpp"
#include "infoconv/tpm.hpp"

namespace testutil {

// Fully supported random row-stochastic matrix.
inline infoconv::StochasticMatrix random_stochastic(std::mt19937_64& rng, std::size_t side) {
    std::uniform_real_distribution<double> u(0.01, 1.0);
    std::vector<double> rows(side * side);
    for (std::size_t r = 0; r < side; ++r) {
        double sum = 0.0;
        for (std::size_t c = 0; c < side; ++c) {
            rows[r * side + c] = u(rng);
            sum += rows[r * side + c];
        }
        for (std::size_t c = 0; c < side; ++c) rows[r * side + c] /= sum;
    }
    return infoconv::StochasticMatrix(std::move(rows), side);
}

// Random row-stochastic matrix with some structural zeros.
inline infoconv::StochasticMatrix random_sparse_stochastic(std::mt19937_64& rng,
                                                           std::size_t side) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> rows(side * side, 0.0);
    for (std::size_t r = 0; r < side; ++r) {
        double sum = 0.0;
        while (sum == 0.0) {
            for (std::size_t c = 0; c < side; ++c) {
                double v = u(rng) < 0.4 ? 0.0 : u(rng);
                rows[r * side + c] = v;
                sum += v;
            }
        }
        for (std::size_t c = 0; c < side; ++c) rows[r * side + c] /= sum;
    }
    return infoconv::StochasticMatrix(std::move(rows), side);
}

inline infoconv::Tpm random_tpm(std::mt19937_64& rng, int n_elements) {
    return infoconv::Tpm(random_stochastic(rng, std::size_t{1} << n_elements));
}

// Random normalized joint over nx * ny cells, optionally with zeros.
inline std::vector<double> random_joint(std::mt19937_64& rng, std::size_t nx, std::size_t ny,
                                        bool with_zeros = false) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> p(nx * ny);
    double sum = 0.0;
    while (sum == 0.0) {
        sum = 0.0;
        for (double& v : p) {
            v = (with_zeros && u(rng) < 0.3) ? 0.0 : u(rng);
            sum += v;
        }
    }
    for (double& v : p) v /= sum;
    return p;
}

// Independent stationary oracle: dense kernel solve of (T^t - I) pi = 0
// normalized to sum 1. Valid when the kernel is one-dimensional.
inline std::vector<double> stationary_kernel_oracle(const infoconv::StochasticMatrix& m) {
    const std::size_t n = m.side();
    Eigen::MatrixXd a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = m.at(j, i) - (i == j ? 1.0 : 0.0);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    lu.setThreshold(1e-9);
    Eigen::MatrixXd kernel = lu.kernel();
    REQUIRE(kernel.cols() == 1);
    Eigen::VectorXd v = kernel.col(0);
    double sum = v.sum();
    std::vector<double> pi(n);
    for (std::size_t i = 0; i < n; ++i) pi[i] = v(i) / sum;
    return pi;
}

// I(X_i ; Y) computed directly from the joint, independent of the
// decomposition path.
inline double single_source_mi(const infoconv::SourcesTarget& st, int source) {
    const int ny = st.target_arity();
    const int arity = st.source_arity()[source];
    std::vector<double> pxy(static_cast<std::size_t>(arity) * ny, 0.0);
    std::vector<double> px(arity, 0.0);
    infoconv::SourceSubset mask = infoconv::SourceSubset{1} << source;
    for (std::size_t x = 0; x < st.n_source_states(); ++x) {
        std::size_t a = st.project(x, mask);
        for (int y = 0; y < ny; ++y) {
            pxy[a * ny + y] += st.p(x, y);
            px[a] += st.p(x, y);
        }
    }
    const auto& py = st.target_marginal();
    double mi = 0.0;
    for (int a = 0; a < arity; ++a)
        for (int y = 0; y < ny; ++y) {
            double p = pxy[a * ny + y];
            if (p > 0.0) mi += p * std::log2(p / (px[a] * py[y]));
        }
    return mi;
}

} // namespace testutil
