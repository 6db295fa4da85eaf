#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "infoconv/distribution.hpp"

namespace infoconv {

// Square row-stochastic matrix of any side: row x is the conditional
// distribution over next states given current state x.
class StochasticMatrix {
public:
    StochasticMatrix(std::vector<double> row_major, std::size_t side);
    explicit StochasticMatrix(const std::vector<std::vector<double>>& rows);

    std::size_t side() const { return side_; }
    double at(std::size_t r, std::size_t c) const { return data_[r * side_ + c]; }
    std::span<const double> row(std::size_t r) const {
        return std::span(data_).subspan(r * side_, side_);
    }
    const std::vector<double>& data() const { return data_; }

    bool operator==(const StochasticMatrix&) const = default;

private:
    std::vector<double> data_;
    std::size_t side_;
};

// Transition probability matrix over the joint states of n binary
// elements (side = 2^n, same little-endian state encoding as
// StateDistribution).
class Tpm {
public:
    explicit Tpm(StochasticMatrix m);
    Tpm(std::vector<double> row_major, std::size_t side)
        : Tpm(StochasticMatrix(std::move(row_major), side)) {}
    explicit Tpm(const std::vector<std::vector<double>>& rows)
        : Tpm(StochasticMatrix(rows)) {}

    int n_elements() const { return n_elements_; }
    std::size_t side() const { return m_.side(); }
    double at(std::size_t r, std::size_t c) const { return m_.at(r, c); }
    std::span<const double> row(std::size_t r) const { return m_.row(r); }
    const StochasticMatrix& matrix() const { return m_; }

    bool operator==(const Tpm&) const = default;

private:
    StochasticMatrix m_;
    int n_elements_;
};

// Unique stationary distribution of the recurrent class with the most
// states (ties broken by lowest minimal state index). Classes are the
// terminal strongly connected components of the support graph; the
// restricted chain is solved exactly, with damped power iteration as a
// fallback. Result satisfies max|pi T - pi| < 1e-10 or a
// ConvergenceError is thrown.
std::vector<double> stationary_of(const StochasticMatrix& m);
StateDistribution stationary_distribution(const Tpm& t);

// Mutual information in bits of a joint distribution.
double mutual_information(const JointDistribution& joint);

struct MIResult {
    double mi_bits;
    JointDistribution joint;
};

// I(X;Y) between current and next joint state, with
// P(x,y) = input(x) * t(x -> y).
MIResult temporal_mutual_information(const StochasticMatrix& m, std::span<const double> input);
MIResult temporal_mutual_information(const Tpm& t, const StateDistribution& input);

} // namespace infoconv
