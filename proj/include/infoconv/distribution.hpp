#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace infoconv {

// Tolerance for "sums to one" checks on probability vectors.
inline constexpr double kNormalizationTol = 1e-12;

// Probabilities below this are treated as exact zeros when detecting
// support (guards attractor detection against float dust).
inline constexpr double kSupportEps = 1e-15;

// Shannon entropy in bits of an arbitrary probability vector.
// Validates normalization; 0*log(0) is taken as 0.
double entropy(std::span<const double> probs);

// Distribution over the joint states of n binary elements.
//
// States are encoded little-endian: element i contributes bit i, so a
// vector of length 2^n is indexed by the joint-state integer.
class StateDistribution {
public:
    StateDistribution(std::vector<double> probs, int n_elements);

    static StateDistribution uniform(int n_elements);
    static StateDistribution point_mass(int n_elements, std::size_t state);

    int n_elements() const { return n_elements_; }
    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t state) const { return probs_[state]; }
    const std::vector<double>& probs() const { return probs_; }

    bool operator==(const StateDistribution&) const = default;

private:
    std::vector<double> probs_;
    int n_elements_;
};

double entropy(const StateDistribution& d);

// Joint distribution P(x, y) over a pair of finite alphabets, with
// cached marginals. Row-major: p[x * n_y + y].
class JointDistribution {
public:
    JointDistribution(std::vector<double> p, std::size_t n_x, std::size_t n_y);

    std::size_t n_x() const { return n_x_; }
    std::size_t n_y() const { return n_y_; }
    double at(std::size_t x, std::size_t y) const { return p_[x * n_y_ + y]; }
    const std::vector<double>& data() const { return p_; }
    const std::vector<double>& marginal_x() const { return px_; }
    const std::vector<double>& marginal_y() const { return py_; }

    JointDistribution transposed() const;

private:
    std::vector<double> p_;
    std::vector<double> px_, py_;
    std::size_t n_x_, n_y_;
};

} // namespace infoconv
