#include "infoconv/distribution.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "infoconv/errors.hpp"

namespace infoconv {

namespace {

void check_normalized(std::span<const double> probs, const char* what) {
    double sum = 0.0;
    for (double p : probs) {
        if (p < 0.0 || !std::isfinite(p))
            throw ValidationError(std::string(what) + ": negative or non-finite entry");
        sum += p;
    }
    if (std::abs(sum - 1.0) > kNormalizationTol)
        throw ValidationError(std::string(what) + ": entries sum to " +
                              std::to_string(sum) + ", expected 1");
}

} // namespace

double entropy(std::span<const double> probs) {
    check_normalized(probs, "entropy");
    double h = 0.0;
    for (double p : probs)
        if (p > 0.0) h -= p * std::log2(p);
    return h;
}

StateDistribution::StateDistribution(std::vector<double> probs, int n_elements)
    : probs_(std::move(probs)), n_elements_(n_elements) {
    if (n_elements_ < 0 || n_elements_ > 30)
        throw ValidationError("StateDistribution: element count out of range");
    if (probs_.size() != (std::size_t{1} << n_elements_))
        throw ValidationError("StateDistribution: length " + std::to_string(probs_.size()) +
                              " does not equal 2^" + std::to_string(n_elements_));
    check_normalized(probs_, "StateDistribution");
}

StateDistribution StateDistribution::uniform(int n_elements) {
    std::size_t n = std::size_t{1} << n_elements;
    return StateDistribution(std::vector<double>(n, 1.0 / static_cast<double>(n)), n_elements);
}

StateDistribution StateDistribution::point_mass(int n_elements, std::size_t state) {
    std::size_t n = std::size_t{1} << n_elements;
    if (state >= n) throw ValidationError("point_mass: state out of range");
    std::vector<double> p(n, 0.0);
    p[state] = 1.0;
    return StateDistribution(std::move(p), n_elements);
}

double entropy(const StateDistribution& d) { return entropy(std::span(d.probs())); }

JointDistribution::JointDistribution(std::vector<double> p, std::size_t n_x, std::size_t n_y)
    : p_(std::move(p)), n_x_(n_x), n_y_(n_y) {
    if (n_x_ == 0 || n_y_ == 0 || p_.size() != n_x_ * n_y_)
        throw ValidationError("JointDistribution: shape mismatch");
    check_normalized(p_, "JointDistribution");
    px_.assign(n_x_, 0.0);
    py_.assign(n_y_, 0.0);
    for (std::size_t x = 0; x < n_x_; ++x)
        for (std::size_t y = 0; y < n_y_; ++y) {
            px_[x] += p_[x * n_y_ + y];
            py_[y] += p_[x * n_y_ + y];
        }
}

JointDistribution JointDistribution::transposed() const {
    std::vector<double> q(p_.size());
    for (std::size_t x = 0; x < n_x_; ++x)
        for (std::size_t y = 0; y < n_y_; ++y)
            q[y * n_x_ + x] = p_[x * n_y_ + y];
    return JointDistribution(std::move(q), n_y_, n_x_);
}

} // namespace infoconv
