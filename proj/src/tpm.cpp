#include "infoconv/tpm.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "infoconv/errors.hpp"

namespace infoconv {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void check_rows(const std::vector<double>& data, std::size_t side) {
    if (side == 0 || data.size() != side * side)
        throw ValidationError("StochasticMatrix: not square");
    for (std::size_t r = 0; r < side; ++r) {
        double sum = 0.0;
        for (std::size_t c = 0; c < side; ++c) {
            double v = data[r * side + c];
            if (v < 0.0 || !std::isfinite(v))
                throw ValidationError("StochasticMatrix: negative or non-finite entry in row " +
                                      std::to_string(r));
            sum += v;
        }
        if (std::abs(sum - 1.0) > kNormalizationTol)
            throw ValidationError("StochasticMatrix: row " + std::to_string(r) +
                                  " sums to " + std::to_string(sum));
    }
}

} // namespace

StochasticMatrix::StochasticMatrix(std::vector<double> row_major, std::size_t side)
    : data_(std::move(row_major)), side_(side) {
    check_rows(data_, side_);
}

StochasticMatrix::StochasticMatrix(const std::vector<std::vector<double>>& rows) {
    side_ = rows.size();
    data_.reserve(side_ * side_);
    for (const auto& r : rows) {
        if (r.size() != side_) throw ValidationError("StochasticMatrix: ragged rows");
        data_.insert(data_.end(), r.begin(), r.end());
    }
    check_rows(data_, side_);
}

Tpm::Tpm(StochasticMatrix m) : m_(std::move(m)) {
    if (!is_power_of_two(m_.side()))
        throw ValidationError("Tpm: side " + std::to_string(m_.side()) +
                              " is not a power of two");
    n_elements_ = 0;
    for (std::size_t s = m_.side(); s > 1; s >>= 1) ++n_elements_;
}

namespace {

// Tarjan strongly connected components over the support graph
// (edges where t(x,y) > kSupportEps).
struct SccFinder {
    const StochasticMatrix& m;
    std::vector<int> index, low, comp;
    std::vector<bool> on_stack;
    std::vector<std::size_t> stack;
    int counter = 0, n_comps = 0;

    explicit SccFinder(const StochasticMatrix& m)
        : m(m), index(m.side(), -1), low(m.side(), 0), comp(m.side(), -1),
          on_stack(m.side(), false) {}

    void dfs(std::size_t v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (std::size_t w = 0; w < m.side(); ++w) {
            if (m.at(v, w) <= kSupportEps) continue;
            if (index[w] < 0) {
                dfs(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            while (true) {
                std::size_t w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp[w] = n_comps;
                if (w == v) break;
            }
            ++n_comps;
        }
    }

    std::vector<int> run() {
        for (std::size_t v = 0; v < m.side(); ++v)
            if (index[v] < 0) dfs(v);
        return comp;
    }
};

double fixed_point_residual(const StochasticMatrix& m, const std::vector<double>& pi) {
    double worst = 0.0;
    for (std::size_t y = 0; y < m.side(); ++y) {
        double v = 0.0;
        for (std::size_t x = 0; x < m.side(); ++x) v += pi[x] * m.at(x, y);
        worst = std::max(worst, std::abs(v - pi[y]));
    }
    return worst;
}

constexpr double kStationaryTol = 1e-10;

} // namespace

std::vector<double> stationary_of(const StochasticMatrix& m) {
    const std::size_t n = m.side();
    std::vector<int> comp = SccFinder(m).run();
    int n_comps = *std::max_element(comp.begin(), comp.end()) + 1;

    // A component is recurrent iff it has no edge leaving it.
    std::vector<bool> terminal(n_comps, true);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (m.at(x, y) > kSupportEps && comp[y] != comp[x]) terminal[comp[x]] = false;

    // The recurrent class with the most states; ties by lowest minimal
    // state index. States are scanned in increasing order, so the first
    // class reaching the maximal size wins ties.
    std::vector<std::vector<std::size_t>> classes(n_comps);
    for (std::size_t x = 0; x < n; ++x) classes[comp[x]].push_back(x);
    int chosen = -1;
    for (int c = 0; c < n_comps; ++c) {
        if (!terminal[c]) continue;
        if (chosen < 0 || classes[c].size() > classes[chosen].size() ||
            (classes[c].size() == classes[chosen].size() &&
             classes[c].front() < classes[chosen].front()))
            chosen = c;
    }
    const std::vector<std::size_t>& states = classes[chosen];
    const std::size_t k = states.size();

    std::vector<double> pi(n, 0.0);
    // Exact solve of pi T = pi, sum pi = 1 restricted to the class:
    // (T^t - I) with the last equation replaced by the normalization.
    Eigen::MatrixXd a(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            a(i, j) = m.at(states[j], states[i]) - (i == j ? 1.0 : 0.0);
    for (std::size_t j = 0; j < k; ++j) a(k - 1, j) = 1.0;
    Eigen::VectorXd b = Eigen::VectorXd::Zero(k);
    b(k - 1) = 1.0;
    Eigen::VectorXd x = a.partialPivLu().solve(b);
    double total = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        pi[states[i]] = std::max(0.0, x(i));
        total += pi[states[i]];
    }
    if (total > 0.0)
        for (double& v : pi) v /= total;

    double res = fixed_point_residual(m, pi);
    if (res < kStationaryTol) return pi;

    // Fallback: damped power iteration on the chosen class (the
    // damping handles periodic chains).
    std::fill(pi.begin(), pi.end(), 0.0);
    for (std::size_t s : states) pi[s] = 1.0 / static_cast<double>(k);
    constexpr int kMaxIters = 200000;
    for (int it = 0; it < kMaxIters; ++it) {
        std::vector<double> next(n, 0.0);
        for (std::size_t xs = 0; xs < n; ++xs) {
            if (pi[xs] == 0.0) continue;
            for (std::size_t y = 0; y < n; ++y) next[y] += pi[xs] * m.at(xs, y);
        }
        for (std::size_t y = 0; y < n; ++y) pi[y] = 0.5 * (pi[y] + next[y]);
        if (it % 32 == 31) {
            res = fixed_point_residual(m, pi);
            if (res < kStationaryTol) return pi;
        }
    }
    res = fixed_point_residual(m, pi);
    if (res < kStationaryTol) return pi;
    throw ConvergenceError("stationary_of: residual " + std::to_string(res) +
                           " after iteration cap", res);
}

StateDistribution stationary_distribution(const Tpm& t) {
    return StateDistribution(stationary_of(t.matrix()), t.n_elements());
}

double mutual_information(const JointDistribution& joint) {
    const auto& px = joint.marginal_x();
    const auto& py = joint.marginal_y();
    double mi = 0.0;
    for (std::size_t x = 0; x < joint.n_x(); ++x)
        for (std::size_t y = 0; y < joint.n_y(); ++y) {
            double p = joint.at(x, y);
            if (p > 0.0) mi += p * std::log2(p / (px[x] * py[y]));
        }
    if (mi < 0.0) {
        if (mi < -1e-9)
            throw NumericalConsistencyError("mutual_information: negative value " +
                                            std::to_string(mi));
        mi = 0.0;
    }
    return mi;
}

MIResult temporal_mutual_information(const StochasticMatrix& m, std::span<const double> input) {
    if (input.size() != m.side())
        throw ValidationError("temporal_mutual_information: input length " +
                              std::to_string(input.size()) + " does not match side " +
                              std::to_string(m.side()));
    std::vector<double> p(m.side() * m.side());
    for (std::size_t x = 0; x < m.side(); ++x)
        for (std::size_t y = 0; y < m.side(); ++y) p[x * m.side() + y] = input[x] * m.at(x, y);
    JointDistribution joint(std::move(p), m.side(), m.side());
    double mi = mutual_information(joint);
    return MIResult{mi, std::move(joint)};
}

MIResult temporal_mutual_information(const Tpm& t, const StateDistribution& input) {
    return temporal_mutual_information(t.matrix(), std::span(input.probs()));
}

} // namespace infoconv
