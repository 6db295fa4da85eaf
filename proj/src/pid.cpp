#include "infoconv/pid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "infoconv/errors.hpp"

namespace infoconv {

SourcesTarget::SourcesTarget(std::vector<double> p, std::vector<int> source_arity,
                             int target_arity)
    : p_(std::move(p)), source_arity_(std::move(source_arity)), target_arity_(target_arity) {
    if (source_arity_.empty() || source_arity_.size() > 5)
        throw ValidationError("SourcesTarget: 1..5 sources required");
    if (target_arity_ < 1) throw ValidationError("SourcesTarget: bad target arity");
    n_source_states_ = 1;
    stride_.resize(source_arity_.size());
    for (std::size_t i = 0; i < source_arity_.size(); ++i) {
        if (source_arity_[i] < 2) throw ValidationError("SourcesTarget: source arity < 2");
        stride_[i] = n_source_states_;
        n_source_states_ *= static_cast<std::size_t>(source_arity_[i]);
    }
    if (p_.size() != n_source_states_ * static_cast<std::size_t>(target_arity_))
        throw ValidationError("SourcesTarget: joint size mismatch");
    double sum = 0.0;
    py_.assign(target_arity_, 0.0);
    for (std::size_t x = 0; x < n_source_states_; ++x)
        for (int y = 0; y < target_arity_; ++y) {
            double v = this->p(x, y);
            if (v < 0.0 || !std::isfinite(v))
                throw ValidationError("SourcesTarget: negative or non-finite entry");
            sum += v;
            py_[y] += v;
        }
    if (std::abs(sum - 1.0) > kNormalizationTol)
        throw ValidationError("SourcesTarget: joint sums to " + std::to_string(sum));
}

SourcesTarget SourcesTarget::temporal(const JointDistribution& joint, int n_elements) {
    if (n_elements < 1 || n_elements > 5)
        throw ValidationError("SourcesTarget::temporal: 1..5 elements required");
    if (joint.n_x() != (std::size_t{1} << n_elements))
        throw ValidationError("SourcesTarget::temporal: joint rows do not match 2^n");
    return SourcesTarget(joint.data(), std::vector<int>(n_elements, 2),
                         static_cast<int>(joint.n_y()));
}

std::size_t SourcesTarget::project(std::size_t src_state, SourceSubset subset) const {
    std::size_t idx = 0, mult = 1;
    for (std::size_t i = 0; i < source_arity_.size(); ++i) {
        if (!(subset >> i & 1)) continue;
        std::size_t digit = (src_state / stride_[i]) % static_cast<std::size_t>(source_arity_[i]);
        idx += digit * mult;
        mult *= static_cast<std::size_t>(source_arity_[i]);
    }
    return idx;
}

std::size_t SourcesTarget::projected_states(SourceSubset subset) const {
    std::size_t n = 1;
    for (std::size_t i = 0; i < source_arity_.size(); ++i)
        if (subset >> i & 1) n *= static_cast<std::size_t>(source_arity_[i]);
    return n;
}

namespace {

// i(A; y) for one subset given precomputed projections.
double specific_information_projected(const SourcesTarget& st,
                                      const std::vector<std::size_t>& proj,
                                      std::size_t n_proj, int y, double p_y) {
    std::vector<double> p_ay(n_proj, 0.0), p_a(n_proj, 0.0);
    for (std::size_t x = 0; x < st.n_source_states(); ++x) {
        p_ay[proj[x]] += st.p(x, y);
        for (int yy = 0; yy < st.target_arity(); ++yy) p_a[proj[x]] += st.p(x, yy);
    }
    double total = 0.0;
    for (std::size_t a = 0; a < n_proj; ++a) {
        if (p_ay[a] <= 0.0) continue;
        double post = p_ay[a] / p_y;
        total += post * std::log2(post / p_a[a]);
    }
    return std::max(0.0, total);
}

// spec_info[s * target_arity + y] for every nonempty subset mask s.
std::vector<double> specific_information_table(const SourcesTarget& st) {
    const int ny = st.target_arity();
    const SourceSubset full = (SourceSubset{1} << st.n_sources()) - 1;
    std::vector<double> table((full + 1) * static_cast<std::size_t>(ny), 0.0);
    const auto& py = st.target_marginal();
    std::vector<std::size_t> proj(st.n_source_states());
    for (SourceSubset s = 1; s <= full; ++s) {
        for (std::size_t x = 0; x < st.n_source_states(); ++x) proj[x] = st.project(x, s);
        std::size_t n_proj = st.projected_states(s);
        for (int y = 0; y < ny; ++y) {
            if (py[y] <= 0.0) continue;
            table[s * ny + y] = specific_information_projected(st, proj, n_proj, y, py[y]);
        }
    }
    return table;
}

double total_mutual_information(const SourcesTarget& st) {
    const auto& py = st.target_marginal();
    std::vector<double> px(st.n_source_states(), 0.0);
    for (std::size_t x = 0; x < st.n_source_states(); ++x)
        for (int y = 0; y < st.target_arity(); ++y) px[x] += st.p(x, y);
    double mi = 0.0;
    for (std::size_t x = 0; x < st.n_source_states(); ++x)
        for (int y = 0; y < st.target_arity(); ++y) {
            double p = st.p(x, y);
            if (p > 0.0) mi += p * std::log2(p / (px[x] * py[y]));
        }
    return std::max(0.0, mi);
}

constexpr double kAtomNoiseFloor = -1e-6;

} // namespace

double specific_information(const SourcesTarget& st, SourceSubset subset, int y) {
    if (subset == 0 || subset >= (SourceSubset{1} << st.n_sources()))
        throw ValidationError("specific_information: bad subset mask");
    if (y < 0 || y >= st.target_arity())
        throw ValidationError("specific_information: target state out of range");
    if (st.target_marginal()[y] <= 0.0)
        throw ValidationError("specific_information: p(y) = 0 for y = " + std::to_string(y));
    std::vector<std::size_t> proj(st.n_source_states());
    for (std::size_t x = 0; x < st.n_source_states(); ++x) proj[x] = st.project(x, subset);
    return specific_information_projected(st, proj, st.projected_states(subset), y,
                                          st.target_marginal()[y]);
}

double redundancy_wb(const SourcesTarget& st, const Antichain& atom) {
    if (atom.n_sources() != st.n_sources())
        throw ValidationError("redundancy_wb: atom source count mismatch");
    const auto& py = st.target_marginal();
    double total = 0.0;
    for (int y = 0; y < st.target_arity(); ++y) {
        if (py[y] <= 0.0) continue;
        double lowest = std::numeric_limits<double>::infinity();
        for (SourceSubset s : atom.members())
            lowest = std::min(lowest, specific_information(st, s, y));
        total += py[y] * lowest;
    }
    return total;
}

PIDResult decompose(const SourcesTarget& st) {
    const PILattice& lattice = PILattice::for_sources(st.n_sources());
    const std::size_t n = lattice.size();
    const int ny = st.target_arity();
    const auto& py = st.target_marginal();
    std::vector<double> table = specific_information_table(st);

    std::vector<double> red(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double sum = 0.0;
        for (int y = 0; y < ny; ++y) {
            if (py[y] <= 0.0) continue;
            double lowest = std::numeric_limits<double>::infinity();
            for (SourceSubset s : lattice.atom(j).members())
                lowest = std::min(lowest, table[s * ny + y]);
            sum += py[y] * lowest;
        }
        red[j] = sum;
    }

    // Invert in rank order; every strict predecessor has smaller rank.
    std::vector<std::uint32_t> by_rank(n);
    std::iota(by_rank.begin(), by_rank.end(), 0);
    std::stable_sort(by_rank.begin(), by_rank.end(), [&](std::uint32_t a, std::uint32_t b) {
        return lattice.rank(a) < lattice.rank(b);
    });
    std::vector<double> atoms(n, 0.0);
    for (std::uint32_t j : by_rank) {
        double below = 0.0;
        for (std::uint32_t i : lattice.strict_down(j)) below += atoms[i];
        atoms[j] = red[j] - below;
    }

    for (std::size_t j = 0; j < n; ++j) {
        if (atoms[j] < kAtomNoiseFloor)
            throw NumericalConsistencyError(
                "decompose: atom " + lattice.atom(j).to_string() + " = " +
                std::to_string(atoms[j]) + " is negative beyond float noise");
        if (atoms[j] < 0.0) atoms[j] = 0.0;
    }

    return PIDResult{&lattice, std::move(red), std::move(atoms), total_mutual_information(st)};
}

PIDResult temporal_pid(const Tpm& t, const StateDistribution& input) {
    if (t.n_elements() > 5)
        throw ValidationError("temporal_pid: systems above 5 elements are unsupported");
    MIResult mi = temporal_mutual_information(t, input);
    PIDResult result = decompose(SourcesTarget::temporal(mi.joint, t.n_elements()));
    double atom_sum = std::accumulate(result.atoms.begin(), result.atoms.end(), 0.0);
    if (std::abs(atom_sum - mi.mi_bits) > 1e-9)
        throw NumericalConsistencyError("temporal_pid: atoms sum to " +
                                        std::to_string(atom_sum) + " but mutual information is " +
                                        std::to_string(mi.mi_bits));
    return result;
}

PISpectrum spectrum_and_bias(const PIDResult& r) {
    if (r.total_mi <= 0.0)
        throw UndefinedBiasError("spectrum_and_bias: zero mutual information, bias undefined");
    const PILattice& lattice = *r.lattice;
    PISpectrum s;
    s.height = lattice.height();
    s.layer_mass.assign(static_cast<std::size_t>(s.height) + 1, 0.0);
    for (std::size_t j = 0; j < lattice.size(); ++j)
        s.layer_mass[lattice.rank(j)] += r.atoms[j] / r.total_mi;
    // A single-layer lattice carries all information at the bottom.
    s.b_syn = 0.0;
    if (s.height > 0)
        for (int i = 0; i <= s.height; ++i)
            s.b_syn += (static_cast<double>(i) / s.height) * s.layer_mass[i];
    s.b_red = 1.0 - s.b_syn;
    return s;
}

} // namespace infoconv
