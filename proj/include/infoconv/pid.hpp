#pragma once

#include <cstdint>
#include <vector>

#include "infoconv/distribution.hpp"
#include "infoconv/lattice.hpp"
#include "infoconv/tpm.hpp"

namespace infoconv {

// A joint distribution over n source variables and one target
// variable. Source joint states are mixed-radix integers with source 0
// as the fastest-varying digit; for binary sources this is the usual
// little-endian bitmask.
class SourcesTarget {
public:
    SourcesTarget(std::vector<double> p, std::vector<int> source_arity, int target_arity);

    // Sources are the n binary elements of the past state, the target
    // is the joint future state.
    static SourcesTarget temporal(const JointDistribution& joint, int n_elements);

    int n_sources() const { return static_cast<int>(source_arity_.size()); }
    const std::vector<int>& source_arity() const { return source_arity_; }
    int target_arity() const { return target_arity_; }
    std::size_t n_source_states() const { return n_source_states_; }
    double p(std::size_t src_state, int y) const { return p_[src_state * target_arity_ + y]; }
    const std::vector<double>& target_marginal() const { return py_; }

    // Index of src_state's projection onto the subset's sources.
    std::size_t project(std::size_t src_state, SourceSubset subset) const;
    std::size_t projected_states(SourceSubset subset) const;

private:
    std::vector<double> p_;
    std::vector<int> source_arity_;
    std::vector<std::size_t> stride_;
    int target_arity_;
    std::size_t n_source_states_;
    std::vector<double> py_;
};

// i(A; y): the information the source subset discloses about the
// specific target outcome y. Always >= 0; throws if p(y) = 0.
double specific_information(const SourcesTarget& st, SourceSubset subset, int y);

// Expected minimum specific information across the atom's subsets:
// sum_y p(y) min_{A in atom} i(A; y). The lattice's base redundancy
// measure.
double redundancy_wb(const SourcesTarget& st, const Antichain& atom);

struct PIDResult {
    const PILattice* lattice;
    std::vector<double> redundancy; // per-atom Red(alpha) in bits
    std::vector<double> atoms;      // per-atom partial information in bits
    double total_mi;                // I(sources; target) in bits
};

// Redundancy over every lattice atom, inverted into partial-information
// atoms: pi(alpha) = Red(alpha) - sum of pi over strict predecessors.
// Atoms sum to the total mutual information; atoms below -1e-6 raise
// NumericalConsistencyError, noise in [-1e-6, 0) is clamped to zero.
PIDResult decompose(const SourcesTarget& st);

// Decomposition of the temporal mutual information: sources are the
// individual past elements, the target is the joint future state.
PIDResult temporal_pid(const Tpm& t, const StateDistribution& input);

struct PISpectrum {
    std::vector<double> layer_mass; // indexed by rank, length height+1
    int height;
    double b_syn;
    double b_red;
};

// Per-layer proportions of the total information, plus the synergy
// bias (rank-weighted center of mass normalized by lattice height) and
// its complement. Throws UndefinedBiasError when total_mi is zero.
PISpectrum spectrum_and_bias(const PIDResult& r);

} // namespace infoconv
