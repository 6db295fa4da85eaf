#pragma once

#include <vector>

#include "infoconv/tpm.hpp"

namespace infoconv {

// Effective information of a transition matrix and the two terms it
// decomposes into. All quantities in bits; ei = determinism -
// degeneracy holds exactly, with determinism = log2(N) - <H(row)> and
// degeneracy = log2(N) - H(<row>).
struct EIReport {
    double ei;
    double determinism;
    double degeneracy;
    double log_n;
    double avg_row_entropy;
    double entropy_of_avg_row;
};

EIReport effective_information(const StochasticMatrix& m);
inline EIReport effective_information(const Tpm& t) {
    return effective_information(t.matrix());
}

// Surjective map from micro state index to macro state index.
using StatePartition = std::vector<int>;

// Number of macro states; throws unless every macro index in
// 0..max has at least one preimage.
std::size_t validate_partition(const StatePartition& p, std::size_t n_micro);

// Macro transition matrix: rows averaged over each group's members,
// then columns summed within groups.
StochasticMatrix coarse_grain_tpm(const StochasticMatrix& m, const StatePartition& p);

} // namespace infoconv
