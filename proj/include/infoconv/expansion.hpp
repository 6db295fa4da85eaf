#pragma once

#include <utility>

#include "infoconv/tpm.hpp"

namespace infoconv {

// Result of bifurcating one element into two children that share its
// inputs and outputs. The canonical child keeps the parent's bit
// position; the second child is appended as the new highest bit.
// Stationary dynamics stay on states where the children agree, so the
// temporal mutual information is preserved exactly.
struct ExpansionRecord {
    Tpm parent_tpm;
    Tpm child_tpm;
    int split_element;
    std::pair<int, int> child_indices;
};

// Expand the given element of an n-element system into an (n+1)-element
// equivalence class. Downstream reads use the canonical child, so rows
// are defined on every child state; states where the children disagree
// are transient and exit in one step.
ExpansionRecord expand_node(const Tpm& t, int element);

// Marginalize the second child away (map every child state to the
// parent state read from the canonical child). Recovers the parent TPM
// exactly.
Tpm contract_expansion(const ExpansionRecord& r);

} // namespace infoconv
