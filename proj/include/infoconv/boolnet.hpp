#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "infoconv/distribution.hpp"
#include "infoconv/tpm.hpp"

namespace infoconv {

// One binary element: a truth table over the joint state of its
// inputs. The table is indexed little-endian in the listed input
// order. Exogenous elements have no inputs and an empty table.
struct BoolElement {
    std::string name;
    std::vector<int> inputs;
    std::vector<std::uint8_t> table;
};

class BoolNetwork {
public:
    BoolNetwork(std::vector<BoolElement> elements, std::vector<int> exogenous);

    int n_elements() const { return static_cast<int>(elements_.size()); }
    const std::vector<BoolElement>& elements() const { return elements_; }
    const std::vector<int>& exogenous() const { return exogenous_; } // sorted
    bool is_exogenous(int i) const;

    // Deterministic update of the non-exogenous elements given the
    // current joint state; exogenous bits of the result are zero.
    std::size_t step_internal(std::size_t state) const;

private:
    std::vector<BoolElement> elements_;
    std::vector<int> exogenous_;
};

enum class GateKind { And, Or, Xor };

std::string to_string(GateKind k);
GateKind gate_kind_from_string(const std::string& s);

// A logic gate modeled at two scales: a 3-element network (gate plus
// its two exogenous inputs) and the NAND-level network that implements
// the same function over more elements.
struct GateCircuitPair {
    GateKind gate_kind;
    BoolNetwork macro;
    BoolNetwork micro;
};

GateCircuitPair build_gate_pair(GateKind kind);

// Maximum-entropy policy over the network's exogenous elements. Joint
// exo states use bit j for the j-th exogenous element in ascending
// element-index order.
StateDistribution uniform_exo_policy(const BoolNetwork& net);

// One-step dynamics: deterministic internal update composed with
// independent resampling of the exogenous elements from exo_policy.
Tpm network_to_tpm(const BoolNetwork& net, const StateDistribution& exo_policy);

// Steady-state joint distribution of the current state when exogenous
// elements are redrawn from exo_policy every timestep and internal
// elements carry propagated values. Requires acyclic internal wiring.
StateDistribution induced_past_distribution(const BoolNetwork& net,
                                            const StateDistribution& exo_policy);

} // namespace infoconv
