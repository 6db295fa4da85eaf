#include "infoconv/boolnet.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "infoconv/errors.hpp"

namespace infoconv {

BoolNetwork::BoolNetwork(std::vector<BoolElement> elements, std::vector<int> exogenous)
    : elements_(std::move(elements)), exogenous_(std::move(exogenous)) {
    if (elements_.empty()) throw ValidationError("BoolNetwork: no elements");
    if (elements_.size() > 30) throw ValidationError("BoolNetwork: too many elements");
    std::sort(exogenous_.begin(), exogenous_.end());
    for (std::size_t i = 1; i < exogenous_.size(); ++i)
        if (exogenous_[i] == exogenous_[i - 1])
            throw ValidationError("BoolNetwork: duplicate exogenous index");
    for (int e : exogenous_)
        if (e < 0 || e >= n_elements())
            throw ValidationError("BoolNetwork: exogenous index out of range");
    for (int i = 0; i < n_elements(); ++i) {
        const BoolElement& el = elements_[i];
        if (is_exogenous(i)) {
            if (!el.inputs.empty() || !el.table.empty())
                throw ValidationError("BoolNetwork: exogenous element '" + el.name +
                                      "' must have no inputs and no table");
            continue;
        }
        if (el.inputs.size() > 20)
            throw ValidationError("BoolNetwork: fan-in too large for '" + el.name + "'");
        for (int in : el.inputs)
            if (in < 0 || in >= n_elements())
                throw ValidationError("BoolNetwork: element '" + el.name +
                                      "' reads dangling input " + std::to_string(in));
        if (el.table.size() != (std::size_t{1} << el.inputs.size()))
            throw ValidationError("BoolNetwork: element '" + el.name + "' table length " +
                                  std::to_string(el.table.size()) + " != 2^fan-in");
        for (std::uint8_t v : el.table)
            if (v > 1)
                throw ValidationError("BoolNetwork: element '" + el.name +
                                      "' has a non-binary table entry");
    }
}

bool BoolNetwork::is_exogenous(int i) const {
    return std::binary_search(exogenous_.begin(), exogenous_.end(), i);
}

std::size_t BoolNetwork::step_internal(std::size_t state) const {
    std::size_t next = 0;
    for (int i = 0; i < n_elements(); ++i) {
        if (is_exogenous(i)) continue;
        const BoolElement& el = elements_[i];
        std::size_t idx = 0;
        for (std::size_t j = 0; j < el.inputs.size(); ++j)
            idx |= ((state >> el.inputs[j]) & 1) << j;
        next |= static_cast<std::size_t>(el.table[idx]) << i;
    }
    return next;
}

std::string to_string(GateKind k) {
    switch (k) {
        case GateKind::And: return "AND";
        case GateKind::Or: return "OR";
        case GateKind::Xor: return "XOR";
    }
    throw ValidationError("to_string: bad gate kind");
}

GateKind gate_kind_from_string(const std::string& s) {
    if (s == "AND" || s == "and") return GateKind::And;
    if (s == "OR" || s == "or") return GateKind::Or;
    if (s == "XOR" || s == "xor") return GateKind::Xor;
    throw ValidationError("unknown gate kind '" + s + "'");
}

namespace {

const std::vector<std::uint8_t> kAnd = {0, 0, 0, 1};
const std::vector<std::uint8_t> kOr = {0, 1, 1, 1};
const std::vector<std::uint8_t> kXor = {0, 1, 1, 0};
const std::vector<std::uint8_t> kNand = {1, 1, 1, 0};

BoolElement exo(std::string name) { return BoolElement{std::move(name), {}, {}}; }

} // namespace

GateCircuitPair build_gate_pair(GateKind kind) {
    const std::vector<std::uint8_t>& gate =
        kind == GateKind::And ? kAnd : (kind == GateKind::Or ? kOr : kXor);
    BoolNetwork macro({exo("A"), exo("B"), {"G", {0, 1}, gate}}, {0, 1});
    switch (kind) {
        case GateKind::And: {
            // N2 squares the NAND back into an AND.
            BoolNetwork micro({exo("A"), exo("B"),
                               {"N1", {0, 1}, kNand},
                               {"N2", {2, 2}, kNand}},
                              {0, 1});
            return {kind, std::move(macro), std::move(micro)};
        }
        case GateKind::Or: {
            BoolNetwork micro({exo("A"), exo("B"),
                               {"N1", {0, 0}, kNand},
                               {"N2", {1, 1}, kNand},
                               {"N3", {2, 3}, kNand}},
                              {0, 1});
            return {kind, std::move(macro), std::move(micro)};
        }
        case GateKind::Xor: {
            BoolNetwork micro({exo("A"), exo("B"),
                               {"N", {0, 1}, kNand},
                               {"O", {0, 1}, kOr},
                               {"X", {2, 3}, kAnd}},
                              {0, 1});
            return {kind, std::move(macro), std::move(micro)};
        }
    }
    throw ValidationError("build_gate_pair: bad gate kind");
}

StateDistribution uniform_exo_policy(const BoolNetwork& net) {
    return StateDistribution::uniform(static_cast<int>(net.exogenous().size()));
}

Tpm network_to_tpm(const BoolNetwork& net, const StateDistribution& exo_policy) {
    const auto& exo = net.exogenous();
    if (exo_policy.size() != (std::size_t{1} << exo.size()))
        throw ValidationError("network_to_tpm: exo policy does not cover the exogenous joint");
    const std::size_t size = std::size_t{1} << net.n_elements();
    std::vector<double> rows(size * size, 0.0);
    for (std::size_t x = 0; x < size; ++x) {
        std::size_t base = net.step_internal(x);
        for (std::size_t e = 0; e < exo_policy.size(); ++e) {
            if (exo_policy[e] == 0.0) continue;
            std::size_t y = base;
            for (std::size_t j = 0; j < exo.size(); ++j) y |= ((e >> j) & 1) << exo[j];
            rows[x * size + y] += exo_policy[e];
        }
    }
    return Tpm(std::move(rows), size);
}

StateDistribution induced_past_distribution(const BoolNetwork& net,
                                            const StateDistribution& exo_policy) {
    // Cycle check over internal dependencies (exogenous elements are
    // sources and cannot be part of a cycle).
    const int n = net.n_elements();
    std::vector<int> mark(n, 0); // 0 unvisited, 1 in progress, 2 done
    std::function<void(int)> visit = [&](int v) {
        if (net.is_exogenous(v)) return;
        if (mark[v] == 1)
            throw UnsupportedTopologyError(
                "induced_past_distribution: cyclic internal dependency through '" +
                net.elements()[v].name + "'");
        if (mark[v] == 2) return;
        mark[v] = 1;
        for (int in : net.elements()[v].inputs) visit(in);
        mark[v] = 2;
    };
    for (int v = 0; v < n; ++v) visit(v);

    // The chain forgets its start state after depth steps, so
    // propagating an exact distribution n+1 times lands on the steady
    // state exactly.
    Tpm t = network_to_tpm(net, exo_policy);
    const std::size_t size = t.side();
    std::vector<double> mu(size, 1.0 / static_cast<double>(size));
    for (int it = 0; it <= n; ++it) {
        std::vector<double> next(size, 0.0);
        for (std::size_t x = 0; x < size; ++x) {
            if (mu[x] == 0.0) continue;
            for (std::size_t y = 0; y < size; ++y) next[y] += mu[x] * t.at(x, y);
        }
        mu = std::move(next);
    }
    return StateDistribution(std::move(mu), net.n_elements());
}

} // namespace infoconv
