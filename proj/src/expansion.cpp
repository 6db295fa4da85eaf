#include "infoconv/expansion.hpp"

#include <string>

#include "infoconv/errors.hpp"

namespace infoconv {

ExpansionRecord expand_node(const Tpm& t, int element) {
    const int n = t.n_elements();
    if (element < 0 || element >= n)
        throw ValidationError("expand_node: element " + std::to_string(element) +
                              " out of range");
    if (n + 1 > 5)
        throw ValidationError("expand_node: expansion beyond 5 elements is unsupported");

    const std::size_t parent_size = t.side();
    const std::size_t child_size = parent_size * 2;
    std::vector<double> rows(child_size * child_size, 0.0);
    for (std::size_t s = 0; s < child_size; ++s) {
        // Dynamics read the canonical child, i.e. the low n bits.
        const std::size_t x = s & (parent_size - 1);
        for (std::size_t y = 0; y < parent_size; ++y) {
            double p = t.at(x, y);
            if (p == 0.0) continue;
            // Both children copy the realized next value of the parent
            // element.
            const std::size_t m = y | (((y >> element) & 1) << n);
            rows[s * child_size + m] += p;
        }
    }
    return ExpansionRecord{t, Tpm(std::move(rows), child_size), element, {element, n}};
}

Tpm contract_expansion(const ExpansionRecord& r) {
    const std::size_t parent_size = r.parent_tpm.side();
    std::vector<double> rows(parent_size * parent_size, 0.0);
    const int n = r.parent_tpm.n_elements();
    for (std::size_t x = 0; x < parent_size; ++x) {
        const std::size_t s = x | (((x >> r.split_element) & 1) << n);
        for (std::size_t m = 0; m < r.child_tpm.side(); ++m) {
            double p = r.child_tpm.at(s, m);
            if (p == 0.0) continue;
            rows[x * parent_size + (m & (parent_size - 1))] += p;
        }
    }
    return Tpm(std::move(rows), parent_size);
}

} // namespace infoconv
