#include "infoconv/effective_info.hpp"

#include <cmath>
#include <string>

#include "infoconv/errors.hpp"

namespace infoconv {

EIReport effective_information(const StochasticMatrix& m) {
    const std::size_t n = m.side();
    EIReport r;
    r.log_n = std::log2(static_cast<double>(n));
    r.avg_row_entropy = 0.0;
    std::vector<double> avg_row(n, 0.0);
    for (std::size_t x = 0; x < n; ++x) {
        r.avg_row_entropy += entropy(m.row(x)) / static_cast<double>(n);
        for (std::size_t y = 0; y < n; ++y) avg_row[y] += m.at(x, y) / static_cast<double>(n);
    }
    r.entropy_of_avg_row = entropy(std::span(avg_row));
    r.determinism = r.log_n - r.avg_row_entropy;
    r.degeneracy = r.log_n - r.entropy_of_avg_row;
    r.ei = r.determinism - r.degeneracy;
    return r;
}

std::size_t validate_partition(const StatePartition& p, std::size_t n_micro) {
    if (p.size() != n_micro)
        throw ValidationError("partition length " + std::to_string(p.size()) +
                              " does not match " + std::to_string(n_micro) + " micro states");
    int max_macro = -1;
    for (int g : p) {
        if (g < 0) throw ValidationError("partition: negative macro index");
        max_macro = std::max(max_macro, g);
    }
    const std::size_t n_macro = static_cast<std::size_t>(max_macro) + 1;
    std::vector<std::size_t> count(n_macro, 0);
    for (int g : p) ++count[g];
    for (std::size_t g = 0; g < n_macro; ++g)
        if (count[g] == 0)
            throw ValidationError("partition: macro state " + std::to_string(g) +
                                  " has no micro states");
    return n_macro;
}

StochasticMatrix coarse_grain_tpm(const StochasticMatrix& m, const StatePartition& p) {
    const std::size_t n = m.side();
    const std::size_t n_macro = validate_partition(p, n);
    std::vector<double> group_size(n_macro, 0.0);
    for (int g : p) group_size[g] += 1.0;
    std::vector<double> rows(n_macro * n_macro, 0.0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            rows[p[x] * n_macro + p[y]] += m.at(x, y) / group_size[p[x]];
    return StochasticMatrix(std::move(rows), n_macro);
}

} // namespace infoconv
