#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "infoconv/ensembles.hpp"

namespace infoconv {

enum class OutputFormat { Csv, Json };

OutputFormat output_format_from_string(const std::string& s);

struct RunConfig {
    std::optional<std::uint64_t> seed; // required by stochastic commands
    int n_systems = 0;
    EnsembleKind kind = EnsembleKind::Gaussian;
    int levels = 2;
    int split_element = 0;
    int threads = 1;
    std::filesystem::path out_dir;
    OutputFormat format = OutputFormat::Csv;
    bool svg = false;
    std::filesystem::path tpm_file;
    std::filesystem::path partition_file;
    std::string input_spec = "stationary"; // stationary | maxent | <path>
};

// The gate-circuit comparison: one table row per gate with the mutual
// information and synergy bias at both scales, plus a per-gate layer
// spectrum file.
void cmd_logic_gates(const RunConfig& cfg);

// The seeded node-expansion experiment: per-system table, scatter data
// (macro bias vs gain), and a summary with the correlation.
void cmd_expansion(const RunConfig& cfg);

// Effective-information comparison between a transition matrix and its
// coarse-graining under a state partition.
void cmd_ei_scan(const RunConfig& cfg);

// Ad hoc decomposition of a TPM file at a chosen input distribution.
void cmd_pid(const RunConfig& cfg);

} // namespace infoconv
