#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "infoconv/boolnet.hpp"
#include "infoconv/distribution.hpp"
#include "infoconv/effective_info.hpp"
#include "infoconv/pid.hpp"
#include "infoconv/tpm.hpp"

namespace infoconv {

// JSON codecs. Serialized doubles round-trip at full precision.

nlohmann::json tpm_to_json(const Tpm& t);
Tpm tpm_from_json(const nlohmann::json& j);

nlohmann::json network_to_json(const BoolNetwork& net);
BoolNetwork network_from_json(const nlohmann::json& j);

nlohmann::json distribution_to_json(const StateDistribution& d);
StateDistribution distribution_from_json(const nlohmann::json& j);

nlohmann::json ei_report_to_json(const EIReport& r);

// Atoms and redundancies keyed by canonical antichain strings; the
// spectrum, when present, as (rank, mass) pairs with the bias scalars.
nlohmann::json pid_result_to_json(const PIDResult& r, const std::optional<PISpectrum>& spectrum);

nlohmann::json load_json(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const nlohmann::json& j);

Tpm load_tpm(const std::filesystem::path& path);
void save_tpm(const std::filesystem::path& path, const Tpm& t);
BoolNetwork load_network(const std::filesystem::path& path);
StatePartition load_partition(const std::filesystem::path& path);

// Full-precision decimal formatting ("%.17g") used by the CSV writers.
std::string format_double(double v);

} // namespace infoconv
