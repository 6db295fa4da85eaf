#include "infoconv/io.hpp"

#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "infoconv/errors.hpp"

namespace infoconv {

using nlohmann::json;

json tpm_to_json(const Tpm& t) {
    json rows = json::array();
    for (std::size_t r = 0; r < t.side(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < t.side(); ++c) row.push_back(t.at(r, c));
        rows.push_back(std::move(row));
    }
    return json{{"n_elements", t.n_elements()}, {"rows", std::move(rows)}};
}

Tpm tpm_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n_elements") || !j.contains("rows"))
        throw ValidationError("tpm json: expected {\"n_elements\", \"rows\"}");
    int n = j.at("n_elements").get<int>();
    auto rows = j.at("rows").get<std::vector<std::vector<double>>>();
    Tpm t(rows);
    if (t.n_elements() != n)
        throw ValidationError("tpm json: rows imply " + std::to_string(t.n_elements()) +
                              " elements but n_elements says " + std::to_string(n));
    return t;
}

json network_to_json(const BoolNetwork& net) {
    json elements = json::array();
    for (const BoolElement& el : net.elements()) {
        json table = json::array();
        for (std::uint8_t v : el.table) table.push_back(static_cast<int>(v));
        elements.push_back(
            json{{"name", el.name}, {"inputs", el.inputs}, {"table", std::move(table)}});
    }
    return json{{"elements", std::move(elements)}, {"exogenous", net.exogenous()}};
}

BoolNetwork network_from_json(const json& j) {
    if (!j.is_object() || !j.contains("elements") || !j.contains("exogenous"))
        throw ValidationError("network json: expected {\"elements\", \"exogenous\"}");
    std::vector<BoolElement> elements;
    for (const json& e : j.at("elements")) {
        BoolElement el;
        el.name = e.at("name").get<std::string>();
        el.inputs = e.at("inputs").get<std::vector<int>>();
        for (int v : e.at("table").get<std::vector<int>>()) {
            if (v != 0 && v != 1) throw ValidationError("network json: non-binary table entry");
            el.table.push_back(static_cast<std::uint8_t>(v));
        }
        elements.push_back(std::move(el));
    }
    return BoolNetwork(std::move(elements), j.at("exogenous").get<std::vector<int>>());
}

json distribution_to_json(const StateDistribution& d) {
    return json{{"n_elements", d.n_elements()}, {"probs", d.probs()}};
}

StateDistribution distribution_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n_elements") || !j.contains("probs"))
        throw ValidationError("distribution json: expected {\"n_elements\", \"probs\"}");
    return StateDistribution(j.at("probs").get<std::vector<double>>(),
                             j.at("n_elements").get<int>());
}

json ei_report_to_json(const EIReport& r) {
    return json{{"ei", r.ei},
                {"determinism", r.determinism},
                {"degeneracy", r.degeneracy},
                {"log_n", r.log_n},
                {"avg_row_entropy", r.avg_row_entropy},
                {"entropy_of_avg_row", r.entropy_of_avg_row}};
}

json pid_result_to_json(const PIDResult& r, const std::optional<PISpectrum>& spectrum) {
    json atoms = json::object();
    json red = json::object();
    for (std::size_t i = 0; i < r.lattice->size(); ++i) {
        std::string key = r.lattice->atom(i).to_string();
        atoms[key] = r.atoms[i];
        red[key] = r.redundancy[i];
    }
    json out{{"n_sources", r.lattice->n_sources()},
             {"total_mi", r.total_mi},
             {"atoms", std::move(atoms)},
             {"redundancy", std::move(red)},
             {"height", r.lattice->height()}};
    if (spectrum) {
        json layers = json::array();
        for (int i = 0; i <= spectrum->height; ++i)
            layers.push_back(json::array({i, spectrum->layer_mass[i]}));
        out["spectrum"] = std::move(layers);
        out["bsyn"] = spectrum->b_syn;
        out["bred"] = spectrum->b_red;
    } else {
        out["spectrum"] = nullptr;
        out["bsyn"] = nullptr;
        out["bred"] = nullptr;
    }
    return out;
}

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError("cannot parse " + path.string() + ": " + e.what());
    }
    return j;
}

void save_json(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

Tpm load_tpm(const std::filesystem::path& path) { return tpm_from_json(load_json(path)); }

void save_tpm(const std::filesystem::path& path, const Tpm& t) {
    save_json(path, tpm_to_json(t));
}

BoolNetwork load_network(const std::filesystem::path& path) {
    return network_from_json(load_json(path));
}

StatePartition load_partition(const std::filesystem::path& path) {
    json j = load_json(path);
    if (!j.is_array()) throw ValidationError("partition json: expected an array");
    return j.get<StatePartition>();
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace infoconv
