#include "infoconv/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "infoconv/boolnet.hpp"
#include "infoconv/effective_info.hpp"
#include "infoconv/errors.hpp"
#include "infoconv/io.hpp"
#include "infoconv/pid.hpp"
#include "infoconv/stats.hpp"

namespace infoconv {

using nlohmann::json;

OutputFormat output_format_from_string(const std::string& s) {
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw ValidationError("unknown output format '" + s + "'");
}

namespace {

void ensure_out_dir(const RunConfig& cfg) {
    if (cfg.out_dir.empty()) throw ValidationError("output directory not set");
    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec) throw Error("cannot create " + cfg.out_dir.string() + ": " + ec.message());
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
}

std::string csv_cell(double v) {
    if (std::isnan(v)) return "";
    return format_double(v);
}

// Table rows as CSV with the given header, or as a JSON array of
// objects keyed by the header names.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<json>> rows;

    void write(const std::filesystem::path& base, OutputFormat format) const {
        if (format == OutputFormat::Csv) {
            std::string text;
            for (std::size_t i = 0; i < header.size(); ++i)
                text += (i ? "," : "") + header[i];
            text += '\n';
            for (const auto& row : rows) {
                for (std::size_t i = 0; i < row.size(); ++i) {
                    if (i) text += ',';
                    const json& cell = row[i];
                    if (cell.is_number_float())
                        text += csv_cell(cell.get<double>());
                    else if (cell.is_string())
                        text += cell.get<std::string>();
                    else if (!cell.is_null())
                        text += cell.dump();
                }
                text += '\n';
            }
            write_text(base.string() + ".csv", text);
        } else {
            json out = json::array();
            for (const auto& row : rows) {
                json obj = json::object();
                for (std::size_t i = 0; i < row.size(); ++i) {
                    if (row[i].is_number_float() && std::isnan(row[i].get<double>()))
                        obj[header[i]] = nullptr;
                    else
                        obj[header[i]] = row[i];
                }
                out.push_back(std::move(obj));
            }
            save_json(base.string() + ".json", out);
        }
    }
};

json spectrum_json(const Tpm& t, const StateDistribution& input) {
    PIDResult pid = temporal_pid(t, input);
    std::optional<PISpectrum> spectrum;
    if (pid.total_mi > 0.0) spectrum = spectrum_and_bias(pid);
    return pid_result_to_json(pid, spectrum);
}

// Minimal static scatter plot, one circle per point.
std::string scatter_svg(const std::vector<std::pair<double, double>>& points,
                        const std::string& x_label, const std::string& y_label) {
    constexpr double w = 640, h = 480, margin = 60;
    double xmin = 0, xmax = 1, ymin = 0, ymax = 0;
    for (auto [x, y] : points) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    auto sx = [&](double x) { return margin + (x - xmin) / (xmax - xmin) * (w - 2 * margin); };
    auto sy = [&](double y) { return h - margin - (y - ymin) / (ymax - ymin) * (h - 2 * margin); };
    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(static_cast<int>(w)) + "\" height=\"" +
                      std::to_string(static_cast<int>(h)) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    auto line = [&](double x1, double y1, double x2, double y2) {
        svg += "<line x1=\"" + format_double(x1) + "\" y1=\"" + format_double(y1) + "\" x2=\"" +
               format_double(x2) + "\" y2=\"" + format_double(y2) +
               "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    };
    line(margin, h - margin, w - margin, h - margin);
    line(margin, margin, margin, h - margin);
    svg += "<text x=\"" + format_double(w / 2) + "\" y=\"" + format_double(h - margin / 3) +
           "\" text-anchor=\"middle\" font-size=\"14\">" + x_label + "</text>\n";
    svg += "<text x=\"" + format_double(margin / 3) + "\" y=\"" + format_double(h / 2) +
           "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 " +
           format_double(margin / 3) + " " + format_double(h / 2) + ")\">" + y_label +
           "</text>\n";
    for (auto [x, y] : points)
        svg += "<circle cx=\"" + format_double(sx(x)) + "\" cy=\"" + format_double(sy(y)) +
               "\" r=\"3\" fill=\"steelblue\" fill-opacity=\"0.7\"/>\n";
    svg += "</svg>\n";
    return svg;
}

} // namespace

void cmd_logic_gates(const RunConfig& cfg) {
    ensure_out_dir(cfg);
    Table table;
    table.header = {"gate", "micro_mi", "macro_mi", "micro_bsyn", "macro_bsyn"};
    for (GateKind kind : {GateKind::And, GateKind::Or, GateKind::Xor}) {
        GateCircuitPair pair = build_gate_pair(kind);
        json per_gate = json::object();
        per_gate["gate"] = to_string(kind);
        double mi[2] = {0, 0}, bias[2] = {0, 0};
        int i = 0;
        for (const BoolNetwork* net : {&pair.micro, &pair.macro}) {
            Tpm t = network_to_tpm(*net, uniform_exo_policy(*net));
            StateDistribution input = induced_past_distribution(*net, uniform_exo_policy(*net));
            PIDResult pid = temporal_pid(t, input);
            PISpectrum spectrum = spectrum_and_bias(pid);
            mi[i] = pid.total_mi;
            bias[i] = spectrum.b_syn;
            per_gate[i == 0 ? "micro" : "macro"] = pid_result_to_json(pid, spectrum);
            ++i;
        }
        table.rows.push_back({to_string(kind), mi[0], mi[1], bias[0], bias[1]});
        save_json(cfg.out_dir / ("spectrum_" + to_string(kind) + ".json"), per_gate);
    }
    table.write(cfg.out_dir / "logic_gates", cfg.format);
}

void cmd_expansion(const RunConfig& cfg) {
    if (!cfg.seed) throw ValidationError("expansion: --seed is required");
    if (cfg.n_systems < 2) throw ValidationError("expansion: need at least 2 systems");
    ensure_out_dir(cfg);

    EnsembleSpec spec{cfg.kind, cfg.n_systems, *cfg.seed, 3};
    ExpansionTable result =
        run_expansion_experiment(spec, cfg.levels, cfg.split_element, cfg.threads);

    const std::string kind = to_string(cfg.kind);
    Table table;
    table.header = {"system_id", "kind",       "macro_bsyn", "meso_bsyn",
                    "micro_bsyn", "mi_bits", "gain"};
    json skipped = json::array();
    std::vector<double> macro, gains;
    int positive = 0;
    for (const ExpansionRow& row : result.rows) {
        if (row.skipped) {
            skipped.push_back(json{{"system_id", row.system_id}, {"reason", row.skip_reason}});
            continue;
        }
        table.rows.push_back({row.system_id, kind, row.macro_bsyn, row.meso_bsyn,
                              row.micro_bsyn, row.mi_macro, row.gain});
        macro.push_back(row.macro_bsyn);
        gains.push_back(row.gain);
        if (row.gain > 0) ++positive;
    }
    if (macro.empty())
        throw ValidationError("expansion: every system was skipped (no defined bias)");
    table.write(cfg.out_dir / ("expansion_" + kind), cfg.format);

    Table scatter;
    scatter.header = {"macro_bsyn", "gain"};
    std::vector<std::pair<double, double>> points;
    for (std::size_t i = 0; i < macro.size(); ++i) {
        scatter.rows.push_back({macro[i], gains[i]});
        points.emplace_back(macro[i], gains[i]);
    }
    scatter.write(cfg.out_dir / ("scatter_" + kind), cfg.format);
    if (cfg.svg)
        write_text(cfg.out_dir / ("scatter_" + kind + ".svg"),
                   scatter_svg(points, "macro synergy bias", "bias gain (macro - micro)"));

    json summary;
    summary["kind"] = kind;
    summary["seed"] = *cfg.seed;
    summary["levels"] = cfg.levels;
    summary["split_element"] = cfg.split_element;
    summary["n_systems"] = cfg.n_systems;
    summary["n_analyzed"] = macro.size();
    summary["n_skipped"] = skipped.size();
    summary["skipped"] = std::move(skipped);
    summary["positive_gain_fraction"] =
        static_cast<double>(positive) / static_cast<double>(macro.size());
    // Gain is reported under both sign conventions; the correlation is
    // against the macro-minus-micro gain.
    summary["gain_convention"] = "macro_minus_micro";
    double mean_gain = 0;
    for (double g : gains) mean_gain += g;
    mean_gain /= static_cast<double>(gains.size());
    summary["mean_gain_macro_minus_micro"] = mean_gain;
    summary["mean_gain_micro_minus_macro"] = -mean_gain;
    try {
        PearsonResult corr = pearson(macro, gains);
        summary["rho"] = corr.rho;
        summary["p_value"] = corr.p_value;
    } catch (const ValidationError&) {
        summary["rho"] = nullptr;
        summary["p_value"] = nullptr;
    }
    save_json(cfg.out_dir / ("summary_" + kind + ".json"), summary);
}

void cmd_ei_scan(const RunConfig& cfg) {
    ensure_out_dir(cfg);
    Tpm micro = load_tpm(cfg.tpm_file);
    StatePartition partition = load_partition(cfg.partition_file);
    StochasticMatrix macro = coarse_grain_tpm(micro.matrix(), partition);
    EIReport micro_report = effective_information(micro);
    EIReport macro_report = effective_information(macro);
    json out;
    out["micro"] = ei_report_to_json(micro_report);
    out["macro"] = ei_report_to_json(macro_report);
    out["delta"] = json{{"ei", macro_report.ei - micro_report.ei},
                        {"determinism", macro_report.determinism - micro_report.determinism},
                        {"degeneracy", macro_report.degeneracy - micro_report.degeneracy}};
    out["n_micro_states"] = micro.side();
    out["n_macro_states"] = macro.side();
    save_json(cfg.out_dir / "ei_scan.json", out);
}

void cmd_pid(const RunConfig& cfg) {
    ensure_out_dir(cfg);
    Tpm t = load_tpm(cfg.tpm_file);
    StateDistribution input = [&] {
        if (cfg.input_spec == "stationary") return stationary_distribution(t);
        if (cfg.input_spec == "maxent") return StateDistribution::uniform(t.n_elements());
        return distribution_from_json(load_json(cfg.input_spec));
    }();
    save_json(cfg.out_dir / "pid.json", spectrum_json(t, input));
}

} // namespace infoconv
