#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "infoconv/boolnet.hpp"
#include "infoconv/effective_info.hpp"
#include "infoconv/ensembles.hpp"
#include "infoconv/errors.hpp"
#include "infoconv/expansion.hpp"
#include "infoconv/lattice.hpp"
#include "infoconv/pid.hpp"
#include "infoconv/stats.hpp"
#include "infoconv/tpm.hpp"

namespace py = pybind11;
using namespace infoconv;

namespace {

std::vector<std::vector<double>> matrix_rows(const StochasticMatrix& m) {
    std::vector<std::vector<double>> rows(m.side());
    for (std::size_t r = 0; r < m.side(); ++r)
        rows[r].assign(m.row(r).begin(), m.row(r).end());
    return rows;
}

py::dict pid_dict(const PIDResult& r) {
    py::dict atoms, redundancy;
    for (std::size_t i = 0; i < r.lattice->size(); ++i) {
        std::string key = r.lattice->atom(i).to_string();
        atoms[py::str(key)] = r.atoms[i];
        redundancy[py::str(key)] = r.redundancy[i];
    }
    py::dict out;
    out["n_sources"] = r.lattice->n_sources();
    out["total_mi"] = r.total_mi;
    out["height"] = r.lattice->height();
    out["atoms"] = atoms;
    out["redundancy"] = redundancy;
    if (r.total_mi > 0.0) {
        PISpectrum s = spectrum_and_bias(r);
        out["layer_mass"] = s.layer_mass;
        out["bsyn"] = s.b_syn;
        out["bred"] = s.b_red;
    } else {
        out["layer_mass"] = py::none();
        out["bsyn"] = py::none();
        out["bred"] = py::none();
    }
    return out;
}

py::dict ei_dict(const EIReport& r) {
    py::dict out;
    out["ei"] = r.ei;
    out["determinism"] = r.determinism;
    out["degeneracy"] = r.degeneracy;
    out["log_n"] = r.log_n;
    out["avg_row_entropy"] = r.avg_row_entropy;
    out["entropy_of_avg_row"] = r.entropy_of_avg_row;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Partial-information decomposition of Boolean-network dynamics across scales";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<UndefinedBiasError>(m, "UndefinedBiasError", PyExc_ValueError);
    py::register_exception<NumericalConsistencyError>(m, "NumericalConsistencyError",
                                                      PyExc_ArithmeticError);

    m.def(
        "entropy",
        [](const std::vector<double>& probs) { return entropy(std::span(probs)); },
        py::arg("probs"), "Shannon entropy in bits of a probability vector.");

    m.def(
        "stationary_distribution",
        [](const std::vector<std::vector<double>>& rows) {
            return stationary_of(StochasticMatrix(rows));
        },
        py::arg("rows"),
        "Stationary distribution of the recurrent class with the most states.");

    m.def(
        "temporal_mutual_information",
        [](const std::vector<std::vector<double>>& rows, const std::vector<double>& input) {
            return temporal_mutual_information(StochasticMatrix(rows), std::span(input))
                .mi_bits;
        },
        py::arg("rows"), py::arg("input"),
        "Mutual information in bits between current and next state.");

    m.def(
        "lattice_atoms",
        [](int n_sources) {
            const PILattice& l = PILattice::for_sources(n_sources);
            std::vector<std::pair<std::string, int>> out;
            out.reserve(l.size());
            for (std::size_t i = 0; i < l.size(); ++i)
                out.emplace_back(l.atom(i).to_string(), l.rank(i));
            return out;
        },
        py::arg("n_sources"), "All lattice atoms with their layer ranks.");

    m.def(
        "lattice_height",
        [](int n_sources) { return PILattice::for_sources(n_sources).height(); },
        py::arg("n_sources"));

    m.def(
        "temporal_pid",
        [](const std::vector<std::vector<double>>& rows,
           const std::optional<std::vector<double>>& input) {
            Tpm t(rows);
            StateDistribution in =
                input ? StateDistribution(*input, t.n_elements()) : stationary_distribution(t);
            return pid_dict(temporal_pid(t, in));
        },
        py::arg("rows"), py::arg("input") = py::none(),
        "Decomposition of the temporal mutual information; input defaults to the "
        "stationary distribution.");

    m.def(
        "decompose_joint",
        [](const std::vector<std::vector<double>>& joint, int n_sources) {
            std::vector<double> p;
            for (const auto& row : joint) p.insert(p.end(), row.begin(), row.end());
            int target_arity = static_cast<int>(joint.empty() ? 0 : joint[0].size());
            return pid_dict(
                decompose(SourcesTarget(std::move(p), std::vector<int>(n_sources, 2),
                                        target_arity)));
        },
        py::arg("joint"), py::arg("n_sources"),
        "Decompose a (source-state x target-state) joint with binary sources.");

    py::enum_<GateKind>(m, "GateKind")
        .value("AND", GateKind::And)
        .value("OR", GateKind::Or)
        .value("XOR", GateKind::Xor);

    m.def(
        "gate_pair_tpms",
        [](const std::string& kind) {
            GateCircuitPair pair = build_gate_pair(gate_kind_from_string(kind));
            py::dict out;
            for (auto [label, net] : {std::pair<const char*, const BoolNetwork*>{
                                          "macro", &pair.macro},
                                      {"micro", &pair.micro}}) {
                StateDistribution exo = uniform_exo_policy(*net);
                py::dict scale;
                scale["tpm"] = matrix_rows(network_to_tpm(*net, exo).matrix());
                scale["input"] = induced_past_distribution(*net, exo).probs();
                out[label] = scale;
            }
            return out;
        },
        py::arg("kind"),
        "Transition matrices and induced input distributions for a gate circuit at both "
        "scales.");

    m.def(
        "expand_node",
        [](const std::vector<std::vector<double>>& rows, int element) {
            ExpansionRecord rec = expand_node(Tpm(rows), element);
            return matrix_rows(rec.child_tpm.matrix());
        },
        py::arg("rows"), py::arg("element"),
        "Bifurcate an element into two children with identical inputs and outputs.");

    m.def(
        "generate_tpm",
        [](const std::string& kind, std::uint64_t seed) {
            std::mt19937_64 rng(seed);
            Tpm t = ensemble_kind_from_string(kind) == EnsembleKind::Gaussian
                        ? generate_gaussian_tpm(rng)
                        : generate_deterministic_tpm(rng);
            return matrix_rows(t.matrix());
        },
        py::arg("kind"), py::arg("seed"), "One seeded 3-element ensemble system.");

    m.def(
        "run_expansion_experiment",
        [](const std::string& kind, int n_systems, std::uint64_t seed, int levels,
           int split_element, int threads) {
            EnsembleSpec spec{ensemble_kind_from_string(kind), n_systems, seed, 3};
            ExpansionTable table =
                run_expansion_experiment(spec, levels, split_element, threads);
            py::list rows;
            for (const ExpansionRow& r : table.rows) {
                py::dict row;
                row["system_id"] = r.system_id;
                row["skipped"] = r.skipped;
                if (r.skipped) {
                    row["skip_reason"] = r.skip_reason;
                } else {
                    row["macro_bsyn"] = r.macro_bsyn;
                    row["meso_bsyn"] =
                        std::isnan(r.meso_bsyn) ? py::object(py::none()) : py::cast(r.meso_bsyn);
                    row["micro_bsyn"] = r.micro_bsyn;
                    row["mi_bits"] = r.mi_macro;
                    row["gain"] = r.gain;
                }
                rows.append(std::move(row));
            }
            return rows;
        },
        py::arg("kind"), py::arg("n_systems"), py::arg("seed"), py::arg("levels") = 2,
        py::arg("split_element") = 0, py::arg("threads") = 1);

    m.def(
        "effective_information",
        [](const std::vector<std::vector<double>>& rows) {
            return ei_dict(effective_information(StochasticMatrix(rows)));
        },
        py::arg("rows"));

    m.def(
        "coarse_grain_tpm",
        [](const std::vector<std::vector<double>>& rows, const std::vector<int>& partition) {
            return matrix_rows(coarse_grain_tpm(StochasticMatrix(rows), partition));
        },
        py::arg("rows"), py::arg("partition"));

    m.def(
        "pearson",
        [](const std::vector<double>& xs, const std::vector<double>& ys) {
            PearsonResult r = pearson(std::span(xs), std::span(ys));
            return std::make_pair(r.rho, r.p_value);
        },
        py::arg("xs"), py::arg("ys"), "Product-moment correlation with a two-sided p-value.");

    m.attr("__version__") = "0.1.0";
}
