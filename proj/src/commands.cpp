#include "rabi/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fmt/format.h>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rabi/aa_spectrum.hpp"
#include "rabi/dynamics.hpp"
#include "rabi/ed_oracle.hpp"
#include "rabi/errors.hpp"
#include "rabi/scan.hpp"

#ifndef RABI_VERSION
#define RABI_VERSION "0.0.0"
#endif
#ifndef RABI_PRESET_DIR
#define RABI_PRESET_DIR "presets"
#endif

namespace rabi::cli {

using nlohmann::json;

std::string_view software_version() { return RABI_VERSION; }

std::string format_number(double x) { return fmt::format("{:.17g}", x); }

namespace {

std::string series_csv(const TimeSeries& series, const std::vector<std::string>& header,
                       const std::vector<const std::vector<double>*>& columns) {
    std::string out = "t";
    for (const auto& h : header) out += "," + h;
    out += "\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        out += format_number(series.times()[i]);
        for (const auto* col : columns) out += "," + format_number((*col)[i]);
        out += "\n";
    }
    return out;
}

void flag_detuning(const ModelParams& p, CommandOutput& out) {
    if (!p.large_detuning())
        out.warnings.push_back("ratio_r = " + format_number(p.ratio_r) +
                               " lies outside (0, 1); the adiabatic approximation assumes large detuning");
}

double max_of(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }
double min_of(const std::vector<double>& v) { return *std::min_element(v.begin(), v.end()); }

json point_json(const std::vector<ScanAxis>& axes, const ScanPoint& p) {
    json j = json::object();
    for (std::size_t i = 0; i < axes.size(); ++i) j[std::string(to_string(axes[i]))] = p.coords[i];
    j["objective"] = p.objective;
    return j;
}

}  // namespace

CommandOutput run_spectrum(const RunConfig& config) {
    CommandOutput out;
    flag_detuning(config.model, out);
    const auto rows = aa_rows(config.spectrum.n_min, config.spectrum.n_max, config.model);
    out.csv = "N,omega1N,omega2N,t0tilde,e0,eplus,eminus,weight,rabi_freq\n";
    unsigned degenerate = 0, no_mixing = 0;
    for (const auto& r : rows) {
        out.csv += fmt::format("{},{},{},{},{},{},{},{},{}\n", r.n, format_number(r.omega1N),
                               format_number(r.omega2N), format_number(r.t0tilde), format_number(r.e0),
                               format_number(r.eplus), format_number(r.eminus),
                               format_number(r.weight), format_number(r.rabi_freq));
        degenerate += r.degenerate;
        no_mixing += !r.has_mixing();
    }
    out.results["rows"] = rows.size();
    out.results["effective_kappa"] = effective_kappa(config.model);
    out.results["rows_without_mixing"] = no_mixing;
    out.results["degenerate_rows"] = degenerate;
    return out;
}

CommandOutput run_tprob(const RunConfig& config) {
    CommandOutput out;
    flag_detuning(config.model, out);
    const std::vector<double> times = config.time.grid();
    const TimeSeries t = transition_prob(config.model, times, config.tail_tol);
    const auto& tv = t.channel("T");
    std::vector<double> stay(tv.size());
    std::transform(tv.begin(), tv.end(), stay.begin(), [](double x) { return 1.0 - 2.0 * x; });
    out.csv = series_csv(t, {"T", "P_stay"}, {&tv, &stay});
    const LogWeightTable table = poisson_logweights(config.model.alpha_sq, config.tail_tol);
    out.results["max_T"] = max_of(tv);
    out.results["min_P_stay"] = min_of(stay);
    out.results["effective_kappa"] = effective_kappa(config.model);
    out.results["poisson_terms"] = table.size();
    out.results["poisson_mass"] = table.mass();
    return out;
}

CommandOutput run_oracle(const RunConfig& config) {
    CommandOutput out;
    flag_detuning(config.model, out);
    EDConfig ed = config.oracle.ed;
    if (config.oracle.auto_cutoff) ed.n_max = std::max(ed.n_max, EDConfig::min_cutoff(config.model.alpha_sq));
    const std::vector<double> times = config.time.grid();
    const EDResult r = evolve(config.model, ed, times, config.oracle.initial);

    const auto& p11 = r.populations.channel("P11");
    const auto& p1m1 = r.populations.channel("P1m1");
    const auto& p10 = r.populations.channel("P10");
    const auto& p00 = r.populations.channel("P00");
    const auto& c = r.concurrence.channel("C");
    out.csv = series_csv(r.populations, {"P11", "P1m1", "P10", "P00", "C"}, {&p11, &p1m1, &p10, &p00, &c});

    double unitarity = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i)
        unitarity = std::max(unitarity, std::abs(p11[i] + p1m1[i] + p10[i] + p00[i] - 1.0));
    out.results["n_max"] = ed.n_max;
    out.results["dimension"] = ed.dimension();
    out.results["truncation_error"] = r.truncation_error;
    out.results["max_population_sum_error"] = unitarity;
    out.results["min_concurrence"] = min_of(c);
    out.results["max_P11"] = max_of(p11);
    out.results["ground_energy"] = r.eigenvalues.front();
    if (r.truncation_warning)
        out.warnings.push_back("truncation error " + format_number(r.truncation_error) +
                               " exceeds 1e-6; increase oracle.n_max");
    return out;
}

CommandOutput run_jc(const RunConfig& config) {
    CommandOutput out;
    const std::vector<double> times = config.time.grid();
    const TimeSeries w =
        jc_inversion(config.jc.delta, config.jc.g, config.jc.alpha_sq, times, config.tail_tol, config.jc.corrected);
    out.csv = series_csv(w, {"W"}, {&w.channel("W")});
    out.results["W0"] = w.channel("W").front();
    out.results["revival_estimate_t"] = 2.0 * 3.14159265358979323846 * std::sqrt(config.jc.alpha_sq) / config.jc.g;
    return out;
}

CommandOutput run_scan(const RunConfig& config) {
    CommandOutput out;
    const ScanSpec spec = config.scan_spec();
    const ScanResult grid = grid_scan(spec);

    std::string header;
    for (auto a : grid.axes) header += std::string(to_string(a)) + ",";
    out.csv = header + "objective\n";
    for (const auto& p : grid.grid) {
        for (double x : p.coords) out.csv += format_number(x) + ",";
        out.csv += format_number(p.objective) + "\n";
    }
    out.results["grid_points"] = grid.grid.size();
    out.results["grid_best"] = point_json(grid.axes, grid.best);
    if (config.scan.refine && !grid.axes.empty()) {
        const ScanResult refined = refine(spec, grid.best.coords, config.scan.refine_options);
        json trace = json::array();
        for (const auto& p : refined.trace) trace.push_back(point_json(refined.axes, p));
        out.results["refine"] = {{"best", point_json(refined.axes, refined.best)},
                                 {"trace", trace},
                                 {"converged", refined.converged},
                                 {"iterations", refined.iterations},
                                 {"evaluations", refined.evaluations}};
        out.results["best"] = point_json(refined.axes, refined.best);
        if (!refined.converged)
            out.warnings.push_back("refinement stopped at max_iters before reaching ftol");
    } else {
        out.results["best"] = point_json(grid.axes, grid.best);
    }
    return out;
}

CommandOutput run_command(std::string_view command, const RunConfig& config) {
    if (command == "spectrum") return run_spectrum(config);
    if (command == "tprob") return run_tprob(config);
    if (command == "oracle") return run_oracle(config);
    if (command == "jc") return run_jc(config);
    if (command == "scan") return run_scan(config);
    throw ConfigError("unknown command '" + std::string(command) + "'");
}

json make_sidecar(std::string_view command, const RunConfig& config, const CommandOutput& out) {
    return {{"software", {{"name", "rabi-ent"}, {"version", std::string(software_version())}}},
            {"command", std::string(command)},
            {"config", config.to_json()},
            {"results", out.results},
            {"warnings", out.warnings}};
}

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path) {
    std::filesystem::path p = csv_path;
    return p.replace_extension(".json");
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write '" + tmp.string() + "'");
        f << content;
        f.flush();
        if (!f) throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

int run_cli(int argc, char** argv) {
    CLI::App app{"Two-qubit Rabi model: adiabatic spectrum, transition probability, exact oracle, scans",
                 "rabi-ent"};
    std::string command;
    std::string config_file;
    std::string out_path;
    std::string preset_dir;
    int fig = 0;
    int panel = 1;
    app.add_option("command", command, "spectrum | tprob | oracle | jc | scan")
        ->required()
        ->check(CLI::IsMember({"spectrum", "tprob", "oracle", "jc", "scan"}));
    app.add_option("--config", config_file, "JSON run configuration (or a result sidecar)");
    app.add_option("--fig", fig, "Figure preset number");
    app.add_option("--panel", panel, "Panel within the figure preset");
    app.add_option("--out", out_path, "Output CSV path (sidecar written next to it)");
    app.add_option("--preset-dir", preset_dir, "Directory holding figure presets");
    app.set_version_flag("--version", std::string(software_version()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kConfigError;
    }

    try {
        json doc = json::object();
        if (fig != 0) {
            if (preset_dir.empty()) {
                const char* env = std::getenv("RABI_PRESET_DIR");
                preset_dir = env ? env : RABI_PRESET_DIR;
            }
            doc = read_config_document(preset_path(preset_dir, fig, panel));
        }
        if (!config_file.empty()) doc.merge_patch(read_config_document(config_file));
        RunConfig config = RunConfig::from_json(doc);
        if (!out_path.empty()) config.output = out_path;
        if (config.output.empty()) config.output = command + ".csv";

        const CommandOutput out = run_command(command, config);
        const std::filesystem::path csv = config.output;
        write_atomic(csv, out.csv);
        write_atomic(sidecar_path(csv), make_sidecar(command, config, out).dump(2) + "\n");
        for (const auto& w : out.warnings) std::cerr << "warning: " << w << "\n";
        std::cout << "wrote " << csv.string() << " and " << sidecar_path(csv).string() << "\n";
        return kOk;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kCapacityError;
    } catch (const DomainError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kNumericError;
    } catch (const ConvergenceError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kNumericError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace rabi::cli
