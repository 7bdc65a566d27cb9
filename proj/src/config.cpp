#include "rabi/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <string_view>

#include "rabi/dynamics.hpp"
#include "rabi/errors.hpp"

namespace rabi {

using nlohmann::json;

namespace {

void require_object(const json& j, std::string_view where) {
    if (!j.is_object()) throw ConfigError(std::string(where) + ": expected an object");
}

void reject_unknown(const json& j, std::string_view where, std::initializer_list<std::string_view> keys) {
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (auto k : keys) known = known || key == k;
        if (!known) throw ConfigError(std::string(where) + ": unknown key '" + key + "'");
    }
}

double get_number(const json& j, std::string_view where) {
    if (!j.is_number()) throw ConfigError(std::string(where) + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ConfigError(std::string(where) + ": must be finite");
    return v;
}

std::size_t get_count(const json& j, std::string_view where) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw ConfigError(std::string(where) + ": expected a non-negative integer");
    return j.get<std::size_t>();
}

bool get_bool(const json& j, std::string_view where) {
    if (!j.is_boolean()) throw ConfigError(std::string(where) + ": expected true or false");
    return j.get<bool>();
}

std::string get_string(const json& j, std::string_view where) {
    if (!j.is_string()) throw ConfigError(std::string(where) + ": expected a string");
    return j.get<std::string>();
}

template <typename F>
void with(const json& j, const char* key, F&& f) {
    if (auto it = j.find(key); it != j.end()) f(*it);
}

void parse_model(const json& j, ModelParams& m) {
    require_object(j, "model");
    reject_unknown(j, "model", {"ratio_r", "beta", "kappa0", "alpha_sq", "kappa_convention"});
    with(j, "ratio_r", [&](const json& v) { m.ratio_r = get_number(v, "model.ratio_r"); });
    with(j, "beta", [&](const json& v) { m.beta = get_number(v, "model.beta"); });
    with(j, "kappa0", [&](const json& v) { m.kappa0 = get_number(v, "model.kappa0"); });
    with(j, "alpha_sq", [&](const json& v) { m.alpha_sq = get_number(v, "model.alpha_sq"); });
    with(j, "kappa_convention", [&](const json& v) {
        m.kappa_convention = kappa_convention_from_string(get_string(v, "model.kappa_convention"));
    });
    if (m.alpha_sq < 0.0) throw ConfigError("model.alpha_sq must be non-negative");
}

void parse_time(const json& j, TimeGridConfig& t) {
    require_object(j, "time");
    reject_unknown(j, "time", {"start", "stop", "points", "values"});
    with(j, "start", [&](const json& v) { t.start = get_number(v, "time.start"); });
    with(j, "stop", [&](const json& v) { t.stop = get_number(v, "time.stop"); });
    with(j, "points", [&](const json& v) { t.points = get_count(v, "time.points"); });
    with(j, "values", [&](const json& v) {
        if (!v.is_array()) throw ConfigError("time.values: expected an array");
        t.values.clear();
        for (const auto& x : v) t.values.push_back(get_number(x, "time.values[]"));
    });
    try {
        (void)t.grid();
    } catch (const DomainError& e) {
        throw ConfigError(std::string("time: ") + e.what());
    }
}

void parse_oracle(const json& j, OracleConfig& o) {
    require_object(j, "oracle");
    reject_unknown(j, "oracle",
                   {"n_max", "variant", "max_dimension", "initial", "fock_n", "auto_cutoff"});
    with(j, "n_max", [&](const json& v) { o.ed.n_max = static_cast<unsigned>(get_count(v, "oracle.n_max")); });
    with(j, "variant", [&](const json& v) {
        o.ed.variant = hamiltonian_variant_from_string(get_string(v, "oracle.variant"));
    });
    with(j, "max_dimension",
         [&](const json& v) { o.ed.max_dimension = get_count(v, "oracle.max_dimension"); });
    with(j, "initial", [&](const json& v) {
        const std::string s = get_string(v, "oracle.initial");
        if (s == "bell10_coherent")
            o.initial.kind = InitialState::Kind::Bell10Coherent;
        else if (s == "singlet00_fock")
            o.initial.kind = InitialState::Kind::Singlet00Fock;
        else
            throw ConfigError("oracle.initial: expected bell10_coherent or singlet00_fock");
    });
    with(j, "fock_n", [&](const json& v) { o.initial.fock_n = static_cast<unsigned>(get_count(v, "oracle.fock_n")); });
    with(j, "auto_cutoff", [&](const json& v) { o.auto_cutoff = get_bool(v, "oracle.auto_cutoff"); });
}

void parse_scan(const json& j, ScanConfig& s) {
    require_object(j, "scan");
    reject_unknown(j, "scan", {"ranges", "horizon", "time_points", "max_grid", "refine"});
    with(j, "ranges", [&](const json& v) {
        if (!v.is_array()) throw ConfigError("scan.ranges: expected an array");
        s.ranges.clear();
        for (const auto& r : v) {
            require_object(r, "scan.ranges[]");
            reject_unknown(r, "scan.ranges[]", {"axis", "min", "max", "steps"});
            if (!r.contains("axis") || !r.contains("min") || !r.contains("max") || !r.contains("steps"))
                throw ConfigError("scan.ranges[]: axis, min, max and steps are required");
            AxisRange range;
            range.min = get_number(r["min"], "scan.ranges[].min");
            range.max = get_number(r["max"], "scan.ranges[].max");
            range.steps = static_cast<unsigned>(get_count(r["steps"], "scan.ranges[].steps"));
            s.ranges.emplace_back(scan_axis_from_string(get_string(r["axis"], "scan.ranges[].axis")), range);
        }
    });
    with(j, "horizon", [&](const json& v) { s.horizon = get_number(v, "scan.horizon"); });
    with(j, "time_points", [&](const json& v) { s.time_points = get_count(v, "scan.time_points"); });
    with(j, "max_grid", [&](const json& v) { s.max_grid = get_count(v, "scan.max_grid"); });
    with(j, "refine", [&](const json& v) {
        require_object(v, "scan.refine");
        reject_unknown(v, "scan.refine", {"enabled", "max_iters", "ftol", "step_scales"});
        with(v, "enabled", [&](const json& x) { s.refine = get_bool(x, "scan.refine.enabled"); });
        with(v, "max_iters", [&](const json& x) {
            s.refine_options.max_iters = static_cast<unsigned>(get_count(x, "scan.refine.max_iters"));
        });
        with(v, "ftol", [&](const json& x) { s.refine_options.ftol = get_number(x, "scan.refine.ftol"); });
        with(v, "step_scales", [&](const json& x) {
            if (!x.is_array()) throw ConfigError("scan.refine.step_scales: expected an array");
            s.refine_options.step_scales.clear();
            for (const auto& e : x)
                s.refine_options.step_scales.push_back(get_number(e, "scan.refine.step_scales[]"));
        });
    });
}

}  // namespace

std::vector<double> TimeGridConfig::grid() const {
    if (!values.empty()) {
        validate_times(values);
        return values;
    }
    return uniform_grid(start, stop, points);
}

RunConfig RunConfig::from_json(const json& j) {
    require_object(j, "config");
    reject_unknown(j, "config", {"description", "model", "time", "tail_tol", "spectrum", "oracle",
                                 "jc", "scan", "output"});
    RunConfig c;
    with(j, "description", [&](const json& v) { c.description = get_string(v, "description"); });
    with(j, "model", [&](const json& v) { parse_model(v, c.model); });
    with(j, "time", [&](const json& v) { parse_time(v, c.time); });
    with(j, "tail_tol", [&](const json& v) {
        c.tail_tol = get_number(v, "tail_tol");
        if (!(c.tail_tol > 0.0 && c.tail_tol <= 1e-6)) throw ConfigError("tail_tol must lie in (0, 1e-6]");
    });
    with(j, "spectrum", [&](const json& v) {
        require_object(v, "spectrum");
        reject_unknown(v, "spectrum", {"n_min", "n_max"});
        with(v, "n_min", [&](const json& x) { c.spectrum.n_min = static_cast<unsigned>(get_count(x, "spectrum.n_min")); });
        with(v, "n_max", [&](const json& x) { c.spectrum.n_max = static_cast<unsigned>(get_count(x, "spectrum.n_max")); });
        if (c.spectrum.n_max < c.spectrum.n_min) throw ConfigError("spectrum: n_max < n_min");
    });
    with(j, "oracle", [&](const json& v) { parse_oracle(v, c.oracle); });
    with(j, "jc", [&](const json& v) {
        require_object(v, "jc");
        reject_unknown(v, "jc", {"delta", "g", "alpha_sq", "corrected"});
        with(v, "delta", [&](const json& x) { c.jc.delta = get_number(x, "jc.delta"); });
        with(v, "g", [&](const json& x) { c.jc.g = get_number(x, "jc.g"); });
        with(v, "alpha_sq", [&](const json& x) { c.jc.alpha_sq = get_number(x, "jc.alpha_sq"); });
        with(v, "corrected", [&](const json& x) { c.jc.corrected = get_bool(x, "jc.corrected"); });
        if (!(c.jc.g > 0.0)) throw ConfigError("jc.g must be positive");
        if (c.jc.alpha_sq < 0.0) throw ConfigError("jc.alpha_sq must be non-negative");
    });
    with(j, "scan", [&](const json& v) { parse_scan(v, c.scan); });
    with(j, "output", [&](const json& v) { c.output = get_string(v, "output"); });
    return c;
}

json RunConfig::to_json() const {
    json j;
    j["description"] = description;
    j["model"] = {{"ratio_r", model.ratio_r},
                  {"beta", model.beta},
                  {"kappa0", model.kappa0},
                  {"alpha_sq", model.alpha_sq},
                  {"kappa_convention", std::string(to_string(model.kappa_convention))}};
    if (time.values.empty())
        j["time"] = {{"start", time.start}, {"stop", time.stop}, {"points", time.points}};
    else
        j["time"] = {{"values", time.values}};
    j["tail_tol"] = tail_tol;
    j["spectrum"] = {{"n_min", spectrum.n_min}, {"n_max", spectrum.n_max}};
    j["oracle"] = {{"n_max", oracle.ed.n_max},
                   {"variant", std::string(to_string(oracle.ed.variant))},
                   {"max_dimension", oracle.ed.max_dimension},
                   {"initial", oracle.initial.kind == InitialState::Kind::Bell10Coherent
                                   ? "bell10_coherent"
                                   : "singlet00_fock"},
                   {"fock_n", oracle.initial.fock_n},
                   {"auto_cutoff", oracle.auto_cutoff}};
    j["jc"] = {{"delta", jc.delta}, {"g", jc.g}, {"alpha_sq", jc.alpha_sq}, {"corrected", jc.corrected}};
    json ranges = json::array();
    for (const auto& [axis, r] : scan.ranges)
        ranges.push_back({{"axis", std::string(to_string(axis))}, {"min", r.min}, {"max", r.max}, {"steps", r.steps}});
    j["scan"] = {{"ranges", ranges},
                 {"horizon", scan.horizon},
                 {"time_points", scan.time_points},
                 {"max_grid", scan.max_grid},
                 {"refine",
                  {{"enabled", scan.refine},
                   {"max_iters", scan.refine_options.max_iters},
                   {"ftol", scan.refine_options.ftol},
                   {"step_scales", scan.refine_options.step_scales}}}};
    j["output"] = output;
    return j;
}

ScanSpec RunConfig::scan_spec() const {
    ScanSpec spec;
    spec.fixed = model;
    spec.ranges = scan.ranges;
    spec.horizon = scan.horizon;
    spec.time_points = scan.time_points;
    spec.tail_tol = tail_tol;
    spec.max_grid = scan.max_grid;
    return spec;
}

json read_config_document(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config file '" + path.string() + "': " + e.what());
    }
    if (doc.is_object() && doc.contains("software") && doc.contains("config")) return doc["config"];
    return doc;
}

std::filesystem::path preset_path(const std::filesystem::path& preset_dir, int fig, int panel) {
    return preset_dir / ("fig" + std::to_string(fig) + "_panel" + std::to_string(panel) + ".json");
}

}  // namespace rabi
