#pragma once

// Run configuration for the rabi-ent driver. JSON documents are validated
// against a fixed schema before any computation; unknown keys are rejected.
// See README.md for the schema.

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "rabi/ed_oracle.hpp"
#include "rabi/model.hpp"
#include "rabi/scan.hpp"
#include "rabi/special.hpp"

namespace rabi {

struct TimeGridConfig {
    double start = 0.0;
    double stop = 1000.0;
    std::size_t points = 2000;
    std::vector<double> values;  // explicit grid; overrides start/stop/points when non-empty

    std::vector<double> grid() const;
};

struct SpectrumConfig {
    unsigned n_min = 0;
    unsigned n_max = 200;
};

struct OracleConfig {
    EDConfig ed;
    InitialState initial;
    bool auto_cutoff = false;  // raise n_max to the minimum cutoff for alpha_sq
};

struct JcConfig {
    double delta = 0.0;
    double g = 1.0;
    double alpha_sq = 16.0;
    bool corrected = true;
};

struct ScanConfig {
    std::vector<std::pair<ScanAxis, AxisRange>> ranges;
    double horizon = 1000.0;
    std::size_t time_points = 2000;
    std::size_t max_grid = 100'000;
    bool refine = true;
    RefineOptions refine_options;
};

struct RunConfig {
    std::string description;
    ModelParams model;
    TimeGridConfig time;
    double tail_tol = kDefaultTailTol;
    SpectrumConfig spectrum;
    OracleConfig oracle;
    JcConfig jc;
    ScanConfig scan;
    std::string output;  // empty: "<command>.csv" in the working directory

    // Throws ConfigError on unknown keys, wrong types or invalid values.
    static RunConfig from_json(const nlohmann::json& j);
    // Fully resolved document; from_json(to_json()) reproduces the config.
    nlohmann::json to_json() const;

    ScanSpec scan_spec() const;
};

// Parses a config file. A result sidecar written by the driver is accepted
// too: its embedded "config" object is used.
nlohmann::json read_config_document(const std::filesystem::path& path);

std::filesystem::path preset_path(const std::filesystem::path& preset_dir, int fig, int panel);

}  // namespace rabi
