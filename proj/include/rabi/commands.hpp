#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rabi/config.hpp"

namespace rabi::cli {

enum ExitCode : int { kOk = 0, kConfigError = 2, kNumericError = 3, kCapacityError = 4 };

std::string_view software_version();

// Fixed 17-significant-digit decimal, round-trip exact for doubles.
std::string format_number(double x);

struct CommandOutput {
    std::string csv;
    nlohmann::json results = nlohmann::json::object();
    std::vector<std::string> warnings;
};

CommandOutput run_spectrum(const RunConfig& config);
CommandOutput run_tprob(const RunConfig& config);
CommandOutput run_oracle(const RunConfig& config);
CommandOutput run_jc(const RunConfig& config);
CommandOutput run_scan(const RunConfig& config);

// Dispatches on "spectrum", "tprob", "oracle", "jc" or "scan".
CommandOutput run_command(std::string_view command, const RunConfig& config);

// Sidecar document: software identity, command, resolved config, result summary.
nlohmann::json make_sidecar(std::string_view command, const RunConfig& config,
                            const CommandOutput& out);

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path);

// Writes via a temporary file in the same directory followed by rename.
void write_atomic(const std::filesystem::path& path, const std::string& content);

// Full driver used by the rabi-ent executable. Returns the process exit code.
int run_cli(int argc, char** argv);

}  // namespace rabi::cli
