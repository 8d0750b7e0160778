#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "ramanoam/cli/config.hpp"

namespace ramanoam::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitValidation = 2;

// Each command writes into `out_dir` (created if needed) and reports on `log`.
// Exceptions escape; run_cli maps them to exit codes.
int cmd_comb(const RunConfig& cfg, const std::filesystem::path& out_dir, std::ostream& log);
int cmd_figure3(const RunConfig& cfg, const std::filesystem::path& out_dir, std::ostream& log);
int cmd_pulse(const RunConfig& cfg, const std::filesystem::path& out_dir, std::ostream& log);
// hint: "auto", "+x", "-x", "+y" or "-y". Writes analysis.csv when out_dir is set.
int cmd_analyze(const std::filesystem::path& image, const std::string& hint,
                const std::optional<std::filesystem::path>& out_dir, std::ostream& log);

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ramanoam::cli
