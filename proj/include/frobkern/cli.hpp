#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace frobkern::cli {

enum class OutputFormat { json, csv, markdown, plain };

OutputFormat format_from_string(const std::string& s);
std::string to_string(OutputFormat f);

struct CliConfig {
    OutputFormat output_format = OutputFormat::plain;
    bool oracle_force = false;
    bool memo_shared = false;
    std::optional<std::string> config_file;

    /// Keys: output_format, oracle_force, memo_shared. Unknown keys are rejected.
    void merge_json(const nlohmann::json& j);
};

enum ExitStatus : int {
    kOk = 0,
    kInternalError = 1,
    kUsageError = 2,
    kRefused = 3,
};

/// Environment variable naming the default config file.
inline constexpr const char* kConfigEnvVar = "FROBKERN_CONFIG";

/// Runs one command line (without the program name).
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace frobkern::cli
