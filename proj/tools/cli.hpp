#pragma once

// Command-line front end: series, coverage, verify, az, example.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace froberg::cli {

enum ExitCode : int {
    kOk = 0,
    kProvenMismatch = 1,
    kUsage = 2,
    kResource = 3,
};

enum class OutputFormat { Table, Json, Csv };

struct RunConfig {
    std::string command;
    std::uint32_t n = 0;
    std::uint32_t d = 0;
    std::uint64_t z = 0;
    std::uint32_t k = 1;
    std::optional<std::uint32_t> r;
    std::optional<std::uint32_t> D;
    std::optional<std::uint64_t> z_max;
    std::optional<std::uint32_t> sweep;
    std::string form_class = "dense";
    std::uint64_t prime = 2147483647;
    std::uint64_t seed = 1;
    std::uint32_t trials = 3;
    unsigned threads = 1;
    OutputFormat format = OutputFormat::Table;
    std::string out_path;  // empty: standard output
};

/// Parses `args` (without the program name) and runs the command. Report
/// output goes to `out` (or --out), diagnostics to `err`. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes an already validated configuration.
int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace froberg::cli
