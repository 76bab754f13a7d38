#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ioncav/experiments.hpp"

namespace ioncav::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitNumerical = 4;

/// Malformed or unknown configuration input (exit 2).
class ConfigError : public Error {
public:
    using Error::Error;
};

struct IniEntry {
    std::string key;
    std::string value;
    int line = 0;
};

struct IniSection {
    std::string name;
    int line = 0;
    std::vector<IniEntry> entries;

    const IniEntry* find(std::string_view key) const;
    /// Replaces the value of key, appending it when absent.
    void set(const std::string& key, const std::string& value);
};

/// Grammar: blank lines; comments starting with '#' or ';'; "[name]"
/// headers; "key = value" lines inside a section. Keys and section names are
/// case-sensitive and may not repeat.
struct IniDocument {
    std::vector<IniSection> sections;

    const IniSection* find(std::string_view name) const;
    IniSection& get_or_add(const std::string& name);
    /// Canonical text that parses back to the same document.
    std::string to_text() const;
};

IniDocument parse_ini(std::string_view text);
IniDocument load_ini(const std::filesystem::path& path);

/// Command-line values that take precedence over the file.
struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> traj;
    std::optional<std::string> emit;
};

enum class Command { Simulate, Sweep, Scaling };
std::string to_string(Command c);

struct RunConfig {
    Command command = Command::Simulate;
    IniDocument document;                 // with overrides folded in
    std::vector<Scenario> scenarios;      // simulate
    std::optional<SweepSpec> sweep;       // sweep
    std::vector<double> scaling_grid;     // scaling
    ModelParams scaling_params;
    bool emit_csv = true;
    bool emit_plot = false;
    /// Plot flavour: concurrence, populations or coherence.
    std::string plot = "concurrence";
};

/// Folds overrides into the document and builds a validated config. Throws
/// ConfigError for unknown sections or keys and unparsable values,
/// ValidationError for out-of-domain values.
RunConfig build_run_config(IniDocument doc, Command command, const Overrides& overrides);

/// Executes the run and writes its files into out_dir. Returns the written
/// file names.
std::vector<std::string> execute(const RunConfig& config, const std::filesystem::path& out_dir);

/// Entry point of the ioncav tool.
int run(int argc, char** argv);

}  // namespace ioncav::cli
