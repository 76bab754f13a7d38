#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "ioncav/cli.hpp"

namespace ioncav::cli {

/// Schema check (monotone key, finite values, equal lengths) then CSV.
void write_table(const std::filesystem::path& path, const TimeSeriesTable& table);

/// Long format: <axis>, t_us, then every column of each run.
void write_surface(const std::filesystem::path& path, const SweepResult& result);

std::string plot_script_simulate(const std::vector<std::string>& csv_files, const std::string& kind);
std::string plot_script_sweep(const std::string& axis, const std::string& kind);
std::string plot_script_scaling();

nlohmann::json effective_json(const EffectiveParams& e, const ModelParams& p);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace ioncav::cli
