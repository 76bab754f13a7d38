#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "outputs.hpp"

#ifndef IONCAV_VERSION
#define IONCAV_VERSION "dev"
#endif

namespace ioncav::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json scenario_json(const Scenario& s, const ScenarioResult& r)
{
    json j;
    j["name"] = s.name;
    j["model"] = to_string(s.model);
    j["engine"] = to_string(s.engine);
    j["initial_state"] = s.initial_state;
    j["resonant"] = s.resonant;
    j["emission"] = s.emission;
    j["t_max_us"] = s.t_max;
    j["n_points"] = s.n_points;
    if (s.engine == EngineKind::MCWF) {
        j["n_traj"] = s.n_traj;
        j["seed"] = s.seed;
    }
    j["effective"] = effective_json(r.effective, s.resolved_params());
    j["t_rabi_us"] = r.t_rabi;
    return j;
}

std::vector<std::string> run_simulate(const RunConfig& cfg, const fs::path& out, json& manifest)
{
    std::vector<std::string> files;
    const bool single = cfg.scenarios.size() == 1;
    json runs = json::array();
    std::vector<std::string> csvs;
    for (const Scenario& s : cfg.scenarios) {
        const ScenarioResult r = run_scenario(s);
        const std::string suffix = single ? "" : "_" + s.name;
        if (cfg.emit_csv) {
            const std::string name = "timeseries" + suffix + ".csv";
            write_table(out / name, r.table);
            files.push_back(name);
            csvs.push_back(name);
            if (r.jumps) {
                const std::string jname = "jumps" + suffix + ".csv";
                write_table(out / jname, r.jumps->table());
                files.push_back(jname);
            }
        }
        for (const std::string& w : r.warnings) manifest["warnings"].push_back(s.name + ": " + w);
        runs.push_back(scenario_json(s, r));
    }
    manifest["scenarios"] = runs;
    if (cfg.emit_plot) {
        write_text(out / "plot.py", plot_script_simulate(csvs, cfg.plot));
        files.push_back("plot.py");
    }
    return files;
}

std::vector<std::string> run_sweep(const RunConfig& cfg, const fs::path& out, json& manifest)
{
    std::vector<std::string> files;
    const SweepResult r = sweep(*cfg.sweep);
    if (cfg.emit_csv) {
        write_surface(out / "surface.csv", r);
        write_table(out / "summary.csv", r.summary_table());
        files.insert(files.end(), {"surface.csv", "summary.csv"});
    }
    json points = json::array();
    for (std::size_t i = 0; i < r.runs.size(); ++i) {
        const Scenario s = cfg.sweep->at(cfg.sweep->grid[i]);
        json p = scenario_json(s, r.runs[i]);
        p["value"] = cfg.sweep->grid[i];
        points.push_back(p);
        for (const std::string& w : r.runs[i].warnings) manifest["warnings"].push_back(s.name + ": " + w);
    }
    manifest["axis"] = to_string(cfg.sweep->axis);
    manifest["points"] = points;
    const SweepSummary& best = r.summary[r.argmax_peak()];
    manifest["best"] = {{"value", best.value}, {"peak_c", best.peak_c}, {"peak_c_se", best.peak_c_se},
                        {"peak_time_us", best.peak_time}};
    if (cfg.sweep->axis == SweepAxis::DeltaL) {
        const SweepSummary& fastest = r.summary[r.argmax_early_exchange()];
        manifest["fastest_early_exchange"] = {{"value", fastest.value}, {"delta_eff", fastest.delta_eff}};
    }
    if (cfg.emit_plot) {
        write_text(out / "plot.py", plot_script_sweep(to_string(cfg.sweep->axis), cfg.plot));
        files.push_back("plot.py");
    }
    return files;
}

std::vector<std::string> run_scaling(const RunConfig& cfg, const fs::path& out, json& manifest)
{
    std::vector<std::string> files;
    const TimeSeriesTable tab = scaling_report(cfg.scaling_grid, cfg.scaling_params);
    if (cfg.emit_csv) {
        write_table(out / "scaling.csv", tab);
        files.push_back("scaling.csv");
    }
    manifest["slopes"] = {{"g_eff_abs", loglog_slope(tab.t(), tab.column("g_eff_abs"))},
                          {"Gamma_S", loglog_slope(tab.t(), tab.column("Gamma_S"))}};
    manifest["effective_base"] = effective_json(reduce(cfg.scaling_params), cfg.scaling_params);
    if (cfg.emit_plot) {
        write_text(out / "plot.py", plot_script_scaling());
        files.push_back("plot.py");
    }
    return files;
}

}  // namespace

std::vector<std::string> execute(const RunConfig& cfg, const fs::path& out)
{
    const auto start = std::chrono::steady_clock::now();
    fs::create_directories(out);
    json manifest;
    manifest["tool"] = "ioncav";
    manifest["version"] = IONCAV_VERSION;
    manifest["command"] = to_string(cfg.command);
    manifest["config"] = cfg.document.to_text();
    manifest["warnings"] = json::array();
    std::vector<std::string> files;
    switch (cfg.command) {
    case Command::Simulate: files = run_simulate(cfg, out, manifest); break;
    case Command::Sweep: files = run_sweep(cfg, out, manifest); break;
    case Command::Scaling: files = run_scaling(cfg, out, manifest); break;
    }
    files.push_back("manifest.json");
    manifest["files"] = files;
    manifest["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_text(out / "manifest.json", manifest.dump(2) + "\n");
    return files;
}

int run(int argc, char** argv)
{
    CLI::App app{"Two ions in a lossy cavity: closed-form, master-equation and quantum-jump simulations"};
    app.require_subcommand(1);
    std::string config_path;
    std::string out_dir;
    Overrides ov;
    std::uint64_t seed = 0;
    std::size_t traj = 0;
    std::string emit;
    auto add_common = [&](CLI::App* sub, bool config_required) {
        auto* c = sub->add_option("--config", config_path, "INI configuration file");
        if (config_required) c->required();
        sub->add_option("--out", out_dir, "output directory")->required();
        sub->add_option("--seed", seed, "master seed for trajectory ensembles");
        sub->add_option("--traj", traj, "number of trajectories");
        sub->add_option("--emit", emit, "comma list of outputs: csv, plot");
    };
    CLI::App* sim = app.add_subcommand("simulate", "run one or more scenarios");
    CLI::App* swp = app.add_subcommand("sweep", "sweep one parameter of a scenario");
    CLI::App* scl = app.add_subcommand("scaling", "effective coupling and decay against Delta");
    add_common(sim, true);
    add_common(swp, true);
    add_common(scl, false);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }
    Command cmd = Command::Simulate;
    CLI::App* used = sim;
    if (swp->parsed()) {
        cmd = Command::Sweep;
        used = swp;
    } else if (scl->parsed()) {
        cmd = Command::Scaling;
        used = scl;
    }
    if (used->count("--seed")) ov.seed = seed;
    if (used->count("--traj")) ov.traj = traj;
    if (used->count("--emit")) ov.emit = emit;

    try {
        IniDocument doc = config_path.empty() ? IniDocument{} : load_ini(config_path);
        const RunConfig cfg = build_run_config(std::move(doc), cmd, ov);
        const std::vector<std::string> files = execute(cfg, out_dir);
        for (const std::string& f : files) std::cout << (fs::path(out_dir) / f).string() << '\n';
        return kExitOk;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitValidation;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace ioncav::cli
