#include <charconv>
#include <cmath>
#include <map>
#include <set>

#include "ioncav/cli.hpp"

namespace ioncav::cli {

std::string to_string(Command c)
{
    switch (c) {
    case Command::Simulate: return "simulate";
    case Command::Sweep: return "sweep";
    case Command::Scaling: return "scaling";
    }
    return "?";
}

namespace {

const std::set<std::string> kModelKeys{"omega",   "g",     "gamma_S",      "gamma_D",     "Delta",
                                       "Delta_factor", "kappa", "kappa_factor", "r1",      "beta1",
                                       "beta2",   "beta1_phase", "beta2_phase", "delta_L", "delta_L1",
                                       "delta_L2"};
const std::set<std::string> kScenarioKeys{"model",  "engine", "initial_state", "emission", "resonant",
                                          "t_max",  "n_points", "n_traj",      "seed",     "n_max"};
const std::set<std::string> kSweepKeys{"axis", "values", "start", "stop", "step"};
const std::set<std::string> kScalingKeys{"Delta_factor_min", "Delta_factor_max", "points"};
const std::set<std::string> kOutputKeys{"emit", "plot"};

using KeyMap = std::map<std::string, const IniEntry*>;

std::string where(const IniEntry& e)
{
    return e.line > 0 ? " (line " + std::to_string(e.line) + ")" : std::string(" (command line)");
}

double to_double(const IniEntry& e)
{
    double v = 0;
    const char* b = e.value.data();
    const char* end = b + e.value.size();
    auto [ptr, ec] = std::from_chars(b, end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
        throw ConfigError("key '" + e.key + "'" + where(e) + ": expected a number, got '" + e.value + "'");
    }
    return v;
}

std::uint64_t to_uint(const IniEntry& e)
{
    std::uint64_t v = 0;
    const char* b = e.value.data();
    const char* end = b + e.value.size();
    auto [ptr, ec] = std::from_chars(b, end, v);
    if (ec != std::errc() || ptr != end) {
        throw ConfigError("key '" + e.key + "'" + where(e) + ": expected a nonnegative integer, got '" + e.value +
                          "'");
    }
    return v;
}

bool to_bool(const IniEntry& e)
{
    if (e.value == "true" || e.value == "yes" || e.value == "1") return true;
    if (e.value == "false" || e.value == "no" || e.value == "0") return false;
    throw ConfigError("key '" + e.key + "'" + where(e) + ": expected true or false, got '" + e.value + "'");
}

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            const auto a = cur.find_first_not_of(" \t");
            const auto b = cur.find_last_not_of(" \t");
            if (a != std::string::npos) out.push_back(cur.substr(a, b - a + 1));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    return out;
}

void check_keys(const IniSection& s, const std::set<std::string>& a, const std::set<std::string>& b = {})
{
    for (const IniEntry& e : s.entries) {
        if (!a.count(e.key) && !b.count(e.key)) {
            throw ConfigError("unknown key '" + e.key + "' in [" + s.name + "]" + where(e));
        }
    }
}

void collect(KeyMap& into, const IniSection* s, const std::set<std::string>& keys)
{
    if (!s) return;
    for (const IniEntry& e : s->entries) {
        if (keys.count(e.key)) into[e.key] = &e;
    }
}

const IniEntry* get(const KeyMap& m, const std::string& key)
{
    auto it = m.find(key);
    return it == m.end() ? nullptr : it->second;
}

ModelParams model_from(const KeyMap& m)
{
    ModelParams p = ModelParams::table_one();
    auto num = [&](const char* key, double& into) {
        if (const IniEntry* e = get(m, key)) into = to_double(*e);
    };
    num("omega", p.omega_rabi);
    num("g", p.g_cavity);
    num("gamma_S", p.gamma_S);
    num("gamma_D", p.gamma_D);
    if (get(m, "Delta") && get(m, "Delta_factor")) throw ValidationError("give either Delta or Delta_factor, not both");
    if (get(m, "kappa") && get(m, "kappa_factor")) throw ValidationError("give either kappa or kappa_factor, not both");
    num("Delta", p.delta_raman);
    if (const IniEntry* e = get(m, "Delta_factor")) p.delta_raman = to_double(*e) * table1::kDelta0;
    num("kappa", p.kappa);
    if (const IniEntry* e = get(m, "kappa_factor")) p.kappa = to_double(*e) * table1::kKappa0;

    const bool any_beta = get(m, "beta1") || get(m, "beta2") || get(m, "beta1_phase") || get(m, "beta2_phase");
    if (const IniEntry* e = get(m, "r1")) {
        if (any_beta) throw ValidationError("give either r1 or beta1/beta2, not both");
        const double r1 = to_double(*e);
        if (r1 < 0 || r1 > 1) throw ValidationError("r1 must lie in [0, 1]");
        p.beta = beta_from_target_r1(r1);
    } else {
        double b1 = 1, b2 = 1, ph1 = 0, ph2 = 0;
        num("beta1", b1);
        num("beta2", b2);
        num("beta1_phase", ph1);
        num("beta2_phase", ph2);
        p.beta = {std::polar(1.0, ph1) * b1, std::polar(1.0, ph2) * b2};
    }
    const bool per_ion = get(m, "delta_L1") || get(m, "delta_L2");
    if (get(m, "delta_L") && per_ion) throw ValidationError("give either delta_L or delta_L1/delta_L2, not both");
    double dl = 0;
    num("delta_L", dl);
    p.set_shared_laser_detuning(dl);
    num("delta_L1", p.delta_laser[0]);
    num("delta_L2", p.delta_laser[1]);
    p.validate();
    return p;
}

Scenario scenario_from(const std::string& name, const IniSection* model, const IniSection* section)
{
    KeyMap mk;
    collect(mk, model, kModelKeys);
    collect(mk, section, kModelKeys);
    KeyMap sk;
    collect(sk, section, kScenarioKeys);

    Scenario s;
    s.name = name;
    s.params = model_from(mk);
    if (const IniEntry* e = get(sk, "model")) s.model = parse_model_kind(e->value);
    if (const IniEntry* e = get(sk, "engine")) s.engine = parse_engine_kind(e->value);
    if (const IniEntry* e = get(sk, "initial_state")) s.initial_state = e->value;
    if (const IniEntry* e = get(sk, "emission")) s.emission = to_bool(*e);
    if (const IniEntry* e = get(sk, "resonant")) s.resonant = to_bool(*e);
    if (const IniEntry* e = get(sk, "t_max")) s.t_max = to_double(*e);
    if (const IniEntry* e = get(sk, "n_points")) s.n_points = static_cast<int>(to_uint(*e));
    if (const IniEntry* e = get(sk, "n_traj")) s.n_traj = to_uint(*e);
    if (const IniEntry* e = get(sk, "seed")) s.seed = to_uint(*e);
    if (const IniEntry* e = get(sk, "n_max")) s.n_max = static_cast<int>(to_uint(*e));
    if (s.resonant && (get(mk, "delta_L") || get(mk, "delta_L1") || get(mk, "delta_L2"))) {
        throw ValidationError("scenario '" + name + "': resonant = true conflicts with an explicit delta_L");
    }
    s.validate();
    return s;
}

void apply_overrides(IniDocument& doc, Command command, const Overrides& o)
{
    std::vector<IniSection*> scenarios;
    for (IniSection& s : doc.sections) {
        if (s.name == "scenario" || s.name.rfind("scenario.", 0) == 0) scenarios.push_back(&s);
    }
    if ((o.seed || o.traj) && command != Command::Scaling) {
        if (scenarios.empty()) scenarios.push_back(&doc.get_or_add("scenario"));
        for (IniSection* s : scenarios) {
            if (o.seed) s->set("seed", std::to_string(*o.seed));
            if (o.traj) s->set("n_traj", std::to_string(*o.traj));
        }
    }
    if (o.emit) doc.get_or_add("output").set("emit", *o.emit);
}

}  // namespace

RunConfig build_run_config(IniDocument doc, Command command, const Overrides& overrides)
{
    apply_overrides(doc, command, overrides);
    RunConfig cfg;
    cfg.command = command;

    for (const IniSection& s : doc.sections) {
        const bool named_scenario = s.name.rfind("scenario.", 0) == 0 && s.name.size() > 9;
        if (s.name == "model") {
            check_keys(s, kModelKeys);
        } else if (s.name == "output") {
            check_keys(s, kOutputKeys);
        } else if (s.name == "scenario" && command != Command::Scaling) {
            check_keys(s, kScenarioKeys, kModelKeys);
        } else if (named_scenario && command == Command::Simulate) {
            check_keys(s, kScenarioKeys, kModelKeys);
        } else if (s.name == "sweep" && command == Command::Sweep) {
            check_keys(s, kSweepKeys);
        } else if (s.name == "scaling" && command == Command::Scaling) {
            check_keys(s, kScalingKeys);
        } else {
            throw ConfigError("unknown section [" + s.name + "] for the " + to_string(command) + " command (line " +
                              std::to_string(s.line) + ")");
        }
    }

    if (const IniSection* out = doc.find("output")) {
        if (const IniEntry* e = out->find("emit")) {
            cfg.emit_csv = false;
            for (const std::string& item : split_list(e->value)) {
                if (item == "csv") {
                    cfg.emit_csv = true;
                } else if (item == "plot") {
                    cfg.emit_plot = true;
                } else {
                    throw ValidationError("emit: unknown item '" + item + "' (csv, plot)");
                }
            }
            // plots read the CSVs
            if (cfg.emit_plot) cfg.emit_csv = true;
        }
        if (const IniEntry* e = out->find("plot")) {
            if (e->value != "concurrence" && e->value != "populations" && e->value != "coherence") {
                throw ValidationError("plot must be concurrence, populations or coherence");
            }
            cfg.plot = e->value;
        }
    }

    const IniSection* model = doc.find("model");
    switch (command) {
    case Command::Simulate: {
        if (const IniSection* s = doc.find("scenario")) cfg.scenarios.push_back(scenario_from("run", model, s));
        for (const IniSection& s : doc.sections) {
            if (s.name.rfind("scenario.", 0) == 0) cfg.scenarios.push_back(scenario_from(s.name.substr(9), model, &s));
        }
        if (cfg.scenarios.empty()) cfg.scenarios.push_back(scenario_from("run", model, nullptr));
        break;
    }
    case Command::Sweep: {
        SweepSpec spec;
        spec.base = scenario_from("sweep", model, doc.find("scenario"));
        KeyMap k;
        collect(k, doc.find("sweep"), kSweepKeys);
        if (const IniEntry* e = get(k, "axis")) spec.axis = parse_sweep_axis(e->value);
        const bool range = get(k, "start") || get(k, "stop") || get(k, "step");
        if (const IniEntry* e = get(k, "values")) {
            if (range) throw ValidationError("give either values or start/stop/step, not both");
            for (const std::string& item : split_list(e->value)) spec.grid.push_back(to_double({e->key, item, e->line}));
        } else if (range) {
            if (!get(k, "start") || !get(k, "stop") || !get(k, "step")) {
                throw ValidationError("start, stop and step must be given together");
            }
            const double a = to_double(*get(k, "start"));
            const double b = to_double(*get(k, "stop"));
            const double h = to_double(*get(k, "step"));
            if (!(h > 0) || b < a) throw ValidationError("need step > 0 and stop >= start");
            const long n = std::lround((b - a) / h);
            if (n > 100000) throw ValidationError("sweep grid too large");
            for (long i = 0; i <= n; ++i) spec.grid.push_back(a + h * static_cast<double>(i));
        } else {
            spec.grid = default_grid(spec.axis);
        }
        spec.validate();
        cfg.sweep = std::move(spec);
        break;
    }
    case Command::Scaling: {
        KeyMap mk;
        collect(mk, model, kModelKeys);
        cfg.scaling_params = model_from(mk);
        KeyMap k;
        collect(k, doc.find("scaling"), kScalingKeys);
        double lo = 10, hi = 1000;
        std::uint64_t n = 41;
        if (const IniEntry* e = get(k, "Delta_factor_min")) lo = to_double(*e);
        if (const IniEntry* e = get(k, "Delta_factor_max")) hi = to_double(*e);
        if (const IniEntry* e = get(k, "points")) n = to_uint(*e);
        if (!(lo > 0) || !(hi > lo) || n < 2 || n > 100000) {
            throw ValidationError("scaling needs 0 < Delta_factor_min < Delta_factor_max and 2 <= points");
        }
        cfg.scaling_grid = log_grid(lo * table1::kDelta0, hi * table1::kDelta0, static_cast<int>(n));
        if (!(cfg.scaling_params.kappa > 0)) throw ValidationError("scaling needs kappa > 0");
        break;
    }
    }
    cfg.document = std::move(doc);
    return cfg;
}

}  // namespace ioncav::cli
