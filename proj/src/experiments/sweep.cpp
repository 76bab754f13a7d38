#include <algorithm>
#include <cmath>

#include "ioncav/experiments.hpp"
#include "ioncav/parallel.hpp"

namespace ioncav {

std::string to_string(SweepAxis a)
{
    switch (a) {
    case SweepAxis::R1: return "r1";
    case SweepAxis::DeltaL: return "delta_L";
    case SweepAxis::Delta: return "Delta";
    case SweepAxis::Kappa: return "kappa";
    }
    return "?";
}

SweepAxis parse_sweep_axis(const std::string& s)
{
    for (SweepAxis a : {SweepAxis::R1, SweepAxis::DeltaL, SweepAxis::Delta, SweepAxis::Kappa}) {
        if (to_string(a) == s) return a;
    }
    throw ValidationError("unknown sweep axis '" + s + "' (r1, delta_L, Delta, kappa)");
}

std::vector<double> default_grid(SweepAxis a)
{
    std::vector<double> g;
    switch (a) {
    case SweepAxis::R1:
        for (int k = 0; k <= 50; ++k) g.push_back(0.02 * k);
        break;
    case SweepAxis::DeltaL:
        for (int k = 0; k <= 40; ++k) g.push_back(0.02 * k);
        break;
    case SweepAxis::Delta:
        g = log_grid(10 * table1::kDelta0, 1000 * table1::kDelta0, 21);
        break;
    case SweepAxis::Kappa:
        g = log_grid(0.01 * table1::kKappa0, table1::kKappa0, 21);
        break;
    }
    return g;
}

void SweepSpec::validate() const
{
    if (grid.empty()) throw ValidationError("sweep grid is empty");
    for (double v : grid) {
        if (!std::isfinite(v)) throw ValidationError("sweep grid holds a non-finite value");
        if (axis == SweepAxis::R1 && (v < 0 || v > 1)) throw ValidationError("r1 grid values must lie in [0, 1]");
        if (axis == SweepAxis::Delta && v <= 0) throw ValidationError("Delta grid values must be positive");
        if (axis == SweepAxis::Kappa && v < 0) throw ValidationError("kappa grid values must be >= 0");
    }
    if (axis == SweepAxis::DeltaL && base.resonant) {
        throw ValidationError("a delta_L sweep cannot also pin the resonant laser detuning");
    }
    at(grid.front()).validate();
}

Scenario SweepSpec::at(double value) const
{
    Scenario s = base;
    switch (axis) {
    case SweepAxis::R1: s.params.beta = beta_from_target_r1(value); break;
    case SweepAxis::DeltaL: s.params.set_shared_laser_detuning(value); break;
    case SweepAxis::Delta: s.params.delta_raman = value; break;
    case SweepAxis::Kappa: s.params.kappa = value; break;
    }
    s.name = base.name + "_" + to_string(axis) + "_" + format_number(value);
    return s;
}

namespace {

double early_exchange(const Scenario& s, const EffectiveParams& eff)
{
    const double alpha = eff.alpha_total();
    if (alpha == 0.0) return 0.0;
    Scenario q = s;
    q.t_max = 1.0 / (4.0 * alpha);
    q.n_points = 2;
    if (q.engine == EngineKind::MCWF) q.engine = EngineKind::Lindblad;
    return run_scenario(q).table.column("rho_00_00").back();
}

SweepSummary summarize(double value, const Scenario& s, const ScenarioResult& r)
{
    SweepSummary out;
    out.value = value;
    const TimeSeriesTable& tab = r.table;
    const std::size_t k = tab.argmax("concurrence");
    out.peak_c = tab.column("concurrence")[k];
    out.peak_c_se = tab.has_column("concurrence_se") ? tab.column("concurrence_se")[k] : 0.0;
    out.peak_time = tab.t()[k];
    out.final_c = tab.column("concurrence").back();
    const dicke::DickeParams d = r.effective.dicke();
    out.stationary_c = dicke::stationary_concurrence(initial_amplitudes(s), d.r1, d.r2);
    out.delta_eff = r.effective.delta_eff[0];
    out.early_exchange = early_exchange(s, r.effective);
    return out;
}

}  // namespace

SweepResult sweep(const SweepSpec& spec)
{
    spec.validate();
    const std::size_t n = spec.grid.size();
    SweepResult out{spec, std::vector<ScenarioResult>(n, ScenarioResult{TimeSeriesTable({}), {}, {}, 0.0, {}}),
                    std::vector<SweepSummary>(n)};
    auto point = [&](std::size_t i) {
        const Scenario s = spec.at(spec.grid[i]);
        out.runs[i] = run_scenario(s);
        out.summary[i] = summarize(spec.grid[i], s, out.runs[i]);
    };
    // Trajectory ensembles already spread over the workers.
    if (spec.base.engine == EngineKind::MCWF) {
        for (std::size_t i = 0; i < n; ++i) point(i);
    } else {
        parallel_for(n, point);
    }
    return out;
}

namespace {

template <class Key>
std::size_t argmax_by(const std::vector<SweepSummary>& s, Key key)
{
    if (s.empty()) throw ValidationError("empty sweep");
    std::size_t best = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (key(s[i]) > key(s[best])) best = i;
    }
    return best;
}

}  // namespace

std::size_t SweepResult::argmax_peak() const
{
    return argmax_by(summary, [](const SweepSummary& x) { return x.peak_c; });
}

std::size_t SweepResult::argmax_stationary() const
{
    return argmax_by(summary, [](const SweepSummary& x) { return x.stationary_c; });
}

std::size_t SweepResult::argmax_early_exchange() const
{
    return argmax_by(summary, [](const SweepSummary& x) { return x.early_exchange; });
}

TimeSeriesTable SweepResult::summary_table() const
{
    std::vector<double> key;
    std::vector<std::vector<double>> cols(7);
    for (const SweepSummary& s : summary) {
        key.push_back(s.value);
        const double v[] = {s.peak_c,       s.peak_c_se, s.peak_time,     s.final_c,
                            s.stationary_c, s.delta_eff, s.early_exchange};
        for (std::size_t c = 0; c < cols.size(); ++c) cols[c].push_back(v[c]);
    }
    TimeSeriesTable tab(key, to_string(spec.axis));
    const char* names[] = {"peak_c", "peak_c_se", "peak_time_us", "final_c", "stationary_c", "delta_eff",
                           "early_exchange"};
    for (std::size_t c = 0; c < cols.size(); ++c) tab.add_column(names[c], std::move(cols[c]));
    return tab;
}

}  // namespace ioncav
