#include "outputs.hpp"

#include <fstream>
#include <sstream>

namespace ioncav::cli {

void write_text(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw Error("write failed for '" + path.string() + "'");
}

void write_table(const std::filesystem::path& path, const TimeSeriesTable& table)
{
    table.validate();
    std::ostringstream os;
    table.write_csv(os);
    write_text(path, os.str());
}

void write_surface(const std::filesystem::path& path, const SweepResult& result)
{
    std::ostringstream os;
    const std::string axis = to_string(result.spec.axis);
    const std::vector<std::string> names = result.runs.front().table.column_names();
    os << axis << ",t_us";
    for (const std::string& n : names) os << ',' << n;
    os << '\n';
    for (std::size_t i = 0; i < result.runs.size(); ++i) {
        const TimeSeriesTable& tab = result.runs[i].table;
        tab.validate();
        for (std::size_t k = 0; k < tab.rows(); ++k) {
            os << format_number(result.spec.grid[i]) << ',' << format_number(tab.t()[k]);
            for (const std::string& n : names) os << ',' << format_number(tab.column(n)[k]);
            os << '\n';
        }
    }
    write_text(path, os.str());
}

namespace {

const char* kPlotHeader = R"PY(#!/usr/bin/env python3
# Regenerates the figure from the CSV files next to this script.
import csv
import os
import sys

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

HERE = os.path.dirname(os.path.abspath(__file__))


def read(name):
    with open(os.path.join(HERE, name), newline="") as f:
        rows = list(csv.reader(f))
    header, body = rows[0], rows[1:]
    return {h: [float(r[i]) for r in body] for i, h in enumerate(header)}


COLUMNS = {
    "concurrence": ["concurrence"],
    "populations": ["rho_00_00", "rho_01_01", "rho_10_10"],
    "coherence": ["rho_01_10_re", "rho_01_10_im"],
}
)PY";

std::string py_list(const std::vector<std::string>& items)
{
    std::string s = "[";
    for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", \"" : "\"") + items[i] + "\"";
    return s + "]";
}

}  // namespace

std::string plot_script_simulate(const std::vector<std::string>& csv_files, const std::string& kind)
{
    std::ostringstream os;
    os << kPlotHeader << "\nFILES = " << py_list(csv_files) << "\nKIND = \"" << kind << "\"\n";
    os << R"PY(
fig, ax = plt.subplots(figsize=(7, 4.5))
for name in FILES:
    data = read(name)
    label = os.path.splitext(name)[0]
    for col in COLUMNS[KIND]:
        ax.plot(data["t_us"], data[col], label=f"{label}: {col}")
        if col + "_se" in data:
            lo = [m - 2 * s for m, s in zip(data[col], data[col + "_se"])]
            hi = [m + 2 * s for m, s in zip(data[col], data[col + "_se"])]
            ax.fill_between(data["t_us"], lo, hi, alpha=0.2)
ax.set_xlabel("t (us)")
ax.set_ylabel(KIND)
ax.legend(fontsize=7)
fig.tight_layout()
out = os.path.join(HERE, "plot.png")
fig.savefig(out, dpi=150)
print(out)
)PY";
    return os.str();
}

std::string plot_script_sweep(const std::string& axis, const std::string& kind)
{
    std::ostringstream os;
    os << kPlotHeader << "\nAXIS = \"" << axis << "\"\nKIND = \"" << kind << "\"\n";
    os << R"PY(
surface = read("surface.csv")
summary = read("summary.csv")
values = sorted(set(surface[AXIS]))
times = sorted(set(surface["t_us"]))
cols = COLUMNS[KIND]
fig, axes = plt.subplots(1, len(cols) + 1, figsize=(4.5 * (len(cols) + 1), 4))
for ax, col in zip(axes, cols):
    grid = {(v, t): z for v, t, z in zip(surface[AXIS], surface["t_us"], surface[col])}
    z = [[grid[(v, t)] for t in times] for v in values]
    mesh = ax.pcolormesh(times, values, z, shading="auto")
    fig.colorbar(mesh, ax=ax)
    ax.set_xlabel("t (us)")
    ax.set_ylabel(AXIS)
    ax.set_title(col)
axes[-1].errorbar(summary[AXIS], summary["peak_c"], yerr=summary["peak_c_se"], fmt="o-", ms=3)
axes[-1].set_xlabel(AXIS)
axes[-1].set_ylabel("peak concurrence")
fig.tight_layout()
out = os.path.join(HERE, "plot.png")
fig.savefig(out, dpi=150)
print(out)
)PY";
    return os.str();
}

std::string plot_script_scaling()
{
    std::ostringstream os;
    os << kPlotHeader << R"PY(
data = read("scaling.csv")
delta = [d / 20.0 for d in data["Delta"]]
fig, ax = plt.subplots(figsize=(6, 4.5))
ax.loglog(delta, data["g_eff_abs"], label="|g_eff|")
ax.loglog(delta, data["Gamma_S"], label="Gamma_S")
ax.loglog(delta, data["kappa"], label="kappa")
ax.set_xlabel("Delta / Delta_0")
ax.set_ylabel("2pi MHz")
ax.legend()
fig.tight_layout()
out = os.path.join(HERE, "plot.png")
fig.savefig(out, dpi=150)
print(out)
)PY";
    return os.str();
}

nlohmann::json effective_json(const EffectiveParams& e, const ModelParams& p)
{
    using nlohmann::json;
    auto cvec = [](const std::vector<cplx>& v) {
        json a = json::array();
        for (const cplx& c : v) a.push_back({c.real(), c.imag()});
        return a;
    };
    json j;
    j["xi"] = e.xi;
    j["beta_T"] = e.beta_T;
    j["g_eff"] = {e.g_eff.real(), e.g_eff.imag()};
    j["g_eff_abs"] = std::abs(e.g_eff);
    j["alpha_eff"] = cvec(e.alpha_eff);
    j["alpha_total"] = e.alpha_total();
    j["omega_C_eff"] = e.omega_C_eff;
    j["omega_A_eff"] = e.omega_A_eff;
    j["delta_eff"] = e.delta_eff;
    j["Gamma_S"] = e.Gamma_S;
    j["Gamma_D"] = e.Gamma_D;
    j["stark_cavity"] = e.stark_cavity;
    j["stark_ion"] = e.stark_ion;
    j["nu"] = e.nu;
    j["mu"] = e.mu;
    j["validity_ratio"] = e.validity_ratio;
    j["params"] = {{"omega", p.omega_rabi},     {"g", p.g_cavity},        {"gamma_S", p.gamma_S},
                   {"gamma_D", p.gamma_D},      {"Delta", p.delta_raman}, {"kappa", p.kappa},
                   {"beta", cvec(p.beta)},      {"delta_L", p.delta_laser}};
    return j;
}

}  // namespace ioncav::cli
