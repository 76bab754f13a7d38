#include <cmath>
#include <limits>

#include "ioncav/experiments.hpp"

namespace ioncav {

std::vector<double> log_grid(double lo, double hi, int n)
{
    if (!(lo > 0) || !(hi > lo) || n < 2) throw ValidationError("log grid needs 0 < lo < hi and n >= 2");
    std::vector<double> g;
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (int i = 0; i < n; ++i) g.push_back(std::exp(a + (b - a) * i / (n - 1)));
    g.front() = lo;
    g.back() = hi;
    return g;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size() || x.size() < 2) throw ValidationError("slope needs two equal-length series");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0) || !(y[i] > 0)) throw ValidationError("log-log slope needs positive values");
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

TimeSeriesTable scaling_report(const std::vector<double>& delta_grid, const ModelParams& base)
{
    if (delta_grid.empty()) throw ValidationError("scaling needs a nonempty Delta grid");
    if (!(base.kappa > 0)) throw ValidationError("scaling needs kappa > 0 for the coupling ratio");
    std::vector<double> g, gs, k, ratio;
    for (double d : delta_grid) {
        if (!(d > 0)) throw ValidationError("Delta grid values must be positive");
        ModelParams p = base;
        p.delta_raman = d;
        const EffectiveParams e = reduce(p);
        g.push_back(std::abs(e.g_eff));
        gs.push_back(e.Gamma_S[0]);
        k.push_back(p.kappa);
        ratio.push_back(4.0 * e.beta_T * std::abs(e.g_eff) / p.kappa);
    }
    TimeSeriesTable tab(delta_grid, "Delta");
    tab.add_column("g_eff_abs", std::move(g));
    tab.add_column("Gamma_S", std::move(gs));
    tab.add_column("kappa", std::move(k));
    tab.add_column("coupling_ratio", std::move(ratio));
    return tab;
}

std::string to_string(StateCharacter c)
{
    return c == StateCharacter::SubradiantLike ? "subradiant-like" : "i-phase-like";
}

DispersiveCharacter dispersive_character(const TimeSeriesTable& series)
{
    DispersiveCharacter out;
    out.peak_index = series.argmax("concurrence");
    out.re = series.column("rho_01_10_re")[out.peak_index];
    out.im = series.column("rho_01_10_im")[out.peak_index];
    out.ratio = out.re != 0.0 ? std::abs(out.im) / std::abs(out.re) : std::numeric_limits<double>::infinity();
    out.kind = out.ratio < 1.0 ? StateCharacter::SubradiantLike : StateCharacter::IPhaseLike;
    return out;
}

}  // namespace ioncav
