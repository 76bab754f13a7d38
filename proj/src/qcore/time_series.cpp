#include "ioncav/time_series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "ioncav/types.hpp"

namespace ioncav {

TimeSeriesTable::TimeSeriesTable(std::vector<double> t_grid, std::string key_name)
    : t_(std::move(t_grid)), key_name_(std::move(key_name))
{
}

void TimeSeriesTable::add_column(std::string name, std::vector<double> values)
{
    if (values.size() != t_.size()) {
        throw ValidationError("column '" + name + "' has " + std::to_string(values.size()) + " rows, expected " +
                              std::to_string(t_.size()));
    }
    if (has_column(name)) throw ValidationError("duplicate column '" + name + "'");
    columns_.emplace_back(std::move(name), std::move(values));
}

bool TimeSeriesTable::has_column(const std::string& name) const
{
    return std::any_of(columns_.begin(), columns_.end(), [&](const auto& c) { return c.first == name; });
}

const std::vector<double>& TimeSeriesTable::column(const std::string& name) const
{
    for (const auto& c : columns_) {
        if (c.first == name) return c.second;
    }
    throw ValidationError("no column '" + name + "'");
}

std::vector<std::string> TimeSeriesTable::column_names() const
{
    std::vector<std::string> out;
    out.reserve(columns_.size());
    for (const auto& c : columns_) out.push_back(c.first);
    return out;
}

void TimeSeriesTable::validate() const
{
    for (std::size_t i = 1; i < t_.size(); ++i) {
        if (!(t_[i] > t_[i - 1])) throw ValidationError("time grid is not strictly increasing");
    }
    for (const auto& [name, values] : columns_) {
        if (values.size() != t_.size()) throw ValidationError("column '" + name + "' has the wrong length");
        for (double v : values) {
            if (!std::isfinite(v)) throw NumericalError("column '" + name + "' holds a non-finite value");
        }
    }
}

void TimeSeriesTable::write_csv(std::ostream& os) const
{
    os << key_name_;
    for (const auto& c : columns_) os << ',' << c.first;
    os << '\n';
    for (std::size_t i = 0; i < t_.size(); ++i) {
        os << format_number(t_[i]);
        for (const auto& c : columns_) os << ',' << format_number(c.second[i]);
        os << '\n';
    }
}

std::size_t TimeSeriesTable::argmax(const std::string& name) const
{
    const auto& v = column(name);
    if (v.empty()) throw ValidationError("argmax of an empty column");
    return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

std::vector<double> linear_grid(double t0, double t1, int n)
{
    if (n < 2) throw ValidationError("time grid needs at least two points");
    if (!(t1 > t0)) throw ValidationError("time grid needs t_max > t_min");
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = t0 + (t1 - t0) * i / (n - 1);
    g.back() = t1;
    return g;
}

std::string format_number(double v)
{
    if (v == 0.0) v = 0.0;  // drop the sign of negative zero
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace ioncav
