#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace ioncav {

/// A key column (time in microseconds by default) plus named real columns.
class TimeSeriesTable {
public:
    explicit TimeSeriesTable(std::vector<double> t_grid, std::string key_name = "t_us");

    const std::vector<double>& t() const { return t_; }
    const std::string& key_name() const { return key_name_; }
    std::size_t rows() const { return t_.size(); }

    void add_column(std::string name, std::vector<double> values);
    bool has_column(const std::string& name) const;
    const std::vector<double>& column(const std::string& name) const;
    std::vector<std::string> column_names() const;

    /// Equal lengths, strictly increasing key, finite values.
    void validate() const;

    /// Header row then one row per key value, "%.12g" formatting.
    void write_csv(std::ostream& os) const;

    /// Index of the largest entry of a column (first on ties).
    std::size_t argmax(const std::string& name) const;

private:
    std::vector<double> t_;
    std::string key_name_;
    std::vector<std::pair<std::string, std::vector<double>>> columns_;
};

/// Evenly spaced grid of n points from t0 to t1 inclusive.
std::vector<double> linear_grid(double t0, double t1, int n);

/// Formats a double the way every CSV in the project does.
std::string format_number(double v);

}  // namespace ioncav
