#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ioncav {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr cplx kI{0.0, 1.0};

/// Stored frequencies are "2pi MHz" numbers: a value nu corresponds to the
/// angular frequency 2*pi*nu rad/us. Multiply exactly once, when a generator
/// is built.
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double angular(double nu) { return kTwoPi * nu; }

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad inputs: parameters out of domain, wrong spaces, malformed specs.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// The numerics left their trusted regime (positivity loss, truncation
/// leakage, step underflow, jump-probability cap).
class NumericalError : public Error {
public:
    using Error::Error;
};

}  // namespace ioncav
