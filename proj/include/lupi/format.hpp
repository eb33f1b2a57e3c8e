// Locale-independent number rendering.

#ifndef LUPI_FORMAT_HPP_
#define LUPI_FORMAT_HPP_

#include <string>

#include <Eigen/Core>

namespace lupi {

/// Rounds to `digits` significant figures, halves away from zero.
double round_significant(double value, int digits);

/// round_significant() rendered in fixed notation without trailing zeros,
/// e.g. 0.03125 -> "0.0313", 0.25 -> "0.25".
std::string format_significant(double value, int digits);

/// Shortest text that parses back to the same double.
std::string format_exact(double value);

/// Fixed notation with `decimals` places.
std::string format_fixed(double value, int decimals);

/// Entries joined by `separator` using format_exact().
std::string join(const Eigen::VectorXd& values, const std::string& separator);

}  // namespace lupi

#endif  // LUPI_FORMAT_HPP_
