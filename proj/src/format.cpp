#include "lupi/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace lupi {
namespace {

int decimal_exponent(double value) { return static_cast<int>(std::floor(std::log10(std::abs(value)))); }

}  // namespace

double round_significant(double value, int digits) {
  if (digits < 1) throw std::invalid_argument("need at least one significant digit");
  if (value == 0.0 || !std::isfinite(value)) return value;
  const int shift = digits - 1 - decimal_exponent(value);
  const double scale = std::pow(10.0, shift);
  return std::round(value * scale) / scale;
}

std::string format_significant(double value, int digits) {
  const double rounded = round_significant(value, digits);
  if (rounded == 0.0 || !std::isfinite(rounded)) return format_exact(rounded);
  const int decimals = std::max(0, digits - 1 - decimal_exponent(rounded));
  std::string text = format_fixed(rounded, decimals);
  if (text.find('.') != std::string::npos) {
    while (text.back() == '0') text.pop_back();
    if (text.back() == '.') text.pop_back();
  }
  return text;
}

std::string format_exact(double value) {
  std::array<char, 32> buffer{};
  const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), end);
}

std::string format_fixed(double value, int decimals) {
  std::array<char, 64> buffer{};
  const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                                       std::chars_format::fixed, decimals);
  return std::string(buffer.data(), end);
}

std::string join(const Eigen::VectorXd& values, const std::string& separator) {
  std::string out;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (i > 0) out += separator;
    out += format_exact(values[i]);
  }
  return out;
}

}  // namespace lupi
