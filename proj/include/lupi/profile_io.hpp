// On-disk strategy profiles.
//
// A profile document is a JSON object:
//
//   {
//     "n": 3,
//     "strategies": [[0, 0, 1], [0.5, 0.5, 0], [0.5, 0.5, 0]],
//     "labels": ["Alice", "Bob", "Charles"]
//   }
//
// `strategies` holds n rows of n probabilities, one row per player in seat
// order. `labels` is optional.

#ifndef LUPI_PROFILE_IO_HPP_
#define LUPI_PROFILE_IO_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "lupi/strategy.hpp"

namespace lupi {

/// Malformed or invalid profile document. The message names the offending
/// row and column (1-based) where one applies.
class ProfileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProfileDocument {
  int n = 0;
  std::vector<std::vector<double>> strategies;
  std::vector<std::string> labels;

  static ProfileDocument from_profile(const StrategyProfile& profile,
                                      std::vector<std::string> labels = {});

  /// Validates every row and builds the profile.
  StrategyProfile to_profile() const;

  /// Label for `player` (0-based); falls back to "player <k>" 1-based.
  std::string label(int player) const;
};

ProfileDocument parse_profile_document(const std::string& text);
ProfileDocument read_profile_document(const std::string& path);

/// Pretty-printed JSON; doubles are written in shortest round-trip form.
std::string to_json_text(const ProfileDocument& doc);
void write_profile_document(const ProfileDocument& doc, const std::string& path);

}  // namespace lupi

#endif  // LUPI_PROFILE_IO_HPP_
