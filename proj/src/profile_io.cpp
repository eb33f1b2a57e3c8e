#include "lupi/profile_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lupi {
namespace {

using json = nlohmann::json;

std::string at_row(std::size_t row) { return "row " + std::to_string(row + 1); }

std::string at_cell(std::size_t row, std::size_t col) {
  return at_row(row) + ", column " + std::to_string(col + 1);
}

}  // namespace

ProfileDocument ProfileDocument::from_profile(const StrategyProfile& profile,
                                              std::vector<std::string> labels) {
  ProfileDocument doc;
  doc.n = profile.n();
  for (const auto& s : profile.strategies()) {
    doc.strategies.emplace_back(s.probs().data(), s.probs().data() + s.size());
  }
  doc.labels = std::move(labels);
  return doc;
}

StrategyProfile ProfileDocument::to_profile() const {
  if (n < 2) throw ProfileError("n must be at least 2, got " + std::to_string(n));
  if (static_cast<int>(strategies.size()) != n) {
    throw ProfileError("expected " + std::to_string(n) + " strategy rows, got " +
                       std::to_string(strategies.size()));
  }
  std::vector<MixedStrategy> rows;
  for (std::size_t r = 0; r < strategies.size(); ++r) {
    const auto& row = strategies[r];
    if (static_cast<int>(row.size()) != n) {
      throw ProfileError(at_row(r) + ": expected " + std::to_string(n) + " probabilities, got " +
                         std::to_string(row.size()));
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!std::isfinite(row[c]) || row[c] < 0.0 || row[c] > 1.0) {
        throw ProfileError(at_cell(r, c) + ": probability outside [0, 1]");
      }
    }
    try {
      rows.emplace_back(Eigen::Map<const Eigen::VectorXd>(row.data(), n));
    } catch (const std::invalid_argument& e) {
      throw ProfileError(at_row(r) + ": " + e.what());
    }
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != n) {
    throw ProfileError("expected " + std::to_string(n) + " labels, got " +
                       std::to_string(labels.size()));
  }
  return StrategyProfile(std::move(rows));
}

std::string ProfileDocument::label(int player) const {
  if (player < static_cast<int>(labels.size())) return labels[player];
  return "player " + std::to_string(player + 1);
}

ProfileDocument parse_profile_document(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ProfileError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ProfileError("profile document must be a JSON object");
  if (!root.contains("n") || !root["n"].is_number_integer()) {
    throw ProfileError("field 'n' must be an integer");
  }
  if (!root.contains("strategies") || !root["strategies"].is_array()) {
    throw ProfileError("field 'strategies' must be an array of rows");
  }

  ProfileDocument doc;
  doc.n = root["n"].get<int>();
  const auto& rows = root["strategies"];
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array()) throw ProfileError(at_row(r) + ": expected an array");
    std::vector<double> row;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (!rows[r][c].is_number()) throw ProfileError(at_cell(r, c) + ": expected a number");
      row.push_back(rows[r][c].get<double>());
    }
    doc.strategies.push_back(std::move(row));
  }
  if (root.contains("labels")) {
    const auto& labels = root["labels"];
    if (!labels.is_array()) throw ProfileError("field 'labels' must be an array of strings");
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (!labels[k].is_string()) {
        throw ProfileError("label " + std::to_string(k + 1) + ": expected a string");
      }
      doc.labels.push_back(labels[k].get<std::string>());
    }
  }
  doc.to_profile();
  return doc;
}

ProfileDocument read_profile_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProfileError("cannot open profile file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_profile_document(buffer.str());
}

std::string to_json_text(const ProfileDocument& doc) {
  json root;
  root["n"] = doc.n;
  root["strategies"] = doc.strategies;
  if (!doc.labels.empty()) root["labels"] = doc.labels;
  return root.dump(2) + "\n";
}

void write_profile_document(const ProfileDocument& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ProfileError("cannot write profile file '" + path + "'");
  out << to_json_text(doc);
}

}  // namespace lupi
