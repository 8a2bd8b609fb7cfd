#pragma once

// Flat key/value output records, serialised as JSON lines or CSV rows.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace coinsys {

class OutputRecord {
 public:
  /// Adds or replaces a field; insertion order is kept.
  OutputRecord& set(std::string_view key, nlohmann::ordered_json value);

  bool has(std::string_view key) const;
  const nlohmann::ordered_json& fields() const { return fields_; }

  /// One compact JSON object, no trailing newline.
  std::string to_json_line() const;

  /// Values for the given columns; missing fields become empty cells.
  /// Objects render as "k=v;k=v".
  std::string to_csv_row(const std::vector<std::string>& columns) const;

 private:
  nlohmann::ordered_json fields_ = nlohmann::ordered_json::object();
};

std::string csv_header(const std::vector<std::string>& columns);

/// Quotes a CSV cell when it contains a comma, quote or newline.
std::string csv_escape(std::string_view cell);

/// Column set shared by check, pattern, classify and family output.
const std::vector<std::string>& system_columns();

}  // namespace coinsys
