#include "coinsys/record.hpp"

namespace coinsys {

namespace {

std::string render_cell(const nlohmann::ordered_json& value) {
  if (value.is_null()) return "";
  if (value.is_string()) return value.get<std::string>();
  if (value.is_object()) {
    std::string out;
    for (const auto& [key, inner] : value.items()) {
      if (!out.empty()) out += ';';
      out += key + '=' + render_cell(inner);
    }
    return out;
  }
  return value.dump();
}

}  // namespace

OutputRecord& OutputRecord::set(std::string_view key,
                                nlohmann::ordered_json value) {
  fields_[std::string(key)] = std::move(value);
  return *this;
}

bool OutputRecord::has(std::string_view key) const {
  return fields_.contains(std::string(key));
}

std::string OutputRecord::to_json_line() const { return fields_.dump(); }

std::string OutputRecord::to_csv_row(const std::vector<std::string>& columns) const {
  std::string row;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) row += ',';
    auto it = fields_.find(columns[i]);
    if (it != fields_.end()) row += csv_escape(render_cell(*it));
  }
  return row;
}

std::string csv_header(const std::vector<std::string>& columns) {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(columns[i]);
  }
  return out;
}

std::string csv_escape(std::string_view cell) {
  if (cell.find_first_of(",\"\n") == std::string_view::npos) {
    return std::string(cell);
  }
  std::string out = "\"";
  for (char ch : cell) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

const std::vector<std::string>& system_columns() {
  static const std::vector<std::string> columns{
      "system",
      "orderly",
      "pattern",
      "min_counterexample",
      "greedy_count",
      "opt_count",
      "case_label",
      "family",
      "params",
      "greedy_representation",
      "optimal_representation",
  };
  return columns;
}

}  // namespace coinsys
