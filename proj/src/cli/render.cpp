#include <algorithm>
#include <sstream>

#include "vpvxy/cli.hpp"

namespace vpvxy::cli {

using json = nlohmann::ordered_json;

namespace {

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  // Real values: decimal first, hex in brackets.
  if (v.is_object() && v.contains("decimal") && v.contains("hex") && v.size() == 2) {
    return v["decimal"].get<std::string>() + "  [" + v["hex"].get<std::string>() + "]";
  }
  return v.dump();
}

bool is_leaf(const json& v) {
  return !v.is_structured() ||
         (v.is_object() && v.contains("decimal") && v.contains("hex") && v.size() == 2);
}

bool is_table(const json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const json& row) {
           return row.is_object() &&
                  std::all_of(row.begin(), row.end(), [](const json& cell) { return is_leaf(cell); });
         });
}

void render_table(std::ostream& out, const json& rows, const std::string& indent) {
  std::vector<std::string> columns;
  for (auto it = rows.front().begin(); it != rows.front().end(); ++it) columns.push_back(it.key());
  std::vector<std::size_t> widths;
  for (const auto& col : columns) {
    std::size_t w = col.size();
    for (const auto& row : rows) w = std::max(w, scalar_text(row.value(col, json())).size());
    widths.push_back(w);
  }
  auto line = [&](auto cell) {
    out << indent;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      std::string text = cell(i);
      out << text;
      if (i + 1 < columns.size()) out << std::string(widths[i] - text.size() + 2, ' ');
    }
    out << '\n';
  };
  line([&](std::size_t i) { return columns[i]; });
  for (const auto& row : rows) {
    line([&](std::size_t i) { return scalar_text(row.value(columns[i], json())); });
  }
}

void render_value(std::ostream& out, const std::string& key, const json& v, const std::string& indent) {
  if (is_leaf(v)) {
    out << indent << key << ": " << scalar_text(v) << '\n';
  } else if (is_table(v)) {
    out << indent << key << ":\n";
    render_table(out, v, indent + "  ");
  } else if (v.is_array()) {
    out << indent << key << ": " << (v.empty() ? "(none)" : "") << '\n';
    for (std::size_t i = 0; i < v.size(); ++i) render_value(out, std::to_string(i), v[i], indent + "  ");
  } else {
    out << indent << key << ":\n";
    for (auto it = v.begin(); it != v.end(); ++it) render_value(out, it.key(), it.value(), indent + "  ");
  }
}

}  // namespace

std::string render_human(const CommandResult& result) {
  std::ostringstream out;
  const json doc = result.to_json();
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() == "message" && result.message.empty()) continue;
    render_value(out, it.key(), it.value(), "");
  }
  return out.str();
}

}  // namespace vpvxy::cli
