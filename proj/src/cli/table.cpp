#include "spinomech/cli/table.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace spinomech::cli {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

ResultTable::ResultTable(std::string title, std::vector<std::string> columns,
                         std::vector<std::string> units)
    : title_(std::move(title)),
      columns_(std::move(columns)),
      units_(std::move(units)) {
  if (units_.empty()) units_.resize(columns_.size());
  if (units_.size() != columns_.size())
    throw std::invalid_argument("ResultTable: units/columns mismatch");
}

void ResultTable::set_metadata(const std::string& key,
                               const std::string& value) {
  metadata_.emplace_back(key, value);
}

void ResultTable::set_label_column(const std::string& name) {
  label_column_ = name;
}

void ResultTable::add_row(std::vector<double> values, std::string label,
                          std::string reason) {
  if (values.size() != columns_.size())
    throw std::invalid_argument("ResultTable: row width mismatch");
  if (reason.empty())
    for (double v : values)
      if (std::isnan(v))
        throw std::invalid_argument("ResultTable: NaN cell without a reason");
  rows_.push_back(std::move(values));
  labels_.push_back(std::move(label));
  reasons_.push_back(std::move(reason));
}

size_t ResultTable::column_index(const std::string& name) const {
  for (size_t i = 0; i < columns_.size(); ++i)
    if (columns_[i] == name) return i;
  throw std::out_of_range("ResultTable: no column `" + name + "`");
}

double ResultTable::at(size_t row, const std::string& column) const {
  return rows_.at(row)[column_index(column)];
}

void ResultTable::write_csv(std::ostream& out) const {
  out << "# spinomech " << tool_version << " " << title_ << "\n";
  for (const auto& [k, v] : metadata_) out << "# " << k << ": " << v << "\n";
  out << "# columns:";
  for (size_t i = 0; i < columns_.size(); ++i) {
    out << (i ? ", " : " ") << columns_[i];
    if (!units_[i].empty()) out << " [" << units_[i] << "]";
  }
  out << "\n";
  if (!label_column_.empty()) out << label_column_ << ",";
  for (size_t i = 0; i < columns_.size(); ++i) out << columns_[i] << ",";
  out << "reason\n";
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (!label_column_.empty()) out << labels_[r] << ",";
    for (double v : rows_[r]) out << format_double(v) << ",";
    out << reasons_[r] << "\n";
  }
}

void ResultTable::write_json(std::ostream& out) const {
  nlohmann::ordered_json j;
  j["tool"] = std::string("spinomech ") + tool_version;
  j["title"] = title_;
  for (const auto& [k, v] : metadata_) j["metadata"][k] = v;
  j["columns"] = columns_;
  j["units"] = units_;
  if (!label_column_.empty()) {
    j["label_column"] = label_column_;
    j["labels"] = labels_;
  }
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : rows_) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (double v : r) {
      if (std::isnan(v))
        row.push_back(nullptr);
      else
        row.push_back(v);
    }
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["reasons"] = reasons_;
  out << j.dump(2) << "\n";
}

}  // namespace spinomech::cli
