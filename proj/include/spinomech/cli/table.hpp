#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace spinomech::cli {

inline constexpr const char* tool_version = "0.1.0";

std::uint64_t fnv1a64(std::string_view bytes);

// Fixed %.12g rendering shared by every writer, so identical runs produce
// byte-identical files.
std::string format_double(double v);

// Rectangular numeric result table with an optional per-row text label and a
// per-row failure reason. NaN cells are legal only with a nonempty reason.
class ResultTable {
 public:
  ResultTable(std::string title, std::vector<std::string> columns,
              std::vector<std::string> units);

  void set_metadata(const std::string& key, const std::string& value);
  void set_label_column(const std::string& name);

  void add_row(std::vector<double> values, std::string label = "",
               std::string reason = "");

  size_t rows() const { return rows_.size(); }
  size_t column_index(const std::string& name) const;
  double at(size_t row, const std::string& column) const;
  const std::string& label(size_t row) const { return labels_[row]; }
  const std::string& reason(size_t row) const { return reasons_[row]; }
  const std::vector<std::string>& columns() const { return columns_; }

  void write_csv(std::ostream& out) const;
  void write_json(std::ostream& out) const;

 private:
  std::string title_;
  std::vector<std::string> columns_, units_;
  std::string label_column_;
  std::vector<std::pair<std::string, std::string>> metadata_;
  std::vector<std::vector<double>> rows_;
  std::vector<std::string> labels_, reasons_;
};

}  // namespace spinomech::cli
