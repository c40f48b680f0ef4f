#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace spinomech::cli {

// Sectioned key-value configuration:
//   # comment
//   [section] or [section.sub]
//   key = 3.5 | true | "text" | [1, 2, 3] | ["a", "b"]
// Strings are always quoted. Unknown keys are rejected by consumers through
// require_known, so typos fail loudly instead of being ignored.
class ConfigValue {
 public:
  using Array = std::vector<double>;
  using StringArray = std::vector<std::string>;
  using Storage = std::variant<bool, double, std::string, Array, StringArray>;

  explicit ConfigValue(Storage v) : value_(std::move(v)) {}

  bool is_number() const { return std::holds_alternative<double>(value_); }
  bool is_string() const {
    return std::holds_alternative<std::string>(value_);
  }
  bool is_bool() const { return std::holds_alternative<bool>(value_); }
  bool is_array() const { return std::holds_alternative<Array>(value_); }

  double number(const std::string& context) const;
  const std::string& str(const std::string& context) const;
  bool boolean(const std::string& context) const;
  const Array& array(const std::string& context) const;
  const StringArray& string_array(const std::string& context) const;

 private:
  Storage value_;
};

class Config {
 public:
  static Config parse_file(const std::string& path);
  static Config parse_string(const std::string& text,
                             const std::string& name = "<string>");

  bool has_section(const std::string& section) const;
  bool has(const std::string& section, const std::string& key) const;
  const ConfigValue& at(const std::string& section,
                        const std::string& key) const;

  // sections in declaration order

  double number(const std::string& section, const std::string& key) const;
  double number_or(const std::string& section, const std::string& key,
                   double fallback) const;
  std::string str(const std::string& section, const std::string& key) const;
  std::string str_or(const std::string& section, const std::string& key,
                     const std::string& fallback) const;
  bool boolean_or(const std::string& section, const std::string& key,
                  bool fallback) const;
  std::vector<double> numbers(const std::string& section,
                              const std::string& key) const;

  std::vector<std::string> sections_with_prefix(
      const std::string& prefix) const;
  std::vector<std::string> keys(const std::string& section) const;

  // Throws listing any key of `section` outside `allowed`.
  void require_known(const std::string& section,
                     const std::vector<std::string>& allowed) const;

  const std::string& source_text() const { return source_; }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  std::string source_;
  std::map<std::string, std::map<std::string, ConfigValue>> sections_;
  std::vector<std::string> section_order_;
};

}  // namespace spinomech::cli
