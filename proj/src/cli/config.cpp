#include "spinomech/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spinomech::cli {

namespace {

[[noreturn]] void fail(const std::string& where, int line,
                       const std::string& what) {
  throw std::runtime_error(where + ":" + std::to_string(line) + ": " + what);
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// strips a trailing comment that is not inside a quoted string
std::string strip_comment(const std::string& s) {
  bool quoted = false;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') quoted = !quoted;
    if (s[i] == '#' && !quoted) return s.substr(0, i);
  }
  return s;
}

bool parse_number(const std::string& tok, double& out) {
  try {
    size_t used = 0;
    out = std::stod(tok, &used);
    return used == tok.size();
  } catch (const std::exception&) {
    return false;
  }
}

ConfigValue parse_scalar(const std::string& tok, const std::string& where,
                         int line) {
  if (tok == "true") return ConfigValue{true};
  if (tok == "false") return ConfigValue{false};
  if (tok.size() >= 2 && tok.front() == '"' && tok.back() == '"')
    return ConfigValue{tok.substr(1, tok.size() - 2)};
  double num;
  if (parse_number(tok, num)) return ConfigValue{num};
  fail(where, line, "cannot parse value `" + tok + "`");
}

ConfigValue parse_value(const std::string& raw, const std::string& where,
                        int line) {
  const std::string v = trim(raw);
  if (v.empty()) fail(where, line, "missing value");
  if (v.front() == '[') {
    if (v.back() != ']') fail(where, line, "unterminated array");
    std::vector<std::string> toks;
    std::string inner = v.substr(1, v.size() - 2);
    std::string cur;
    bool quoted = false;
    for (char c : inner) {
      if (c == '"') quoted = !quoted;
      if (c == ',' && !quoted) {
        toks.push_back(trim(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!trim(cur).empty()) toks.push_back(trim(cur));
    if (toks.empty()) return ConfigValue{ConfigValue::Array{}};
    if (toks.front().front() == '"') {
      ConfigValue::StringArray arr;
      for (const auto& t : toks) {
        if (t.size() < 2 || t.front() != '"' || t.back() != '"')
          fail(where, line, "mixed array element `" + t + "`");
        arr.push_back(t.substr(1, t.size() - 2));
      }
      return ConfigValue{arr};
    }
    ConfigValue::Array arr;
    for (const auto& t : toks) {
      double num;
      if (!parse_number(t, num))
        fail(where, line, "bad numeric array element `" + t + "`");
      arr.push_back(num);
    }
    return ConfigValue{arr};
  }
  return parse_scalar(v, where, line);
}

}  // namespace

double ConfigValue::number(const std::string& context) const {
  if (!is_number())
    throw std::runtime_error(context + ": expected a number");
  return std::get<double>(value_);
}

const std::string& ConfigValue::str(const std::string& context) const {
  if (!is_string())
    throw std::runtime_error(context + ": expected a quoted string");
  return std::get<std::string>(value_);
}

bool ConfigValue::boolean(const std::string& context) const {
  if (!is_bool()) throw std::runtime_error(context + ": expected true/false");
  return std::get<bool>(value_);
}

const ConfigValue::Array& ConfigValue::array(
    const std::string& context) const {
  if (!is_array())
    throw std::runtime_error(context + ": expected a numeric array");
  return std::get<Array>(value_);
}

const ConfigValue::StringArray& ConfigValue::string_array(
    const std::string& context) const {
  if (!std::holds_alternative<StringArray>(value_))
    throw std::runtime_error(context + ": expected a string array");
  return std::get<StringArray>(value_);
}

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_string(buf.str(), path);
}

Config Config::parse_string(const std::string& text, const std::string& name) {
  Config cfg;
  cfg.name_ = name;
  cfg.source_ = text;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(name, lineno, "malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) fail(name, lineno, "empty section name");
      if (cfg.sections_.find(section) == cfg.sections_.end())
        cfg.section_order_.push_back(section);
      cfg.sections_[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      fail(name, lineno, "expected `key = value`");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) fail(name, lineno, "empty key");
    if (section.empty())
      fail(name, lineno, "key `" + key + "` outside any section");
    auto& sec = cfg.sections_[section];
    if (sec.find(key) != sec.end())
      fail(name, lineno, "duplicate key `" + key + "`");
    sec.emplace(key, parse_value(line.substr(eq + 1), name, lineno));
  }
  return cfg;
}

bool Config::has_section(const std::string& section) const {
  return sections_.count(section) > 0;
}

bool Config::has(const std::string& section, const std::string& key) const {
  const auto it = sections_.find(section);
  return it != sections_.end() && it->second.count(key) > 0;
}

const ConfigValue& Config::at(const std::string& section,
                              const std::string& key) const {
  const auto it = sections_.find(section);
  if (it == sections_.end())
    throw std::runtime_error(name_ + ": missing section [" + section + "]");
  const auto kit = it->second.find(key);
  if (kit == it->second.end())
    throw std::runtime_error(name_ + ": missing key `" + key + "` in [" +
                             section + "]");
  return kit->second;
}

double Config::number(const std::string& section,
                      const std::string& key) const {
  return at(section, key).number(name_ + ": [" + section + "] " + key);
}

double Config::number_or(const std::string& section, const std::string& key,
                         double fallback) const {
  return has(section, key) ? number(section, key) : fallback;
}

std::string Config::str(const std::string& section,
                        const std::string& key) const {
  return at(section, key).str(name_ + ": [" + section + "] " + key);
}

std::string Config::str_or(const std::string& section, const std::string& key,
                           const std::string& fallback) const {
  return has(section, key) ? str(section, key) : fallback;
}

bool Config::boolean_or(const std::string& section, const std::string& key,
                        bool fallback) const {
  return has(section, key)
             ? at(section, key).boolean(name_ + ": [" + section + "] " + key)
             : fallback;
}

std::vector<double> Config::numbers(const std::string& section,
                                    const std::string& key) const {
  return at(section, key).array(name_ + ": [" + section + "] " + key);
}

std::vector<std::string> Config::sections_with_prefix(
    const std::string& prefix) const {
  std::vector<std::string> out;
  for (const auto& name : section_order_)
    if (name.rfind(prefix, 0) == 0) out.push_back(name);
  return out;
}

std::vector<std::string> Config::keys(const std::string& section) const {
  std::vector<std::string> out;
  const auto it = sections_.find(section);
  if (it == sections_.end()) return out;
  for (const auto& [key, _] : it->second) out.push_back(key);
  return out;
}

void Config::require_known(const std::string& section,
                           const std::vector<std::string>& allowed) const {
  const auto it = sections_.find(section);
  if (it == sections_.end()) return;
  std::string unknown;
  for (const auto& [key, _] : it->second)
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      unknown += (unknown.empty() ? "" : ", ") + key;
  if (!unknown.empty())
    throw std::runtime_error(name_ + ": unknown key(s) in [" + section +
                             "]: " + unknown);
}

}  // namespace spinomech::cli
