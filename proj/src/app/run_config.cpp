#include "app/run_config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "lieb/errors.hpp"

namespace lieb::app {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || trim(text.substr(used)) != "" || !std::isfinite(v)) {
    fail(ErrorCode::InvalidArgument, "option '" + key + "' expects a finite number, got '" + text + "'");
  }
  return v;
}

}  // namespace

RunConfig::RunConfig(std::string subcommand) : subcommand_(std::move(subcommand)) {}

std::string RunConfig::normalize_key(const std::string& key) {
  std::string k = trim(key);
  while (!k.empty() && k.front() == '-') k.erase(k.begin());
  std::replace(k.begin(), k.end(), '_', '-');
  std::transform(k.begin(), k.end(), k.begin(), [](unsigned char c) { return std::tolower(c); });
  if (k.empty()) fail(ErrorCode::InvalidArgument, "empty option name");
  return k;
}

void RunConfig::set(const std::string& key, const std::string& value) {
  explicit_[normalize_key(key)] = trim(value);
}

void RunConfig::merge_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  merge_text(buf.str(), path);
}

void RunConfig::merge_text(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail(ErrorCode::Parse, origin + ":" + std::to_string(lineno) + ": expected key=value");
    }
    file_[normalize_key(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
}

std::optional<std::string> RunConfig::get(const std::string& key) const {
  const std::string k = normalize_key(key);
  if (auto it = explicit_.find(k); it != explicit_.end()) return it->second;
  if (auto it = file_.find(k); it != file_.end()) return it->second;
  return std::nullopt;
}

std::vector<std::string> RunConfig::keys() const {
  std::set<std::string> all;
  for (const auto& [k, v] : explicit_) all.insert(k);
  for (const auto& [k, v] : file_) all.insert(k);
  return {all.begin(), all.end()};
}

std::string RunConfig::get_string(const std::string& key, const std::string& fallback) const {
  return get(key).value_or(fallback);
}

double RunConfig::get_double(const std::string& key, double fallback) const {
  const auto v = get(key);
  return v ? parse_double(key, *v) : fallback;
}

int RunConfig::get_int(const std::string& key, int fallback) const {
  const auto v = get(key);
  if (!v) return fallback;
  const double d = parse_double(key, *v);
  if (d != std::floor(d) || std::abs(d) > 1e9) {
    fail(ErrorCode::InvalidArgument, "option '" + key + "' expects an integer, got '" + *v + "'");
  }
  return static_cast<int>(d);
}

bool RunConfig::get_bool(const std::string& key, bool fallback) const {
  const auto v = get(key);
  if (!v) return fallback;
  if (*v == "true" || *v == "1" || *v == "yes" || *v == "on") return true;
  if (*v == "false" || *v == "0" || *v == "no" || *v == "off") return false;
  fail(ErrorCode::InvalidArgument, "option '" + key + "' expects a boolean, got '" + *v + "'");
}

std::vector<double> RunConfig::get_list(const std::string& key, const std::vector<double>& fallback) const {
  const auto v = get(key);
  if (!v) return fallback;
  std::vector<double> out;
  std::stringstream ss(*v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(key, trim(item)));
  if (out.empty()) fail(ErrorCode::InvalidArgument, "option '" + key + "' expects a comma-separated list");
  return out;
}

}  // namespace lieb::app
