#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lieb::app {

/// Options for one run. Explicit settings win over values merged from a
/// key=value configuration file, whatever order the two arrive in.
class RunConfig {
 public:
  explicit RunConfig(std::string subcommand);

  const std::string& subcommand() const { return subcommand_; }

  void set(const std::string& key, const std::string& value);
  void merge_file(const std::string& path);
  void merge_text(const std::string& text, const std::string& origin);

  std::optional<std::string> get(const std::string& key) const;
  bool has(const std::string& key) const { return get(key).has_value(); }
  std::vector<std::string> keys() const;

  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<double> get_list(const std::string& key, const std::vector<double>& fallback) const;

  /// Normalizes "--max_iters" and "max-iters" to the same key.
  static std::string normalize_key(const std::string& key);

 private:
  std::string subcommand_;
  std::map<std::string, std::string> explicit_;
  std::map<std::string, std::string> file_;
};

}  // namespace lieb::app
