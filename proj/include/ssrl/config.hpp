#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ssrl {

/// Line-oriented `[section]` / `key = value` document. '#' starts a comment.
/// Every key that is read gets recorded with its resolved value so the
/// effective configuration (defaults included) can be written back out;
/// keys that were never read are rejected by reject_unused().
class Config {
public:
  static Config parse(std::string_view text, const std::string& origin = "<config>");
  static Config load(const std::filesystem::path& path);

  bool has_section(const std::string& section) const;
  /// Sections named "prefix.*", in file order.
  std::vector<std::string> subsections(const std::string& prefix) const;
  bool has(const std::string& section, const std::string& key) const;

  std::string get_string(const std::string& section, const std::string& key, const std::string& fallback);
  std::string require_string(const std::string& section, const std::string& key);
  double get_double(const std::string& section, const std::string& key, double fallback);
  std::uint64_t get_u64(const std::string& section, const std::string& key, std::uint64_t fallback);
  std::size_t get_size(const std::string& section, const std::string& key, std::size_t fallback);
  bool get_bool(const std::string& section, const std::string& key, bool fallback);
  std::vector<double> get_doubles(const std::string& section, const std::string& key, const std::vector<double>& fallback);
  std::vector<std::string> get_strings(const std::string& section, const std::string& key,
                                       const std::vector<std::string>& fallback);

  /// Overrides (or adds) a value, e.g. from a command-line flag.
  void set(const std::string& section, const std::string& key, const std::string& value);

  /// Throws ConfigError naming the first key never read.
  void reject_unused() const;
  /// The values actually used, in section order of first use.
  std::string effective() const;

private:
  struct Entry {
    std::string value;
    int line = 0;
  };
  const Entry* find(const std::string& section, const std::string& key) const;
  void record(const std::string& section, const std::string& key, const std::string& value);

  std::string origin_;
  std::vector<std::string> section_order_;
  std::map<std::string, std::map<std::string, Entry>> values_;
  mutable std::set<std::pair<std::string, std::string>> used_;
  std::vector<std::string> effective_order_;
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> effective_;
};

}  // namespace ssrl
