#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "geoflow/geoflow.hpp"

namespace geoflow::cli {

using nlohmann::json;

// Schema violation in a config file; the message names the offending
// field path or the line/column of a syntax error.
class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

json parse_config(const std::string& text, const std::string& source);
json load_config(const std::filesystem::path& path);

// Typed, range-checked access to one JSON object. Every key read is marked;
// finish() rejects keys the schema never asked for.
class Fields {
 public:
  Fields(const json& object, std::string path);

  double number(const std::string& key, std::optional<double> fallback, double lo, double hi);
  // Like number() but the lower bound is excluded.
  double positive(const std::string& key, std::optional<double> fallback, double hi = 1e300);
  int integer(const std::string& key, std::optional<int> fallback, int lo, int hi);
  std::uint64_t seed(const std::string& key, std::uint64_t fallback);
  std::string text(const std::string& key, std::optional<std::string> fallback,
                   const std::vector<std::string>& allowed = {});
  bool flag(const std::string& key, bool fallback);
  // Returns nullptr when absent.
  const json* child(const std::string& key);
  const json& required(const std::string& key);
  bool has(const std::string& key) const { return object_.contains(key); }

  std::string where(const std::string& key) const;
  const std::string& path() const { return path_; }
  [[noreturn]] void fail(const std::string& key, const std::string& message) const;
  void finish() const;

 private:
  const json& object_;
  std::string path_;
  std::set<std::string> used_;
};

}  // namespace geoflow::cli
