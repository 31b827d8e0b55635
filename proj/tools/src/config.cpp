#include "geoflow_cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace geoflow::cli {

namespace {

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::string type_name(const json& j) { return j.type_name(); }

}  // namespace

json parse_config(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // byte is 1-based and points just past the offending character.
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    std::string what = e.what();
    const auto colon = what.rfind(": ");
    if (colon != std::string::npos) what = what.substr(colon + 2);
    throw ConfigError(source + ": " + line_column(text, byte) + ": " + what);
  }
}

json load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.string());
}

Fields::Fields(const json& object, std::string path) : object_(object), path_(std::move(path)) {
  if (!object_.is_object()) {
    throw ConfigError("config field '" + (path_.empty() ? std::string("<root>") : path_) +
                      "': expected an object, got " + type_name(object_));
  }
}

std::string Fields::where(const std::string& key) const {
  return path_.empty() ? key : path_ + "." + key;
}

void Fields::fail(const std::string& key, const std::string& message) const {
  throw ConfigError("config field '" + where(key) + "': " + message);
}

double Fields::number(const std::string& key, std::optional<double> fallback, double lo, double hi) {
  used_.insert(key);
  if (!object_.contains(key)) {
    if (!fallback) fail(key, "required number is missing");
    return *fallback;
  }
  const json& v = object_.at(key);
  if (!v.is_number()) fail(key, "expected a number, got " + type_name(v));
  const double x = v.get<double>();
  if (!std::isfinite(x) || x < lo || x > hi) {
    std::ostringstream msg;
    msg << "value " << x << " outside [" << lo << ", " << hi << "]";
    fail(key, msg.str());
  }
  return x;
}

double Fields::positive(const std::string& key, std::optional<double> fallback, double hi) {
  const double x = number(key, fallback, 0.0, hi);
  if (!(x > 0.0)) fail(key, "must be positive");
  return x;
}

int Fields::integer(const std::string& key, std::optional<int> fallback, int lo, int hi) {
  used_.insert(key);
  if (!object_.contains(key)) {
    if (!fallback) fail(key, "required integer is missing");
    return *fallback;
  }
  const json& v = object_.at(key);
  if (!v.is_number_integer()) fail(key, "expected an integer, got " + type_name(v));
  const auto x = v.get<long long>();
  if (x < lo || x > hi) {
    fail(key, "value " + std::to_string(x) + " outside [" + std::to_string(lo) + ", " +
                  std::to_string(hi) + "]");
  }
  return static_cast<int>(x);
}

std::uint64_t Fields::seed(const std::string& key, std::uint64_t fallback) {
  used_.insert(key);
  if (!object_.contains(key)) return fallback;
  const json& v = object_.at(key);
  if (!v.is_number_unsigned()) fail(key, "expected a non-negative integer seed");
  return v.get<std::uint64_t>();
}

std::string Fields::text(const std::string& key, std::optional<std::string> fallback,
                         const std::vector<std::string>& allowed) {
  used_.insert(key);
  if (!object_.contains(key)) {
    if (!fallback) fail(key, "required string is missing");
    return *fallback;
  }
  const json& v = object_.at(key);
  if (!v.is_string()) fail(key, "expected a string, got " + type_name(v));
  auto s = v.get<std::string>();
  if (!allowed.empty() && std::find(allowed.begin(), allowed.end(), s) == allowed.end()) {
    std::string list;
    for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
    fail(key, "'" + s + "' is not one of {" + list + "}");
  }
  return s;
}

bool Fields::flag(const std::string& key, bool fallback) {
  used_.insert(key);
  if (!object_.contains(key)) return fallback;
  const json& v = object_.at(key);
  if (!v.is_boolean()) fail(key, "expected true or false, got " + type_name(v));
  return v.get<bool>();
}

const json* Fields::child(const std::string& key) {
  used_.insert(key);
  if (!object_.contains(key)) return nullptr;
  return &object_.at(key);
}

const json& Fields::required(const std::string& key) {
  const json* c = child(key);
  if (!c) fail(key, "required field is missing");
  return *c;
}

void Fields::finish() const {
  for (const auto& [key, value] : object_.items()) {
    if (!used_.contains(key)) fail(key, "unknown field");
  }
}

}  // namespace geoflow::cli
