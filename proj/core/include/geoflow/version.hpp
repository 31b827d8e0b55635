#pragma once

#include <string>
#include <utility>
#include <vector>

namespace geoflow {

std::string version();

// (name, version) of the numerical back ends compiled into the library.
std::vector<std::pair<std::string, std::string>> dependency_versions();

}  // namespace geoflow
