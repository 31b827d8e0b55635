#include "geoflow/version.hpp"

#include <Eigen/Core>
#include <fftw3.h>
#include <nlohmann/json.hpp>

#include "geoflow/geoflow.hpp"

namespace geoflow {

std::string version() { return GEOFLOW_VERSION; }

std::vector<std::pair<std::string, std::string>> dependency_versions() {
  const auto num = [](int a, int b, int c) {
    return std::to_string(a) + "." + std::to_string(b) + "." + std::to_string(c);
  };
  return {
      {"fftw", fftw_version},
      {"eigen", num(EIGEN_WORLD_VERSION, EIGEN_MAJOR_VERSION, EIGEN_MINOR_VERSION)},
      {"nlohmann_json", num(NLOHMANN_JSON_VERSION_MAJOR, NLOHMANN_JSON_VERSION_MINOR,
                            NLOHMANN_JSON_VERSION_PATCH)},
      {"compiler", __VERSION__},
  };
}

}  // namespace geoflow
