#pragma once

#include "geoflow/burgers.hpp"
#include "geoflow/diffeo.hpp"
#include "geoflow/errors.hpp"
#include "geoflow/exp_log.hpp"
#include "geoflow/geodesic.hpp"
#include "geoflow/operators.hpp"
#include "geoflow/parallel.hpp"
#include "geoflow/spectral.hpp"
#include "geoflow/transport.hpp"
#include "geoflow/version.hpp"

#define GEOFLOW_VERSION "0.1.0"
