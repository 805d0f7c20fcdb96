#pragma once

#include <cstdint>

namespace metricgeo {

struct GeneratorLimits {
  std::int64_t max_vertices = 10'000'000;
};

}  // namespace metricgeo
