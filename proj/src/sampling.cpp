#include "santalo/sampling.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace santalo {
namespace {

// Top 53 bits of the generator word, mapped to [0, 1). The standard leaves
// <random> distributions implementation-defined, so uniforms are built by
// hand to keep sequences identical across platforms.
double uniform53(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

double exponential(std::mt19937_64& gen) {
  return -std::log(1.0 - uniform53(gen));
}

// Three i.i.d. exponentials normalized by their sum are uniform on the
// simplex x + y + z = 1.
RaviParams simplex_point(std::mt19937_64& gen) {
  for (;;) {
    const double ex = exponential(gen);
    const double ey = exponential(gen);
    const double ez = exponential(gen);
    const double sum = ex + ey + ez;
    if (sum > 0) return {ex / sum, ey / sum, ez / sum};
  }
}

}  // namespace

SampleSet sample_random(std::size_t n, std::uint64_t seed) {
  if (n < 1) {
    throw std::invalid_argument("sample_random needs at least one sample");
  }
  SampleSet set;
  set.seed = seed;
  set.strategy = SampleStrategy::random;
  set.entries.reserve(n);
  std::mt19937_64 gen(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const Triangle t = ravi_to_sides(simplex_point(gen));
    set.entries.push_back({t, map_point(t)});
  }
  return set;
}

SampleSet sample_grid(std::size_t nx, std::size_t ny) {
  if (nx < 2) {
    throw std::invalid_argument("sample_grid needs at least two abscissas");
  }
  if (ny < 1) {
    throw std::invalid_argument("sample_grid needs at least one ordinate");
  }
  SampleSet set;
  set.strategy = SampleStrategy::grid;
  set.entries.reserve(nx * ny);
  for (std::size_t i = 0; i < nx; ++i) {
    const double x = 0.5 * static_cast<double>(i) / static_cast<double>(nx - 1);
    const SliceBounds s = slice(x);
    const std::size_t rows = s.y_min == s.y_max ? 1 : ny;
    for (std::size_t j = 0; j < rows; ++j) {
      const double y = rows == 1 ? s.y_min
                                 : s.y_min + (s.y_max - s.y_min) *
                                                 static_cast<double>(j) /
                                                 static_cast<double>(ny - 1);
      const Triangle t = invert({x, y});
      set.entries.push_back({t, map_point(t)});
    }
  }
  return set;
}

}  // namespace santalo
