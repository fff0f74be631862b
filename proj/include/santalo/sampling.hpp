#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "santalo/diagram.hpp"
#include "santalo/geometry.hpp"

namespace santalo {

enum class SampleStrategy { random, grid };

struct SampleEntry {
  Triangle triangle;
  DiagramPoint point;
};

struct SampleSet {
  std::vector<SampleEntry> entries;
  std::uint64_t seed{0};
  SampleStrategy strategy{SampleStrategy::random};
};

/// n triangles with characterization parameters drawn uniformly from the unit
/// simplex (three exponentials, normalized). Driven by mt19937_64 with
/// explicit 53-bit uniforms, so output is identical across platforms for a
/// fixed seed.
SampleSet sample_random(std::size_t n, std::uint64_t seed);

/// Deterministic witness triangles on a grid of the diagram: nx abscissas on
/// [0, 1/2], ny ordinates per vertical slice (one entry when the slice is a
/// single point), in (x, y) lexicographic order.
SampleSet sample_grid(std::size_t nx, std::size_t ny);

}  // namespace santalo
