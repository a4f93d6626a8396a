#pragma once

#include <cstdint>

#include "sparsecurves/curve_system.hpp"

namespace sparsecurves {

/// Counts crossings of two same-necklace curves by drawing them.
///
/// The necklace is cut open into a planar strip: piece k occupies columns
/// [2k, 2k+1] with the four arc channels stacked vertically, annulus k occupies
/// [2k+1, 2k+2] and carries each curve as a monotone smoothstep strand sampled
/// at `resolution` segments. All coordinates are integers, so segment crossing
/// tests are exact. A crossing through a sample vertex is retried once with the
/// second curve's samples shifted by half a step.
///
/// Throws DomainError for curves on different necklaces, identical curves or
/// resolution outside [4, 4096]; throws std::runtime_error if the retry is still
/// degenerate.
std::uint64_t oracle_crossings_pl(const Curve& c1, const Curve& c2, const CompositeSurface& surface,
                                  std::uint32_t resolution = 8);

}  // namespace sparsecurves
