#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sparsecurves/curve_system.hpp"

namespace sparsecurves {

/// First homology class in a basis of 2g generators.
///
/// Slots are grouped by necklace: necklace k owns 2h consecutive slots, two per
/// piece handle followed by the (longitude, meridian) pair of the handle formed
/// by the necklace cycle. The base surface's 2*baseGenus slots come last and are
/// never touched by constructed curves.
struct HomologyClass {
    std::vector<std::int64_t> coefficients;

    friend auto operator<=>(const HomologyClass&, const HomologyClass&) = default;
};

/// Offset of each arc's class relative to arc 1 in its piece's two generators.
std::array<std::int64_t, 2> arc_offset(ArcId arc);

/// First slot owned by a piece (two slots) of a necklace.
std::size_t piece_slot(const CompositeSurface& surface, std::uint64_t necklace, std::uint64_t piece);
/// Slot of the longitude running once around a necklace.
std::size_t longitude_slot(const CompositeSurface& surface, std::uint64_t necklace);

HomologyClass curve_class(const Curve& curve, const CompositeSurface& surface);

struct DistinctnessCertificate {
    bool distinct = true;
    /// Earliest colliding pair, as positions in canonical (necklace, word) order.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    std::optional<std::pair<Curve, Curve>> witnessCurves;
};

/// Accepts arbitrary lists, including ones with repeated curves.
DistinctnessCertificate certify_distinct(std::span<const Curve> curves, const CompositeSurface& surface);
DistinctnessCertificate certify_distinct(const CurveSystem& system);

}  // namespace sparsecurves
