#pragma once

#include <compare>
#include <cstdint>

#include <gmpxx.h>

#include "sparsecurves/curve_system.hpp"
#include "sparsecurves/necklace.hpp"

namespace sparsecurves {

/// Endpoint slot on a boundary circle cut open to a segment: arc channel first,
/// then the rank inside the parallel bundle of curves using that arc.
struct BoundaryPosition {
    ArcId arc{1};
    std::uint64_t bundleRank = 0;

    friend auto operator<=>(const BoundaryPosition&, const BoundaryPosition&) = default;
};

/// Monotone strand across a cut annulus.
struct AnnulusStrand {
    BoundaryPosition left;
    BoundaryPosition right;

    friend bool operator==(const AnnulusStrand&, const AnnulusStrand&) = default;
};

/// 1 when the endpoint orders on the two sides disagree, 0 otherwise.
/// Throws DomainError when the strands share an endpoint.
int strands_cross(const AnnulusStrand& s1, const AnnulusStrand& s2);

/// Strands of two distinct same-necklace curves in annulus `annulus`. Bundle ranks
/// are relative to the pair, which preserves the order the full system induces.
std::pair<AnnulusStrand, AnnulusStrand> annulus_strands(const Curve& c1, const Curve& c2, std::uint64_t annulus,
                                                        std::uint64_t pieceCount);

/// Geometric intersection number of two distinct curves; at most h-1.
std::uint64_t pair_intersection(const Curve& c1, const Curve& c2, const CompositeSurface& surface);

/// Sum of pair_intersection over all unordered pairs. Rows of the pair triangle are
/// dealt round-robin to `threads` workers; the total does not depend on the worker count.
mpz_class total_crossings_explicit(const CurveSystem& system, unsigned threads = 1);

/// Crossing pairs inside annulus `annulus` for the full word family of one necklace
/// with `pieceCount` pieces, counted by label class.
mpz_class annulus_crossings_analytic(std::uint64_t pieceCount, std::uint64_t annulus);

/// Closed form for the crossing number of one full necklace family.
mpz_class necklace_crossings_analytic(std::uint64_t h);

/// hPrime times the per-necklace closed form.
mpz_class total_crossings_analytic(const CompositeSurface& surface);

/// (h-1) * C(4^(h-1), 2).
mpz_class necklace_crossing_bound(std::uint64_t h);

}  // namespace sparsecurves
