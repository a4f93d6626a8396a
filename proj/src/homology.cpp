#include "sparsecurves/homology.hpp"

#include <algorithm>
#include <numeric>

#include "sparsecurves/errors.hpp"

namespace sparsecurves {

std::array<std::int64_t, 2> arc_offset(ArcId arc) {
    static constexpr std::array<std::array<std::int64_t, 2>, 4> kOffsets{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
    return kOffsets[static_cast<std::size_t>(arc.value() - 1)];
}

std::size_t piece_slot(const CompositeSurface& surface, std::uint64_t necklace, std::uint64_t piece) {
    return static_cast<std::size_t>(2 * surface.h * necklace + 2 * piece);
}

std::size_t longitude_slot(const CompositeSurface& surface, std::uint64_t necklace) {
    return piece_slot(surface, necklace, surface.h - 1);
}

HomologyClass curve_class(const Curve& curve, const CompositeSurface& surface) {
    check_curve(curve, surface);
    HomologyClass c;
    c.coefficients.assign(static_cast<std::size_t>(2 * surface.g), 0);
    for (std::uint64_t i = 0; i < curve.word.size(); ++i) {
        const auto off = arc_offset(curve.word[i]);
        const auto slot = piece_slot(surface, curve.necklaceIndex, i);
        c.coefficients[slot] += off[0];
        c.coefficients[slot + 1] += off[1];
    }
    // Every curve runs once around its necklace.
    c.coefficients[longitude_slot(surface, curve.necklaceIndex)] += 1;
    return c;
}

DistinctnessCertificate certify_distinct(std::span<const Curve> curves, const CompositeSurface& surface) {
    std::vector<std::size_t> canonical(curves.size());
    std::iota(canonical.begin(), canonical.end(), std::size_t{0});
    std::stable_sort(canonical.begin(), canonical.end(),
                     [&](std::size_t a, std::size_t b) { return curves[a] < curves[b]; });

    std::vector<HomologyClass> classes;
    classes.reserve(curves.size());
    for (auto idx : canonical) classes.push_back(curve_class(curves[idx], surface));

    // Group equal classes; within a group the smallest canonical positions collide first.
    std::vector<std::size_t> order(classes.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return classes[a] < classes[b]; });

    DistinctnessCertificate cert;
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
        if (classes[order[k]] != classes[order[k + 1]]) continue;
        std::pair<std::size_t, std::size_t> pair{order[k], order[k + 1]};
        if (!cert.witness || pair < *cert.witness) cert.witness = pair;
    }
    if (cert.witness) {
        cert.distinct = false;
        cert.witnessCurves = {curves[canonical[cert.witness->first]], curves[canonical[cert.witness->second]]};
    }
    return cert;
}

DistinctnessCertificate certify_distinct(const CurveSystem& system) {
    return certify_distinct(system.curves(), system.surface());
}

}  // namespace sparsecurves
