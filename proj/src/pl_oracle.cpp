#include "sparsecurves/pl_oracle.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sparsecurves/errors.hpp"

namespace sparsecurves {

namespace {

struct Point {
    std::int64_t x;
    std::int64_t y;
};

using Polyline = std::vector<Point>;

int orientation(const Point& a, const Point& b, const Point& c) {
    const __int128 v = static_cast<__int128>(b.x - a.x) * (c.y - a.y) - static_cast<__int128>(b.y - a.y) * (c.x - a.x);
    return (v > 0) - (v < 0);
}

// nullopt when the segments touch degenerately (collinear overlap or a vertex on the other segment).
std::optional<bool> segments_cross(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
    if (std::max(p1.x, p2.x) < std::min(q1.x, q2.x) || std::max(q1.x, q2.x) < std::min(p1.x, p2.x)) return false;
    if (std::max(p1.y, p2.y) < std::min(q1.y, q2.y) || std::max(q1.y, q2.y) < std::min(p1.y, p2.y)) return false;
    const int o1 = orientation(p1, p2, q1);
    const int o2 = orientation(p1, p2, q2);
    const int o3 = orientation(q1, q2, p1);
    const int o4 = orientation(q1, q2, p2);
    if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return o1 != o2 && o3 != o4;
    // Some endpoint is collinear with the other segment; it only matters if it lies on it.
    auto onSegment = [](const Point& a, const Point& b, const Point& c) {
        return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
               c.y <= std::max(a.y, b.y);
    };
    if ((o1 == 0 && onSegment(p1, p2, q1)) || (o2 == 0 && onSegment(p1, p2, q2)) ||
        (o3 == 0 && onSegment(q1, q2, p1)) || (o4 == 0 && onSegment(q1, q2, p2)))
        return std::nullopt;
    return o1 != o2 && o3 != o4;
}

// Height of a curve inside a piece: channel of its arc, then its slot among the
// curves of the pair sharing that arc. Units of `unit`, channel width 6.
std::int64_t channel_height(const CurveWord& self, const CurveWord& other, std::size_t piece, std::int64_t unit) {
    const int arc = self.letter(piece);
    const bool shared = other.letter(piece) == arc;
    const std::int64_t slots = shared ? 3 : 2;  // bundle size + 1
    const std::int64_t rank = shared && other < self ? 1 : 0;
    return unit * (6 * (arc - 1) + (rank + 1) * 6 / slots);
}

Polyline draw(const CurveWord& self, const CurveWord& other, std::int64_t res, bool shifted, std::int64_t lift) {
    const std::size_t n = self.size();
    // x grid has 2*res steps per column so shifted samples stay integral.
    const std::int64_t column = 2 * res;
    // Smoothstep samples at t = k / (2 res) need (2 res)^3 in the denominator.
    const std::int64_t unit = column * column * column;
    Polyline line;
    line.reserve(n * (res + 2) + 1);
    for (std::size_t k = 0; k < n; ++k) {
        const std::int64_t y = channel_height(self, other, k, unit) + lift;
        const std::int64_t x0 = static_cast<std::int64_t>(2 * k) * column;
        line.push_back({x0, y});
        line.push_back({x0 + column, y});
        const std::int64_t yNext = channel_height(self, other, (k + 1) % n, unit) + lift;
        for (std::int64_t s = 1; s < res; ++s) {
            const std::int64_t step = 2 * s - (shifted ? 1 : 0);
            // 3t^2 - 2t^3 with t = step / column, scaled by column^3.
            const std::int64_t ease = 3 * step * step * column - 2 * step * step * step;
            line.push_back({x0 + column + step, y + (yNext - y) / unit * ease});
        }
        if (k + 1 == n) line.push_back({x0 + 2 * column, yNext});
    }
    return line;
}

std::optional<std::uint64_t> count_crossings(const Polyline& a, const Polyline& b) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        for (std::size_t j = 0; j + 1 < b.size(); ++j) {
            auto c = segments_cross(a[i], a[i + 1], b[j], b[j + 1]);
            if (!c) return std::nullopt;
            total += *c ? 1 : 0;
        }
    }
    return total;
}

}  // namespace

std::uint64_t oracle_crossings_pl(const Curve& c1, const Curve& c2, const CompositeSurface& surface,
                                  std::uint32_t resolution) {
    check_curve(c1, surface);
    check_curve(c2, surface);
    if (c1.necklaceIndex != c2.necklaceIndex) throw DomainError("oracle needs curves on the same necklace");
    if (c1.word == c2.word) throw DomainError("oracle needs distinct curves");
    if (resolution < 4 || resolution > 4096) throw DomainError("oracle resolution must be in [4, 4096]");

    const auto res = static_cast<std::int64_t>(resolution);
    // Symmetric strands can meet exactly at a vertex. Retry with the second
    // curve's samples shifted by half a step and lifted by a few grid units,
    // which is far below the channel spacing.
    const Polyline first = draw(c1.word, c2.word, res, false, 0);
    for (std::int64_t attempt = 0; attempt < 8; ++attempt) {
        if (auto n = count_crossings(first, draw(c2.word, c1.word, res, attempt % 2 == 1, attempt / 2))) return *n;
    }
    throw std::runtime_error("degenerate drawing for words " + c1.word.str() + " and " + c2.word.str());
}

}  // namespace sparsecurves
