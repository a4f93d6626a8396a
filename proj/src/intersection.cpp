#include "sparsecurves/intersection.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <vector>

#include "sparsecurves/errors.hpp"
#include "sparsecurves/exact.hpp"

namespace sparsecurves {

int strands_cross(const AnnulusStrand& s1, const AnnulusStrand& s2) {
    if (s1.left == s2.left || s1.right == s2.right)
        throw DomainError("strands share an endpoint; a curve cannot be compared with itself");
    return (s1.left < s2.left) != (s1.right < s2.right) ? 1 : 0;
}

namespace {

// Relative bundle ranks: the lexicographically smaller word sits first in a shared bundle.
std::pair<BoundaryPosition, BoundaryPosition> positions_at(const CurveWord& w1, const CurveWord& w2,
                                                           std::size_t piece) {
    const ArcId a1 = w1[piece];
    const ArcId a2 = w2[piece];
    if (a1 != a2) return {{a1, 0}, {a2, 0}};
    const bool firstLower = w1 < w2;
    return {{a1, firstLower ? 0u : 1u}, {a2, firstLower ? 1u : 0u}};
}

// Same-necklace distinct words of equal length n >= 1.
std::uint64_t count_word_crossings(const CurveWord& w1, const CurveWord& w2, std::size_t n) {
    const bool firstLower = w1 < w2;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const int li = w1.letter(i), li2 = w2.letter(i);
        const int rj = w1.letter(j), rj2 = w2.letter(j);
        const bool leftBefore = li != li2 ? li < li2 : firstLower;
        const bool rightBefore = rj != rj2 ? rj < rj2 : firstLower;
        total += leftBefore != rightBefore ? 1 : 0;
    }
    return total;
}

}  // namespace

std::pair<AnnulusStrand, AnnulusStrand> annulus_strands(const Curve& c1, const Curve& c2, std::uint64_t annulus,
                                                        std::uint64_t pieceCount) {
    if (c1.necklaceIndex != c2.necklaceIndex) throw DomainError("strands only exist for curves on the same necklace");
    if (c1.word == c2.word) throw DomainError("identical curves have coincident strands");
    const std::uint64_t next = (annulus + 1) % pieceCount;
    auto [l1, l2] = positions_at(c1.word, c2.word, annulus);
    auto [r1, r2] = positions_at(c1.word, c2.word, next);
    return {{l1, r1}, {l2, r2}};
}

std::uint64_t pair_intersection(const Curve& c1, const Curve& c2, const CompositeSurface& surface) {
    check_curve(c1, surface);
    check_curve(c2, surface);
    if (c1.necklaceIndex != c2.necklaceIndex) return 0;
    if (c1.word == c2.word) throw DomainError("pair_intersection needs distinct curves, got word " + c1.word.str() + " twice");
    const std::uint64_t n = surface.piece_count();
    std::uint64_t total = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        auto [s1, s2] = annulus_strands(c1, c2, i, n);
        total += static_cast<std::uint64_t>(strands_cross(s1, s2));
    }
    return total;
}

mpz_class total_crossings_explicit(const CurveSystem& system, unsigned threads) {
    const auto curves = system.curves();
    const std::size_t m = curves.size();
    const std::size_t n = system.surface().piece_count();
    threads = std::max(1u, threads);

    auto work = [&](unsigned worker) {
        std::uint64_t sum = 0;
        for (std::size_t i = worker; i < m; i += threads) {
            const Curve& a = curves[i];
            for (std::size_t j = i + 1; j < m; ++j) {
                const Curve& b = curves[j];
                if (a.necklaceIndex != b.necklaceIndex) continue;
                sum += count_word_crossings(a.word, b.word, n);
            }
        }
        return sum;
    };

    std::vector<std::uint64_t> partial(threads, 0);
    if (threads == 1) {
        partial[0] = work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back([&, t] { partial[t] = work(t); });
    }
    mpz_class total = 0;
    for (auto p : partial) total += mpz_class(static_cast<unsigned long>(p));
    return total;
}

mpz_class annulus_crossings_analytic(std::uint64_t pieceCount, std::uint64_t annulus) {
    if (pieceCount == 0 || annulus >= pieceCount) throw DomainError("annulus index out of range");
    const std::uint64_t n = pieceCount;
    if (n == 1) return 0;  // both ends of the only annulus lie on the same piece
    const std::uint64_t i = annulus;
    const std::uint64_t j = (i + 1) % n;
    const mpz_class sixteen(16), four(4);

    // Different arcs on both sides: cross iff the two label orders disagree (6 * 6 choices).
    mpz_class total = 36 * ipow(sixteen, n - 2);

    // Same arc on one side: that side is ordered by the whole word, so the first
    // difference must occur strictly before the other side's index (and not at the
    // shared index) and point the opposite way. `before` counts those free positions.
    auto oneSideShared = [&](std::uint64_t before) -> mpz_class {
        mpz_class prefixPairs = (ipow(sixteen, before) - ipow(four, before)) / 2;
        return 4 * 6 * prefixPairs * ipow(sixteen, n - 2 - before);
    };
    total += oneSideShared(j - (i < j ? 1 : 0));  // shared arc on the left end
    total += oneSideShared(i - (j < i ? 1 : 0));  // shared arc on the right end
    return total;
}

mpz_class necklace_crossings_analytic(std::uint64_t h) {
    if (h < 2) throw DomainError("necklace genus must be at least 2, got " + std::to_string(h));
    const std::uint64_t n = h - 1;
    if (n == 1) return 0;
    // Sum of annulus_crossings_analytic over all annuli:
    //   36 n 16^(n-2) + 24 S + 12 (16^(n-2) - 4^(n-2)),
    //   S = (n-1) 16^(n-2) - 4^(n-2) (4^(n-1) - 1) / 3.
    const mpz_class p16 = ipow(mpz_class(16), n - 2);
    const mpz_class p4 = ipow(mpz_class(4), n - 2);
    const mpz_class nz(static_cast<unsigned long>(n));
    const mpz_class s = (nz - 1) * p16 - p4 * (4 * p4 - 1) / 3;
    return 36 * nz * p16 + 24 * s + 12 * (p16 - p4);
}

mpz_class total_crossings_analytic(const CompositeSurface& surface) {
    return mpz_class(static_cast<unsigned long>(surface.hPrime)) * necklace_crossings_analytic(surface.h);
}

mpz_class necklace_crossing_bound(std::uint64_t h) {
    if (h < 2) throw DomainError("necklace genus must be at least 2, got " + std::to_string(h));
    return mpz_class(static_cast<unsigned long>(h - 1)) * choose2(ipow(mpz_class(4), h - 1));
}

}  // namespace sparsecurves
