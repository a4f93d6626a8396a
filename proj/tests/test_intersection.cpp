#include "doctest.h"

#include <random>

#include "sparsecurves/errors.hpp"
#include "sparsecurves/intersection.hpp"
#include "sparsecurves/pl_oracle.hpp"

using namespace sparsecurves;

namespace {

// Single necklace of genus h (alpha = 1 gives hPrime = 2, base genus 0).
CompositeSurface necklace_surface(std::uint64_t h) { return plan_composite(2 * h, Fraction(1, 1)); }

CurveWord random_word(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> arc(1, 4);
    std::vector<ArcId> letters;
    for (std::size_t i = 0; i < n; ++i) letters.emplace_back(arc(rng));
    return CurveWord(std::move(letters));
}

// Per-necklace crossing totals for h = 2..6, from an independent brute force
// over all word pairs using the interleaving rule.
constexpr std::uint64_t kNecklaceTotals[] = {0, 72, 2160, 50112, 1048320};

}  // namespace

TEST_CASE("strands_cross") {
    const BoundaryPosition a1{ArcId(1), 0}, a2{ArcId(2), 0};
    CHECK(strands_cross({a1, a1}, {a2, a2}) == 0);
    CHECK(strands_cross({a1, a2}, {a2, a1}) == 1);
    const BoundaryPosition b0{ArcId(3), 0}, b1{ArcId(3), 1};
    CHECK(strands_cross({b0, b0}, {b1, b1}) == 0);
    CHECK(strands_cross({b0, b1}, {b1, b0}) == 1);
    CHECK_THROWS_AS(strands_cross({a1, a2}, {a1, a2}), DomainError);
}

TEST_CASE("pair_intersection examples") {
    const auto s16 = plan_composite(16, Fraction(0, 1));
    CHECK(pair_intersection({0, CurveWord::parse("1")}, {1, CurveWord::parse("1")}, s16) == 0);
    CHECK(pair_intersection({0, CurveWord::parse("1")}, {0, CurveWord::parse("3")}, s16) == 0);
    CHECK_THROWS_AS(pair_intersection({0, CurveWord::parse("2")}, {0, CurveWord::parse("2")}, s16), DomainError);
    CHECK_THROWS_AS(pair_intersection({0, CurveWord::parse("12")}, {0, CurveWord::parse("2")}, s16), DomainError);

    const auto s36 = plan_composite(36, Fraction(0, 1));
    CHECK(pair_intersection({0, CurveWord::parse("12")}, {0, CurveWord::parse("21")}, s36) == 2);
    CHECK(pair_intersection({0, CurveWord::parse("12")}, {0, CurveWord::parse("13")}, s36) == 0);
    CHECK(pair_intersection({0, CurveWord::parse("12")}, {3, CurveWord::parse("21")}, s36) == 0);
}

TEST_CASE("pair_intersection properties") {
    std::mt19937_64 rng(11);
    for (std::uint64_t h = 2; h <= 9; ++h) {
        const auto s = necklace_surface(h);
        for (int trial = 0; trial < 300; ++trial) {
            Curve a{0, random_word(rng, h - 1)};
            Curve b{0, random_word(rng, h - 1)};
            if (a.word == b.word) continue;
            const auto ab = pair_intersection(a, b, s);
            CHECK(ab == pair_intersection(b, a, s));
            CHECK(ab <= h - 1);
            CHECK(ab % 2 == 0);  // sign changes around a cycle
            b.necklaceIndex = 1;
            CHECK(pair_intersection(a, b, s) == 0);
        }
    }
}

TEST_CASE("explicit totals") {
    CHECK(total_crossings_explicit(generate_system(plan_composite(16, Fraction(0, 1)))) == 0);
    CHECK(total_crossings_explicit(generate_system(plan_composite(36, Fraction(0, 1)))) == 864);
    CHECK(total_crossings_explicit(CurveSystem(plan_composite(36, Fraction(0, 1)),
                                               {{0, CurveWord::parse("12")}, {1, CurveWord::parse("21")}})) == 0);
    for (std::uint64_t h = 2; h <= 6; ++h) {
        const auto s = necklace_surface(h);
        const auto total = total_crossings_explicit(generate_system(s), 3);
        CHECK(total == 2 * kNecklaceTotals[h - 2]);
        CHECK(total / 2 <= necklace_crossing_bound(h));
    }
}

TEST_CASE("analytic totals match explicit counting") {
    for (std::uint64_t h = 2; h <= 6; ++h) {
        CHECK(necklace_crossings_analytic(h) == kNecklaceTotals[h - 2]);
        const auto s = necklace_surface(h);
        CHECK(total_crossings_analytic(s) == total_crossings_explicit(generate_system(s)));
    }
    CHECK(total_crossings_analytic(plan_composite(100, Fraction(0, 1))) == 20 * 50112);
    // The closed form equals the annulus-by-annulus sum well past the explicit range.
    for (std::uint64_t h = 2; h <= 60; ++h) {
        mpz_class sum = 0;
        for (std::uint64_t i = 0; i + 1 < h; ++i) sum += annulus_crossings_analytic(h - 1, i);
        CHECK(sum == necklace_crossings_analytic(h));
        CHECK(necklace_crossings_analytic(h) <= necklace_crossing_bound(h));
    }
    CHECK_THROWS_AS(annulus_crossings_analytic(3, 3), DomainError);
    CHECK_THROWS_AS(necklace_crossings_analytic(1), DomainError);
}

TEST_CASE("per-annulus analytic counts match a direct count") {
    for (std::uint64_t h = 3; h <= 5; ++h) {
        const auto family = generate_necklace_family(h);
        const std::uint64_t n = h - 1;
        for (std::uint64_t i = 0; i < n; ++i) {
            std::uint64_t direct = 0;
            for (std::size_t a = 0; a < family.size(); ++a)
                for (std::size_t b = a + 1; b < family.size(); ++b) {
                    auto [s1, s2] = annulus_strands({0, family[a]}, {0, family[b]}, i, n);
                    direct += static_cast<std::uint64_t>(strands_cross(s1, s2));
                }
            CHECK(annulus_crossings_analytic(n, i) == direct);
        }
    }
}

TEST_CASE("PL drawing oracle") {
    const auto s16 = plan_composite(16, Fraction(0, 1));
    CHECK(oracle_crossings_pl({0, CurveWord::parse("1")}, {0, CurveWord::parse("4")}, s16) == 0);
    const auto s36 = plan_composite(36, Fraction(0, 1));
    CHECK(oracle_crossings_pl({0, CurveWord::parse("12")}, {0, CurveWord::parse("21")}, s36) == 2);
    CHECK(oracle_crossings_pl({0, CurveWord::parse("11")}, {0, CurveWord::parse("12")}, s36) == 0);

    CHECK_THROWS_AS(oracle_crossings_pl({0, CurveWord::parse("1")}, {1, CurveWord::parse("4")}, s16), DomainError);
    CHECK_THROWS_AS(oracle_crossings_pl({0, CurveWord::parse("1")}, {0, CurveWord::parse("1")}, s16), DomainError);
    CHECK_THROWS_AS(oracle_crossings_pl({0, CurveWord::parse("1")}, {0, CurveWord::parse("2")}, s16, 3), DomainError);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::uint64_t> pickH(2, 7);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto h = pickH(rng);
        const auto s = necklace_surface(h);
        Curve a{0, random_word(rng, h - 1)};
        Curve b{0, random_word(rng, h - 1)};
        if (a.word == b.word) continue;
        CHECK(oracle_crossings_pl(a, b, s) == pair_intersection(a, b, s));
        CHECK(oracle_crossings_pl(a, b, s, 5) == pair_intersection(a, b, s));
    }
}
