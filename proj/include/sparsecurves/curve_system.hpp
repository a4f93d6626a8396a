#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "sparsecurves/exact.hpp"
#include "sparsecurves/necklace.hpp"

namespace sparsecurves {

/// How a crossing total was obtained.
enum class CountingMode { Explicit, Analytic };
std::string_view to_string(CountingMode mode);

/// Default per-necklace enumeration cap (words).
inline constexpr std::uint64_t kDefaultWordCap = std::uint64_t{1} << 24;

/// Arc choice per piece of a necklace; letter i selects the arc used in piece i.
class CurveWord {
public:
    CurveWord() = default;
    explicit CurveWord(std::vector<ArcId> letters);

    /// Parses a string over "1234".
    static CurveWord parse(std::string_view text);

    [[nodiscard]] std::size_t size() const { return letters_.size(); }
    [[nodiscard]] ArcId operator[](std::size_t i) const { return ArcId(letters_[i]); }
    [[nodiscard]] int letter(std::size_t i) const { return letters_[i]; }
    [[nodiscard]] std::string str() const;

    friend auto operator<=>(const CurveWord&, const CurveWord&) = default;

private:
    std::vector<std::uint8_t> letters_;
};

struct Curve {
    std::uint64_t necklaceIndex = 0;
    CurveWord word;

    friend auto operator<=>(const Curve&, const Curve&) = default;
};

/// Crossing totals of a system together with the sparsity verdict.
struct CrossingReport {
    mpz_class totalCrossings;
    mpz_class pairCount;
    mpq_class average;  ///< totalCrossings / pairCount, reduced
    PowerThreshold sparsityThreshold;
    bool isSparse = false;
};

/// Curves on a composite surface, kept in canonical (necklace, word) order.
class CurveSystem {
public:
    /// Validates word lengths, necklace indices and distinctness.
    CurveSystem(CompositeSurface surface, std::vector<Curve> curves);

    [[nodiscard]] const CompositeSurface& surface() const { return surface_; }
    [[nodiscard]] std::span<const Curve> curves() const { return curves_; }
    [[nodiscard]] std::size_t size() const { return curves_.size(); }

    [[nodiscard]] const std::optional<CrossingReport>& cached_crossing() const { return cachedCrossing_; }
    /// Write-once; a second call throws std::logic_error.
    void set_cached_crossing(CrossingReport report);

private:
    CompositeSurface surface_;
    std::vector<Curve> curves_;
    std::optional<CrossingReport> cachedCrossing_;
};

/// Checks word length and necklace range of one curve against the surface.
void check_curve(const Curve& curve, const CompositeSurface& surface);

/// All 4^(h-1) words in lexicographic order. Throws CapExceededError past `cap`.
std::vector<CurveWord> generate_necklace_family(std::uint64_t h, std::uint64_t cap = kDefaultWordCap);

/// hPrime copies of the necklace family.
CurveSystem generate_system(const CompositeSurface& surface, std::uint64_t cap = kDefaultWordCap);

/// hPrime * 4^(h-1), without enumerating.
mpz_class system_size(const CompositeSurface& surface);

/// Builds a report from already computed totals.
CrossingReport make_report(std::uint64_t g, const mpz_class& curveCount, const mpz_class& totalCrossings,
                           const PowerThreshold& threshold);

/// Counts crossings explicitly and decides sparsity exactly. Needs at least 2 curves.
CrossingReport verify_sparsity(const CurveSystem& system, const PowerThreshold& threshold, unsigned threads = 1);

/// The construction's ratio chain cr/C(m,2) <= (h-1)/hPrime <= g^alpha / 2, both steps exact.
struct SparsityChain {
    bool ratioWithinPieceBound = false;
    bool pieceBoundWithinHalfPower = false;
    [[nodiscard]] bool holds() const { return ratioWithinPieceBound && pieceBoundWithinHalfPower; }
};

SparsityChain check_sparsity_chain(const CompositeSurface& surface, const mpz_class& totalCrossings,
                                   const mpz_class& curveCount);

}  // namespace sparsecurves
