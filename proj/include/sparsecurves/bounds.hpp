#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

#include "sparsecurves/errors.hpp"
#include "sparsecurves/exact.hpp"
#include "sparsecurves/fraction.hpp"
#include "sparsecurves/interval.hpp"

namespace sparsecurves {

/// Decimal precision for transcendental evaluations. Undecidable comparisons
/// double the working digits until `maxDigits`.
struct PrecisionPolicy {
    unsigned digits = 50;
    unsigned maxDigits = 1000;
};

enum class FormulaTag {
    LowerBound,         ///< floor(2 g^((1-a)/2)) 2^(g^((1+a)/2)) / 16
    ConstructionCount,  ///< hPrime 4^(h-1)
    UpperBoundTight,    ///< (2g-1) e^(sqrt(64 (2g-2) f) + 6)
    UpperBoundRounded,  ///< 2g e^(sqrt(128 g f) + 6)
    LinearRegime,       ///< 2g e^(sqrt(128 g^(1+a)) + 6), a <= -1
};

std::string_view to_string(FormulaTag tag);

/// Value of a bound: exact when representable, and always a rigorous log10 enclosure.
struct BoundValue {
    FormulaTag tag;
    std::optional<mpq_class> exact;
    Interval log10;
};

/// Largest exact magnitude (in bits) kept alongside the log10 enclosure.
inline constexpr std::size_t kExactBitsCap = std::size_t{1} << 20;

BoundValue lower_bound(std::uint64_t g, const Fraction& alpha, const PrecisionPolicy& policy = {});
BoundValue construction_count(std::uint64_t g, const Fraction& alpha, const PrecisionPolicy& policy = {});

struct UpperBound {
    BoundValue tight;
    BoundValue rounded;
};

/// Throws DomainError for g < 2 or a nonpositive threshold.
UpperBound upper_bound(std::uint64_t g, const PowerThreshold& f, const PrecisionPolicy& policy = {});

/// lower_bound <= construction_count, certified by exact or interval comparison.
bool lower_within_count(std::uint64_t g, const Fraction& alpha, const PrecisionPolicy& policy = {});
/// lower_bound <= upper_bound(g, g^alpha).rounded, certified.
bool lower_within_upper(std::uint64_t g, const Fraction& alpha, const PrecisionPolicy& policy = {});
/// upper tight < upper rounded, certified.
bool tight_below_rounded(std::uint64_t g, const PowerThreshold& f, const PrecisionPolicy& policy = {});

enum class HpStatus {
    NotApplicable,  ///< m < e^6 (2g-1): the crossing inequality does not apply
    Consistent,     ///< left side < cr
    Inconsistent,   ///< left side >= cr: no genuine curve system has these numbers
    Undecidable,    ///< could not separate the two sides at maxDigits
};

std::string_view to_string(HpStatus status);

struct HpVerdict {
    HpStatus status = HpStatus::NotApplicable;
    Interval log10Threshold;                ///< log10(e^6 (2g-1))
    std::optional<Interval> log10Left;      ///< log10 of (m log(m / ((2g-1) e^6)))^2 / (128 (2g-2))
    std::optional<Interval> log10Crossings; ///< absent when cr = 0
    unsigned digitsUsed = 0;
};

/// Evaluates the Hubard-Parlier crossing inequality for m curves with cr crossings.
HpVerdict hp_inequality_check(std::uint64_t g, const mpz_class& m, const mpz_class& cr,
                              const PrecisionPolicy& policy = {});

/// Certifies e^6 (2g-1) < 2g e^6 < 2g e^(sqrt(128 g f) + 6).
bool trivial_regime_chain(std::uint64_t g, const PowerThreshold& f, const PrecisionPolicy& policy = {});

struct LinearRegimeBound {
    BoundValue value;
    Interval exponent;           ///< sqrt(128 g^(1+alpha)) + 6
    Interval linearCoefficient;  ///< e^(sqrt(128) + 6)
};

/// Throws DomainError for alpha > -1 or g < 2.
LinearRegimeBound linear_regime_bound(std::uint64_t g, const Fraction& alpha, const PrecisionPolicy& policy = {});

/// 3g - 3 <= linear_regime_bound(g, alpha), certified.
bool disjoint_maximum_within_linear(std::uint64_t g, const Fraction& alpha, const PrecisionPolicy& policy = {});

/// Runs `attempt(bits)` with doubling precision until it returns a value.
/// Throws PrecisionError past policy.maxDigits.
template <class Attempt>
auto refine(const PrecisionPolicy& policy, Attempt attempt) -> std::remove_cvref_t<decltype(*attempt(mpfr_prec_t{}))> {
    for (unsigned digits = policy.digits;; digits *= 2) {
        const unsigned used = digits > policy.maxDigits ? policy.maxDigits : digits;
        if (auto r = attempt(bits_for_digits(used))) return *r;
        if (used == policy.maxDigits) throw PrecisionError("comparison undecidable at " + std::to_string(used) + " digits");
    }
}

}  // namespace sparsecurves
