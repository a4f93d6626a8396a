#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "sparsecurves/fraction.hpp"

namespace sparsecurves {

/// floor(scale * base^exponent) for a nonnegative exponent, computed with
/// integer roots only: the result k is the largest integer with
/// k^s <= scale^s * base^r where exponent = r/s.
mpz_class floor_scaled_power(const mpq_class& scale, const mpz_class& base, const Fraction& exponent);

/// base^exponent when it is rational, nullopt when it is irrational.
std::optional<mpq_class> exact_power(const mpz_class& base, const Fraction& exponent);

/// Integer power with an unsigned exponent.
mpz_class ipow(const mpz_class& base, std::uint64_t exponent);
mpq_class ipow(const mpq_class& base, std::uint64_t exponent);

/// n choose 2.
mpz_class choose2(const mpz_class& n);

/// A positive quantity of the form coefficient * g^exponent.
///
/// Covers both plain rational thresholds (exponent 0) and the power family
/// g^alpha, whose values are irrational for most g.
struct PowerThreshold {
    mpq_class coefficient{1};
    Fraction exponent{};

    static PowerThreshold rational(const mpq_class& value) { return {value, Fraction{}}; }
    static PowerThreshold power(const Fraction& alpha) { return {mpq_class(1), alpha}; }

    /// The exact value at g, when rational.
    [[nodiscard]] std::optional<mpq_class> value_at(std::uint64_t g) const;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const PowerThreshold& a, const PowerThreshold& b) {
        return a.coefficient == b.coefficient && a.exponent == b.exponent;
    }
};

/// Exact test of x <= t(g) by raising both sides to integer powers.
bool at_most(const mpq_class& x, const PowerThreshold& t, std::uint64_t g);

}  // namespace sparsecurves
