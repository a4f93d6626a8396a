#pragma once

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace sparsecurves {

/// Closed interval [lo, hi] of MPFR floats with outward rounding.
///
/// Every operation rounds the lower end down and the upper end up, so the
/// result encloses the exact value whenever the inputs enclose theirs.
class Interval {
public:
    explicit Interval(mpfr_prec_t precision);
    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(const Interval& other);
    Interval& operator=(Interval&& other) noexcept;
    ~Interval();

    static Interval of(const mpz_class& value, mpfr_prec_t precision);
    static Interval of(const mpq_class& value, mpfr_prec_t precision);
    static Interval of(long value, mpfr_prec_t precision);

    [[nodiscard]] mpfr_prec_t precision() const { return precision_; }
    [[nodiscard]] mpfr_srcptr lo() const { return lo_; }
    [[nodiscard]] mpfr_srcptr hi() const { return hi_; }
    [[nodiscard]] double lo_double() const;
    [[nodiscard]] double hi_double() const;
    /// Width hi - lo rounded up.
    [[nodiscard]] double width() const;
    [[nodiscard]] bool contains(const mpq_class& value) const;

    /// Midpoint rendered with a fixed number of digits after the point.
    [[nodiscard]] std::string fixed(int decimals) const;

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    /// Throws DomainError when b contains zero.
    friend Interval operator/(const Interval& a, const Interval& b);

    friend Interval sqrt(const Interval& a);
    friend Interval exp(const Interval& a);
    friend Interval log(const Interval& a);
    friend Interval log10(const Interval& a);

    /// True when every point of a is below every point of b.
    friend bool certainly_less(const Interval& a, const Interval& b);
    friend bool certainly_le(const Interval& a, const Interval& b);

private:
    mpfr_prec_t precision_;
    mpfr_t lo_;
    mpfr_t hi_;
};

/// Bits needed for `digits` significant decimal digits, with guard bits.
mpfr_prec_t bits_for_digits(unsigned digits);

/// Enclosure of base^exponent for positive integer base and rational exponent;
/// a point enclosure when the power is rational.
Interval power_interval(const mpz_class& base, const mpq_class& exponent, mpfr_prec_t precision);

}  // namespace sparsecurves
