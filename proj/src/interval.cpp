#include "sparsecurves/interval.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sparsecurves/errors.hpp"
#include "sparsecurves/exact.hpp"

namespace sparsecurves {

Interval::Interval(mpfr_prec_t precision) : precision_(precision) {
    mpfr_init2(lo_, precision_);
    mpfr_init2(hi_, precision_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : precision_(other.precision_) {
    mpfr_init2(lo_, precision_);
    mpfr_init2(hi_, precision_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other) {}

Interval& Interval::operator=(const Interval& other) {
    if (this != &other) {
        precision_ = other.precision_;
        mpfr_set_prec(lo_, precision_);
        mpfr_set_prec(hi_, precision_);
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
    if (this != &other) {
        mpfr_swap(lo_, other.lo_);
        mpfr_swap(hi_, other.hi_);
        std::swap(precision_, other.precision_);
    }
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::of(const mpz_class& value, mpfr_prec_t precision) {
    Interval r(precision);
    mpfr_set_z(r.lo_, value.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, value.get_mpz_t(), MPFR_RNDU);
    return r;
}

Interval Interval::of(const mpq_class& value, mpfr_prec_t precision) {
    Interval r(precision);
    mpfr_set_q(r.lo_, value.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, value.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::of(long value, mpfr_prec_t precision) { return of(mpz_class(value), precision); }

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::width() const {
    mpfr_t w;
    mpfr_init2(w, precision_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    const double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

bool Interval::contains(const mpq_class& value) const {
    return mpfr_cmp_q(lo_, value.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, value.get_mpq_t()) >= 0;
}

std::string Interval::fixed(int decimals) const {
    mpfr_t mid;
    mpfr_init2(mid, precision_ + 1);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    char* buffer = nullptr;
    mpfr_asprintf(&buffer, "%.*Rf", decimals, mid);
    std::string s(buffer);
    mpfr_free_str(buffer);
    mpfr_clear(mid);
    if (s.starts_with("-") && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

namespace {

mpfr_prec_t joint(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Interval operator+(const Interval& a, const Interval& b) {
    Interval r(joint(a, b));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r(joint(a, b));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    Interval r(joint(a, b));
    mpfr_t t;
    mpfr_init2(t, r.precision_);
    mpfr_srcptr as[2] = {a.lo_, a.hi_};
    mpfr_srcptr bs[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : as) {
        for (auto y : bs) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(t);
    return r;
}

Interval operator/(const Interval& a, const Interval& b) {
    if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) throw DomainError("interval division by a range containing 0");
    Interval inv(b.precision_);
    mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
    return a * inv;
}

Interval sqrt(const Interval& a) {
    if (mpfr_sgn(a.lo_) < 0) throw DomainError("interval sqrt of a negative range");
    Interval r(a.precision_);
    mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval exp(const Interval& a) {
    Interval r(a.precision_);
    mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval log(const Interval& a) {
    if (mpfr_sgn(a.lo_) <= 0) throw DomainError("interval log of a range reaching 0");
    Interval r(a.precision_);
    mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval log10(const Interval& a) {
    if (mpfr_sgn(a.lo_) <= 0) throw DomainError("interval log10 of a range reaching 0");
    Interval r(a.precision_);
    mpfr_log10(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_log10(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

bool certainly_less(const Interval& a, const Interval& b) { return mpfr_less_p(a.hi_, b.lo_) != 0; }
bool certainly_le(const Interval& a, const Interval& b) { return mpfr_lessequal_p(a.hi_, b.lo_) != 0; }

mpfr_prec_t bits_for_digits(unsigned digits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

Interval power_interval(const mpz_class& base, const mpq_class& exponent, mpfr_prec_t precision) {
    if (base <= 0) throw DomainError("power_interval: base must be positive");
    const mpz_class& den = exponent.get_den();
    const mpz_class& num = exponent.get_num();
    if (num == 0) return Interval::of(1L, precision);
    if (den.fits_slong_p() && num.fits_slong_p() && mpz_sizeinbase(base.get_mpz_t(), 2) * mpz_class(abs(num)).get_ui() < 4096) {
        if (auto exact = exact_power(base, Fraction(num.get_si(), den.get_si()))) return Interval::of(*exact, precision);
    }
    return exp(Interval::of(exponent, precision) * log(Interval::of(base, precision)));
}

}  // namespace sparsecurves
