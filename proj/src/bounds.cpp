#include "sparsecurves/bounds.hpp"

#include <string>

#include "sparsecurves/curve_system.hpp"
#include "sparsecurves/necklace.hpp"

namespace sparsecurves {

std::string_view to_string(FormulaTag tag) {
    switch (tag) {
        case FormulaTag::LowerBound: return "lower_bound";
        case FormulaTag::ConstructionCount: return "construction_count";
        case FormulaTag::UpperBoundTight: return "upper_bound_tight";
        case FormulaTag::UpperBoundRounded: return "upper_bound_rounded";
        case FormulaTag::LinearRegime: return "linear_regime";
    }
    return "unknown";
}

std::string_view to_string(HpStatus status) {
    switch (status) {
        case HpStatus::NotApplicable: return "not_applicable";
        case HpStatus::Consistent: return "consistent";
        case HpStatus::Inconsistent: return "inconsistent";
        case HpStatus::Undecidable: return "undecidable";
    }
    return "unknown";
}

namespace {

mpz_class zg(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }

Interval ln10(mpfr_prec_t bits) { return log(Interval::of(10L, bits)); }

// Rational value of a power threshold enclosed at `bits`.
Interval threshold_interval(std::uint64_t g, const PowerThreshold& f, mpfr_prec_t bits) {
    if (f.coefficient <= 0) throw DomainError("threshold f(g) must be positive, got " + f.str());
    return Interval::of(f.coefficient, bits) * power_interval(zg(g), f.exponent.to_mpq(), bits);
}

BoundValue from_exact(FormulaTag tag, const mpq_class& value, mpfr_prec_t bits) {
    BoundValue v{tag, std::nullopt, log10(Interval::of(value, bits))};
    if (mpz_sizeinbase(value.get_num_mpz_t(), 2) <= kExactBitsCap) v.exact = value;
    return v;
}

BoundValue lower_bound_at(std::uint64_t g, const Fraction& alpha, mpfr_prec_t bits) {
    const CompositeSurface plan = plan_composite(g, alpha);
    const Fraction exponent = (Fraction(1, 1) + alpha) * Fraction(1, 2);
    if (auto e = exact_power(zg(g), exponent); e && e->get_den() == 1 && e->get_num() <= mpz_class(kExactBitsCap)) {
        mpq_class value(zg(plan.hPrime) * ipow(mpz_class(2), e->get_num().get_ui()), mpz_class(16));
        value.canonicalize();
        return from_exact(FormulaTag::LowerBound, value, bits);
    }
    const Interval log2 = log10(Interval::of(2L, bits));
    const Interval prefactor = log10(Interval::of(mpq_class(zg(plan.hPrime), mpz_class(16)), bits));
    return {FormulaTag::LowerBound, std::nullopt,
            prefactor + power_interval(zg(g), exponent.to_mpq(), bits) * log2};
}

BoundValue count_at(std::uint64_t g, const Fraction& alpha, mpfr_prec_t bits) {
    return from_exact(FormulaTag::ConstructionCount, mpq_class(system_size(plan_composite(g, alpha))), bits);
}

UpperBound upper_at(std::uint64_t g, const PowerThreshold& f, mpfr_prec_t bits) {
    if (g < 2) throw DomainError("upper bound needs g >= 2, got " + std::to_string(g));
    const Interval fv = threshold_interval(g, f, bits);
    const Interval six = Interval::of(6L, bits);
    const Interval l10 = ln10(bits);
    const Interval tightExp = sqrt(Interval::of(zg(64 * (2 * g - 2)), bits) * fv) + six;
    const Interval roundedExp = sqrt(Interval::of(zg(128 * g), bits) * fv) + six;
    return {
        {FormulaTag::UpperBoundTight, std::nullopt, log10(Interval::of(zg(2 * g - 1), bits)) + tightExp / l10},
        {FormulaTag::UpperBoundRounded, std::nullopt, log10(Interval::of(zg(2 * g), bits)) + roundedExp / l10},
    };
}

// Certified a <= b on log10 enclosures; nullopt when the enclosures overlap.
std::optional<bool> compare_le(const BoundValue& a, const BoundValue& b) {
    if (a.exact && b.exact) return *a.exact <= *b.exact;
    if (certainly_le(a.log10, b.log10)) return true;
    if (certainly_less(b.log10, a.log10)) return false;
    return std::nullopt;
}

}  // namespace

BoundValue lower_bound(std::uint64_t g, const Fraction& alpha, const PrecisionPolicy& policy) {
    return lower_bound_at(g, alpha, bits_for_digits(policy.digits));
}

BoundValue construction_count(std::uint64_t g, const Fraction& alpha, const PrecisionPolicy& policy) {
    return count_at(g, alpha, bits_for_digits(policy.digits));
}

UpperBound upper_bound(std::uint64_t g, const PowerThreshold& f, const PrecisionPolicy& policy) {
    return upper_at(g, f, bits_for_digits(policy.digits));
}

bool lower_within_count(std::uint64_t g, const Fraction& alpha, const PrecisionPolicy& policy) {
    return refine(policy, [&](mpfr_prec_t bits) { return compare_le(lower_bound_at(g, alpha, bits), count_at(g, alpha, bits)); });
}

bool lower_within_upper(std::uint64_t g, const Fraction& alpha, const PrecisionPolicy& policy) {
    return refine(policy, [&](mpfr_prec_t bits) {
        return compare_le(lower_bound_at(g, alpha, bits), upper_at(g, PowerThreshold::power(alpha), bits).rounded);
    });
}

bool tight_below_rounded(std::uint64_t g, const PowerThreshold& f, const PrecisionPolicy& policy) {
    return refine(policy, [&](mpfr_prec_t bits) -> std::optional<bool> {
        const UpperBound u = upper_at(g, f, bits);
        if (certainly_less(u.tight.log10, u.rounded.log10)) return true;
        if (certainly_le(u.rounded.log10, u.tight.log10)) return false;
        return std::nullopt;
    });
}

HpVerdict hp_inequality_check(std::uint64_t g, const mpz_class& m, const mpz_class& cr, const PrecisionPolicy& policy) {
    if (g < 2) throw DomainError("crossing inequality needs g >= 2, got " + std::to_string(g));
    if (m < 2) throw DomainError("crossing inequality needs at least 2 curves");
    if (cr < 0) throw DomainError("crossing number cannot be negative");

    for (unsigned digits = policy.digits;; digits *= 2) {
        const unsigned used = digits > policy.maxDigits ? policy.maxDigits : digits;
        const mpfr_prec_t bits = bits_for_digits(used);
        const Interval six = Interval::of(6L, bits);
        const Interval base = Interval::of(zg(2 * g - 1), bits);
        const Interval threshold = exp(six) * base;
        const Interval count = Interval::of(m, bits);

        HpVerdict v{HpStatus::Undecidable, log10(threshold), std::nullopt, std::nullopt, used};
        if (cr > 0) v.log10Crossings = log10(Interval::of(cr, bits));

        if (certainly_less(count, threshold)) {
            v.status = HpStatus::NotApplicable;
            return v;
        }
        if (certainly_less(threshold, count)) {
            const Interval logRatio = log(count) - log(base) - six;
            if (mpfr_sgn(logRatio.lo()) > 0) {
                const Interval root = count * logRatio;
                const Interval left = root * root / Interval::of(zg(128 * (2 * g - 2)), bits);
                v.log10Left = log10(left);
                const Interval crossings = Interval::of(cr, bits);
                if (certainly_less(left, crossings)) {
                    v.status = HpStatus::Consistent;
                    return v;
                }
                if (certainly_le(crossings, left)) {
                    v.status = HpStatus::Inconsistent;
                    return v;
                }
            }
        }
        if (used == policy.maxDigits) return v;
    }
}

bool trivial_regime_chain(std::uint64_t g, const PowerThreshold& f, const PrecisionPolicy& policy) {
    if (g < 2) throw DomainError("upper bound needs g >= 2, got " + std::to_string(g));
    return refine(policy, [&](mpfr_prec_t bits) -> std::optional<bool> {
        const Interval e6 = exp(Interval::of(6L, bits));
        const Interval first = e6 * Interval::of(zg(2 * g - 1), bits);
        const Interval second = e6 * Interval::of(zg(2 * g), bits);
        const Interval third = exp(sqrt(Interval::of(zg(128 * g), bits) * threshold_interval(g, f, bits)) +
                                   Interval::of(6L, bits)) *
                               Interval::of(zg(2 * g), bits);
        if (certainly_less(first, second) && certainly_less(second, third)) return true;
        if (certainly_le(second, first) || certainly_le(third, second)) return false;
        return std::nullopt;
    });
}

namespace {

LinearRegimeBound linear_at(std::uint64_t g, const Fraction& alpha, mpfr_prec_t bits) {
    if (alpha > Fraction(-1, 1)) throw DomainError("linear regime needs alpha <= -1, got " + alpha.str());
    if (g < 2) throw DomainError("linear regime needs g >= 2, got " + std::to_string(g));
    const Interval six = Interval::of(6L, bits);
    const Interval p = power_interval(zg(g), (Fraction(1, 1) + alpha).to_mpq(), bits);
    const Interval exponent = sqrt(Interval::of(128L, bits) * p) + six;
    const Interval coefficient = exp(sqrt(Interval::of(128L, bits)) + six);
    BoundValue value{FormulaTag::LinearRegime, std::nullopt,
                     log10(Interval::of(zg(2 * g), bits)) + exponent / ln10(bits)};
    return {std::move(value), exponent, coefficient};
}

}  // namespace

LinearRegimeBound linear_regime_bound(std::uint64_t g, const Fraction& alpha, const PrecisionPolicy& policy) {
    return linear_at(g, alpha, bits_for_digits(policy.digits));
}

bool disjoint_maximum_within_linear(std::uint64_t g, const Fraction& alpha, const PrecisionPolicy& policy) {
    return refine(policy, [&](mpfr_prec_t bits) -> std::optional<bool> {
        const LinearRegimeBound b = linear_at(g, alpha, bits);
        if (g < 2) return false;
        const Interval disjoint = log10(Interval::of(zg(3 * g - 3), bits));
        if (certainly_le(disjoint, b.value.log10)) return true;
        if (certainly_less(b.value.log10, disjoint)) return false;
        return std::nullopt;
    });
}

}  // namespace sparsecurves
