#include "sparsecurves/exact.hpp"

#include "sparsecurves/errors.hpp"

namespace sparsecurves {

mpz_class ipow(const mpz_class& base, std::uint64_t exponent) {
    mpz_class result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
    return result;
}

mpq_class ipow(const mpq_class& base, std::uint64_t exponent) {
    mpq_class result(ipow(base.get_num(), exponent), ipow(base.get_den(), exponent));
    result.canonicalize();
    return result;
}

mpz_class choose2(const mpz_class& n) {
    if (n < 2) return 0;
    mpz_class r = n * (n - 1);
    return r / 2;
}

mpz_class floor_scaled_power(const mpq_class& scale, const mpz_class& base, const Fraction& exponent) {
    if (scale < 0 || base < 0) throw DomainError("floor_scaled_power: negative input");
    if (exponent.num() < 0) throw DomainError("floor_scaled_power: negative exponent");
    auto r = static_cast<std::uint64_t>(exponent.num());
    auto s = static_cast<std::uint64_t>(exponent.den());
    // floor(x^(1/s)) = floor(floor(x)^(1/s)) since k^s is an integer.
    mpz_class numer = ipow(mpz_class(scale.get_num()), s) * ipow(base, r);
    mpz_class denom = ipow(mpz_class(scale.get_den()), s);
    mpz_class radicand = numer / denom;
    mpz_class root;
    mpz_root(root.get_mpz_t(), radicand.get_mpz_t(), s);
    return root;
}

std::optional<mpq_class> exact_power(const mpz_class& base, const Fraction& exponent) {
    if (base <= 0) throw DomainError("exact_power: base must be positive");
    auto p = static_cast<std::uint64_t>(exponent.num() < 0 ? -exponent.num() : exponent.num());
    auto q = static_cast<std::uint64_t>(exponent.den());
    mpz_class raised = ipow(base, p);
    mpz_class root;
    if (mpz_root(root.get_mpz_t(), raised.get_mpz_t(), q) == 0) return std::nullopt;
    if (exponent.num() < 0) {
        mpq_class inv(mpz_class(1), root);
        inv.canonicalize();
        return inv;
    }
    return mpq_class(root);
}

std::optional<mpq_class> PowerThreshold::value_at(std::uint64_t g) const {
    auto p = exact_power(mpz_class(static_cast<unsigned long>(g)), exponent);
    if (!p) return std::nullopt;
    mpq_class v = coefficient * *p;
    v.canonicalize();
    return v;
}

std::string PowerThreshold::str() const {
    if (exponent == Fraction{}) return coefficient.get_str();
    std::string s = coefficient == 1 ? std::string() : coefficient.get_str() + "*";
    return s + "g^(" + exponent.str() + ")";
}

bool at_most(const mpq_class& x, const PowerThreshold& t, std::uint64_t g) {
    if (t.coefficient <= 0) throw DomainError("threshold coefficient must be positive");
    if (x <= 0) return true;
    mpq_class y = x / t.coefficient;
    const auto q = static_cast<std::uint64_t>(t.exponent.den());
    const std::int64_t p = t.exponent.num();
    const mpz_class gz(static_cast<unsigned long>(g));
    mpq_class lhs = ipow(y, q);
    if (p >= 0) return lhs <= mpq_class(ipow(gz, static_cast<std::uint64_t>(p)));
    return lhs * mpq_class(ipow(gz, static_cast<std::uint64_t>(-p))) <= 1;
}

}  // namespace sparsecurves
