#include "sparsecurves/fraction.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "sparsecurves/errors.hpp"

namespace sparsecurves {

namespace {

std::int64_t narrow(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw DomainError("fraction overflow");
    return static_cast<std::int64_t>(v);
}

Fraction make(__int128 num, __int128 den) {
    if (den == 0) throw DomainError("fraction with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    return Fraction(narrow(num), narrow(den));
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw DomainError("malformed fraction '" + std::string(whole) + "', expected p/q");
    return value;
}

}  // namespace

Fraction::Fraction(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("fraction with zero denominator");
    if (den < 0) {
        if (num == std::numeric_limits<std::int64_t>::min() || den == std::numeric_limits<std::int64_t>::min())
            throw DomainError("fraction overflow");
        num = -num;
        den = -den;
    }
    std::int64_t d = std::gcd(num, den);
    num_ = num / d;
    den_ = den / d;
}

Fraction Fraction::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Fraction(parse_int(text, text), 1);
    return Fraction(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

mpq_class Fraction::to_mpq() const {
    mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
    q.canonicalize();
    return q;
}

std::string Fraction::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Fraction operator+(const Fraction& a, const Fraction& b) {
    return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
}

Fraction operator-(const Fraction& a, const Fraction& b) {
    return make(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
}

Fraction operator*(const Fraction& a, const Fraction& b) {
    return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Fraction operator/(const Fraction& a, const Fraction& b) {
    return make(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
}

}  // namespace sparsecurves
