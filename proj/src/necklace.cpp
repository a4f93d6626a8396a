#include "sparsecurves/necklace.hpp"

#include <string>

#include "sparsecurves/errors.hpp"
#include "sparsecurves/exact.hpp"

namespace sparsecurves {

ArcId::ArcId(int value) : value_(static_cast<std::uint8_t>(value)) {
    if (value < 1 || value > kCount) throw DomainError("arc label must be in 1..4, got " + std::to_string(value));
}

std::int64_t NecklaceSurface::euler_characteristic() const {
    // Annuli contribute 0.
    return -2 * static_cast<std::int64_t>(pieces_.size());
}

std::uint64_t NecklaceSurface::genus_from_euler() const {
    return static_cast<std::uint64_t>((2 - euler_characteristic()) / 2);
}

bool NecklaceSurface::is_single_cycle() const {
    const auto n = pieces_.size();
    if (n == 0 || annuli_.size() != n) return false;
    std::vector<bool> seen(n, false);
    std::uint64_t at = 0;
    for (std::size_t step = 0; step < n; ++step) {
        if (seen[at]) return false;
        seen[at] = true;
        if (annuli_[at].from != at) return false;
        at = annuli_[at].to;
    }
    return at == 0;
}

NecklaceSurface build_necklace(std::uint64_t h) {
    if (h < 2) throw DomainError("necklace genus must be at least 2, got " + std::to_string(h));
    NecklaceSurface surface;
    surface.genus_ = h;
    const std::uint64_t n = h - 1;
    surface.pieces_.reserve(n);
    surface.annuli_.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        surface.pieces_.push_back({i});
        surface.annuli_.push_back({i, i, (i + 1) % n});
    }
    return surface;
}

namespace {

void check_alpha(const Fraction& alpha) {
    if (alpha <= Fraction(-1, 1) || alpha > Fraction(1, 1))
        throw DomainError("alpha must lie in (-1, 1], got " + alpha.str());
}

}  // namespace

bool genus_admissible(std::uint64_t g, const Fraction& alpha) {
    check_alpha(alpha);
    // g^((q+p)/q) >= 16  <=>  g^(q+p) >= 16^q
    const auto p = alpha.num();
    const auto q = alpha.den();
    return ipow(mpz_class(static_cast<unsigned long>(g)), static_cast<std::uint64_t>(q + p)) >=
           ipow(mpz_class(16), static_cast<std::uint64_t>(q));
}

mpz_class minimal_admissible_genus(const Fraction& alpha) {
    check_alpha(alpha);
    const auto e = static_cast<std::uint64_t>(alpha.num() + alpha.den());
    const mpz_class target = ipow(mpz_class(16), static_cast<std::uint64_t>(alpha.den()));
    // Smallest g with g^e >= target: ceiling of the e-th root.
    mpz_class root;
    if (mpz_root(root.get_mpz_t(), target.get_mpz_t(), e) == 0) root += 1;
    return root;
}

void check_domain(std::uint64_t g, const Fraction& alpha) {
    if (!genus_admissible(g, alpha)) {
        throw DomainError("g >= " + minimal_admissible_genus(alpha).get_str() + " required for alpha = " +
                          alpha.str() + ", got g = " + std::to_string(g));
    }
}

CompositeSurface plan_composite(std::uint64_t g, const Fraction& alpha) {
    check_domain(g, alpha);
    const Fraction one(1, 1);
    const Fraction half(1, 2);
    const mpz_class gz(static_cast<unsigned long>(g));
    const mpz_class h = floor_scaled_power(mpq_class(1, 2), gz, (one + alpha) * half);
    const mpz_class hp = floor_scaled_power(mpq_class(2), gz, (one - alpha) * half);

    CompositeSurface s;
    s.g = g;
    s.alpha = alpha;
    s.h = h.get_ui();
    s.hPrime = hp.get_ui();
    if (s.h < 2 || s.h > g || s.h * s.hPrime > g)
        throw DomainError("internal: necklace plan violates 2 <= h <= g or h*h' <= g");
    s.baseGenus = g - s.h * s.hPrime;
    return s;
}

}  // namespace sparsecurves
