#include "sparsecurves/curve_system.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sparsecurves/errors.hpp"
#include "sparsecurves/intersection.hpp"

namespace sparsecurves {

std::string_view to_string(CountingMode mode) { return mode == CountingMode::Explicit ? "explicit" : "analytic"; }

CurveWord::CurveWord(std::vector<ArcId> letters) {
    letters_.reserve(letters.size());
    for (ArcId a : letters) letters_.push_back(static_cast<std::uint8_t>(a.value()));
}

CurveWord CurveWord::parse(std::string_view text) {
    std::vector<ArcId> letters;
    letters.reserve(text.size());
    for (char c : text) {
        if (c < '1' || c > '4') throw DomainError("curve word must use letters 1-4, got '" + std::string(text) + "'");
        letters.emplace_back(c - '0');
    }
    return CurveWord(std::move(letters));
}

std::string CurveWord::str() const {
    std::string s;
    s.reserve(letters_.size());
    for (auto l : letters_) s.push_back(static_cast<char>('0' + l));
    return s;
}

void check_curve(const Curve& curve, const CompositeSurface& surface) {
    if (curve.word.size() != surface.piece_count()) {
        throw DomainError("curve word '" + curve.word.str() + "' has length " + std::to_string(curve.word.size()) +
                          ", surface has " + std::to_string(surface.piece_count()) + " pieces per necklace");
    }
    if (curve.necklaceIndex >= surface.hPrime) {
        throw DomainError("necklace index " + std::to_string(curve.necklaceIndex) + " out of range (hPrime = " +
                          std::to_string(surface.hPrime) + ")");
    }
}

CurveSystem::CurveSystem(CompositeSurface surface, std::vector<Curve> curves)
    : surface_(surface), curves_(std::move(curves)) {
    for (const auto& c : curves_) check_curve(c, surface_);
    std::sort(curves_.begin(), curves_.end());
    auto dup = std::adjacent_find(curves_.begin(), curves_.end());
    if (dup != curves_.end()) {
        throw DomainError("duplicate curve (necklace " + std::to_string(dup->necklaceIndex) + ", word " +
                          dup->word.str() + ")");
    }
}

void CurveSystem::set_cached_crossing(CrossingReport report) {
    if (cachedCrossing_) throw std::logic_error("crossing report already cached");
    cachedCrossing_ = std::move(report);
}

std::vector<CurveWord> generate_necklace_family(std::uint64_t h, std::uint64_t cap) {
    if (h < 2) throw DomainError("necklace genus must be at least 2, got " + std::to_string(h));
    const std::uint64_t n = h - 1;
    if (n >= 32 || (std::uint64_t{1} << (2 * n)) > cap) {
        throw CapExceededError("necklace family of 4^" + std::to_string(n) + " words exceeds the enumeration cap of " +
                               std::to_string(cap) + "; use analytic counting");
    }
    const std::uint64_t count = std::uint64_t{1} << (2 * n);
    std::vector<CurveWord> family;
    family.reserve(count);
    std::vector<ArcId> letters(n, ArcId(1));
    for (std::uint64_t code = 0; code < count; ++code) {
        // Most significant base-4 digit first gives lexicographic order.
        for (std::uint64_t i = 0; i < n; ++i) {
            const auto digit = (code >> (2 * (n - 1 - i))) & 3u;
            letters[i] = ArcId(static_cast<int>(digit) + 1);
        }
        family.emplace_back(letters);
    }
    return family;
}

CurveSystem generate_system(const CompositeSurface& surface, std::uint64_t cap) {
    const auto family = generate_necklace_family(surface.h, cap);
    std::vector<Curve> curves;
    curves.reserve(family.size() * surface.hPrime);
    for (std::uint64_t k = 0; k < surface.hPrime; ++k)
        for (const auto& w : family) curves.push_back({k, w});
    return CurveSystem(surface, std::move(curves));
}

mpz_class system_size(const CompositeSurface& surface) {
    return mpz_class(static_cast<unsigned long>(surface.hPrime)) * ipow(mpz_class(4), surface.h - 1);
}

CrossingReport make_report(std::uint64_t g, const mpz_class& curveCount, const mpz_class& totalCrossings,
                           const PowerThreshold& threshold) {
    if (curveCount < 2) throw DomainError("undefined average: a system needs at least 2 curves");
    CrossingReport r;
    r.totalCrossings = totalCrossings;
    r.pairCount = choose2(curveCount);
    r.average = mpq_class(totalCrossings, r.pairCount);
    r.average.canonicalize();
    r.sparsityThreshold = threshold;
    r.isSparse = at_most(r.average, threshold, g);
    return r;
}

CrossingReport verify_sparsity(const CurveSystem& system, const PowerThreshold& threshold, unsigned threads) {
    if (system.size() < 2) throw DomainError("undefined average: a system needs at least 2 curves");
    const auto total = total_crossings_explicit(system, threads);
    return make_report(system.surface().g, mpz_class(static_cast<unsigned long>(system.size())), total, threshold);
}

SparsityChain check_sparsity_chain(const CompositeSurface& surface, const mpz_class& totalCrossings,
                                   const mpz_class& curveCount) {
    const mpz_class pairs = choose2(curveCount);
    if (pairs == 0) throw DomainError("undefined average: a system needs at least 2 curves");
    const mpz_class hp(static_cast<unsigned long>(surface.hPrime));
    const mpz_class pieces(static_cast<unsigned long>(surface.h - 1));
    SparsityChain chain;
    chain.ratioWithinPieceBound = totalCrossings * hp <= pieces * pairs;
    mpq_class pieceBound(pieces, hp);
    pieceBound.canonicalize();
    chain.pieceBoundWithinHalfPower = at_most(pieceBound, {mpq_class(1, 2), surface.alpha}, surface.g);
    return chain;
}

}  // namespace sparsecurves
