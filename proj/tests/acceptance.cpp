// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "sparsecurves/bounds.hpp"
#include "sparsecurves/curve_system.hpp"
#include "sparsecurves/homology.hpp"
#include "sparsecurves/intersection.hpp"
#include "sparsecurves/pl_oracle.hpp"
#include "sparsecurves/table.hpp"

using namespace sparsecurves;

namespace {

struct Instance {
    std::uint64_t g;
    std::uint64_t h;
    std::uint64_t hPrime;
};

const Instance kInstances[] = {{16, 2, 8}, {36, 3, 12}, {64, 4, 16}, {100, 5, 20}};
const Fraction kZero{0, 1};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << ". " << name << ": " << detail << std::endl;
    if (!pass) ++failures;
}

void run(int id, const std::string& name, const std::function<bool(std::ostringstream&)>& body) {
    std::ostringstream detail;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail << "exception: " << e.what();
    }
    report(id, name, pass, detail.str());
}

CompositeSurface necklace_surface(std::uint64_t h) { return plan_composite(2 * h, Fraction(1, 1)); }

bool overlaps(const Interval& a, const Interval& b) { return !certainly_less(a, b) && !certainly_less(b, a); }

}  // namespace

int main() {
    run(1, "Construction counts", [](std::ostringstream& d) {
        const auto start = Clock::now();
        bool ok = true;
        for (const auto& in : kInstances) {
            const auto s = plan_composite(in.g, kZero);
            const auto sys = generate_system(s);
            const std::uint64_t expected = in.hPrime << (2 * (in.h - 1));
            ok = ok && s.h == in.h && s.hPrime == in.hPrime && s.baseGenus == 0 && sys.size() == expected;
            d << "g=" << in.g << " |G|=" << sys.size() << " ";
        }
        const double t = seconds_since(start);
        d << "time=" << t << "s (limit 10s)";
        return ok && t < 10.0;
    });

    run(2, "Sparsity chain", [](std::ostringstream& d) {
        const auto start = Clock::now();
        bool ok = true;
        for (const auto& in : kInstances) {
            const auto s = plan_composite(in.g, kZero);
            const auto sys = generate_system(s);
            const auto cr = total_crossings_explicit(sys, 1);
            const auto chain = check_sparsity_chain(s, cr, mpz_class(static_cast<unsigned long>(sys.size())));
            ok = ok && chain.holds();
            d << "g=" << in.g << " cr=" << cr.get_str() << " ratio=" << render_ratio(mpq_class(cr, choose2(sys.size())))
              << (chain.holds() ? " ok; " : " VIOLATED; ");
        }
        const double t = seconds_since(start);
        d << "time=" << t << "s single-threaded (limit 60s)";
        return ok && t < 60.0;
    });

    run(3, "Oracle equivalence", [](std::ostringstream& d) {
        std::mt19937_64 rng(20240611);
        std::uniform_int_distribution<std::uint64_t> pickH(2, 6);
        std::uniform_int_distribution<int> pickArc(1, 4);
        std::size_t agree = 0;
        constexpr std::size_t kPairs = 10000;
        for (std::size_t k = 0; k < kPairs; ++k) {
            const auto h = pickH(rng);
            const auto s = necklace_surface(h);
            auto word = [&] {
                std::vector<ArcId> letters;
                for (std::uint64_t i = 0; i + 1 < h; ++i) letters.emplace_back(pickArc(rng));
                return CurveWord(std::move(letters));
            };
            Curve a{0, word()}, b{0, word()};
            while (b.word == a.word) b.word = word();
            if (pair_intersection(a, b, s) == oracle_crossings_pl(a, b, s)) ++agree;
        }
        bool modes = true;
        for (std::uint64_t h = 2; h <= 6; ++h) {
            const auto family = generate_necklace_family(h);
            std::vector<Curve> curves;
            for (const auto& w : family) curves.push_back({0, w});
            const auto s = necklace_surface(h);
            const auto explicitTotal = total_crossings_explicit(CurveSystem(s, curves));
            modes = modes && explicitTotal == necklace_crossings_analytic(h);
        }
        d << "PL agreement " << agree << "/" << kPairs << ", analytic == explicit for h<=6: " << (modes ? "yes" : "no");
        return agree == kPairs && modes;
    });

    run(4, "Per-necklace crossing bound", [](std::ostringstream& d) {
        bool ok = true;
        for (std::uint64_t h = 2; h <= 6; ++h) {
            std::vector<Curve> curves;
            for (const auto& w : generate_necklace_family(h)) curves.push_back({0, w});
            const auto cr = total_crossings_explicit(CurveSystem(necklace_surface(h), curves));
            const auto bound = necklace_crossing_bound(h);
            ok = ok && cr <= bound;
            d << "h=" << h << ": " << cr.get_str() << "<=" << bound.get_str() << " ";
        }
        return ok;
    });

    run(5, "Homology certificate", [](std::ostringstream& d) {
        bool ok = true;
        for (const auto& in : kInstances) ok = ok && certify_distinct(generate_system(plan_composite(in.g, kZero))).distinct;
        d << "generated systems certified: " << (ok ? "yes" : "no");
        bool injective = true;
        for (std::uint64_t h = 2; h <= 6; ++h) {
            std::vector<Curve> curves;
            for (const auto& w : generate_necklace_family(h)) curves.push_back({0, w});
            injective = injective && certify_distinct(curves, necklace_surface(h)).distinct;
        }
        d << ", word-class injectivity h<=6: " << (injective ? "yes" : "no");
        return ok && injective;
    });

    run(6, "Bound consistency", [](std::ostringstream& d) {
        const auto l16 = lower_bound(16, kZero);
        const auto c16 = construction_count(16, kZero);
        bool ok = l16.exact == mpq_class(8) && c16.exact == mpq_class(32) && lower_within_count(16, kZero);
        std::size_t checked = 0, violations = 0;
        for (const auto& a : {Fraction(0, 1), Fraction(1, 2), Fraction(1, 1)}) {
            for (auto g : log_spaced(16, 1000000, 50)) {
                ++checked;
                if (!lower_within_count(g, a) || !lower_within_upper(g, a)) ++violations;
            }
        }
        d << "lower(16,0)=8 <= 32=count: " << (ok ? "yes" : "no") << "; sweep " << checked << " (g, alpha) points, "
          << violations << " violations";
        return ok && checked == 150 && violations == 0;
    });

    run(7, "Simplified display", [](std::ostringstream& d) {
        const auto bits = bits_for_digits(50);
        bool ok = true;
        for (std::uint64_t g : {10000u, 1000000u}) {
            const Interval root = sqrt(Interval::of(mpz_class(static_cast<unsigned long>(g)), bits));
            const Interval floorLine = root * log10(Interval::of(2L, bits)) - log10(Interval::of(16L, bits));
            const bool lowerOk = certainly_le(floorLine, lower_bound(g, kZero).log10);
            const Interval prefactor = log10(Interval::of(mpz_class(static_cast<unsigned long>(2 * g)), bits) *
                                             exp(Interval::of(6L, bits)));
            const Interval ceiling = root * log10(Interval::of(81938L, bits)) + prefactor;
            const bool upperOk = certainly_le(upper_bound(g, PowerThreshold::rational(1)).rounded.log10, ceiling);
            ok = ok && lowerOk && upperOk;
            d << "g=" << g << " lower " << (lowerOk ? "ok" : "VIOLATED") << ", upper " << (upperOk ? "ok" : "VIOLATED")
              << "; ";
        }
        const Interval constant = exp(sqrt(Interval::of(128L, bits)));
        const bool inRange = certainly_less(Interval::of(81938L, bits), constant) &&
                             certainly_less(constant, Interval::of(mpq_class(819382, 10), bits));
        d << "e^sqrt(128) = " << constant.fixed(6) << (inRange ? " in" : " NOT in") << " (81938.0, 81938.2)";
        return ok && inRange;
    });

    run(8, "Crossing-inequality trivial regime", [](std::ostringstream& d) {
        const auto s = plan_composite(16, kZero);
        const auto sys = generate_system(s);
        const auto cr = total_crossings_explicit(sys);
        const auto v = hp_inequality_check(16, mpz_class(static_cast<unsigned long>(sys.size())), cr);
        const bool chain = trivial_regime_chain(16, PowerThreshold::power(kZero));
        d << "m=32 cr=" << cr.get_str() << " verdict " << to_string(v.status) << ", threshold 10^"
          << v.log10Threshold.fixed(6) << "; chain e^6(2g-1) < 2g e^6 < 2g e^(sqrt(128gf)+6): " << (chain ? "yes" : "no");
        return v.status == HpStatus::NotApplicable && chain;
    });

    run(9, "Linear regime", [](std::ostringstream& d) {
        const auto bits = bits_for_digits(50);
        const Interval exponent = sqrt(Interval::of(128L, bits)) + Interval::of(6L, bits);
        const Interval ln10 = log(Interval::of(10L, bits));
        std::size_t mismatches = 0, exceed = 0;
        for (std::uint64_t g = 2; g <= 10000; ++g) {
            const auto b = linear_regime_bound(g, Fraction(-1, 1));
            const Interval expected = log10(Interval::of(mpz_class(static_cast<unsigned long>(2 * g)), bits)) + exponent / ln10;
            if (!overlaps(b.exponent, exponent) || !overlaps(b.value.log10, expected) || b.value.log10.width() > 1e-40)
                ++mismatches;
            if (!disjoint_maximum_within_linear(g, Fraction(-1, 1))) ++exceed;
        }
        d << "g in [2, 10^4]: value mismatches " << mismatches << ", 3g-3 above bound " << exceed
          << "; coefficient e^(sqrt(128)+6) = " << linear_regime_bound(2, Fraction(-1, 1)).linearCoefficient.fixed(4);
        return mismatches == 0 && exceed == 0;
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion/criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
