#include "sparsecurves/table.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include <mpfr.h>

#include "json.hpp"

#include "sparsecurves/intersection.hpp"

namespace sparsecurves {

namespace {

constexpr int kLogDecimals = 15;

std::string render_scientific(mpfr_srcptr value) {
    char* buffer = nullptr;
    mpfr_asprintf(&buffer, "%.15Re", value);
    std::string s(buffer);
    mpfr_free_str(buffer);
    return s;
}

std::string exact_or_empty(const BoundValue& v) {
    if (!v.exact || v.exact->get_den() != 1) return v.exact ? v.exact->get_str() : std::string();
    return mpz_sizeinbase(v.exact->get_num_mpz_t(), 10) <= 30 ? v.exact->get_str() : std::string();
}

}  // namespace

std::string render_integer(const mpz_class& value) {
    if (mpz_sizeinbase(value.get_mpz_t(), 10) <= 30) return value.get_str();
    mpfr_t f;
    mpfr_init2(f, 128);
    mpfr_set_z(f, value.get_mpz_t(), MPFR_RNDN);
    std::string s = render_scientific(f);
    mpfr_clear(f);
    return s;
}

std::string render_ratio(const mpq_class& value) {
    mpfr_t f;
    mpfr_init2(f, 128);
    mpfr_set_q(f, value.get_mpq_t(), MPFR_RNDN);
    std::string s = render_scientific(f);
    mpfr_clear(f);
    return s;
}

std::vector<std::uint64_t> log_spaced(std::uint64_t lo, std::uint64_t hi, std::size_t points) {
    std::vector<std::uint64_t> out;
    if (points == 0 || lo > hi) return out;
    if (points == 1 || lo == hi) return {lo};
    const double a = std::log(static_cast<double>(lo));
    const double b = std::log(static_cast<double>(hi));
    for (std::size_t k = 0; k < points; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(points - 1);
        auto v = static_cast<std::uint64_t>(std::llround(std::exp(a + (b - a) * t)));
        out.push_back(std::clamp(v, lo, hi));
    }
    out.front() = lo;
    out.back() = hi;
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

TableRow compute_row(std::uint64_t g, const Fraction& alpha, const TableConfig& config) {
    const CompositeSurface surface = plan_composite(g, alpha);
    const mpz_class size = system_size(surface);
    const bool enumerable = surface.h - 1 < 32 && (std::uint64_t{1} << (2 * (surface.h - 1))) <= config.wordCap &&
                            size <= mpz_class(static_cast<unsigned long>(config.explicitCurveCap));

    TableRow row{surface,
                 enumerable ? CountingMode::Explicit : CountingMode::Analytic,
                 construction_count(g, alpha, config.precision),
                 lower_bound(g, alpha, config.precision),
                 upper_bound(g, PowerThreshold::power(alpha), config.precision),
                 {},
                 {},
                 false,
                 false,
                 false};
    row.crossings = enumerable ? total_crossings_explicit(generate_system(surface, config.wordCap), 1)
                               : total_crossings_analytic(surface);
    row.ratio = mpq_class(row.crossings, choose2(size));
    row.ratio.canonicalize();
    row.chainHolds = check_sparsity_chain(surface, row.crossings, size).holds();
    row.lowerWithinCount = lower_within_count(g, alpha, config.precision);
    row.lowerWithinUpper = lower_within_upper(g, alpha, config.precision);
    return row;
}

Table build_table(const TableConfig& config) {
    std::vector<std::pair<std::uint64_t, Fraction>> jobs;
    Table table;
    std::vector<std::uint64_t> genera = config.genera;
    std::sort(genera.begin(), genera.end());
    genera.erase(std::unique(genera.begin(), genera.end()), genera.end());
    std::vector<Fraction> alphas = config.alphas;
    std::sort(alphas.begin(), alphas.end());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
    for (auto g : genera) {
        for (const auto& a : alphas) {
            if (genus_admissible(g, a))
                jobs.emplace_back(g, a);
            else
                table.skipped.emplace_back(g, a);
        }
    }

    std::vector<std::optional<TableRow>> slots(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < jobs.size(); k = next++) slots[k] = compute_row(jobs[k].first, jobs[k].second, config);
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(jobs.size())));
    if (threads <= 1) {
        worker();
    } else {
        std::exception_ptr failure;
        std::mutex failureLock;
        {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t) {
                pool.emplace_back([&] {
                    try {
                        worker();
                    } catch (...) {
                        std::lock_guard lock(failureLock);
                        if (!failure) failure = std::current_exception();
                        next = jobs.size();
                    }
                    mpfr_free_cache2(MPFR_FREE_LOCAL_CACHE);  // constants cached per thread
                });
            }
        }
        if (failure) std::rethrow_exception(failure);
    }
    table.rows.reserve(slots.size());
    for (auto& s : slots) table.rows.push_back(std::move(*s));
    return table;
}

void write_csv(const Table& table, std::ostream& out) {
    out << "g,alpha,h,hPrime,baseGenus,mode,curves,curves_log10,lower,lower_log10,upper_tight_log10,upper_log10,"
           "crossings,ratio,chain_ok,lower_le_count,lower_le_upper\n";
    for (const auto& r : table.rows) {
        out << r.surface.g << ',' << r.surface.alpha.str() << ',' << r.surface.h << ',' << r.surface.hPrime << ','
            << r.surface.baseGenus << ',' << to_string(r.mode) << ',' << exact_or_empty(r.count) << ','
            << r.count.log10.fixed(kLogDecimals) << ',' << exact_or_empty(r.lower) << ','
            << r.lower.log10.fixed(kLogDecimals) << ',' << r.upper.tight.log10.fixed(kLogDecimals) << ','
            << r.upper.rounded.log10.fixed(kLogDecimals) << ',' << render_integer(r.crossings) << ','
            << render_ratio(r.ratio) << ',' << (r.chainHolds ? "true" : "false") << ','
            << (r.lowerWithinCount ? "true" : "false") << ',' << (r.lowerWithinUpper ? "true" : "false") << '\n';
    }
}

void write_json(const Table& table, std::ostream& out) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : table.rows) {
        nlohmann::ordered_json row;
        row["g"] = r.surface.g;
        row["alpha"] = r.surface.alpha.str();
        row["h"] = r.surface.h;
        row["hPrime"] = r.surface.hPrime;
        row["baseGenus"] = r.surface.baseGenus;
        row["mode"] = to_string(r.mode);
        row["curves"] = exact_or_empty(r.count);
        row["curvesLog10"] = r.count.log10.fixed(kLogDecimals);
        row["lower"] = exact_or_empty(r.lower);
        row["lowerLog10"] = r.lower.log10.fixed(kLogDecimals);
        row["upperTightLog10"] = r.upper.tight.log10.fixed(kLogDecimals);
        row["upperLog10"] = r.upper.rounded.log10.fixed(kLogDecimals);
        row["crossings"] = render_integer(r.crossings);
        row["ratio"] = render_ratio(r.ratio);
        row["chainOk"] = r.chainHolds;
        row["lowerLeCount"] = r.lowerWithinCount;
        row["lowerLeUpper"] = r.lowerWithinUpper;
        rows.push_back(std::move(row));
    }
    nlohmann::ordered_json skipped = nlohmann::ordered_json::array();
    for (const auto& [g, a] : table.skipped) skipped.push_back({{"g", g}, {"alpha", a.str()}});
    nlohmann::ordered_json doc;
    doc["rows"] = std::move(rows);
    doc["skipped"] = std::move(skipped);
    out << doc.dump(2) << '\n';
}

}  // namespace sparsecurves
