#include "cli.hpp"

#include <charconv>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "sparsecurves/bounds.hpp"
#include "sparsecurves/curve_system.hpp"
#include "sparsecurves/document.hpp"
#include "sparsecurves/errors.hpp"
#include "sparsecurves/homology.hpp"
#include "sparsecurves/intersection.hpp"
#include "sparsecurves/pl_oracle.hpp"
#include "sparsecurves/table.hpp"

namespace sparsecurves::cli {

namespace {

struct ConstructOptions {
    std::uint64_t g = 0;
    std::string alpha = "0/1";
    std::string out;
    bool analytic = false;
    std::uint64_t cap = kDefaultWordCap;
};

struct VerifyOptions {
    std::string in;
    std::string f = "gpow";
    std::string out;
    unsigned threads = 1;
    unsigned precision = 50;
};

struct BoundsOptions {
    std::string g;
    std::string alpha = "0/1";
    std::string format = "csv";
    std::string out;
    std::size_t logPoints = 0;
    unsigned precision = 50;
    std::uint64_t cap = kDefaultWordCap;
    std::uint64_t explicitCap = 8192;
    unsigned threads = 1;
};

struct OracleOptions {
    std::size_t pairs = 10000;
    std::uint64_t hMin = 2;
    std::uint64_t hMax = 6;
    std::uint64_t seed = 1;
    std::uint32_t resolution = 8;
};

std::uint64_t parse_u64(std::string_view text) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw DomainError("expected a nonnegative integer, got '" + std::string(text) + "'");
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, sep);)
        if (!item.empty()) parts.push_back(item);
    return parts;
}

// "16,25,36", "16..64" (every integer) or a single range with --log-points.
std::vector<std::uint64_t> parse_genera(const std::string& text, std::size_t logPoints) {
    std::vector<std::uint64_t> out;
    for (const auto& item : split(text, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_u64(item));
            continue;
        }
        const auto lo = parse_u64(item.substr(0, dots));
        const auto hi = parse_u64(item.substr(dots + 2));
        if (logPoints > 0) {
            auto pts = log_spaced(lo, hi, logPoints);
            out.insert(out.end(), pts.begin(), pts.end());
        } else {
            if (hi >= lo && hi - lo > 10'000'000) throw DomainError("range " + item + " too long; use --log-points");
            for (auto g = lo; g <= hi; ++g) out.push_back(g);
        }
    }
    return out;
}

PowerThreshold parse_threshold(const std::string& text, const Fraction& alpha) {
    if (text == "gpow") return PowerThreshold::power(alpha);
    const Fraction f = Fraction::parse(text);
    if (f <= Fraction{}) throw DomainError("threshold f must be positive, got " + text);
    return PowerThreshold::rational(f.to_mpq());
}

int construct(const ConstructOptions& o, std::ostream& out) {
    const auto surface = plan_composite(o.g, Fraction::parse(o.alpha));
    SystemDocument doc;
    if (o.analytic) {
        doc = make_analytic_document(surface);
    } else {
        try {
            doc = make_document(generate_system(surface, o.cap));
        } catch (const CapExceededError& e) {
            throw DomainError(std::string(e.what()) + " (pass --analytic)");
        }
    }
    write_atomically(o.out, serialize(doc));
    out << "curves: " << doc.curveCount.get_str() << '\n'
        << "h: " << surface.h << '\n'
        << "hPrime: " << surface.hPrime << '\n'
        << "baseGenus: " << surface.baseGenus << '\n'
        << "mode: " << to_string(doc.mode) << '\n';
    return kSparse;
}

int verify(const VerifyOptions& o, std::ostream& out) {
    SystemDocument doc = parse_document(read_file(o.in));
    const auto& surface = doc.surface;
    const PowerThreshold threshold = parse_threshold(o.f, surface.alpha);

    CertificateSummary cert;
    mpz_class crossings;
    if (doc.mode == CountingMode::Explicit) {
        const auto c = certify_distinct(doc.curves, surface);
        cert.distinct = c.distinct;
        cert.witness = c.witnessCurves;
        out << "certificate: " << (c.distinct ? "distinct homology classes" : "FAILED") << '\n';
        if (!c.distinct) {
            out << "collision: necklace " << c.witnessCurves->first.necklaceIndex << " word "
                << c.witnessCurves->first.word.str() << " vs necklace " << c.witnessCurves->second.necklaceIndex
                << " word " << c.witnessCurves->second.word.str() << '\n';
            doc.certificate = cert;
            if (!o.out.empty()) write_atomically(o.out, serialize(doc));
            return kCertificateFailure;
        }
        if (doc.curves.size() < 2) throw DomainError("undefined average: a system needs at least 2 curves");
        crossings = total_crossings_explicit(CurveSystem(surface, doc.curves), o.threads);
    } else {
        // The analytic family is the full word set, on which the class map is injective.
        cert.method = "structural";
        out << "certificate: distinct homology classes (structural)\n";
        crossings = total_crossings_analytic(surface);
    }
    doc.certificate = cert;

    const CrossingReport report = make_report(surface.g, doc.curveCount, crossings, threshold);
    doc.report = report;
    const PrecisionPolicy precision{o.precision, std::max(1000u, o.precision)};
    const HpVerdict hp = hp_inequality_check(surface.g, doc.curveCount, crossings, precision);

    out << "curves: " << render_integer(doc.curveCount) << '\n'
        << "crossings: " << render_integer(report.totalCrossings) << '\n'
        << "pairs: " << render_integer(report.pairCount) << '\n'
        << "average: " << render_ratio(report.average) << '\n'
        << "threshold: " << threshold.str() << '\n'
        << "sparse: " << (report.isSparse ? "yes" : "no") << '\n'
        << "hp_inequality: " << to_string(hp.status) << '\n';
    if (hp.log10Left) out << "hp_left_log10: " << hp.log10Left->fixed(15) << '\n';
    if (!o.out.empty()) write_atomically(o.out, serialize(doc));
    if (hp.status == HpStatus::Inconsistent) out << "warning: crossing count contradicts the crossing inequality\n";
    return report.isSparse ? kSparse : kNotSparse;
}

int bounds(const BoundsOptions& o, std::ostream& out) {
    TableConfig config;
    config.genera = parse_genera(o.g, o.logPoints);
    for (const auto& a : split(o.alpha, ',')) config.alphas.push_back(Fraction::parse(a));
    config.precision = {o.precision, std::max(1000u, o.precision)};
    config.wordCap = o.cap;
    config.explicitCurveCap = o.explicitCap;
    config.threads = o.threads;
    if (o.format != "csv" && o.format != "json") throw DomainError("format must be csv or json");

    const Table table = build_table(config);
    std::ostringstream text;
    if (o.format == "csv")
        write_csv(table, text);
    else
        write_json(table, text);
    if (o.out.empty())
        out << text.str();
    else
        write_atomically(o.out, text.str());
    return kSparse;
}

int oracle(const OracleOptions& o, std::ostream& out) {
    if (o.hMin < 2 || o.hMax < o.hMin) throw DomainError("need 2 <= h-min <= h-max");
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::uint64_t> pickH(o.hMin, o.hMax);
    std::uniform_int_distribution<int> pickArc(1, 4);
    std::size_t agree = 0;
    for (std::size_t k = 0; k < o.pairs; ++k) {
        const std::uint64_t h = pickH(rng);
        const auto surface = plan_composite(2 * h, Fraction(1, 1));
        auto randomWord = [&] {
            std::vector<ArcId> letters;
            for (std::uint64_t i = 0; i + 1 < h; ++i) letters.emplace_back(pickArc(rng));
            return CurveWord(std::move(letters));
        };
        Curve a{0, randomWord()};
        Curve b{0, randomWord()};
        while (b.word == a.word) b.word = randomWord();
        const auto fast = pair_intersection(a, b, surface);
        const auto drawn = oracle_crossings_pl(a, b, surface, o.resolution);
        if (fast == drawn) {
            ++agree;
        } else {
            out << "mismatch h=" << h << ' ' << a.word.str() << ' ' << b.word.str() << ": rule " << fast
                << ", drawing " << drawn << '\n';
        }
    }
    out << "pairs: " << o.pairs << "\nagreement: " << agree << '/' << o.pairs << '\n';
    return agree == o.pairs ? kSparse : kNotSparse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sparse curve systems on necklace surfaces", "sparsecurves"};
    app.set_config("--config", "", "Read options from a TOML/INI file");
    app.require_subcommand(1);

    ConstructOptions co;
    auto* construct_cmd = app.add_subcommand("construct", "Build the curve system for (g, alpha)");
    construct_cmd->add_option("--g", co.g, "Genus")->required();
    construct_cmd->add_option("--alpha", co.alpha, "Exponent as p/q in (-1, 1]");
    construct_cmd->add_option("--out", co.out, "Output JSON path")->required();
    construct_cmd->add_flag("--analytic", co.analytic, "Write counts only, no curve list");
    construct_cmd->add_option("--cap", co.cap, "Per-necklace word cap for enumeration");

    VerifyOptions vo;
    auto* verify_cmd = app.add_subcommand("verify", "Check sparsity and non-isotopy of a system document");
    verify_cmd->add_option("--in", vo.in, "System document")->required();
    verify_cmd->add_option("--f", vo.f, "Threshold: p/q or gpow (g^alpha)");
    verify_cmd->add_option("--out", vo.out, "Write the document with report and certificate");
    verify_cmd->add_option("--threads", vo.threads, "Worker threads for pair counting");
    verify_cmd->add_option("--precision", vo.precision, "Decimal digits for transcendental checks");

    BoundsOptions bo;
    auto* bounds_cmd = app.add_subcommand("bounds", "Tabulate construction size and bounds");
    bounds_cmd->add_option("--g", bo.g, "Genera: list and ranges, e.g. 16,25 or 16..64")->required();
    bounds_cmd->add_option("--alpha", bo.alpha, "Comma separated exponents p/q");
    bounds_cmd->add_option("--format", bo.format, "csv or json");
    bounds_cmd->add_option("--out", bo.out, "Output path (stdout when omitted)");
    bounds_cmd->add_option("--log-points", bo.logPoints, "Sample each range at this many log-spaced points");
    bounds_cmd->add_option("--precision", bo.precision, "Decimal digits");
    bounds_cmd->add_option("--cap", bo.cap, "Per-necklace word cap");
    bounds_cmd->add_option("--explicit-cap", bo.explicitCap, "Largest system counted pair by pair");
    bounds_cmd->add_option("--threads", bo.threads, "Rows computed in parallel");

    OracleOptions oo;
    auto* oracle_cmd = app.add_subcommand("oracle", "Compare the crossing rule with the drawing oracle");
    oracle_cmd->add_option("--pairs", oo.pairs, "Random pairs");
    oracle_cmd->add_option("--h-min", oo.hMin, "Smallest necklace genus");
    oracle_cmd->add_option("--h-max", oo.hMax, "Largest necklace genus");
    oracle_cmd->add_option("--seed", oo.seed, "Random seed");
    oracle_cmd->add_option("--resolution", oo.resolution, "Samples per annulus strand");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSparse;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSparse;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }

    try {
        if (*construct_cmd) return construct(co, out);
        if (*verify_cmd) return verify(vo, out);
        if (*bounds_cmd) return bounds(bo, out);
        if (*oracle_cmd) return oracle(oo, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const PrecisionError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    }
    return kDomainError;
}

}  // namespace sparsecurves::cli
