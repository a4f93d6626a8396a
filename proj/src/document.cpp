#include "sparsecurves/document.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sparsecurves/errors.hpp"

namespace sparsecurves {

using Json = nlohmann::ordered_json;

bool operator==(const CrossingReport& a, const CrossingReport& b) {
    return a.totalCrossings == b.totalCrossings && a.pairCount == b.pairCount && a.average == b.average &&
           a.sparsityThreshold == b.sparsityThreshold && a.isSparse == b.isSparse;
}

bool operator==(const SystemDocument& a, const SystemDocument& b) {
    return a.schemaVersion == b.schemaVersion && a.surface == b.surface && a.mode == b.mode &&
           a.curveCount == b.curveCount && a.curves == b.curves && a.report == b.report &&
           a.certificate == b.certificate;
}

SystemDocument make_document(const CurveSystem& system) {
    SystemDocument doc;
    doc.surface = system.surface();
    doc.mode = CountingMode::Explicit;
    doc.curveCount = static_cast<unsigned long>(system.size());
    doc.curves.assign(system.curves().begin(), system.curves().end());
    if (system.cached_crossing()) doc.report = *system.cached_crossing();
    return doc;
}

SystemDocument make_analytic_document(const CompositeSurface& surface) {
    SystemDocument doc;
    doc.surface = surface;
    doc.mode = CountingMode::Analytic;
    doc.curveCount = system_size(surface);
    return doc;
}

namespace {

Json curve_json(const Curve& c) { return Json{{"necklace", c.necklaceIndex}, {"word", c.word.str()}}; }

Curve curve_from(const Json& j) {
    return {j.at("necklace").get<std::uint64_t>(), CurveWord::parse(j.at("word").get<std::string>())};
}

mpz_class integer_from(const Json& j, const char* field) {
    mpz_class v;
    const auto text = j.at(field).get<std::string>();
    if (text.empty() || v.set_str(text, 10) != 0) throw ParseError(std::string("field '") + field + "' is not an integer");
    return v;
}

mpq_class rational_from(const std::string& text, const char* field) {
    mpq_class v;
    if (text.empty() || v.set_str(text, 10) != 0 || v.get_den() == 0)
        throw ParseError(std::string("field '") + field + "' is not a rational");
    v.canonicalize();
    return v;
}

std::string position(std::string_view text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

std::string serialize(const SystemDocument& doc) {
    Json j;
    j["schemaVersion"] = doc.schemaVersion;
    j["surface"] = {{"g", doc.surface.g},
                    {"alpha", doc.surface.alpha.str()},
                    {"h", doc.surface.h},
                    {"hPrime", doc.surface.hPrime},
                    {"baseGenus", doc.surface.baseGenus}};
    j["mode"] = to_string(doc.mode);
    j["curveCount"] = doc.curveCount.get_str();
    if (doc.mode == CountingMode::Explicit) {
        Json curves = Json::array();
        for (const auto& c : doc.curves) curves.push_back(curve_json(c));
        j["curves"] = std::move(curves);
    }
    if (doc.report) {
        const auto& r = *doc.report;
        j["report"] = {{"totalCrossings", r.totalCrossings.get_str()},
                       {"pairCount", r.pairCount.get_str()},
                       {"average", r.average.get_str()},
                       {"threshold",
                        {{"coefficient", r.sparsityThreshold.coefficient.get_str()},
                         {"exponent", r.sparsityThreshold.exponent.str()}}},
                       {"isSparse", r.isSparse}};
    }
    if (doc.certificate) {
        const auto& c = *doc.certificate;
        Json cert{{"distinct", c.distinct}, {"method", c.method}};
        cert["witness"] = c.witness ? Json::array({curve_json(c.witness->first), curve_json(c.witness->second)})
                                    : Json(nullptr);
        j["certificate"] = std::move(cert);
    }
    return j.dump(2) + "\n";
}

SystemDocument parse_document(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw ParseError("malformed JSON at " + position(text, e.byte) + ": " + e.what());
    }

    try {
        SystemDocument doc;
        doc.schemaVersion = j.at("schemaVersion").get<int>();
        if (doc.schemaVersion != kSchemaVersion)
            throw ParseError("unsupported schemaVersion " + std::to_string(doc.schemaVersion));

        const Json& s = j.at("surface");
        const auto g = s.at("g").get<std::uint64_t>();
        const auto alpha = Fraction::parse(s.at("alpha").get<std::string>());
        try {
            doc.surface = plan_composite(g, alpha);
        } catch (const DomainError& e) {
            throw ParseError(std::string("invalid surface: ") + e.what());
        }
        if (doc.surface.h != s.at("h").get<std::uint64_t>() || doc.surface.hPrime != s.at("hPrime").get<std::uint64_t>() ||
            doc.surface.baseGenus != s.at("baseGenus").get<std::uint64_t>())
            throw ParseError("surface fields h/hPrime/baseGenus disagree with g and alpha");

        const auto mode = j.at("mode").get<std::string>();
        if (mode == "explicit")
            doc.mode = CountingMode::Explicit;
        else if (mode == "analytic")
            doc.mode = CountingMode::Analytic;
        else
            throw ParseError("unknown mode '" + mode + "'");
        doc.curveCount = integer_from(j, "curveCount");

        if (doc.mode == CountingMode::Explicit) {
            for (const auto& c : j.at("curves")) {
                Curve curve = curve_from(c);
                check_curve(curve, doc.surface);
                doc.curves.push_back(std::move(curve));
            }
            if (doc.curveCount != static_cast<unsigned long>(doc.curves.size()))
                throw ParseError("curveCount does not match the number of curves");
        } else if (doc.curveCount != system_size(doc.surface)) {
            throw ParseError("analytic curveCount does not match hPrime * 4^(h-1)");
        }

        if (j.contains("report") && !j["report"].is_null()) {
            const Json& r = j["report"];
            CrossingReport report;
            report.totalCrossings = integer_from(r, "totalCrossings");
            report.pairCount = integer_from(r, "pairCount");
            report.average = rational_from(r.at("average").get<std::string>(), "average");
            const Json& t = r.at("threshold");
            report.sparsityThreshold = {rational_from(t.at("coefficient").get<std::string>(), "coefficient"),
                                        Fraction::parse(t.at("exponent").get<std::string>())};
            report.isSparse = r.at("isSparse").get<bool>();
            doc.report = std::move(report);
        }
        if (j.contains("certificate") && !j["certificate"].is_null()) {
            const Json& c = j["certificate"];
            CertificateSummary cert;
            cert.distinct = c.at("distinct").get<bool>();
            cert.method = c.at("method").get<std::string>();
            if (c.contains("witness") && !c["witness"].is_null()) {
                const Json& w = c["witness"];
                if (!w.is_array() || w.size() != 2) throw ParseError("certificate witness must be a pair of curves");
                cert.witness = std::pair{curve_from(w[0]), curve_from(w[1])};
            }
            doc.certificate = std::move(cert);
        }
        return doc;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid system document: ") + e.what());
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid system document: ") + e.what());
    }
}

void write_atomically(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("failed writing " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace sparsecurves
