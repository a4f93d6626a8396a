#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "sparsecurves/curve_system.hpp"
#include "sparsecurves/homology.hpp"
#include "sparsecurves/necklace.hpp"

namespace sparsecurves {

inline constexpr int kSchemaVersion = 1;

struct CertificateSummary {
    bool distinct = true;
    /// "homology" when classes were compared curve by curve, "structural" for
    /// analytic documents where the full family is implied.
    std::string method = "homology";
    std::optional<std::pair<Curve, Curve>> witness;

    friend bool operator==(const CertificateSummary&, const CertificateSummary&) = default;
};

/// JSON form of a curve system. Analytic documents carry counts only.
struct SystemDocument {
    int schemaVersion = kSchemaVersion;
    CompositeSurface surface;
    CountingMode mode = CountingMode::Explicit;
    mpz_class curveCount;
    std::vector<Curve> curves;
    std::optional<CrossingReport> report;
    std::optional<CertificateSummary> certificate;
};

bool operator==(const CrossingReport& a, const CrossingReport& b);
bool operator==(const SystemDocument& a, const SystemDocument& b);

SystemDocument make_document(const CurveSystem& system);
SystemDocument make_analytic_document(const CompositeSurface& surface);

std::string serialize(const SystemDocument& doc);
/// Throws ParseError; syntax errors carry "line L, column C".
SystemDocument parse_document(std::string_view text);

/// Writes through a sibling temporary file and renames it into place.
void write_atomically(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

}  // namespace sparsecurves
