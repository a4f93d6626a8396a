#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sparsecurves/bounds.hpp"
#include "sparsecurves/curve_system.hpp"
#include "sparsecurves/necklace.hpp"

namespace sparsecurves {

struct TableConfig {
    std::vector<std::uint64_t> genera;
    std::vector<Fraction> alphas;
    PrecisionPolicy precision;
    std::uint64_t wordCap = kDefaultWordCap;
    /// Systems larger than this are counted analytically even when enumerable.
    std::uint64_t explicitCurveCap = 8192;
    unsigned threads = 1;
};

struct TableRow {
    CompositeSurface surface;
    CountingMode mode = CountingMode::Analytic;
    BoundValue count;
    BoundValue lower;
    UpperBound upper;
    mpz_class crossings;
    mpq_class ratio;  ///< crossings / C(count, 2)
    bool chainHolds = false;
    bool lowerWithinCount = false;
    bool lowerWithinUpper = false;
};

struct Table {
    std::vector<TableRow> rows;
    /// (g, alpha) combinations below the admissible genus, left out of `rows`.
    std::vector<std::pair<std::uint64_t, Fraction>> skipped;
};

/// `points` integers spread geometrically over [lo, hi], endpoints included, deduplicated.
std::vector<std::uint64_t> log_spaced(std::uint64_t lo, std::uint64_t hi, std::size_t points);

TableRow compute_row(std::uint64_t g, const Fraction& alpha, const TableConfig& config);

/// Rows ordered by (g, alpha) regardless of the worker count.
Table build_table(const TableConfig& config);

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);

/// Exact decimal up to 30 digits, otherwise d.ddddddddddddddde+N.
std::string render_integer(const mpz_class& value);
/// 15 significant digits in scientific notation.
std::string render_ratio(const mpq_class& value);

}  // namespace sparsecurves
