#pragma once

#include <iosfwd>
#include <string>

#include "estrada/bounds.hpp"
#include "estrada/compare.hpp"
#include "estrada/invariants.hpp"
#include "estrada/matrix_io.hpp"
#include "estrada/scan.hpp"

namespace estrada {

enum class Format { csv, json };

/// Fixed 12-significant-digit rendering ("%.12g"); the same value always
/// produces the same bytes.
std::string format_double(double v);

// invariants records
extern const char* const kInvariantsCsvHeader;
void render_invariants_csv(std::ostream& out, const std::string& graph6, const InvariantSet& inv);
void render_invariants_json(std::ostream& out, const std::string& graph6, const InvariantSet& inv);

// bound reports (CSV is long format: one row per bound)
extern const char* const kBoundsCsvHeader;
void render_bounds_csv(std::ostream& out, const BoundReport& report);
void render_bounds_json(std::ostream& out, const BoundReport& report);

// comparison table
extern const char* const kCompareCsvHeader;
void render_compare_csv(std::ostream& out, const CompareRow& row);
void render_compare_json(std::ostream& out, const CompareRow& row);

// scan summary (duration is intentionally not part of the payload so that
// identical inputs produce identical bytes; the CLI reports it on stderr)
extern const char* const kScanCsvHeader;
void render_scan_csv(std::ostream& out, const ScanSummary& summary);
void render_scan_json(std::ostream& out, const ScanSummary& summary);

// matrix report
void render_matrix_csv(std::ostream& out, const MatrixReport& report);
void render_matrix_json(std::ostream& out, const MatrixReport& report);

}  // namespace estrada
