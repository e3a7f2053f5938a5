#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lamarle/curvature.hpp"

namespace lamarle {

inline constexpr const char* kReportCsvHeader = "u,v,class,P,K_forms,K_lamarle,abs_diff,rel_diff,status";

/// Shortest round-trip decimal text; empty for NaN.
[[nodiscard]] std::string format_number(double x);

/// One row per report; non-finite fields of error rows are left empty.
void write_report_csv(std::ostream& out, const std::vector<LamarleReport>& reports);
void write_report_json(std::ostream& out, const std::vector<LamarleReport>& reports);

/// Reads back what write_report_csv emits. Throws DefinitionError on a
/// malformed header or row.
[[nodiscard]] std::vector<LamarleReport> read_report_csv(std::istream& in);

/// nu x nv vertices "v x1 x2 x3" in row-major (u outer, v inner) order and
/// 1-based quad faces "f a b c d" over the grid cells.
void write_obj(std::ostream& out, const RuledSurface& surface, int nu, int nv);

}  // namespace lamarle
