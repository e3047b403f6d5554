#pragma once

#include <optional>
#include <string>

#include "anick/kernel_cohomology.hpp"

namespace anick {

enum class ReportFormat { Table, Json, Csv };

std::optional<ReportFormat> parse_report_format(const std::string& name);

/// JSON and CSV layouts are stable; the table is for people.
std::string render_report(const CohomologyReport& r, ReportFormat format);

}  // namespace anick
