#include "anick/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace anick {

std::optional<ReportFormat> parse_report_format(const std::string& name) {
  if (name == "table") return ReportFormat::Table;
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  return std::nullopt;
}

namespace {

std::string render_json(const CohomologyReport& r) {
  nlohmann::ordered_json doc;
  doc["family"] = r.family;
  doc["caps"] = {{"n_max", r.n_max}, {"deg_max", r.d_max}};
  doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : r.entries) {
    doc["entries"].push_back({{"n", e.n},
                              {"d", e.d},
                              {"dim_space", e.dim_space},
                              {"dim_kernel", e.dim_kernel},
                              {"dim_ker_delta", e.dim_ker_delta},
                              {"dim_im_delta", e.dim_im_delta},
                              {"cohomology", e.cohomology}});
  }
  nlohmann::ordered_json totals = nlohmann::ordered_json::object();
  for (const auto& [n, t] : r.totals) totals[std::to_string(n)] = t;
  doc["totals"] = totals;
  return doc.dump(2) + "\n";
}

std::string render_csv(const CohomologyReport& r) {
  std::ostringstream os;
  os << "family,n,d,dim_space,dim_kernel,dim_ker_delta,dim_im_delta,cohomology\n";
  for (const auto& e : r.entries)
    os << r.family << ',' << e.n << ',' << e.d << ',' << e.dim_space << ',' << e.dim_kernel << ','
       << e.dim_ker_delta << ',' << e.dim_im_delta << ',' << e.cohomology << '\n';
  return os.str();
}

std::string render_table(const CohomologyReport& r) {
  std::ostringstream os;
  os << r.family << " (n <= " << r.n_max << ", d <= " << r.d_max << ")\n";
  os << std::setw(4) << "n" << std::setw(5) << "d" << std::setw(8) << "space" << std::setw(8)
     << "kernel" << std::setw(8) << "ker" << std::setw(8) << "im" << std::setw(5) << "H" << "\n";
  for (const auto& e : r.entries) {
    os << std::setw(4) << e.n << std::setw(5) << e.d << std::setw(8) << e.dim_space << std::setw(8)
       << e.dim_kernel << std::setw(8) << e.dim_ker_delta << std::setw(8) << e.dim_im_delta
       << std::setw(5) << e.cohomology << "\n";
  }
  os << "totals:";
  for (const auto& [n, t] : r.totals) os << " H^" << n << "=" << t;
  os << "\n";
  return os.str();
}

}  // namespace

std::string render_report(const CohomologyReport& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json:
      return render_json(r);
    case ReportFormat::Csv:
      return render_csv(r);
    case ReportFormat::Table:
      return render_table(r);
  }
  return {};
}

}  // namespace anick
