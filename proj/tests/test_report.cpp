#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "anick/kernel_cohomology.hpp"
#include "anick/report.hpp"

using namespace anick;

namespace {

CohomologyReport sample() {
  CohomologyReport r;
  r.family = "U3";
  r.n_max = 2;
  r.d_max = 3;
  r.entries = {{1, 0, 1, 1, 0, 1, 0}, {2, 3, 2, 1, 1, 0, 1}};
  r.totals = {{1, 0}, {2, 1}};
  return r;
}

}  // namespace

TEST_CASE("format names") {
  CHECK(parse_report_format("json") == ReportFormat::Json);
  CHECK(parse_report_format("csv") == ReportFormat::Csv);
  CHECK(parse_report_format("table") == ReportFormat::Table);
  CHECK_FALSE(parse_report_format("xml"));
}

TEST_CASE("json layout") {
  const auto doc = nlohmann::json::parse(render_report(sample(), ReportFormat::Json));
  CHECK(doc["family"] == "U3");
  CHECK(doc["caps"]["n_max"] == 2);
  CHECK(doc["caps"]["deg_max"] == 3);
  REQUIRE(doc["entries"].size() == 2);
  const auto& e = doc["entries"][1];
  CHECK(e["n"] == 2);
  CHECK(e["d"] == 3);
  CHECK(e["dim_space"] == 2);
  CHECK(e["dim_kernel"] == 1);
  CHECK(e["dim_ker_delta"] == 1);
  CHECK(e["dim_im_delta"] == 0);
  CHECK(e["cohomology"] == 1);
  CHECK(doc["totals"]["1"] == 0);
  CHECK(doc["totals"]["2"] == 1);
}

TEST_CASE("csv layout") {
  std::istringstream in(render_report(sample(), ReportFormat::Csv));
  std::string line;
  std::getline(in, line);
  CHECK(line == "family,n,d,dim_space,dim_kernel,dim_ker_delta,dim_im_delta,cohomology");
  std::getline(in, line);
  CHECK(line == "U3,1,0,1,1,0,1,0");
  std::getline(in, line);
  CHECK(line == "U3,2,3,2,1,1,0,1");
}

TEST_CASE("table layout") {
  const auto text = render_report(sample(), ReportFormat::Table);
  CHECK(text.find("U3") != std::string::npos);
  CHECK(text.find("totals: H^1=0 H^2=1") != std::string::npos);
}

TEST_CASE("a computed report renders consistently") {
  const auto r = cohomology_table(Family::u3(), 3, 6);
  const auto doc = nlohmann::json::parse(render_report(r, ReportFormat::Json));
  CHECK(doc["entries"].size() == r.entries.size());
  for (const auto& [n, t] : r.totals) CHECK(doc["totals"][std::to_string(n)] == t);
}
