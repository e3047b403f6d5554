// Command-line front end. Talks to the library only through the C interface.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "anick/anick.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct ReportOptions {
  unsigned n_max = 0;
  unsigned deg_max = 12;
  std::string method = "closed";
  bool no_prune = false;
  std::string out = "table";
  std::string output_file;
  std::string algebra;
};

using ReportPtr = std::unique_ptr<anick_report, decltype(&anick_report_destroy)>;

int exit_code_for(anick_status s) {
  switch (s) {
    case ANICK_OK:
      return kExitOk;
    case ANICK_INVALID_ARGUMENT:
    case ANICK_IO:
      return kExitUsage;
    default:
      return kExitCheckFailed;
  }
}

int report_failure(anick_status s) {
  std::cerr << "error: " << anick_last_error() << "\n";
  return exit_code_for(s);
}

int emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << std::flush;
    return kExitOk;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return kExitUsage;
  }
  return kExitOk;
}

int render_and_emit(anick_report* raw, const ReportOptions& o) {
  ReportPtr report(raw, anick_report_destroy);
  static const std::map<std::string, anick_format> formats = {
      {"table", ANICK_FORMAT_TABLE}, {"json", ANICK_FORMAT_JSON}, {"csv", ANICK_FORMAT_CSV}};
  char* text = nullptr;
  const anick_status s = anick_report_render(report.get(), formats.at(o.out), &text);
  if (s != ANICK_OK) return report_failure(s);
  const std::string body(text);
  anick_string_free(text);
  return emit(body, o.output_file);
}

int run_family(const char* name, const ReportOptions& o) {
  static const std::map<std::string, anick_method> methods = {
      {"closed", ANICK_METHOD_CLOSED}, {"paths", ANICK_METHOD_PATHS}, {"both", ANICK_METHOD_BOTH}};
  anick_family* family = nullptr;
  anick_status s = anick_family_create(name, &family);
  if (s != ANICK_OK) return report_failure(s);
  std::unique_ptr<anick_family, decltype(&anick_family_destroy)> guard(family,
                                                                       anick_family_destroy);
  anick_report* report = nullptr;
  s = anick_cohomology_compute(family, o.n_max, o.deg_max, methods.at(o.method), o.no_prune ? 0 : 1,
                               &report);
  if (s != ANICK_OK) return report_failure(s);
  return render_and_emit(report, o);
}

int run_current(const ReportOptions& o) {
  anick_algebra* algebra = nullptr;
  anick_status s = anick_algebra_load(o.algebra.c_str(), &algebra);
  if (s != ANICK_OK) return report_failure(s);
  std::unique_ptr<anick_algebra, decltype(&anick_algebra_destroy)> guard(algebra,
                                                                         anick_algebra_destroy);
  anick_report* report = nullptr;
  s = anick_current_compute(algebra, o.n_max, o.deg_max, &report);
  if (s != ANICK_OK) return report_failure(s);
  return render_and_emit(report, o);
}

int run_selftest(const std::string& suite) {
  char* text = nullptr;
  int passed = 0;
  const anick_status s = anick_selftest_run(suite.c_str(), &text, &passed);
  if (s != ANICK_OK) return report_failure(s);
  std::cout << text << std::flush;
  anick_string_free(text);
  return passed ? kExitOk : kExitCheckFailed;
}

void add_report_flags(CLI::App* cmd, ReportOptions& o, unsigned n_default, unsigned d_default) {
  o.n_max = n_default;
  o.deg_max = d_default;
  cmd->add_option("--n-max", o.n_max, "Largest homological degree")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--deg-max", o.deg_max, "Largest index degree")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--out", o.out, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--output-file", o.output_file, "Write the report here instead of stdout");
}

void add_family_flags(CLI::App* cmd, ReportOptions& o, unsigned n_default) {
  add_report_flags(cmd, o, n_default, 12);
  cmd->add_option("--method", o.method, "Differential: closed forms, Morse paths, or both")
      ->check(CLI::IsMember({"closed", "paths", "both"}))
      ->capture_default_str();
  cmd->add_flag("--no-prune-zeros", o.no_prune, "Disable zero-component pruning in path sums");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild cohomology of the conformal algebras U(2), U(3) and Cur A"};
  app.require_subcommand(1);

  ReportOptions u3_opts, u2_opts, current_opts;
  std::string suite = "all";

  auto* u3 = app.add_subcommand("u3", "The envelope with locality 3");
  u3->require_subcommand(1);
  auto* u3_coh = u3->add_subcommand("cohomology", "Cohomology table within degree caps");
  add_family_flags(u3_coh, u3_opts, 5);

  auto* u2 = app.add_subcommand("u2", "The envelope with locality 2");
  u2->require_subcommand(1);
  auto* u2_coh = u2->add_subcommand("cohomology", "Cohomology table within degree caps");
  add_family_flags(u2_coh, u2_opts, 4);

  auto* current = app.add_subcommand("current", "Cohomology of the current algebra Cur A");
  add_report_flags(current, current_opts, 3, 3);
  current->add_option("--algebra", current_opts.algebra,
                      "builtin:mat:k, builtin:truncpoly:N or a structure-constant JSON file")
      ->required();

  auto* selftest = app.add_subcommand("selftest", "Run invariant suites");
  selftest->add_option("--suite", suite, "all, rewrite, morse, derivation, kernels or current")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*u3_coh) return run_family("U3", u3_opts);
  if (*u2_coh) return run_family("U2", u2_opts);
  if (*current) return run_current(current_opts);
  if (*selftest) return run_selftest(suite);
  return kExitUsage;
}
