#include "anick/anick.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "anick/current_conformal.hpp"
#include "anick/errors.hpp"
#include "anick/kernel_cohomology.hpp"
#include "anick/report.hpp"
#include "anick/selftest.hpp"

struct anick_family {
  anick::Family family;
};

struct anick_algebra {
  anick::FiniteAlgebra algebra;
};

struct anick_report {
  anick::CohomologyReport report;
};

namespace {

thread_local std::string last_error;

anick_status fail(anick_status s, const std::string& message) {
  last_error = message;
  return s;
}

// Runs body, translating exceptions into status codes.
template <class Body>
anick_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const anick::IoError& e) {
    return fail(ANICK_IO, e.what());
  } catch (const anick::InputError& e) {
    return fail(ANICK_INVALID_ARGUMENT, e.what());
  } catch (const anick::PreconditionError& e) {
    return fail(ANICK_INVALID_ARGUMENT, e.what());
  } catch (const anick::ConsistencyError& e) {
    return fail(ANICK_CONSISTENCY, e.what());
  } catch (const anick::StructuralError& e) {
    return fail(ANICK_CONSISTENCY, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ANICK_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ANICK_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::optional<anick::DiffMethod> to_method(anick_method m) {
  switch (m) {
    case ANICK_METHOD_CLOSED:
      return anick::DiffMethod::Closed;
    case ANICK_METHOD_PATHS:
      return anick::DiffMethod::Paths;
    case ANICK_METHOD_BOTH:
      return anick::DiffMethod::Both;
  }
  return std::nullopt;
}

std::optional<anick::ReportFormat> to_format(anick_format f) {
  switch (f) {
    case ANICK_FORMAT_TABLE:
      return anick::ReportFormat::Table;
    case ANICK_FORMAT_JSON:
      return anick::ReportFormat::Json;
    case ANICK_FORMAT_CSV:
      return anick::ReportFormat::Csv;
  }
  return std::nullopt;
}

}  // namespace

extern "C" {

const char* anick_version(void) { return "1.0.0"; }

const char* anick_last_error(void) { return last_error.c_str(); }

anick_status anick_family_create(const char* name, anick_family** out) {
  return guarded([&] {
    if (name == nullptr || out == nullptr) return fail(ANICK_INVALID_ARGUMENT, "null argument");
    std::string n(name);
    for (auto& ch : n) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (n == "U2") {
      *out = new anick_family{anick::Family::u2()};
    } else if (n == "U3") {
      *out = new anick_family{anick::Family::u3()};
    } else {
      return fail(ANICK_INVALID_ARGUMENT, "unknown family '" + std::string(name) + "'");
    }
    return ANICK_OK;
  });
}

void anick_family_destroy(anick_family* family) { delete family; }

anick_status anick_cohomology_compute(const anick_family* family, unsigned n_max, unsigned deg_max,
                                      anick_method method, int prune_zero_components,
                                      anick_report** out) {
  return guarded([&] {
    if (family == nullptr || out == nullptr) return fail(ANICK_INVALID_ARGUMENT, "null argument");
    const auto m = to_method(method);
    if (!m) return fail(ANICK_INVALID_ARGUMENT, "unknown method");
    anick::KernelOptions opts;
    opts.method = *m;
    opts.prune_zero_components = prune_zero_components != 0;
    auto r = anick::cohomology_table(family->family, n_max, deg_max, opts);
    *out = new anick_report{std::move(r)};
    return ANICK_OK;
  });
}

anick_status anick_algebra_load(const char* source, anick_algebra** out) {
  return guarded([&] {
    if (source == nullptr || out == nullptr) return fail(ANICK_INVALID_ARGUMENT, "null argument");
    *out = new anick_algebra{anick::load_algebra(source)};
    return ANICK_OK;
  });
}

void anick_algebra_destroy(anick_algebra* algebra) { delete algebra; }

size_t anick_algebra_dim(const anick_algebra* algebra) {
  return algebra == nullptr ? 0 : algebra->algebra.dim();
}

anick_status anick_current_compute(const anick_algebra* algebra, unsigned n_max, unsigned deg_max,
                                   anick_report** out) {
  return guarded([&] {
    if (algebra == nullptr || out == nullptr) return fail(ANICK_INVALID_ARGUMENT, "null argument");
    anick::CurrentComplex cc(algebra->algebra);
    *out = new anick_report{cc.table(n_max, deg_max)};
    return ANICK_OK;
  });
}

size_t anick_report_entry_count(const anick_report* report) {
  return report == nullptr ? 0 : report->report.entries.size();
}

anick_status anick_report_entry(const anick_report* report, size_t index, anick_cell* out) {
  return guarded([&] {
    if (report == nullptr || out == nullptr) return fail(ANICK_INVALID_ARGUMENT, "null argument");
    if (index >= report->report.entries.size())
      return fail(ANICK_INVALID_ARGUMENT, "entry index out of range");
    const auto& e = report->report.entries[index];
    *out = anick_cell{static_cast<unsigned>(e.n), static_cast<unsigned>(e.d), e.dim_space,
                      e.dim_kernel, e.dim_ker_delta, e.dim_im_delta, e.cohomology};
    return ANICK_OK;
  });
}

anick_status anick_report_total(const anick_report* report, unsigned n, size_t* out) {
  return guarded([&] {
    if (report == nullptr || out == nullptr) return fail(ANICK_INVALID_ARGUMENT, "null argument");
    auto it = report->report.totals.find(n);
    if (it == report->report.totals.end())
      return fail(ANICK_INVALID_ARGUMENT, "no total for n=" + std::to_string(n));
    *out = it->second;
    return ANICK_OK;
  });
}

anick_status anick_report_render(const anick_report* report, anick_format format, char** out) {
  return guarded([&] {
    if (report == nullptr || out == nullptr) return fail(ANICK_INVALID_ARGUMENT, "null argument");
    const auto f = to_format(format);
    if (!f) return fail(ANICK_INVALID_ARGUMENT, "unknown format");
    *out = copy_string(anick::render_report(report->report, *f));
    return ANICK_OK;
  });
}

void anick_report_destroy(anick_report* report) { delete report; }

anick_status anick_selftest_run(const char* suite, char** text, int* passed) {
  return guarded([&] {
    if (suite == nullptr || text == nullptr || passed == nullptr)
      return fail(ANICK_INVALID_ARGUMENT, "null argument");
    const auto r = anick::run_selftest(suite);
    *text = copy_string(r.render());
    *passed = r.ok() ? 1 : 0;
    return ANICK_OK;
  });
}

void anick_string_free(char* s) { std::free(s); }

}  // extern "C"
