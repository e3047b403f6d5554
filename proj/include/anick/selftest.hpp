#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "anick/kernel_cohomology.hpp"

namespace anick {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first counterexample or a short summary
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool ok() const;
  std::string render() const;
};

/// Suite names accepted by run_selftest: all, rewrite, morse, derivation,
/// kernels, current.
const std::vector<std::string>& selftest_suites();

/// Runs a named invariant suite; throws PreconditionError for unknown names.
SuiteReport run_selftest(const std::string& suite);

/// Individual invariant checks. Windows are inclusive caps on chain length n
/// and index degree d.
namespace checks {

CheckResult defining_relations(const Family& f, Letter n_max);
CheckResult confluence(const Family& f, Letter max_index, std::size_t max_length);
CheckResult derivation_well_defined(const Family& f, Letter max_index, std::size_t max_length);

CheckResult matching_involution(const Family& f, std::size_t n_max, std::uint64_t d_max);
CheckResult delta_squared(const Family& f, std::size_t n_max, std::uint64_t d_max);
CheckResult filtration(const Family& f, Letter k_max, std::size_t n_max, std::uint64_t d_max);
CheckResult pruning_soundness(const Family& f, std::size_t n_max, std::uint64_t d_max);
CheckResult degree_bookkeeping(const Family& f, std::size_t n_max, std::uint64_t d_max);
/// Closed-form differentials against paths: every U(3) chain in the window,
/// every U(2) chain of length 2 or 3.
CheckResult closed_vs_paths(const Family& f, std::size_t n_max, std::uint64_t d_max);
CheckResult der10_identity(std::size_t v_length_max, std::uint64_t d_max);

CheckResult tilde_fast_vs_general(const Family& f, std::size_t n_max, std::uint64_t d_max);
CheckResult chain_map(const Family& f, std::size_t n_max, std::uint64_t d_max);

CheckResult cohomology_totals(const Family& f, std::size_t n_max, std::uint64_t d_max,
                              KernelOptions opts, const std::map<std::size_t, std::size_t>& expected);
CheckResult method_independence(const Family& f, std::size_t n_max, std::uint64_t d_max);
CheckResult k1_structure(std::uint64_t d_max);
CheckResult k2_structure(std::uint64_t d_max);
CheckResult k3_dimensions(std::uint64_t d_max);
CheckResult kn_structure(std::size_t n_max, std::uint64_t d_max);
CheckResult seed_reconstruction(std::size_t n_max, std::uint64_t d_max);
CheckResult im_delta4(std::uint64_t d_max);
CheckResult e_in_image(std::uint64_t d_max);
CheckResult composition_zero(const Family& f, std::size_t n_max, std::uint64_t d_max);
CheckResult f3_kernel();

CheckResult current_diff_squared(std::size_t n_max, std::uint64_t d_max);
CheckResult current_kernel_oracle(std::size_t n_max, std::size_t deg_max);
CheckResult current_intertwining(std::size_t n_max, std::uint64_t d_max);
CheckResult current_e_m(std::uint32_t m_max);
CheckResult current_matrix_vanishing(std::size_t n_max, std::uint64_t d_max);
CheckResult current_h1_indecomposables(std::uint64_t d_max);
CheckResult current_ordinary_comparison();
CheckResult current_rejects_nonassociative();

}  // namespace checks

}  // namespace anick
