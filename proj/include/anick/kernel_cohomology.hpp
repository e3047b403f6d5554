#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "anick/bar_morse.hpp"
#include "anick/linalg.hpp"

namespace anick {

enum class DiffMethod { Closed, Paths, Both };
enum class DerivationMethod { Fast, General };

const char* to_string(DiffMethod m);

struct KernelOptions {
  /// Closed uses the explicit formulas where they exist and paths elsewhere;
  /// Both evaluates the two and throws ConsistencyError on any difference.
  DiffMethod method = DiffMethod::Closed;
  DerivationMethod derivation = DerivationMethod::Fast;
  bool prune_zero_components = true;
};

/// Chains of length n and index degree d in lexicographic order.
struct GradedChainSpace {
  std::size_t n = 0;
  std::uint64_t d = 0;
  std::vector<AnickChain> basis;
  std::map<AnickChain, std::size_t> index;

  std::size_t dim() const { return basis.size(); }
  RationalVector coordinates(const LinComb<AnickChain>& x) const;
  LinComb<AnickChain> element(const RationalVector& v) const;
};

GradedChainSpace make_space(const Family& f, std::size_t n, std::uint64_t d);

/// Kernel of the transferred derivation inside one graded piece. Basis vectors
/// come from the reduced echelon form, so basis vector k has coordinate 1 at
/// free_columns[k] and 0 at every other free column.
struct KernelSpace {
  GradedChainSpace space;
  std::vector<RationalVector> basis;
  std::vector<std::size_t> free_columns;

  std::size_t dim() const { return basis.size(); }
  LinComb<AnickChain> element(std::size_t k) const { return space.element(basis[k]); }
  /// Coordinates of a kernel element; throws StructuralError if x is not in
  /// the span of the basis.
  RationalVector kernel_coordinates(const RationalVector& x) const;
};

struct CohomologyCell {
  std::size_t n = 0;
  std::uint64_t d = 0;
  std::size_t dim_space = 0;
  std::size_t dim_kernel = 0;
  std::size_t dim_ker_delta = 0;
  std::size_t dim_im_delta = 0;
  std::size_t cohomology = 0;

  friend bool operator==(const CohomologyCell&, const CohomologyCell&) = default;
};

struct CohomologyReport {
  std::string family;
  std::size_t n_max = 0;
  std::uint64_t d_max = 0;
  std::vector<CohomologyCell> entries;  // ordered by (n, d)
  std::map<std::size_t, std::size_t> totals;
};

/// Per-(n, d) kernel complex of a family with all intermediate results cached.
class KernelComplex {
 public:
  explicit KernelComplex(Family f, KernelOptions opts = {});

  const Family& family() const { return family_; }
  const KernelOptions& options() const { return opts_; }

  const GradedChainSpace& space(std::size_t n, std::uint64_t d);
  const KernelSpace& kernel(std::size_t n, std::uint64_t d);

  /// The Anick differential of a single chain according to the configured method.
  const LinComb<AnickChain>& diff(const AnickChain& c);
  LinComb<AnickChain> diff(const LinComb<AnickChain>& x);
  LinComb<AnickChain> tilde_partial(const AnickChain& c);

  /// Matrix of the derivation A_n^(d) -> A_n^(d-1) in chain coordinates.
  SparseRationalMatrix derivation_matrix(std::size_t n, std::uint64_t d);
  /// Matrix of the differential A_n^(d) -> A_{n-1}^(d-1) in chain coordinates.
  SparseRationalMatrix diff_matrix(std::size_t n, std::uint64_t d);
  /// The differential restricted to K_n^(d) -> K_{n-1}^(d-1) in kernel
  /// coordinates. For n = 1 the target is zero.
  const SparseRationalMatrix& restricted_diff(std::size_t n, std::uint64_t d);

  CohomologyCell cell(std::size_t n, std::uint64_t d);
  CohomologyReport table(std::size_t n_max, std::uint64_t d_max);

  /// Number of chain differentials evaluated by each route.
  std::size_t closed_evaluations() const { return closed_evals_; }
  std::size_t path_evaluations() const { return path_evals_; }

 private:
  using Key = std::pair<std::size_t, std::uint64_t>;

  Family family_;
  KernelOptions opts_;
  MorseComplex morse_;
  std::map<Key, GradedChainSpace> spaces_;
  std::map<Key, KernelSpace> kernels_;
  std::map<Key, SparseRationalMatrix> restricted_;
  std::map<AnickChain, LinComb<AnickChain>> diff_cache_;
  std::size_t closed_evals_ = 0;
  std::size_t path_evals_ = 0;
};

/// Number of chains of length n and degree d with every index >= 2.
std::size_t regular_dim(const Family& f, std::size_t n, std::uint64_t d);

KernelSpace kernel_basis(const Family& f, std::size_t n, std::uint64_t d,
                         DerivationMethod m = DerivationMethod::Fast);

/// Seed of a U(3) kernel element: v[j] for j = 1 and j >= 3, each a
/// combination of regular chains of length n - 2 and degree d - j.
using KernelSeed = std::map<Letter, LinComb<AnickChain>>;

/// Rebuilds the element of K_n^(d) determined by a seed, by solving for the
/// trailing-index layers one at a time. Throws PreconditionError on a bad
/// seed and StructuralError if the result is not annihilated.
LinComb<AnickChain> reconstruct_from_seed(std::size_t n, std::uint64_t d, const KernelSeed& seed);

/// All admissible seeds with a single regular chain, in a fixed order.
std::vector<KernelSeed> seed_basis(std::size_t n, std::uint64_t d);

SparseRationalMatrix restricted_diff_matrix(const Family& f, std::size_t n, std::uint64_t d,
                                            KernelOptions opts = {});
CohomologyCell cohomology_dim(const Family& f, std::size_t n, std::uint64_t d,
                              KernelOptions opts = {});
CohomologyReport cohomology_table(const Family& f, std::size_t n_max, std::uint64_t d_max,
                                  KernelOptions opts = {});

}  // namespace anick
