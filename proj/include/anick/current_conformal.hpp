#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "anick/kernel_cohomology.hpp"
#include "anick/lincomb.hpp"
#include "anick/linalg.hpp"

namespace anick {

/// Finite-dimensional associative algebra given by structure constants
/// e_i e_j = sum_t c[i][j][t] e_t. Need not be unital.
class FiniteAlgebra {
 public:
  using Table = std::vector<std::vector<std::vector<Rational>>>;

  /// Validates shape and associativity; throws InputError naming the first
  /// violating triple.
  FiniteAlgebra(std::string name, std::vector<std::string> labels, Table table);

  static FiniteAlgebra matrix(std::size_t k);
  /// x k[x] / (x^N), basis x, x^2, ..., x^{N-1}.
  static FiniteAlgebra truncated_polynomial(std::size_t n);
  static FiniteAlgebra from_json(const std::string& text, std::string name = "table");

  const std::string& name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Rational& constant(std::size_t i, std::size_t j, std::size_t t) const {
    return table_[i][j][t];
  }
  /// Nonzero terms of e_i e_j.
  const std::vector<std::pair<std::uint32_t, Rational>>& product(std::size_t i,
                                                                 std::size_t j) const {
    return products_[i * dim() + j];
  }
  /// dim A/A^2.
  std::size_t indecomposables_dim() const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  Table table_;
  std::vector<std::vector<std::pair<std::uint32_t, Rational>>> products_;
};

/// "builtin:mat:k", "builtin:truncpoly:N" or a path to a structure-constant
/// JSON document.
FiniteAlgebra load_algebra(const std::string& source);

/// Basis element y^e (x) e_{w_1} (x) ... (x) e_{w_n} with e of length n - 1.
struct CurrentKey {
  std::vector<std::uint32_t> exponents;
  std::vector<std::uint32_t> word;

  friend bool operator==(const CurrentKey&, const CurrentKey&) = default;
  friend auto operator<=>(const CurrentKey&, const CurrentKey&) = default;
};

std::ostream& operator<<(std::ostream& os, const CurrentKey& k);

struct CurrentCochain {
  std::size_t n = 1;
  std::uint64_t d = 0;
  LinComb<CurrentKey> terms;
};

/// delta_n(f (x) v) = sum_{i=1}^{n-1} (-1)^i f|_{y_i = 0} (x) v^(i), where
/// v^(i) multiplies slots i and i+1.
CurrentCochain current_diff(const FiniteAlgebra& a, const CurrentCochain& u);

/// Ordered basis of y-degree d cochains of length n.
std::vector<CurrentKey> current_basis(std::size_t dim, std::size_t n, std::uint64_t d);

/// Decorated bar word [a_1(m_1)|...|a_n(m_n)] as (basis index, exponent) pairs.
struct DecoratedWord {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;

  friend bool operator==(const DecoratedWord&, const DecoratedWord&) = default;
  friend auto operator<=>(const DecoratedWord&, const DecoratedWord&) = default;
};

std::ostream& operator<<(std::ostream& os, const DecoratedWord& w);

/// Linear form in x_1..x_n, one coefficient per variable.
using LinearForm = std::vector<Rational>;
/// Expresses y_i (1-based) in the x variables for a given n.
using Substitution = std::function<LinearForm(std::size_t n, std::size_t i)>;

/// y_i = x_{i+1} - x_i.
Substitution difference_substitution();

/// Expands every y-monomial through the substitution into x-monomials, read
/// as exponents on the decorated bar word.
LinComb<DecoratedWord> expand_to_bar(const CurrentCochain& u,
                                     const Substitution& s = difference_substitution());

/// e_m(a, b) = sum_s (-1)^s C(m, s) [a(m - s)|b(s)].
LinComb<DecoratedWord> e_m(std::uint32_t m, std::uint32_t a, std::uint32_t b);

/// Slotwise derivation a(m) -> m a(m - 1).
LinComb<DecoratedWord> decorated_derive(const LinComb<DecoratedWord>& x);

/// Compares, degree by degree up to deg_max, the kernel of D = sum d/dx_i on
/// polynomials in n variables with the span of substituted y-monomials.
bool d_kernel_oracle(std::size_t n, std::size_t deg_max,
                     const Substitution& s = difference_substitution());

/// dim H^n(A + k, k) by the alternating-merge complex on tensor powers of A.
std::size_t ordinary_hochschild_dim(const FiniteAlgebra& a, std::size_t n);

/// Cached ranks of the current complex of one algebra.
class CurrentComplex {
 public:
  explicit CurrentComplex(FiniteAlgebra a) : algebra_(std::move(a)) {}

  const FiniteAlgebra& algebra() const { return algebra_; }
  std::size_t space_dim(std::size_t n, std::uint64_t d) const;
  SparseRationalMatrix diff_matrix(std::size_t n, std::uint64_t d);
  /// Rank of delta_n at y-degree d; zero for n = 1.
  std::size_t diff_rank(std::size_t n, std::uint64_t d);

  CohomologyCell cell(std::size_t n, std::uint64_t d);
  CohomologyReport table(std::size_t n_max, std::uint64_t d_max);

 private:
  FiniteAlgebra algebra_;
  std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> ranks_;
};

std::size_t current_cohomology_dim(const FiniteAlgebra& a, std::size_t n, std::uint64_t d);

struct TheoremComparison {
  std::string label;
  std::size_t expected = 0;
  std::size_t actual = 0;
  /// False when the hypothesis on lower ordinary cohomology fails; the values
  /// are still reported.
  bool applicable = true;
  bool pass() const { return !applicable || expected == actual; }
};

struct TheoremReport {
  std::string algebra;
  std::vector<TheoremComparison> comparisons;
  bool ok() const;
};

TheoremReport theorem_check(const FiniteAlgebra& a, std::size_t n_max, std::uint64_t d_max);

}  // namespace anick
