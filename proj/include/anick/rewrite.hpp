#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "anick/lincomb.hpp"

namespace anick {

/// Generator index n of v(n).
using Letter = std::uint32_t;

/// Monomial v(a1)v(a2)...v(ak) of the coefficient algebra. The empty word is
/// the identity.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> l) : letters(std::move(l)) {}
  Word(std::initializer_list<Letter> l) : letters(l) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Letter front() const { return letters.front(); }
  Letter back() const { return letters.back(); }
  /// Sum of all generator indices.
  std::uint64_t index_degree() const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Deg-lex: shorter words first, then lexicographic by index.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);
};

Word concat(const Word& a, const Word& b);
std::ostream& operator<<(std::ostream& os, const Word& w);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

enum class FamilyKind { U2, U3, Custom };

/// A quadratic confluent rewriting system for a coefficient algebra together
/// with its locality bound. Obstructions are exactly the leading words of the
/// Groebner-Shirshov basis; every one has length two.
class Family {
 public:
  using ObstructionFn = std::function<bool(Letter, Letter)>;
  using RewriteFn = std::function<LinComb<Word>(Letter, Letter)>;

  static Family u2();
  static Family u3();
  /// Arbitrary quadratic family, used for negative controls in tests.
  static Family custom(std::string name, int locality, ObstructionFn obstruction,
                       RewriteFn rewrite);

  FamilyKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  int locality() const { return locality_; }

  bool is_obstruction(Letter a, Letter b) const;
  /// Right-hand side of the rule v(a)v(b) -> ...; requires is_obstruction(a, b).
  LinComb<Word> rewrite_pair(Letter a, Letter b) const;

 private:
  Family(FamilyKind kind, std::string name, int locality);

  FamilyKind kind_;
  std::string name_;
  int locality_;
  ObstructionFn obstruction_;
  RewriteFn rewrite_;
};

bool is_obstruction(const Family& f, Letter a, Letter b);
LinComb<Word> rewrite_pair(const Family& f, Letter a, Letter b);

enum class ReductionStrategy { Leftmost, Rightmost };

/// Reduces every word until no adjacent pair is an obstruction.
LinComb<Word> normal_form(const Family& f, const LinComb<Word>& x,
                          ReductionStrategy strategy = ReductionStrategy::Leftmost);
LinComb<Word> normal_form(const Family& f, const Word& w,
                          ReductionStrategy strategy = ReductionStrategy::Leftmost);

bool is_reduced(const Family& f, const Word& w);

/// Normal form of the product x*y.
LinComb<Word> multiply(const Family& f, const LinComb<Word>& x, const LinComb<Word>& y);

/// Canonical derivation v(n) -> n v(n-1), extended by Leibniz and normalized.
LinComb<Word> derive(const Family& f, const LinComb<Word>& x);
LinComb<Word> derive(const Family& f, const Word& w);

struct RelationReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Normalizes the locality and commutator relations of the family for all
/// indices up to n_max and reports any that do not vanish.
RelationReport check_defining_relations(const Family& f, Letter n_max);

}  // namespace anick
