#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "anick/lincomb.hpp"
#include "anick/rewrite.hpp"

namespace anick {

/// Index tuple [i1|...|in] whose adjacent pairs are all obstructions.
struct AnickChain {
  std::vector<Letter> indices;

  AnickChain() = default;
  explicit AnickChain(std::vector<Letter> i) : indices(std::move(i)) {}
  AnickChain(std::initializer_list<Letter> i) : indices(i) {}

  std::size_t length() const { return indices.size(); }
  std::uint64_t degree() const;
  Letter back() const { return indices.back(); }

  friend bool operator==(const AnickChain&, const AnickChain&) = default;
  friend auto operator<=>(const AnickChain&, const AnickChain&) = default;
};

std::ostream& operator<<(std::ostream& os, const AnickChain& c);

/// Basis element [u1|...|um] of the trivial-coefficient bar complex; every
/// component is a nonempty reduced word.
struct BarVertex {
  std::vector<Word> components;

  BarVertex() = default;
  explicit BarVertex(std::vector<Word> c) : components(std::move(c)) {}
  static BarVertex from_chain(const AnickChain& c);

  std::size_t level() const { return components.size(); }
  std::uint64_t index_degree() const;
  /// The chain tuple if every component is a single letter.
  std::optional<AnickChain> letters() const;

  friend bool operator==(const BarVertex&, const BarVertex&) = default;
  friend std::strong_ordering operator<=>(const BarVertex& a, const BarVertex& b) {
    return a.components <=> b.components;
  }
};

std::ostream& operator<<(std::ostream& os, const BarVertex& b);

struct BarVertexHash {
  std::size_t operator()(const BarVertex& b) const noexcept;
};

struct MorseClass {
  enum class Kind { Critical, MergedEnd, SplitEnd };
  Kind kind = Kind::Critical;
  /// 1-based. MergedEnd: component to split after its first letter.
  /// SplitEnd: left component of the pair to concatenate.
  std::size_t position = 0;

  friend bool operator==(const MorseClass&, const MorseClass&) = default;
};

std::ostream& operator<<(std::ostream& os, const MorseClass& m);

bool chain_predicate(const Family& f, std::span<const Letter> t);
inline bool chain_predicate(const Family& f, const AnickChain& c) {
  return chain_predicate(f, std::span<const Letter>(c.indices));
}
bool is_critical(const Family& f, const BarVertex& b);

/// All chains of length n and index degree d, lexicographically ordered.
std::vector<AnickChain> enumerate_chains(const Family& f, std::size_t n, std::uint64_t d);

MorseClass classify(const Family& f, const BarVertex& b);
/// The vertex matched with b, or nullopt for critical vertices.
std::optional<BarVertex> matching_partner(const Family& f, const BarVertex& b);

/// Bar differential with the outer (decorated) terms removed:
/// sum_{i=1}^{m-1} (-1)^i [u1|...|N(u_i u_{i+1})|...|um].
LinComb<BarVertex> bar_diff(const Family& f, const BarVertex& b);

/// Slotwise derivation on the bar complex.
LinComb<BarVertex> bar_derive(const Family& f, const LinComb<BarVertex>& x);

/// Drops every vertex that is not an Anick chain.
LinComb<AnickChain> project_to_chains(const Family& f, const LinComb<BarVertex>& x);

/// Which pair of adjacent levels a zigzag path may visit: {T-1, T} for
/// Below, {T, T+1} for Above, where T is the terminal level.
enum class PathBand { Below, Above };

struct PathQuery {
  std::size_t terminal_level = 0;
  PathBand band = PathBand::Above;
  std::function<bool(const BarVertex&)> terminal;  // empty: every vertex
  bool prune_zero_components = false;
};

struct MorseOptions {
  /// Skip vertices with two or more components equal to v(0) when computing
  /// the Anick differential.
  bool prune_zero_components = true;
};

struct MorseStats {
  std::size_t diff_vertices = 0;
  std::size_t g_vertices = 0;
  std::size_t f_vertices = 0;
};

/// Path-weight engine over the matched bar graph. Caches are owned by the
/// instance; use one instance per thread.
class MorseComplex {
 public:
  explicit MorseComplex(Family f, MorseOptions opts = {});

  const Family& family() const { return family_; }
  const MorseOptions& options() const { return opts_; }

  const LinComb<BarVertex>& bar_diff(const BarVertex& b);
  /// Coefficient of the matched merge vertex in the differential of its split
  /// partner; always +-1 (asserted).
  Rational matching_weight(const BarVertex& split, const BarVertex& merged);

  /// Sum of path weights from start to vertices accepted by the query.
  LinComb<BarVertex> morse_paths(const BarVertex& start, const PathQuery& q);

  /// Anick differential of a chain of length >= 2 via critical-cell paths.
  LinComb<AnickChain> anick_diff(const AnickChain& c);
  /// Chain homotopy g_n: zigzag paths ending in the level of c.
  LinComb<BarVertex> g_map(const AnickChain& c);
  /// Comparison map f_n: paths from a bar vertex to critical cells of its level.
  LinComb<AnickChain> f_map(const BarVertex& b);
  /// Transferred derivation pi(d_n(g(c))).
  LinComb<AnickChain> tilde_partial(const AnickChain& c);

  MorseStats stats() const;

 private:
  using Cache = std::unordered_map<BarVertex, LinComb<BarVertex>, BarVertexHash>;

  const LinComb<BarVertex>& path_sum(const BarVertex& x, const PathQuery& q, Cache& cache,
                                     std::unordered_set<BarVertex, BarVertexHash>& on_stack);

  Family family_;
  MorseOptions opts_;
  std::unordered_map<BarVertex, LinComb<BarVertex>, BarVertexHash> diff_cache_;
  std::map<std::size_t, Cache> critical_down_cache_;  // keyed by terminal level
  std::map<std::size_t, Cache> g_cache_;
  std::map<std::size_t, Cache> f_cache_;
};

LinComb<BarVertex> morse_paths(const Family& f, const BarVertex& start, const PathQuery& q);
LinComb<AnickChain> anick_diff_paths(const Family& f, const AnickChain& c,
                                     bool prune_zero_components = true);
LinComb<BarVertex> g_map(const Family& f, const AnickChain& c);
LinComb<AnickChain> tilde_partial_general(const Family& f, const AnickChain& c);

/// Applies a chain-level map linearly.
template <class Map>
LinComb<AnickChain> apply_linear(const LinComb<AnickChain>& x, Map&& map) {
  LinComb<AnickChain> out;
  for (const auto& [c, k] : x) out.add(map(c), k);
  return out;
}

}  // namespace anick
