#include "anick/bar_morse.hpp"

#include <sstream>

#include "anick/errors.hpp"

namespace anick {

std::uint64_t AnickChain::degree() const {
  std::uint64_t d = 0;
  for (Letter l : indices) d += l;
  return d;
}

std::ostream& operator<<(std::ostream& os, const AnickChain& c) {
  os << "[";
  for (std::size_t i = 0; i < c.indices.size(); ++i) os << (i ? "|" : "") << c.indices[i];
  return os << "]";
}

BarVertex BarVertex::from_chain(const AnickChain& c) {
  BarVertex b;
  b.components.reserve(c.length());
  for (Letter l : c.indices) b.components.push_back(Word{l});
  return b;
}

std::uint64_t BarVertex::index_degree() const {
  std::uint64_t d = 0;
  for (const auto& w : components) d += w.index_degree();
  return d;
}

std::optional<AnickChain> BarVertex::letters() const {
  AnickChain c;
  c.indices.reserve(components.size());
  for (const auto& w : components) {
    if (w.size() != 1) return std::nullopt;
    c.indices.push_back(w.front());
  }
  return c;
}

std::ostream& operator<<(std::ostream& os, const BarVertex& b) {
  os << "[";
  for (std::size_t i = 0; i < b.components.size(); ++i) os << (i ? "|" : "") << b.components[i];
  return os << "]";
}

std::size_t BarVertexHash::operator()(const BarVertex& b) const noexcept {
  std::size_t h = b.components.size();
  for (const auto& w : b.components) {
    h ^= 0x51ed270b27f3a1dULL + (h << 6) + (h >> 2);
    for (Letter l : w.letters) h ^= l + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const MorseClass& m) {
  switch (m.kind) {
    case MorseClass::Kind::Critical:
      return os << "Critical";
    case MorseClass::Kind::MergedEnd:
      return os << "MergedEnd(" << m.position << ")";
    case MorseClass::Kind::SplitEnd:
      return os << "SplitEnd(" << m.position << ")";
  }
  return os;
}

// ---------------------------------------------------------------------------

bool chain_predicate(const Family& f, std::span<const Letter> t) {
  if (t.empty()) return false;
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    if (!f.is_obstruction(t[i], t[i + 1])) return false;
  return true;
}

bool is_critical(const Family& f, const BarVertex& b) {
  auto c = b.letters();
  return c && chain_predicate(f, *c);
}

namespace {

void extend_chains(const Family& f, std::size_t n, std::uint64_t remaining,
                   std::vector<Letter>& prefix, std::vector<AnickChain>& out) {
  if (prefix.size() + 1 == n) {
    const Letter last = static_cast<Letter>(remaining);
    if (prefix.empty() || f.is_obstruction(prefix.back(), last)) {
      prefix.push_back(last);
      out.emplace_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  for (std::uint64_t a = 0; a <= remaining; ++a) {
    const Letter l = static_cast<Letter>(a);
    if (!prefix.empty() && !f.is_obstruction(prefix.back(), l)) continue;
    prefix.push_back(l);
    extend_chains(f, n, remaining - a, prefix, out);
    prefix.pop_back();
  }
}

std::size_t zero_component_count(const BarVertex& b) {
  std::size_t n = 0;
  for (const auto& w : b.components)
    if (w.size() == 1 && w.front() == 0) ++n;
  return n;
}

}  // namespace

std::vector<AnickChain> enumerate_chains(const Family& f, std::size_t n, std::uint64_t d) {
  if (n == 0) throw PreconditionError("enumerate_chains requires n >= 1");
  std::vector<AnickChain> out;
  std::vector<Letter> prefix;
  extend_chains(f, n, d, prefix, out);
  return out;
}

MorseClass classify(const Family& f, const BarVertex& b) {
  const auto& comps = b.components;
  const std::size_t m = comps.size();
  // k = p + 1: length of the longest prefix of single letters forming a chain.
  std::size_t k = 0;
  while (k < m && comps[k].size() == 1 &&
         (k == 0 || f.is_obstruction(comps[k - 1].front(), comps[k].front())))
    ++k;
  if (k == m) return {MorseClass::Kind::Critical, 0};
  const Word& w = comps[k];
  if (w.size() >= 2 && (k == 0 || f.is_obstruction(comps[k - 1].front(), w.front())))
    return {MorseClass::Kind::MergedEnd, k + 1};
  if (k == 0) throw StructuralError("classify: empty component in bar vertex");
  return {MorseClass::Kind::SplitEnd, k};
}

namespace {

BarVertex partner_of(const BarVertex& b, const MorseClass& cls) {
  BarVertex p;
  const auto& comps = b.components;
  const std::size_t i = cls.position - 1;
  if (cls.kind == MorseClass::Kind::MergedEnd) {
    p.components.reserve(comps.size() + 1);
    p.components.insert(p.components.end(), comps.begin(), comps.begin() + i);
    p.components.push_back(Word{comps[i].front()});
    p.components.emplace_back(std::vector<Letter>(comps[i].letters.begin() + 1,
                                                  comps[i].letters.end()));
    p.components.insert(p.components.end(), comps.begin() + i + 1, comps.end());
  } else {
    p.components.reserve(comps.size() - 1);
    p.components.insert(p.components.end(), comps.begin(), comps.begin() + i);
    p.components.push_back(concat(comps[i], comps[i + 1]));
    p.components.insert(p.components.end(), comps.begin() + i + 2, comps.end());
  }
  return p;
}

}  // namespace

std::optional<BarVertex> matching_partner(const Family& f, const BarVertex& b) {
  const MorseClass cls = classify(f, b);
  if (cls.kind == MorseClass::Kind::Critical) return std::nullopt;
  return partner_of(b, cls);
}

LinComb<BarVertex> bar_diff(const Family& f, const BarVertex& b) {
  LinComb<BarVertex> out;
  const auto& comps = b.components;
  for (std::size_t i = 0; i + 1 < comps.size(); ++i) {
    const Rational sign = (i % 2 == 0) ? -1 : 1;  // (-1)^(i+1), 1-based position
    const auto product = normal_form(f, concat(comps[i], comps[i + 1]));
    for (const auto& [w, c] : product) {
      if (w.empty()) throw StructuralError("bar_diff: product left the augmentation ideal");
      BarVertex v;
      v.components.reserve(comps.size() - 1);
      v.components.insert(v.components.end(), comps.begin(), comps.begin() + i);
      v.components.push_back(w);
      v.components.insert(v.components.end(), comps.begin() + i + 2, comps.end());
      out.add(v, sign * c);
    }
  }
  return out;
}

LinComb<BarVertex> bar_derive(const Family& f, const LinComb<BarVertex>& x) {
  LinComb<BarVertex> out;
  for (const auto& [b, c] : x) {
    for (std::size_t i = 0; i < b.components.size(); ++i) {
      const auto d = derive(f, b.components[i]);
      for (const auto& [w, k] : d) {
        BarVertex v = b;
        v.components[i] = w;
        out.add(v, c * k);
      }
    }
  }
  return out;
}

LinComb<AnickChain> project_to_chains(const Family& f, const LinComb<BarVertex>& x) {
  LinComb<AnickChain> out;
  for (const auto& [b, c] : x) {
    auto t = b.letters();
    if (t && chain_predicate(f, *t)) out.add(*t, c);
  }
  return out;
}

// ---------------------------------------------------------------------------

MorseComplex::MorseComplex(Family f, MorseOptions opts) : family_(std::move(f)), opts_(opts) {}

const LinComb<BarVertex>& MorseComplex::bar_diff(const BarVertex& b) {
  auto it = diff_cache_.find(b);
  if (it != diff_cache_.end()) return it->second;
  return diff_cache_.emplace(b, anick::bar_diff(family_, b)).first->second;
}

Rational MorseComplex::matching_weight(const BarVertex& split, const BarVertex& merged) {
  const Rational w = bar_diff(split).coefficient(merged);
  if (w != 1 && w != -1) {
    std::ostringstream os;
    os << "matching edge " << split << " -> " << merged << " has weight " << w.get_str();
    throw StructuralError(os.str());
  }
  return w;
}

const LinComb<BarVertex>& MorseComplex::path_sum(const BarVertex& x, const PathQuery& q,
                                                 Cache& cache,
                                                 std::unordered_set<BarVertex, BarVertexHash>& on_stack) {
  if (auto it = cache.find(x); it != cache.end()) return it->second;
  if (on_stack.count(x)) {
    std::ostringstream os;
    os << "directed cycle through " << x << " in the matched bar graph";
    throw StructuralError(os.str());
  }

  const long level = static_cast<long>(x.level());
  const long t = static_cast<long>(q.terminal_level);
  const long lo = q.band == PathBand::Below ? t - 1 : t;
  const long hi = q.band == PathBand::Below ? t : t + 1;

  LinComb<BarVertex> result;
  const bool terminal = level == t && (!q.terminal || q.terminal(x));
  if (terminal) result.add(x, 1);
  if (!terminal && level == t && q.prune_zero_components && zero_component_count(x) >= 2)
    return cache.emplace(x, std::move(result)).first->second;

  on_stack.insert(x);
  const MorseClass cls = classify(family_, x);
  std::optional<BarVertex> partner;
  if (cls.kind != MorseClass::Kind::Critical) partner = partner_of(x, cls);

  if (level - 1 >= lo) {
    const auto& down = bar_diff(x);
    for (const auto& [y, c] : down) {
      if (cls.kind == MorseClass::Kind::SplitEnd && y == *partner) continue;
      result.add(path_sum(y, q, cache, on_stack), c);
    }
  }
  if (level + 1 <= hi && cls.kind == MorseClass::Kind::MergedEnd) {
    const Rational w = -1 / matching_weight(*partner, x);
    result.add(path_sum(*partner, q, cache, on_stack), w);
  }
  on_stack.erase(x);
  return cache.emplace(x, std::move(result)).first->second;
}

LinComb<BarVertex> MorseComplex::morse_paths(const BarVertex& start, const PathQuery& q) {
  Cache cache;
  std::unordered_set<BarVertex, BarVertexHash> on_stack;
  return path_sum(start, q, cache, on_stack);
}

LinComb<AnickChain> MorseComplex::anick_diff(const AnickChain& c) {
  if (c.length() < 2) throw PreconditionError("anick_diff requires a chain of length >= 2");
  if (!chain_predicate(family_, c)) throw PreconditionError("anick_diff: not an Anick chain");
  PathQuery q;
  q.terminal_level = c.length() - 1;
  q.band = PathBand::Above;
  q.terminal = [this](const BarVertex& b) { return is_critical(family_, b); };
  q.prune_zero_components = opts_.prune_zero_components;
  std::unordered_set<BarVertex, BarVertexHash> on_stack;
  const auto v = path_sum(BarVertex::from_chain(c), q, critical_down_cache_[q.terminal_level],
                          on_stack);
  return project_to_chains(family_, v);
}

LinComb<BarVertex> MorseComplex::g_map(const AnickChain& c) {
  if (!chain_predicate(family_, c)) throw PreconditionError("g_map: not an Anick chain");
  PathQuery q;
  q.terminal_level = c.length();
  q.band = PathBand::Below;
  std::unordered_set<BarVertex, BarVertexHash> on_stack;
  return path_sum(BarVertex::from_chain(c), q, g_cache_[q.terminal_level], on_stack);
}

LinComb<AnickChain> MorseComplex::f_map(const BarVertex& b) {
  PathQuery q;
  q.terminal_level = b.level();
  q.band = PathBand::Above;
  q.terminal = [this](const BarVertex& v) { return is_critical(family_, v); };
  std::unordered_set<BarVertex, BarVertexHash> on_stack;
  return project_to_chains(family_, path_sum(b, q, f_cache_[q.terminal_level], on_stack));
}

LinComb<AnickChain> MorseComplex::tilde_partial(const AnickChain& c) {
  return project_to_chains(family_, bar_derive(family_, g_map(c)));
}

MorseStats MorseComplex::stats() const {
  MorseStats s;
  for (const auto& [k, c] : critical_down_cache_) s.diff_vertices += c.size();
  for (const auto& [k, c] : g_cache_) s.g_vertices += c.size();
  for (const auto& [k, c] : f_cache_) s.f_vertices += c.size();
  return s;
}

LinComb<BarVertex> morse_paths(const Family& f, const BarVertex& start, const PathQuery& q) {
  MorseComplex mc(f);
  return mc.morse_paths(start, q);
}

LinComb<AnickChain> anick_diff_paths(const Family& f, const AnickChain& c,
                                     bool prune_zero_components) {
  MorseComplex mc(f, MorseOptions{prune_zero_components});
  return mc.anick_diff(c);
}

LinComb<BarVertex> g_map(const Family& f, const AnickChain& c) {
  MorseComplex mc(f);
  return mc.g_map(c);
}

LinComb<AnickChain> tilde_partial_general(const Family& f, const AnickChain& c) {
  MorseComplex mc(f);
  return mc.tilde_partial(c);
}

}  // namespace anick
