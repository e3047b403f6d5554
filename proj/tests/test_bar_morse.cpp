#include <doctest.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "anick/bar_morse.hpp"
#include "anick/errors.hpp"

using namespace anick;

namespace {

// The explicit chain shapes: U(3) tuples have every index but the last at
// least 2, or end in 1, 0 after such a prefix; U(2) tuples have every index
// but the last at least 1.
bool explicit_u3_chain(const std::vector<Letter>& t) {
  const std::size_t n = t.size();
  if (n == 0) return false;
  auto prefix_regular = [&](std::size_t upto) {
    return std::all_of(t.begin(), t.begin() + upto, [](Letter x) { return x >= 2; });
  };
  if (prefix_regular(n - 1)) return true;
  return n >= 2 && t[n - 2] == 1 && t[n - 1] == 0 && prefix_regular(n - 2);
}

bool explicit_u2_chain(const std::vector<Letter>& t) {
  return !t.empty() && std::all_of(t.begin(), t.end() - 1, [](Letter x) { return x >= 1; });
}

void for_each_tuple(std::size_t n, Letter max_index,
                    const std::function<void(const std::vector<Letter>&)>& f) {
  std::vector<Letter> t(n, 0);
  while (true) {
    f(t);
    std::size_t i = 0;
    while (i < n && t[i] == max_index) t[i++] = 0;
    if (i == n) return;
    ++t[i];
  }
}

std::vector<AnickChain> brute_force_chains(bool u3, std::size_t n, std::uint64_t d) {
  std::vector<AnickChain> out;
  for_each_tuple(n, static_cast<Letter>(d), [&](const std::vector<Letter>& t) {
    std::uint64_t s = 0;
    for (Letter x : t) s += x;
    if (s == d && (u3 ? explicit_u3_chain(t) : explicit_u2_chain(t))) out.emplace_back(t);
  });
  std::sort(out.begin(), out.end());
  return out;
}

BarVertex bv(std::initializer_list<Word> comps) { return BarVertex(std::vector<Word>(comps)); }

LinComb<AnickChain> chains(std::initializer_list<std::pair<AnickChain, Rational>> terms) {
  LinComb<AnickChain> out;
  for (const auto& [c, k] : terms) out.add(c, k);
  return out;
}

LinComb<BarVertex> vertices(std::initializer_list<std::pair<BarVertex, Rational>> terms) {
  LinComb<BarVertex> out;
  for (const auto& [b, k] : terms) out.add(b, k);
  return out;
}

}  // namespace

TEST_CASE("chain predicate examples") {
  CHECK(chain_predicate(Family::u3(), AnickChain{2, 1, 0}));
  CHECK_FALSE(chain_predicate(Family::u3(), AnickChain{1, 1}));
  CHECK(chain_predicate(Family::u2(), AnickChain{1, 1, 0}));
  CHECK_FALSE(chain_predicate(Family::u2(), AnickChain{0, 1}));
}

TEST_CASE("chain predicate matches the explicit chain shapes") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const Letter max_index = n <= 4 ? 8 : 4;
    for_each_tuple(n, max_index, [&](const std::vector<Letter>& t) {
      CHECK(chain_predicate(Family::u3(), t) == explicit_u3_chain(t));
      CHECK(chain_predicate(Family::u2(), t) == explicit_u2_chain(t));
    });
  }
}

TEST_CASE("chain enumeration") {
  CHECK(enumerate_chains(Family::u3(), 3, 4) == std::vector<AnickChain>{{2, 2, 0}, {3, 1, 0}});
  CHECK(enumerate_chains(Family::u3(), 2, 1) == std::vector<AnickChain>{{1, 0}});
  CHECK(enumerate_chains(Family::u3(), 1, 0) == std::vector<AnickChain>{{0}});
  CHECK(enumerate_chains(Family::u3(), 2, 2) == std::vector<AnickChain>{{2, 0}});

  for (std::size_t n = 1; n <= 5; ++n)
    for (std::uint64_t d = 0; d <= 10; ++d) {
      CHECK(enumerate_chains(Family::u3(), n, d) == brute_force_chains(true, n, d));
      CHECK(enumerate_chains(Family::u2(), n, d) == brute_force_chains(false, n, d));
    }
}

TEST_CASE("classification") {
  const auto u3 = Family::u3();
  CHECK(classify(u3, bv({Word{2}, Word{2}, Word{0}})).kind == MorseClass::Kind::Critical);

  const auto merged = classify(u3, bv({Word{0, 3}, Word{0}}));
  CHECK(merged == MorseClass{MorseClass::Kind::MergedEnd, 1});
  CHECK(matching_partner(u3, bv({Word{0, 3}, Word{0}})) == bv({Word{0}, Word{3}, Word{0}}));

  const auto split = classify(u3, bv({Word{2}, Word{1}, Word{1}}));
  CHECK(split == MorseClass{MorseClass::Kind::SplitEnd, 2});
  const auto partner = matching_partner(u3, bv({Word{2}, Word{1}, Word{1}}));
  REQUIRE(partner);
  CHECK(*partner == bv({Word{2}, Word{1, 1}}));
  CHECK(classify(u3, *partner) == MorseClass{MorseClass::Kind::MergedEnd, 2});
  CHECK_FALSE(matching_partner(u3, bv({Word{2}, Word{0}})));
}

TEST_CASE("matching is an involution between adjacent levels") {
  for (const auto& f : {Family::u3(), Family::u2()}) {
    // Every reduced component of index degree <= 3 and length <= 2.
    std::vector<Word> words;
    for (Letter a = 0; a <= 3; ++a) words.push_back(Word{a});
    for (Letter a = 0; a <= 3; ++a)
      for (Letter b = 0; a + b <= 3; ++b)
        if (!f.is_obstruction(a, b)) words.push_back(Word{a, b});
    std::function<void(std::vector<Word>&)> visit = [&](std::vector<Word>& comps) {
      if (!comps.empty()) {
        const BarVertex b(comps);
        const auto p = matching_partner(f, b);
        if (p) {
          CHECK(std::max(p->level(), b.level()) - std::min(p->level(), b.level()) == 1);
          CHECK(matching_partner(f, *p) == b);
          CHECK(p->index_degree() == b.index_degree());
        } else {
          CHECK(is_critical(f, b));
        }
      }
      if (comps.size() == 3) return;
      for (const auto& w : words) {
        comps.push_back(w);
        visit(comps);
        comps.pop_back();
      }
    };
    std::vector<Word> start;
    visit(start);
  }
}

TEST_CASE("bar differential") {
  const auto u3 = Family::u3(), u2 = Family::u2();
  CHECK(bar_diff(u3, bv({Word{1}, Word{0}})) ==
        vertices({{bv({Word{0, 1}}), -1}, {bv({Word{0}}), -1}}));
  CHECK(bar_diff(u3, bv({Word{4}})).empty());
  for (Letter n = 1; n <= 4; ++n)
    for (Letter m = 0; m <= 4; ++m)
      CHECK(bar_diff(u2, bv({Word{n}, Word{m}})) ==
            vertices({{bv({Word{0, n + m}}), -1}, {bv({Word{n + m - 1}}), -Rational(n)}}));
}

TEST_CASE("bar differential squares to zero") {
  const auto u3 = Family::u3();
  const std::vector<BarVertex> samples = {
      bv({Word{2}, Word{3}, Word{1}}), bv({Word{3}, Word{2}, Word{1}, Word{0}}),
      bv({Word{1}, Word{0}, Word{2}, Word{2}}), bv({Word{0, 2}, Word{1}, Word{4}})};
  for (const auto& b : samples) {
    LinComb<BarVertex> dd;
    for (const auto& [x, c] : bar_diff(u3, b)) dd.add(bar_diff(u3, x), c);
    CHECK(dd.empty());
  }
}

TEST_CASE("path sums") {
  const auto u3 = Family::u3(), u2 = Family::u2();
  const auto start = bv({Word{2}, Word{0}});

  PathQuery self{2, PathBand::Above, [&](const BarVertex& b) { return b == start; }};
  CHECK(morse_paths(u3, start, self) == vertices({{start, 1}}));

  PathQuery down{1, PathBand::Above, [&](const BarVertex& b) { return is_critical(u3, b); }};
  CHECK(morse_paths(u3, start, down) == vertices({{bv({Word{1}}), -2}}));

  PathQuery up{3, PathBand::Below, [](const BarVertex& b) { return b.level() == 3; }};
  CHECK(morse_paths(u2, bv({Word{0, 3}, Word{0}}), up) ==
        vertices({{bv({Word{0}, Word{3}, Word{0}}), 1}}));
}

TEST_CASE("Anick differential through paths") {
  const auto u3 = Family::u3(), u2 = Family::u2();
  CHECK(anick_diff_paths(u3, {1, 0}) == chains({{{0}, -1}}));
  CHECK(anick_diff_paths(u3, {3, 2}) == chains({{{4}, make_rational(-3, 2)}}));
  CHECK(anick_diff_paths(u2, {2, 1, 0}) == chains({{{1, 1}, 2}, {{2, 0}, -1}}));
  CHECK(anick_diff_paths(u2, {1, 1, 0}).empty());
  for (Letter n = 2; n <= 8; ++n)
    for (Letter m = 0; m <= 8; ++m)
      CHECK(anick_diff_paths(u3, {n, m}) ==
            chains({{{n + m - 1}, make_rational(-long(n) * (n - 1), n + m - 1)}}));
}

TEST_CASE("pruning does not change the differential") {
  for (const auto& f : {Family::u3(), Family::u2()})
    for (std::size_t n = 2; n <= 4; ++n)
      for (std::uint64_t d = 0; d <= 8; ++d)
        for (const auto& c : enumerate_chains(f, n, d))
          CHECK(anick_diff_paths(f, c, true) == anick_diff_paths(f, c, false));
}

TEST_CASE("Anick differential squares to zero") {
  for (const auto& f : {Family::u3(), Family::u2()}) {
    MorseComplex mc(f);
    for (std::size_t n = 3; n <= 5; ++n)
      for (std::uint64_t d = 0; d <= 8; ++d)
        for (const auto& c : enumerate_chains(f, n, d)) {
          const auto dd = apply_linear(mc.anick_diff(c), [&](const AnickChain& x) {
            return x.length() >= 2 ? mc.anick_diff(x) : LinComb<AnickChain>();
          });
          CHECK_MESSAGE(dd.empty(), f.name() << " " << c);
        }
  }
}

TEST_CASE("homotopy and transferred derivation") {
  const auto u3 = Family::u3(), u2 = Family::u2();
  const auto expected = vertices({{bv({Word{2}, Word{0}}), 1}, {bv({Word{0}, Word{2}}), -1}});
  CHECK(g_map(u2, {2, 0}) == expected);
  CHECK(g_map(u3, {2, 0}) == expected);
  for (const auto& c : enumerate_chains(u3, 3, 6))
    CHECK(g_map(u3, c).coefficient(BarVertex::from_chain(c)) == 1);

  CHECK(tilde_partial_general(u2, {2, 1, 0}) == chains({{{1, 1, 0}, 2}}));
  CHECK(tilde_partial_general(u3, {0}).empty());
  CHECK(tilde_partial_general(u3, {2, 0}) == chains({{{1, 0}, 2}}));
}

TEST_CASE("matching weights are units and caches are reused") {
  MorseComplex mc(Family::u3());
  CHECK(abs(mc.matching_weight(bv({Word{0}, Word{3}, Word{0}}), bv({Word{0, 3}, Word{0}}))) == 1);
  (void)mc.anick_diff({3, 2, 2, 0});
  const auto before = mc.stats();
  (void)mc.anick_diff({3, 2, 2, 0});
  CHECK(mc.stats().diff_vertices == before.diff_vertices);
}

TEST_CASE("differential of a one-chain is rejected") {
  CHECK_THROWS_AS(anick_diff_paths(Family::u3(), {3}), PreconditionError);
}
