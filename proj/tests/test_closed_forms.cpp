#include <doctest.h>

#include <random>

#include "anick/closed_forms.hpp"
#include "anick/errors.hpp"

using namespace anick;

namespace {

LinComb<AnickChain> chains(std::initializer_list<std::pair<AnickChain, Rational>> terms) {
  LinComb<AnickChain> out;
  for (const auto& [c, k] : terms) out.add(c, k);
  return out;
}

// Slotwise derivative with projection, written out independently.
LinComb<AnickChain> slotwise_oracle(const Family& f, const AnickChain& c) {
  LinComb<AnickChain> out;
  for (std::size_t j = 0; j < c.length(); ++j) {
    if (c.indices[j] == 0) continue;
    AnickChain t = c;
    --t.indices[j];
    if (chain_predicate(f, t)) out.add(t, Rational(c.indices[j]));
  }
  return out;
}

}  // namespace

TEST_CASE("U(3) closed form on two-chains") {
  CHECK(u3_diff({1, 0}) == chains({{{0}, -1}}));
  for (Letter n = 2; n <= 8; ++n)
    for (Letter m = 0; m <= 8; ++m)
      CHECK(u3_diff({n, m}) ==
            chains({{{n + m - 1}, make_rational(-long(n) * (n - 1), n + m - 1)}}));
}

TEST_CASE("U(3) closed form on three-chains") {
  CHECK(u3_diff({3, 1, 0}) == chains({{{3, 0}, -1}, {{2, 1}, 3}}));
  CHECK(u3_diff({2, 2, 0}) == chains({{{2, 1}, 2}, {{3, 0}, make_rational(-2, 3)}}));
  // At n = 2 the second term is [1|1], which is not a chain and projects away.
  for (Letter n = 2; n <= 8; ++n) {
    auto want = chains({{{n, 0}, 2 - long(n)}, {{n - 1, 1}, Rational(n)}});
    want = want.filtered([](const AnickChain& c) { return chain_predicate(Family::u3(), c); });
    CHECK(u3_diff({n, 1, 0}) == want);
  }
  CHECK(u3_diff({2, 1, 0}).empty());
}

TEST_CASE("U(2) closed form") {
  CHECK(u2_diff({2, 1, 0}) == chains({{{1, 1}, 2}, {{2, 0}, -1}}));
  CHECK(u2_diff({1, 1, 0}).empty());
  CHECK(u2_diff({2, 2, 0}) == chains({{{3, 0}, -2}, {{2, 1}, 2}, {{1, 2}, 2}}));
  CHECK_THROWS_AS(u2_diff({2, 2, 2, 0}), PreconditionError);
}

TEST_CASE("closed forms agree with path sums") {
  const auto u3 = Family::u3(), u2 = Family::u2();
  MorseComplex m3(u3), m2(u2);
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::uint64_t d = 0; d <= 10; ++d)
      for (const auto& c : enumerate_chains(u3, n, d))
        CHECK_MESSAGE(closed_diff(u3, c) == m3.anick_diff(c), c);
  for (std::size_t n = 2; n <= 3; ++n)
    for (std::uint64_t d = 0; d <= 10; ++d)
      for (const auto& c : enumerate_chains(u2, n, d))
        CHECK_MESSAGE(closed_diff(u2, c) == m2.anick_diff(c), c);
}

TEST_CASE("closed form availability") {
  CHECK(has_closed_diff(Family::u3(), {5, 4, 3, 2, 1, 0}));
  CHECK(has_closed_diff(Family::u2(), {2, 1, 0}));
  CHECK_FALSE(has_closed_diff(Family::u2(), {2, 1, 1, 0}));
  const auto custom = Family::custom(
      "free", 2, [](Letter, Letter) { return false; },
      [](Letter, Letter) { return LinComb<Word>(); });
  CHECK_FALSE(has_closed_diff(custom, {1, 0}));
  CHECK_THROWS_AS(closed_diff(custom, {1, 0}), PreconditionError);
  CHECK_THROWS_AS(tilde_partial_fast(custom, {1}), PreconditionError);
}

TEST_CASE("fast transferred derivation") {
  const auto u3 = Family::u3();
  for (Letter p = 1; p <= 8; ++p) CHECK(tilde_partial_fast(u3, {2, p}) == chains({{{2, p - 1}, Rational(p)}}));
  for (Letter n = 3; n <= 8; ++n)
    CHECK(tilde_partial_fast(u3, {n, 2, 1}) == chains({{{n - 1, 2, 1}, Rational(n)}, {{n, 2, 0}, 1}}));
  CHECK(tilde_partial_fast(u3, {2, 1, 0}).empty());
  CHECK(tilde_partial_fast(u3, {2, 2, 2, 1, 0}).empty());

  for (const auto& f : {u3, Family::u2()})
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::uint64_t d = 0; d <= 9; ++d)
        for (const auto& c : enumerate_chains(f, n, d))
          CHECK(tilde_partial_fast(f, c) == slotwise_oracle(f, c));
}

TEST_CASE("explicit K2 basis") {
  CHECK(k2_basis_explicit(0).empty());
  CHECK(k2_basis_explicit(2).empty());
  CHECK(k2_basis_explicit(1) == chains({{{1, 0}, 1}}));
  CHECK(k2_basis_explicit(3) == chains({{{3, 0}, 1}, {{2, 1}, -3}}));
  CHECK(k2_basis_explicit(4) == chains({{{4, 0}, 1}, {{3, 1}, -4}, {{2, 2}, 6}}));
  const auto u3 = Family::u3();
  for (std::uint64_t d = 3; d <= 12; ++d) {
    const auto e = k2_basis_explicit(d);
    CHECK(apply_linear(e, [&](const AnickChain& c) { return tilde_partial_fast(u3, c); }).empty());
  }
}

TEST_CASE("the degree-four kernel element") {
  const auto f3 = f3_element();
  CHECK(f3 == chains({{{2, 2, 0}, 1}, {{3, 1, 0}, make_rational(-2, 3)}}));
  CHECK(apply_linear(f3, [](const AnickChain& c) { return u3_diff(c); }).empty());
  CHECK(apply_linear(f3, [](const AnickChain& c) {
          return tilde_partial_fast(Family::u3(), c);
        }).empty());
}

TEST_CASE("appending an index") {
  const auto u3 = Family::u3();
  const auto x = chains({{{3, 2}, 1}, {{2, 1}, 2}});
  CHECK(append_index(u3, x, 1) == chains({{{3, 2, 1}, 1}}));
  CHECK(append_index(u3, x, 0) == chains({{{3, 2, 0}, 1}, {{2, 1, 0}, 2}}));
}

TEST_CASE("the trailing one-zero identity") {
  CHECK(der10_identity_check(3, 5, chains({{{3, 2}, 1}})));
  CHECK(der10_identity_check(2, 3, chains({{{3}, 1}})));
  CHECK_THROWS_AS(der10_identity_check(3, 5, chains({{{4, 1}, 1}})), PreconditionError);
  CHECK_THROWS_AS(der10_identity_check(3, 6, chains({{{3, 2}, 1}})), PreconditionError);

  const auto u3 = Family::u3();
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (std::uint64_t d = 4; d <= 10; ++d) {
    std::vector<AnickChain> pool;
    for (const auto& c : enumerate_chains(u3, 2, d))
      if (c.back() >= 2) pool.push_back(c);
    if (pool.empty()) continue;
    for (int trial = 0; trial < 5; ++trial) {
      LinComb<AnickChain> v;
      for (const auto& c : pool) v.add(c, Rational(coef(rng)));
      if (v.empty()) continue;
      CHECK(der10_identity_check(3, d, v));
    }
  }
}
