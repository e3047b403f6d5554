#include <doctest.h>

#include <vector>

#include "anick/closed_forms.hpp"
#include "anick/errors.hpp"
#include "anick/kernel_cohomology.hpp"

using namespace anick;

namespace {

LinComb<AnickChain> chains(std::initializer_list<std::pair<AnickChain, Rational>> terms) {
  LinComb<AnickChain> out;
  for (const auto& [c, k] : terms) out.add(c, k);
  return out;
}

// Rank by plain elimination on a dense copy.
std::size_t oracle_rank(const SparseRationalMatrix& m) {
  std::vector<std::vector<Rational>> a(m.row_count(), std::vector<Rational>(m.col_count()));
  for (std::size_t r = 0; r < m.row_count(); ++r)
    for (const auto& [c, v] : m.row(r)) a[r][c] = v;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.col_count() && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      const Rational k = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < m.col_count(); ++j) a[i][j] -= k * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

bool proportional(const LinComb<AnickChain>& x, const LinComb<AnickChain>& y) {
  if (x.empty() || y.empty()) return x.empty() && y.empty();
  const auto& [c0, k0] = *x.begin();
  const Rational s = y.coefficient(c0) / k0;
  return s != 0 && s * x == y;
}

std::size_t regular_oracle(const Family& f, std::size_t n, std::uint64_t d) {
  std::size_t count = 0;
  for (const auto& c : enumerate_chains(f, n, d)) {
    bool regular = true;
    for (Letter x : c.indices) regular = regular && x >= 2;
    count += regular;
  }
  return count;
}

}  // namespace

TEST_CASE("regular chain counts") {
  const auto u3 = Family::u3();
  CHECK(regular_dim(u3, 2, 4) == 1);
  CHECK(regular_dim(u3, 1, 0) == 0);
  CHECK(regular_dim(u3, 2, 5) == 2);
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::uint64_t d = 0; d <= 14; ++d) CHECK(regular_dim(u3, n, d) == regular_oracle(u3, n, d));
}

TEST_CASE("kernel bases in low degrees") {
  const auto u3 = Family::u3();
  const auto k1 = kernel_basis(u3, 1, 0);
  REQUIRE(k1.dim() == 1);
  CHECK(k1.element(0) == chains({{{0}, 1}}));
  for (std::uint64_t d = 1; d <= 10; ++d) CHECK(kernel_basis(u3, 1, d).dim() == 0);

  const auto k3 = kernel_basis(u3, 3, 4);
  REQUIRE(k3.dim() == 1);
  CHECK(proportional(k3.element(0), f3_element()));
  CHECK(kernel_basis(u3, 2, 2).dim() == 0);

  const auto k23 = kernel_basis(u3, 2, 3);
  REQUIRE(k23.dim() == 1);
  CHECK(proportional(k23.element(0), chains({{{3, 0}, 1}, {{2, 1}, -3}})));
}

TEST_CASE("K2 is spanned by the explicit elements") {
  const auto u3 = Family::u3();
  for (std::uint64_t d = 0; d <= 12; ++d) {
    const auto k = kernel_basis(u3, 2, d);
    const auto e = k2_basis_explicit(d);
    if (e.empty()) {
      CHECK(k.dim() == 0);
    } else {
      REQUIRE(k.dim() == 1);
      CHECK(proportional(k.element(0), e));
    }
  }
}

TEST_CASE("kernel dimensions in length three") {
  for (std::uint64_t d = 4; d <= 12; ++d) CHECK(kernel_basis(Family::u3(), 3, d).dim() == d - 3);
}

TEST_CASE("fast and general kernels coincide") {
  for (const auto& f : {Family::u3(), Family::u2()})
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::uint64_t d = 0; d <= 8; ++d) {
        const auto a = kernel_basis(f, n, d, DerivationMethod::Fast);
        const auto b = kernel_basis(f, n, d, DerivationMethod::General);
        CHECK(a.basis == b.basis);
      }
}

TEST_CASE("seed reconstruction") {
  CHECK(reconstruct_from_seed(3, 4, {}).empty());
  const auto x = reconstruct_from_seed(3, 4, {{1, chains({{{3}, 1}})}});
  CHECK(x == chains({{{2, 2, 0}, make_rational(-3, 2)}, {{3, 1, 0}, 1}}));
  CHECK(proportional(x, f3_element()));

  CHECK_THROWS_AS(reconstruct_from_seed(3, 4, {{1, chains({{{2, 2}, 1}})}}), PreconditionError);
  CHECK_THROWS_AS(reconstruct_from_seed(3, 4, {{2, chains({{{2}, 1}})}}), PreconditionError);
  CHECK_THROWS_AS(reconstruct_from_seed(2, 4, {}), PreconditionError);

  // Seeds span the kernel: their number matches its dimension.
  const auto u3 = Family::u3();
  for (std::size_t n = 3; n <= 4; ++n)
    for (std::uint64_t d = 0; d <= 10; ++d) {
      const auto seeds = seed_basis(n, d);
      std::vector<RationalVector> vecs;
      const auto space = make_space(u3, n, d);
      for (const auto& s : seeds) vecs.push_back(space.coordinates(reconstruct_from_seed(n, d, s)));
      CHECK(rank_of_vectors(vecs, space.dim()) == kernel_basis(u3, n, d).dim());
    }
}

TEST_CASE("restricted differentials") {
  const auto u3 = Family::u3();
  CHECK(restricted_diff_matrix(u3, 2, 3).is_zero());
  CHECK(restricted_diff_matrix(u3, 3, 4).is_zero());
  const auto m = restricted_diff_matrix(u3, 2, 1);
  REQUIRE(m.row_count() == 1);
  REQUIRE(m.col_count() == 1);
  CHECK(m.get(0, 0) == -1);
}

TEST_CASE("cohomology cells") {
  const auto u3 = Family::u3();
  CHECK(cohomology_dim(u3, 2, 3).cohomology == 1);
  CHECK(cohomology_dim(u3, 3, 3).cohomology == 1);
  CHECK(cohomology_dim(u3, 2, 5).cohomology == 0);
  CHECK_THROWS_AS(cohomology_dim(u3, 0, 3), PreconditionError);
}

TEST_CASE("cohomology by an independent rank count") {
  // dim H = dim K_n - rank(delta on K_n) - rank(delta on K_{n+1}).
  for (const auto& f : {Family::u3(), Family::u2()}) {
    KernelComplex kc(f);
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::uint64_t d = 0; d <= 9; ++d) {
        const std::size_t out = n == 1 ? 0 : oracle_rank(kc.restricted_diff(n, d));
        const std::size_t in = oracle_rank(kc.restricted_diff(n + 1, d + 1));
        const std::size_t expected = kc.kernel(n, d).dim() - out - in;
        CHECK_MESSAGE(kc.cell(n, d).cohomology == expected, f.name() << " n=" << n << " d=" << d);
      }
  }
}

TEST_CASE("cohomology tables") {
  const auto u3 = cohomology_table(Family::u3(), 5, 12, {DiffMethod::Both});
  CHECK(u3.totals == std::map<std::size_t, std::size_t>{{1, 0}, {2, 1}, {3, 1}, {4, 0}, {5, 0}});
  for (const auto& e : u3.entries) {
    const bool expected_class = (e.n == 2 || e.n == 3) && e.d == 3;
    CHECK(e.cohomology == (expected_class ? 1u : 0u));
  }

  const auto u2 = cohomology_table(Family::u2(), 4, 12);
  for (const auto& [n, t] : u2.totals) CHECK(t == 0);
  CHECK(u2.totals.size() == 4);

  CHECK(cohomology_table(Family::u3(), 1, 3).totals.at(1) == 0);
  CHECK_THROWS_AS(cohomology_table(Family::u3(), 0, 3), PreconditionError);
}

TEST_CASE("every differential route gives the same table") {
  const auto closed = cohomology_table(Family::u3(), 4, 9, {DiffMethod::Closed});
  const auto paths = cohomology_table(Family::u3(), 4, 9, {DiffMethod::Paths});
  const auto unpruned =
      cohomology_table(Family::u3(), 4, 9, {DiffMethod::Paths, DerivationMethod::General, false});
  CHECK(closed.entries == paths.entries);
  CHECK(closed.entries == unpruned.entries);
}

TEST_CASE("closed evaluation falls back to paths where no formula exists") {
  KernelComplex kc(Family::u2(), {DiffMethod::Closed});
  (void)kc.diff(AnickChain{2, 1, 0});
  CHECK(kc.closed_evaluations() == 1);
  CHECK(kc.path_evaluations() == 0);
  (void)kc.diff(AnickChain{2, 1, 1, 0});
  CHECK(kc.path_evaluations() == 1);
}

TEST_CASE("a mismatching closed form is reported") {
  // Both routes are evaluated; agreement on every chain means no exception.
  KernelComplex kc(Family::u3(), {DiffMethod::Both});
  CHECK_NOTHROW(kc.diff(AnickChain{4, 3, 2, 1, 0}));
  CHECK(kc.closed_evaluations() == 1);
  CHECK(kc.path_evaluations() == 1);
}

TEST_CASE("kernel coordinates") {
  auto k = kernel_basis(Family::u3(), 3, 7);
  for (std::size_t i = 0; i < k.dim(); ++i) {
    const auto coords = k.kernel_coordinates(k.basis[i]);
    CHECK(coords.get(i) == 1);
    CHECK(coords.entries().size() == 1);
  }
  RationalVector outside(k.space.dim());
  outside.set(0, 1);
  if (k.dim() < k.space.dim()) CHECK_THROWS_AS(k.kernel_coordinates(outside), StructuralError);
}
