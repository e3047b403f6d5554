// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "anick/closed_forms.hpp"
#include "anick/current_conformal.hpp"
#include "anick/errors.hpp"
#include "anick/kernel_cohomology.hpp"
#include "anick/selftest.hpp"

using namespace anick;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(const CheckResult& r) {
    pass = pass && r.pass;
    notes.push_back((r.pass ? "" : "FAILED ") + r.name + " (" + r.detail + ")");
  }
  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!ok) notes.push_back("FAILED " + what);
  }
};

LinComb<AnickChain> chains(std::initializer_list<std::pair<AnickChain, Rational>> terms) {
  LinComb<AnickChain> out;
  for (const auto& [c, k] : terms) out.add(c, k);
  return out;
}

std::string totals_str(const CohomologyReport& r) {
  std::ostringstream os;
  for (const auto& [n, t] : r.totals) os << " H^" << n << "=" << t;
  return os.str();
}

Outcome criterion1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto r = cohomology_table(Family::u3(), 5, 12, {DiffMethod::Both});
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(r.totals == std::map<std::size_t, std::size_t>{{1, 0}, {2, 1}, {3, 1}, {4, 0}, {5, 0}},
            "totals" + totals_str(r));
  for (const auto& e : r.entries) {
    const bool expected = (e.n == 2 || e.n == 3) && e.d == 3;
    o.require(e.cohomology == (expected ? 1u : 0u),
              "cell n=" + std::to_string(e.n) + " d=" + std::to_string(e.d));
  }
  o.require(secs <= 600.0, "runtime");
  std::ostringstream os;
  os << "totals" << totals_str(r) << ", classes at d=3, " << secs << " s";
  o.notes.push_back(os.str());
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto r = cohomology_table(Family::u2(), 4, 12);
  bool zero = r.totals.size() == 4;
  for (const auto& [n, t] : r.totals) zero = zero && t == 0;
  o.require(zero, "totals" + totals_str(r));
  o.notes.push_back("totals" + totals_str(r));
  return o;
}

Outcome criterion3() {
  Outcome o;
  o.require(checks::closed_vs_paths(Family::u3(), 5, 10));
  // U(2): every chain of length 3.
  const auto u2 = Family::u2();
  MorseComplex mc(u2);
  std::size_t count = 0;
  for (std::uint64_t d = 0; d <= 10; ++d)
    for (const auto& c : enumerate_chains(u2, 3, d)) {
      ++count;
      std::ostringstream os;
      os << "U2 chain " << c;
      o.require(closed_diff(u2, c) == mc.anick_diff(c), os.str());
    }
  o.notes.push_back("U2 length-3 chains: " + std::to_string(count));
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (const auto& f : {Family::u3(), Family::u2()}) {
    o.require(checks::tilde_fast_vs_general(f, 4, 10));
    o.require(checks::chain_map(f, 4, 10));
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto u3 = Family::u3(), u2 = Family::u2();
  MorseComplex m3(u3), m2(u2);
  // Each value is checked on both routes.
  auto both3 = [&](const AnickChain& c, const LinComb<AnickChain>& want, const std::string& what) {
    o.require(u3_diff(c) == want && m3.anick_diff(c) == want, what);
  };
  both3({1, 0}, chains({{{0}, -1}}), "delta [1|0]");
  for (Letter n = 2; n <= 8; ++n)
    for (Letter m = 0; m <= 8; ++m)
      both3({n, m}, chains({{{n + m - 1}, make_rational(-long(n) * (n - 1), n + m - 1)}}),
            "delta [" + std::to_string(n) + "|" + std::to_string(m) + "]");
  // Terms that are not chains ([1|1] at n = 2) are projected away.
  auto project = [&](const LinComb<AnickChain>& x) {
    return x.filtered([&](const AnickChain& c) { return chain_predicate(u3, c); });
  };
  for (Letter n = 2; n <= 8; ++n)
    both3({n, 1, 0}, project(chains({{{n, 0}, 2 - long(n)}, {{n - 1, 1}, Rational(n)}})),
          "delta [" + std::to_string(n) + "|1|0]");
  const auto f3 = f3_element();
  o.require(apply_linear(f3, [](const AnickChain& c) { return u3_diff(c); }).empty() &&
                apply_linear(f3, [&](const AnickChain& c) { return m3.anick_diff(c); }).empty(),
            "delta f3");
  const auto u2_210 = chains({{{1, 1}, 2}, {{2, 0}, -1}});
  o.require(u2_diff({2, 1, 0}) == u2_210 && m2.anick_diff({2, 1, 0}) == u2_210, "U2 delta [2|1|0]");
  o.require(u2_diff({1, 1, 0}).empty() && m2.anick_diff({1, 1, 0}).empty(), "U2 delta [1|1|0]");
  const auto t210 = chains({{{1, 1, 0}, 2}});
  o.require(tilde_partial_general(u2, {2, 1, 0}) == t210 && tilde_partial_fast(u2, {2, 1, 0}) == t210,
            "U2 derivation [2|1|0]");
  o.notes.push_back("all golden values match on closed and path routes");
  return o;
}

Outcome criterion6() {
  Outcome o;
  o.require(checks::k1_structure(12));
  o.require(checks::k2_structure(12));
  // Explicit e_d: annihilated by the derivation and by delta for d >= 3.
  const auto u3 = Family::u3();
  for (std::uint64_t d = 3; d <= 12; ++d) {
    const auto e = k2_basis_explicit(d);
    o.require(apply_linear(e, [&](const AnickChain& c) { return tilde_partial_fast(u3, c); }).empty(),
              "derivation of e_" + std::to_string(d));
    o.require(apply_linear(e, [](const AnickChain& c) { return u3_diff(c); }).empty(),
              "delta of e_" + std::to_string(d));
  }
  o.require(checks::k3_dimensions(12));
  o.require(checks::kn_structure(5, 10));
  o.require(checks::im_delta4(12));
  o.require(checks::e_in_image(10));
  return o;
}

Outcome criterion7() {
  Outcome o;
  o.require(checks::current_matrix_vanishing(3, 3));
  o.require(checks::current_h1_indecomposables(3));
  o.require(checks::current_diff_squared(4, 3));
  o.require(checks::current_kernel_oracle(4, 4));
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (const auto& f : {Family::u3(), Family::u2()}) {
    o.require(checks::matching_involution(f, 5, 10));
    o.require(checks::delta_squared(f, 5, 10));
    o.require(checks::pruning_soundness(f, 5, 10));
  }
  o.require(checks::filtration(Family::u3(), 10, 5, 10));
  return o;
}

Outcome criterion9() {
  Outcome o;
  o.require(checks::der10_identity(4, 10));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria = {
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL");
    const char* sep = " - ";
    for (const auto& n : o.notes) {
      std::cout << sep << n;
      sep = "; ";
    }
    std::cout << "\n" << std::flush;
  }
  return failures == 0 ? 0 : 1;
}
