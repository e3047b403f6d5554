#include "anick/selftest.hpp"

#include <deque>
#include <functional>
#include <set>
#include <sstream>

#include "anick/closed_forms.hpp"
#include "anick/current_conformal.hpp"
#include "anick/errors.hpp"

namespace anick {

bool SuiteReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string SuiteReport::render() const {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
    passed += c.pass ? 1 : 0;
  }
  os << "suite " << suite << ": " << passed << "/" << checks.size() << " passed\n";
  return os.str();
}

namespace checks {

namespace {

// Accumulates a check; the first failure message is kept.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++count_;
    if (ok || failed_) {
      failed_ = failed_ || !ok;
      return;
    }
    failed_ = true;
    std::ostringstream os;
    describe(os);
    first_ = os.str();
  }

  CheckResult done(const std::string& unit = "cases") const {
    CheckResult r{name_, !failed_, {}};
    if (failed_) {
      r.detail = first_;
    } else {
      r.detail = std::to_string(count_) + " " + unit;
    }
    return r;
  }

  // Runs body and converts any library error into a failure.
  template <class Body>
  CheckResult run(Body&& body, const std::string& unit = "cases") {
    try {
      body(*this);
    } catch (const std::exception& e) {
      if (!failed_) first_ = std::string("exception: ") + e.what();
      failed_ = true;
    }
    return done(unit);
  }

 private:
  std::string name_;
  std::size_t count_ = 0;
  bool failed_ = false;
  std::string first_;
};

template <class Fn>
void for_chains(const Family& f, std::size_t n_lo, std::size_t n_hi, std::uint64_t d_max, Fn&& fn) {
  for (std::size_t n = n_lo; n <= n_hi; ++n)
    for (std::uint64_t d = 0; d <= d_max; ++d)
      for (const auto& c : enumerate_chains(f, n, d)) fn(n, d, c);
}

void all_words(Letter max_index, std::size_t len, const std::function<void(const Word&)>& fn) {
  std::vector<Letter> w(len, 0);
  while (true) {
    fn(Word(w));
    std::size_t i = len;
    while (i > 0 && w[i - 1] == max_index) w[--i] = 0;
    if (i == 0) return;
    ++w[i - 1];
  }
}

bool complementary(const MorseClass& a, const MorseClass& b) {
  using K = MorseClass::Kind;
  return (a.kind == K::MergedEnd && b.kind == K::SplitEnd) ||
         (a.kind == K::SplitEnd && b.kind == K::MergedEnd);
}

std::string family_tag(const std::string& base, const Family& f) { return base + " " + f.name(); }

}  // namespace

CheckResult defining_relations(const Family& f, Letter n_max) {
  Tally t(family_tag("defining relations reduce to zero", f));
  return t.run([&](Tally& t) {
    const auto r = check_defining_relations(f, n_max);
    t.expect(r.ok(), [&](std::ostream& os) { os << r.failures.front(); });
  });
}

CheckResult confluence(const Family& f, Letter max_index, std::size_t max_length) {
  Tally t(family_tag("leftmost and rightmost reduction agree", f));
  return t.run([&](Tally& t) {
    for (std::size_t len = 1; len <= max_length; ++len) {
      all_words(max_index, len, [&](const Word& w) {
        const auto left = normal_form(f, w, ReductionStrategy::Leftmost);
        const auto right = normal_form(f, w, ReductionStrategy::Rightmost);
        bool reduced = true;
        for (const auto& [u, c] : left) reduced = reduced && is_reduced(f, u);
        t.expect(left == right && reduced,
                 [&](std::ostream& os) { os << w << ": " << left << " vs " << right; });
      });
    }
  }, "words");
}

CheckResult derivation_well_defined(const Family& f, Letter max_index, std::size_t max_length) {
  Tally t(family_tag("derivation commutes with reduction", f));
  return t.run([&](Tally& t) {
    for (std::size_t len = 1; len <= max_length; ++len) {
      all_words(max_index, len, [&](const Word& w) {
        const auto a = derive(f, w);
        const auto b = derive(f, normal_form(f, w));
        t.expect(a == b, [&](std::ostream& os) { os << w << ": " << a << " vs " << b; });
      });
    }
  }, "words");
}

CheckResult matching_involution(const Family& f, std::size_t n_max, std::uint64_t d_max) {
  Tally t(family_tag("matching is an involution with unit weights", f));
  return t.run([&](Tally& t) {
    MorseComplex mc(f);
    std::set<BarVertex> seen;
    std::deque<BarVertex> queue;
    for_chains(f, 1, n_max, d_max, [&](std::size_t, std::uint64_t, const AnickChain& c) {
      auto b = BarVertex::from_chain(c);
      if (seen.insert(b).second) queue.push_back(b);
    });
    while (!queue.empty()) {
      const BarVertex b = queue.front();
      queue.pop_front();
      const MorseClass cls = classify(f, b);
      std::vector<BarVertex> next;
      if (cls.kind != MorseClass::Kind::Critical) {
        const BarVertex p = *matching_partner(f, b);
        const MorseClass pc = classify(f, p);
        const auto back = matching_partner(f, p);
        t.expect(complementary(cls, pc) && back && *back == b,
                 [&](std::ostream& os) { os << b << " -> " << p << " does not return"; });
        const bool merged = cls.kind == MorseClass::Kind::MergedEnd;
        const BarVertex& split = merged ? p : b;
        const BarVertex& joined = merged ? b : p;
        const std::size_t pos = merged ? pc.position : cls.position;
        const Rational w = mc.matching_weight(split, joined);
        t.expect(w == (pos % 2 == 0 ? 1 : -1),
                 [&](std::ostream& os) { os << split << " has weight " << w << " on its partner"; });
        next.push_back(p);
      }
      if (b.level() >= 2)
        for (const auto& [y, c] : mc.bar_diff(b)) next.push_back(y);
      for (auto& y : next)
        if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }, "vertex checks");
}

CheckResult delta_squared(const Family& f, std::size_t n_max, std::uint64_t d_max) {
  Tally t(family_tag("delta o delta = 0", f));
  return t.run([&](Tally& t) {
    MorseComplex mc(f);
    for_chains(f, 3, n_max, d_max, [&](std::size_t, std::uint64_t, const AnickChain& c) {
      const auto dd = apply_linear(mc.anick_diff(c), [&](const AnickChain& y) { return mc.anick_diff(y); });
      t.expect(dd.empty(), [&](std::ostream& os) { os << c << ": " << dd; });
    });
  }, "chains");
}

CheckResult filtration(const Family& f, Letter k_max, std::size_t n_max, std::uint64_t d_max) {
  Tally t(family_tag("delta preserves the last-index filtration", f));
  return t.run([&](Tally& t) {
    MorseComplex mc(f);
    for_chains(f, 2, n_max, d_max, [&](std::size_t, std::uint64_t, const AnickChain& c) {
      const auto dc = mc.anick_diff(c);
      for (Letter k = 0; k <= k_max; ++k) {
        if (c.back() < k) continue;
        bool inside = true;
        for (const auto& [y, v] : dc) inside = inside && y.back() >= k;
        t.expect(inside, [&](std::ostream& os) { os << c << " leaves level " << k << ": " << dc; });
      }
    });
  });
}

CheckResult pruning_soundness(const Family& f, std::size_t n_max, std::uint64_t d_max) {
  Tally t(family_tag("zero-component pruning is sound", f));
  return t.run([&](Tally& t) {
    MorseComplex pruned(f, MorseOptions{true});
    MorseComplex full(f, MorseOptions{false});
    for_chains(f, 2, n_max, d_max, [&](std::size_t, std::uint64_t, const AnickChain& c) {
      const auto a = pruned.anick_diff(c);
      const auto b = full.anick_diff(c);
      t.expect(a == b, [&](std::ostream& os) { os << c << ": " << a << " vs " << b; });
    });
  }, "chains");
}

CheckResult degree_bookkeeping(const Family& f, std::size_t n_max, std::uint64_t d_max) {
  Tally t(family_tag("delta and the derivation lower degree by one", f));
  return t.run([&](Tally& t) {
    MorseComplex mc(f);
    for_chains(f, 1, n_max, d_max, [&](std::size_t n, std::uint64_t d, const AnickChain& c) {
      if (n >= 2) {
        for (const auto& [y, v] : mc.anick_diff(c))
          t.expect(y.length() == n - 1 && y.degree() + 1 == d,
                   [&](std::ostream& os) { os << c << " -> " << y; });
      }
      for (const auto& [y, v] : mc.tilde_partial(c))
        t.expect(y.length() == n && y.degree() + 1 == d,
                 [&](std::ostream& os) { os << c << " -> " << y; });
    });
  }, "terms");
}

CheckResult closed_vs_paths(const Family& f, std::size_t n_max, std::uint64_t d_max) {
  Tally t(family_tag("closed forms equal path differentials", f));
  return t.run([&](Tally& t) {
    MorseComplex mc(f);
    for_chains(f, 2, n_max, d_max, [&](std::size_t, std::uint64_t, const AnickChain& c) {
      if (!has_closed_diff(f, c)) return;
      const auto a = closed_diff(f, c);
      const auto b = mc.anick_diff(c);
      t.expect(a == b, [&](std::ostream& os) { os << c << ": closed " << a << ", paths " << b; });
    });
  }, "chains");
}

CheckResult der10_identity(std::size_t v_length_max, std::uint64_t d_max) {
  Tally t("appending index 1 shifts delta by (-1)^(n-1)(d-n+1)");
  return t.run([&](Tally& t) {
    const Family u3 = Family::u3();
    for_chains(u3, 1, v_length_max, d_max, [&](std::size_t n, std::uint64_t d, const AnickChain& v) {
      if (v.back() < 2) return;
      t.expect(der10_identity_check(n + 1, d, LinComb<AnickChain>(v)),
               [&](std::ostream& os) { os << "fails for v = " << v; });
    });
  }, "chains");
}

CheckResult tilde_fast_vs_general(const Family& f, std::size_t n_max, std::uint64_t d_max) {
  Tally t(family_tag("fast derivation equals transferred derivation", f));
  return t.run([&](Tally& t) {
    MorseComplex mc(f);
    for_chains(f, 1, n_max, d_max, [&](std::size_t, std::uint64_t, const AnickChain& c) {
      const auto a = tilde_partial_fast(f, c);
      const auto b = mc.tilde_partial(c);
      t.expect(a == b, [&](std::ostream& os) { os << c << ": fast " << a << ", general " << b; });
    });
  }, "chains");
}

CheckResult chain_map(const Family& f, std::size_t n_max, std::uint64_t d_max) {
  Tally t(family_tag("derivation commutes with delta", f));
  return t.run([&](Tally& t) {
    MorseComplex mc(f);
    for_chains(f, 2, n_max, d_max, [&](std::size_t, std::uint64_t, const AnickChain& c) {
      const auto general = [&](const AnickChain& y) { return mc.tilde_partial(y); };
      const auto fast = [&](const AnickChain& y) { return tilde_partial_fast(f, y); };
      const auto diff = [&](const AnickChain& y) { return mc.anick_diff(y); };
      const auto lhs = apply_linear(mc.tilde_partial(c), diff);
      const auto rhs = apply_linear(mc.anick_diff(c), general);
      const auto lhs_fast = apply_linear(tilde_partial_fast(f, c), diff);
      const auto rhs_fast = apply_linear(mc.anick_diff(c), fast);
      t.expect(lhs == rhs && lhs_fast == rhs_fast,
               [&](std::ostream& os) { os << c << ": " << lhs << " vs " << rhs; });
    });
  }, "chains");
}

CheckResult cohomology_totals(const Family& f, std::size_t n_max, std::uint64_t d_max,
                              KernelOptions opts, const std::map<std::size_t, std::size_t>& expected) {
  std::ostringstream name;
  name << f.name() << " cohomology totals (n<=" << n_max << ", d<=" << d_max
       << ", method=" << to_string(opts.method) << ")";
  Tally t(name.str());
  return t.run([&](Tally& t) {
    const auto r = cohomology_table(f, n_max, d_max, opts);
    t.expect(r.totals == expected, [&](std::ostream& os) {
      os << "got";
      for (const auto& [n, v] : r.totals) os << " " << n << ":" << v;
    });
  }, "tables");
}

CheckResult method_independence(const Family& f, std::size_t n_max, std::uint64_t d_max) {
  Tally t(family_tag("cohomology independent of differential and derivation route", f));
  return t.run([&](Tally& t) {
    const auto base = cohomology_table(f, n_max, d_max, {DiffMethod::Closed, DerivationMethod::Fast, true});
    const std::vector<KernelOptions> variants = {
        {DiffMethod::Paths, DerivationMethod::Fast, true},
        {DiffMethod::Closed, DerivationMethod::General, true},
        {DiffMethod::Paths, DerivationMethod::General, false},
    };
    for (const auto& v : variants) {
      const auto r = cohomology_table(f, n_max, d_max, v);
      t.expect(r.entries == base.entries, [&](std::ostream& os) {
        os << "tables differ for method " << to_string(v.method);
      });
    }
  }, "variants");
}

CheckResult k1_structure(std::uint64_t d_max) {
  Tally t("K_1 is spanned by [0]");
  return t.run([&](Tally& t) {
    KernelComplex kc(Family::u3());
    const auto& k0 = kc.kernel(1, 0);
    t.expect(k0.dim() == 1 && k0.element(0) == LinComb<AnickChain>(AnickChain{0}),
             [&](std::ostream& os) { os << "K_1^(0) has dimension " << k0.dim(); });
    for (std::uint64_t d = 1; d <= d_max; ++d)
      t.expect(kc.kernel(1, d).dim() == 0, [&](std::ostream& os) { os << "K_1^(" << d << ") != 0"; });
  }, "degrees");
}

CheckResult k2_structure(std::uint64_t d_max) {
  Tally t("K_2 basis is e_1 and e_d, d >= 3");
  return t.run([&](Tally& t) {
    const Family u3 = Family::u3();
    KernelComplex kc(u3);
    for (std::uint64_t d = 0; d <= d_max; ++d) {
      const auto& k = kc.kernel(2, d);
      const auto e = k2_basis_explicit(d);
      if (d == 0 || d == 2) {
        t.expect(k.dim() == 0 && e.empty(), [&](std::ostream& os) { os << "K_2^(" << d << ") != 0"; });
        continue;
      }
      std::vector<RationalVector> span = k.basis;
      span.push_back(k.space.coordinates(e));
      t.expect(k.dim() == 1 && rank_of_vectors(span, k.space.dim()) == 1,
               [&](std::ostream& os) { os << "K_2^(" << d << ") is not spanned by e_" << d; });
      LinComb<AnickChain> de;
      for (const auto& [c, v] : e) de.add(tilde_partial_fast(u3, c), v);
      t.expect(de.empty(), [&](std::ostream& os) { os << "derivation of e_" << d << " = " << de; });
      const auto delta = kc.diff(e);
      if (d >= 3) {
        t.expect(delta.empty(), [&](std::ostream& os) { os << "delta(e_" << d << ") = " << delta; });
      } else {
        t.expect(delta == -LinComb<AnickChain>(AnickChain{0}),
                 [&](std::ostream& os) { os << "delta(e_1) = " << delta; });
      }
    }
  }, "conditions");
}

CheckResult k3_dimensions(std::uint64_t d_max) {
  Tally t("dim K_3^(d) = d - 3");
  return t.run([&](Tally& t) {
    KernelComplex kc(Family::u3());
    for (std::uint64_t d = 4; d <= d_max; ++d) {
      const std::size_t dim = kc.kernel(3, d).dim();
      t.expect(dim == d - 3, [&](std::ostream& os) { os << "d=" << d << ": " << dim; });
    }
  }, "degrees");
}

CheckResult kn_structure(std::size_t n_max, std::uint64_t d_max) {
  Tally t("dim K_n matches the regular-chain decomposition");
  return t.run([&](Tally& t) {
    const Family u3 = Family::u3();
    KernelComplex kc(u3);
    for (std::size_t n = 3; n <= n_max; ++n) {
      for (std::uint64_t d = 0; d <= d_max; ++d) {
        std::size_t expected = d >= 1 ? regular_dim(u3, n - 2, d - 1) : 0;
        for (std::uint64_t j = 3; j <= d; ++j) expected += regular_dim(u3, n - 2, d - j);
        const std::size_t dim = kc.kernel(n, d).dim();
        t.expect(dim == expected, [&](std::ostream& os) {
          os << "(n,d)=(" << n << "," << d << "): " << dim << " vs " << expected;
        });
      }
    }
  }, "cells");
}

CheckResult seed_reconstruction(std::size_t n_max, std::uint64_t d_max) {
  Tally t("seed reconstruction spans K_n");
  return t.run([&](Tally& t) {
    KernelComplex kc(Family::u3());
    for (std::size_t n = 3; n <= n_max; ++n) {
      for (std::uint64_t d = 0; d <= d_max; ++d) {
        const auto& k = kc.kernel(n, d);
        std::vector<RationalVector> vs;
        for (const auto& s : seed_basis(n, d))
          vs.push_back(k.space.coordinates(reconstruct_from_seed(n, d, s)));
        const std::size_t r = rank_of_vectors(vs, k.space.dim());
        t.expect(vs.size() == k.dim() && r == k.dim(), [&](std::ostream& os) {
          os << "(n,d)=(" << n << "," << d << "): " << vs.size() << " seeds, rank " << r
             << ", kernel " << k.dim();
        });
      }
    }
  }, "cells");
}

CheckResult im_delta4(std::uint64_t d_max) {
  Tally t("dim Im delta_4^(d+1) = dim Ker delta_3^(d) = d - 4");
  return t.run([&](Tally& t) {
    KernelComplex kc(Family::u3());
    for (std::uint64_t d = 5; d <= d_max; ++d) {
      const auto cell = kc.cell(3, d);
      t.expect(cell.dim_im_delta == d - 4 && cell.dim_ker_delta == d - 4, [&](std::ostream& os) {
        os << "d=" << d << ": im " << cell.dim_im_delta << ", ker " << cell.dim_ker_delta;
      });
    }
  }, "degrees");
}

CheckResult e_in_image(std::uint64_t d_max) {
  Tally t("e_(d+1) lies in Im delta_3");
  return t.run([&](Tally& t) {
    KernelComplex kc(Family::u3());
    for (std::uint64_t d = 3; d <= d_max; ++d) {
      const auto& target = kc.space(2, d + 1);
      const auto& source = kc.kernel(3, d + 2);
      std::vector<RationalVector> image;
      for (std::size_t j = 0; j < source.dim(); ++j)
        image.push_back(target.coordinates(kc.diff(source.element(j))));
      const std::size_t r = rank_of_vectors(image, target.dim());
      image.push_back(target.coordinates(k2_basis_explicit(d + 1)));
      t.expect(rank_of_vectors(image, target.dim()) == r,
               [&](std::ostream& os) { os << "e_" << d + 1 << " is not a boundary"; });
    }
  }, "degrees");
}

CheckResult composition_zero(const Family& f, std::size_t n_max, std::uint64_t d_max) {
  Tally t(family_tag("restricted differentials compose to zero", f));
  return t.run([&](Tally& t) {
    KernelComplex kc(f);
    for (std::size_t n = 3; n <= n_max; ++n) {
      for (std::uint64_t d = 2; d <= d_max; ++d) {
        const auto prod = kc.restricted_diff(n - 1, d - 1).multiply(kc.restricted_diff(n, d));
        t.expect(prod.is_zero(), [&](std::ostream& os) { os << "(n,d)=(" << n << "," << d << ")"; });
      }
    }
  }, "cells");
}

CheckResult f3_kernel() {
  Tally t("f_3 spans K_3^(4) and is a cycle");
  return t.run([&](Tally& t) {
    const Family u3 = Family::u3();
    KernelComplex kc(u3);
    const auto f3 = f3_element();
    const auto& k = kc.kernel(3, 4);
    std::vector<RationalVector> span = k.basis;
    span.push_back(k.space.coordinates(f3));
    t.expect(k.dim() == 1 && rank_of_vectors(span, k.space.dim()) == 1,
             [&](std::ostream& os) { os << "K_3^(4) has dimension " << k.dim(); });
    t.expect(kc.diff(f3).empty(), [&](std::ostream& os) { os << "delta(f3) = " << kc.diff(f3); });
    LinComb<AnickChain> df;
    for (const auto& [c, v] : f3) df.add(tilde_partial_fast(u3, c), v);
    t.expect(df.empty(), [&](std::ostream& os) { os << "derivation of f3 = " << df; });
    t.expect(kc.restricted_diff(3, 4).is_zero(), [&](std::ostream& os) { os << "(3,4) nonzero"; });
    t.expect(kc.restricted_diff(2, 3).is_zero(), [&](std::ostream& os) { os << "(2,3) nonzero"; });
    const auto& m = kc.restricted_diff(2, 1);
    t.expect(m.row_count() == 1 && m.col_count() == 1 && m.get(0, 0) == -1,
             [&](std::ostream& os) { os << "(2,1) is not [-1]"; });
  }, "conditions");
}

// ---------------------------------------------------------------------------

namespace {

std::vector<FiniteAlgebra> sample_algebras() {
  return {FiniteAlgebra::matrix(2), FiniteAlgebra::truncated_polynomial(2),
          FiniteAlgebra::truncated_polynomial(3)};
}

}  // namespace

CheckResult current_diff_squared(std::size_t n_max, std::uint64_t d_max) {
  Tally t("current differential squares to zero");
  return t.run([&](Tally& t) {
    for (const auto& a : sample_algebras()) {
      CurrentComplex cc(a);
      for (std::size_t n = 3; n <= n_max; ++n) {
        for (std::uint64_t d = 0; d <= d_max; ++d) {
          const auto prod = cc.diff_matrix(n - 1, d).multiply(cc.diff_matrix(n, d));
          t.expect(prod.is_zero(), [&](std::ostream& os) {
            os << a.name() << " (n,d)=(" << n << "," << d << ")";
          });
        }
      }
    }
  }, "cells");
}

CheckResult current_kernel_oracle(std::size_t n_max, std::size_t deg_max) {
  Tally t("Ker D is generated by the differences x_(i+1) - x_i");
  return t.run([&](Tally& t) {
    for (std::size_t n = 2; n <= n_max; ++n)
      t.expect(d_kernel_oracle(n, deg_max), [&](std::ostream& os) { os << "n=" << n; });
    const Substitution wrong = [](std::size_t n, std::size_t i) {
      LinearForm l(n);
      l[i - 1] = 1;
      l[i] = 1;
      return l;
    };
    t.expect(!d_kernel_oracle(2, deg_max, wrong),
             [&](std::ostream& os) { os << "negative control y = x1 + x2 accepted"; });
  });
}

CheckResult current_intertwining(std::size_t n_max, std::uint64_t d_max) {
  Tally t("bar expansion is annihilated by the slotwise derivation");
  return t.run([&](Tally& t) {
    for (const auto& a : {FiniteAlgebra::truncated_polynomial(3), FiniteAlgebra::matrix(2)}) {
      for (std::size_t n = 1; n <= n_max; ++n) {
        for (std::uint64_t d = 0; d <= d_max; ++d) {
          for (const auto& key : current_basis(a.dim(), n, d)) {
            const auto x = decorated_derive(expand_to_bar(CurrentCochain{n, d, LinComb<CurrentKey>(key)}));
            t.expect(x.empty(), [&](std::ostream& os) { os << a.name() << " " << key << ": " << x; });
          }
        }
      }
    }
  }, "cochains");
}

CheckResult current_e_m(std::uint32_t m_max) {
  Tally t("e_m(a,b) is the expansion of (-y_1)^m and delta_2 kills it for m > 0");
  return t.run([&](Tally& t) {
    const auto a = FiniteAlgebra::matrix(2);
    for (std::uint32_t m = 0; m <= m_max; ++m) {
      for (std::uint32_t i = 0; i < a.dim(); ++i) {
        for (std::uint32_t j = 0; j < a.dim(); ++j) {
          const CurrentCochain u{2, m, LinComb<CurrentKey>(CurrentKey{{m}, {i, j}})};
          const auto expanded = Rational(m % 2 == 0 ? 1 : -1) * expand_to_bar(u);
          t.expect(expanded == e_m(m, i, j), [&](std::ostream& os) { os << "m=" << m; });
          const auto du = current_diff(a, u);
          LinComb<CurrentKey> expected;
          if (m == 0)
            for (const auto& [k, c] : a.product(i, j)) expected.add(CurrentKey{{}, {k}}, -c);
          t.expect(du.terms == expected, [&](std::ostream& os) { os << "delta_2 at m=" << m; });
        }
      }
    }
  });
}

CheckResult current_matrix_vanishing(std::size_t n_max, std::uint64_t d_max) {
  Tally t("current cohomology of mat(2) vanishes");
  return t.run([&](Tally& t) {
    CurrentComplex cc(FiniteAlgebra::matrix(2));
    const auto r = cc.table(n_max, d_max);
    for (const auto& e : r.entries)
      t.expect(e.cohomology == 0, [&](std::ostream& os) {
        os << "(n,d)=(" << e.n << "," << e.d << "): " << e.cohomology;
      });
  }, "cells");
}

CheckResult current_h1_indecomposables(std::uint64_t d_max) {
  Tally t("current H^1 total equals dim A/A^2");
  return t.run([&](Tally& t) {
    const std::vector<std::size_t> expected = {0, 1, 1};
    const auto algebras = sample_algebras();
    for (std::size_t i = 0; i < algebras.size(); ++i) {
      CurrentComplex cc(algebras[i]);
      std::size_t h1 = 0;
      for (std::uint64_t d = 0; d <= d_max; ++d) h1 += cc.cell(1, d).cohomology;
      t.expect(h1 == algebras[i].indecomposables_dim() && h1 == expected[i],
               [&](std::ostream& os) { os << algebras[i].name() << ": H^1 = " << h1; });
    }
  }, "algebras");
}

CheckResult current_ordinary_comparison() {
  Tally t("current cohomology agrees with ordinary cohomology of A + k");
  return t.run([&](Tally& t) {
    const auto m2 = FiniteAlgebra::matrix(2);
    const auto t2 = FiniteAlgebra::truncated_polynomial(2);
    const auto t3 = FiniteAlgebra::truncated_polynomial(3);
    for (const auto& [a, n, d] : {std::tuple{m2, 3, 3}, std::tuple{t3, 1, 3}, std::tuple{t2, 2, 2}}) {
      const auto r = theorem_check(a, n, d);
      t.expect(r.ok(), [&](std::ostream& os) {
        for (const auto& c : r.comparisons)
          if (!c.pass()) os << a.name() << " " << c.label << ": " << c.actual << " vs " << c.expected;
      });
    }
    t.expect(ordinary_hochschild_dim(m2, 1) == 0 && ordinary_hochschild_dim(m2, 2) == 0 &&
                 ordinary_hochschild_dim(t3, 1) == 1,
             [&](std::ostream& os) { os << "ordinary cohomology values"; });
  });
}

CheckResult current_rejects_nonassociative() {
  Tally t("non-associative structure constants are rejected");
  return t.run([&](Tally& t) {
    FiniteAlgebra::Table table(2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2)));
    table[0][0][1] = 1;  // e1 e1 = e2
    table[1][0][0] = 1;  // e2 e1 = e1, while e1 e2 = 0
    std::string message;
    try {
      FiniteAlgebra("bad", {"e1", "e2"}, table);
    } catch (const InputError& e) {
      message = e.what();
    }
    t.expect(message.find("(0, 0, 0)") != std::string::npos,
             [&](std::ostream& os) { os << "got '" << message << "'"; });
  });
}

}  // namespace checks

// ---------------------------------------------------------------------------

const std::vector<std::string>& selftest_suites() {
  static const std::vector<std::string> names = {"all", "rewrite", "morse", "derivation", "kernels",
                                                 "current"};
  return names;
}

namespace {

void rewrite_suite(std::vector<CheckResult>& out) {
  for (const auto& f : {Family::u3(), Family::u2()}) {
    out.push_back(checks::defining_relations(f, 10));
    out.push_back(checks::confluence(f, 6, 4));
    out.push_back(checks::derivation_well_defined(f, 6, 3));
  }
}

void morse_suite(std::vector<CheckResult>& out) {
  for (const auto& f : {Family::u3(), Family::u2()}) {
    out.push_back(checks::matching_involution(f, 5, 10));
    out.push_back(checks::delta_squared(f, 5, 10));
    out.push_back(checks::pruning_soundness(f, 5, 10));
    out.push_back(checks::degree_bookkeeping(f, 5, 10));
    out.push_back(checks::closed_vs_paths(f, 5, 10));
  }
  out.push_back(checks::filtration(Family::u3(), 3, 5, 10));
  out.push_back(checks::der10_identity(4, 10));
}

void derivation_suite(std::vector<CheckResult>& out) {
  for (const auto& f : {Family::u3(), Family::u2()}) {
    out.push_back(checks::tilde_fast_vs_general(f, 4, 10));
    out.push_back(checks::chain_map(f, 4, 10));
  }
}

void kernels_suite(std::vector<CheckResult>& out) {
  out.push_back(checks::k1_structure(12));
  out.push_back(checks::k2_structure(12));
  out.push_back(checks::k3_dimensions(12));
  out.push_back(checks::kn_structure(5, 10));
  out.push_back(checks::seed_reconstruction(4, 10));
  out.push_back(checks::im_delta4(12));
  out.push_back(checks::e_in_image(10));
  out.push_back(checks::f3_kernel());
  out.push_back(checks::composition_zero(Family::u3(), 6, 13));
  out.push_back(checks::composition_zero(Family::u2(), 5, 13));
  const KernelOptions both{DiffMethod::Both, DerivationMethod::Fast, true};
  out.push_back(checks::cohomology_totals(Family::u3(), 5, 12, both,
                                          {{1, 0}, {2, 1}, {3, 1}, {4, 0}, {5, 0}}));
  out.push_back(checks::cohomology_totals(Family::u2(), 4, 12, both,
                                          {{1, 0}, {2, 0}, {3, 0}, {4, 0}}));
  out.push_back(checks::method_independence(Family::u3(), 5, 12));
  out.push_back(checks::method_independence(Family::u2(), 4, 12));
}

void current_suite(std::vector<CheckResult>& out) {
  out.push_back(checks::current_diff_squared(4, 3));
  out.push_back(checks::current_kernel_oracle(4, 4));
  out.push_back(checks::current_intertwining(3, 3));
  out.push_back(checks::current_e_m(4));
  out.push_back(checks::current_matrix_vanishing(3, 3));
  out.push_back(checks::current_h1_indecomposables(3));
  out.push_back(checks::current_ordinary_comparison());
  out.push_back(checks::current_rejects_nonassociative());
}

}  // namespace

SuiteReport run_selftest(const std::string& suite) {
  using Runner = void (*)(std::vector<CheckResult>&);
  static const std::vector<std::pair<std::string, Runner>> runners = {
      {"rewrite", rewrite_suite},       {"morse", morse_suite},     {"derivation", derivation_suite},
      {"kernels", kernels_suite},       {"current", current_suite}};
  SuiteReport r;
  r.suite = suite;
  bool known = suite == "all";
  for (const auto& [name, run] : runners) {
    if (suite != "all" && suite != name) continue;
    known = true;
    run(r.checks);
  }
  if (!known) throw PreconditionError("unknown selftest suite '" + suite + "'");
  return r;
}

}  // namespace anick
