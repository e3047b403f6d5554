#include "anick/closed_forms.hpp"

#include "anick/errors.hpp"

namespace anick {

namespace {

using Tuple = std::vector<long>;

AnickChain to_chain(const Tuple& t) {
  AnickChain c;
  c.indices.reserve(t.size());
  for (long x : t) c.indices.push_back(static_cast<Letter>(x));
  return c;
}

Tuple with_tail(Tuple t, std::initializer_list<long> tail) {
  t.insert(t.end(), tail);
  return t;
}

// Records a term unless some index went negative; chain projection happens
// once at the end.
void add_tuple(LinComb<AnickChain>& raw, const Tuple& t, const Rational& c) {
  for (long x : t)
    if (x < 0) return;
  raw.add(to_chain(t), c);
}

// The three merge sums over the adjacent pairs (j, j+1), j = 1..pairs, of the
// tuple i, with `tail` appended to every output. In the second sum the sign is
// opposite to the printed one; see the test on path-method equivalence.
void merge_sums(const Tuple& i, std::size_t pairs, std::initializer_list<long> tail,
                LinComb<AnickChain>& raw) {
  for (std::size_t j = 1; j <= pairs; ++j) {
    const long a = i[j - 1], b = i[j];
    const long den = a + b - 1;
    const long sign = (j % 2 == 1) ? -1 : 1;

    Tuple merged(i.begin(), i.begin() + (j - 1));
    merged.push_back(a + b - 1);
    merged.insert(merged.end(), i.begin() + (j + 1), i.end());
    const Tuple merged_t = with_tail(merged, tail);
    add_tuple(raw, merged_t, make_rational(sign * a * (a - 1), den));

    Tuple full = merged;
    full[j - 1] = a + b;
    for (std::size_t t = 1; t < j; ++t) {
      const long it = i[t - 1];
      Tuple lowered = full;
      lowered[t - 1] -= 1;
      add_tuple(raw, with_tail(lowered, tail),
                make_rational(-sign * it * (a - 1) * (b - 1), den));
      add_tuple(raw, merged_t, make_rational(sign * a * b * (it - 1), den));
    }
  }
}

LinComb<AnickChain> project(const Family& f, const LinComb<AnickChain>& raw) {
  return raw.filtered([&](const AnickChain& c) { return chain_predicate(f, c); });
}

}  // namespace

LinComb<AnickChain> u3_diff(const AnickChain& c) {
  static const Family u3 = Family::u3();
  if (c.length() < 2) throw PreconditionError("u3_diff requires a chain of length >= 2");
  if (!chain_predicate(u3, c)) throw PreconditionError("u3_diff: not a U(3) chain");

  Tuple i(c.indices.begin(), c.indices.end());
  const std::size_t len = i.size();
  LinComb<AnickChain> raw;
  if (i[len - 2] > 1) {
    merge_sums(i, len - 1, {}, raw);
    return project(u3, raw);
  }

  // [i_1|...|i_k|1|0] with k = len - 2; the sign index is n = k + 1.
  Tuple prefix(i.begin(), i.end() - 2);
  const std::size_t k = prefix.size();
  const long sn = (k % 2 == 0) ? -1 : 1;  // (-1)^n
  if (k >= 2) merge_sums(prefix, k - 1, {1, 0}, raw);
  for (std::size_t j = 0; j < k; ++j) {
    Tuple lowered = prefix;
    lowered[j] -= 1;
    add_tuple(raw, with_tail(lowered, {1}), Rational(sn * prefix[j]));
    add_tuple(raw, with_tail(prefix, {0}), Rational(-sn * (prefix[j] - 1)));
  }
  add_tuple(raw, with_tail(prefix, {0}), Rational(sn));
  return project(u3, raw);
}

LinComb<AnickChain> u2_diff(const AnickChain& c) {
  static const Family u2 = Family::u2();
  if (!chain_predicate(u2, c)) throw PreconditionError("u2_diff: not a U(2) chain");
  LinComb<AnickChain> raw;
  if (c.length() == 2) {
    const long n = c.indices[0], m = c.indices[1];
    add_tuple(raw, {n + m - 1}, Rational(-n));
  } else if (c.length() == 3) {
    const long n = c.indices[0], m = c.indices[1], p = c.indices[2];
    add_tuple(raw, {n + m - 1, p}, Rational(-n));
    add_tuple(raw, {n, m + p - 1}, Rational(m));
    add_tuple(raw, {n - 1, m + p}, Rational(n));
  } else {
    throw PreconditionError("u2_diff: closed form covers lengths 2 and 3 only");
  }
  return project(u2, raw);
}

bool has_closed_diff(const Family& f, const AnickChain& c) {
  if (c.length() < 2) return false;
  switch (f.kind()) {
    case FamilyKind::U3:
      return true;
    case FamilyKind::U2:
      return c.length() <= 3;
    case FamilyKind::Custom:
      return false;
  }
  return false;
}

LinComb<AnickChain> closed_diff(const Family& f, const AnickChain& c) {
  if (!has_closed_diff(f, c)) throw PreconditionError("no closed-form differential for this chain");
  return f.kind() == FamilyKind::U3 ? u3_diff(c) : u2_diff(c);
}

LinComb<AnickChain> tilde_partial_fast(const Family& f, const AnickChain& c) {
  if (f.kind() == FamilyKind::Custom)
    throw PreconditionError("tilde_partial_fast is only valid for U(2) and U(3)");
  LinComb<AnickChain> out;
  for (std::size_t j = 0; j < c.length(); ++j) {
    const Letter x = c.indices[j];
    if (x == 0) continue;
    AnickChain lowered = c;
    lowered.indices[j] = x - 1;
    if (chain_predicate(f, lowered)) out.add(lowered, Rational(x));
  }
  return out;
}

LinComb<AnickChain> k2_basis_explicit(std::uint64_t d) {
  LinComb<AnickChain> e;
  if (d == 1) {
    e.add(AnickChain{1, 0}, 1);
  } else if (d >= 3) {
    for (std::uint64_t s = 0; s + 2 <= d; ++s) {
      const Rational c = binomial(d, s) * (s % 2 == 0 ? 1 : -1);
      e.add(AnickChain{static_cast<Letter>(d - s), static_cast<Letter>(s)}, c);
    }
  }
  return e;
}

LinComb<AnickChain> f3_element() {
  LinComb<AnickChain> f;
  f.add(AnickChain{2, 2, 0}, 1);
  f.add(AnickChain{3, 1, 0}, make_rational(-2, 3));
  return f;
}

LinComb<AnickChain> append_index(const Family& f, const LinComb<AnickChain>& x, Letter k) {
  LinComb<AnickChain> out;
  for (const auto& [c, coef] : x) {
    AnickChain e = c;
    e.indices.push_back(k);
    if (chain_predicate(f, e)) out.add(e, coef);
  }
  return out;
}

bool der10_identity_check(std::size_t n, std::uint64_t d, const LinComb<AnickChain>& v) {
  static const Family u3 = Family::u3();
  if (n < 2) throw PreconditionError("der10_identity_check requires n >= 2");
  for (const auto& [c, coef] : v) {
    if (c.length() != n - 1 || c.degree() != d || c.back() < 2 || !chain_predicate(u3, c))
      throw PreconditionError("der10_identity_check: v must be homogeneous with last index >= 2");
  }
  LinComb<AnickChain> lhs;
  LinComb<AnickChain> dv;
  for (const auto& [c, coef] : v) {
    AnickChain e = c;
    e.indices.push_back(1);
    lhs.add(u3_diff(e), coef);
    if (c.length() >= 2) dv.add(u3_diff(c), coef);
  }
  LinComb<AnickChain> rhs = append_index(u3, dv, 1);
  const long sign = (n % 2 == 0) ? -1 : 1;  // (-1)^(n-1)
  rhs.add(v, Rational(sign * (static_cast<long>(d) - static_cast<long>(n) + 1)));
  return lhs == rhs;
}

}  // namespace anick
