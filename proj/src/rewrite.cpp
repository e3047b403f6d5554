#include "anick/rewrite.hpp"

#include <sstream>

#include "anick/errors.hpp"

namespace anick {

std::uint64_t Word::index_degree() const {
  std::uint64_t d = 0;
  for (Letter l : letters) d += l;
  return d;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.letters.size() != b.letters.size()) return a.letters.size() <=> b.letters.size();
  return a.letters <=> b.letters;
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  if (w.empty()) return os << "1";
  for (Letter l : w.letters) os << "v(" << l << ")";
  return os;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = w.letters.size();
  for (Letter l : w.letters) h ^= l + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// ---------------------------------------------------------------------------

Family::Family(FamilyKind kind, std::string name, int locality)
    : kind_(kind), name_(std::move(name)), locality_(locality) {}

Family Family::u2() { return Family(FamilyKind::U2, "U2", 2); }
Family Family::u3() { return Family(FamilyKind::U3, "U3", 3); }

Family Family::custom(std::string name, int locality, ObstructionFn obstruction,
                      RewriteFn rewrite) {
  Family f(FamilyKind::Custom, std::move(name), locality);
  f.obstruction_ = std::move(obstruction);
  f.rewrite_ = std::move(rewrite);
  return f;
}

bool Family::is_obstruction(Letter a, Letter b) const {
  switch (kind_) {
    case FamilyKind::U2:
      return a >= 1;
    case FamilyKind::U3:
      return a >= 2 || (a == 1 && b == 0);
    case FamilyKind::Custom:
      return obstruction_(a, b);
  }
  return false;
}

LinComb<Word> Family::rewrite_pair(Letter a, Letter b) const {
  if (!is_obstruction(a, b)) {
    std::ostringstream os;
    os << name_ << ": v(" << a << ")v(" << b << ") is not an obstruction";
    throw PreconditionError(os.str());
  }
  LinComb<Word> out;
  switch (kind_) {
    case FamilyKind::U2:
      // v(a)v(b) = v(0)v(a+b) + a v(a+b-1)
      out.add(Word{0, a + b}, 1);
      out.add(Word{a + b - 1}, Rational(a));
      break;
    case FamilyKind::U3:
      if (a == 1) {
        out.add(Word{0, 1}, 1);
        out.add(Word{0}, 1);
      } else {
        const long n = a, m = b, den = n + m - 1;
        out.add(Word{1, a + b - 1}, make_rational(n * m, den));
        out.add(Word{0, a + b}, make_rational(-(n - 1) * (m - 1), den));
        out.add(Word{a + b - 1}, make_rational(n * (n - 1), den));
      }
      break;
    case FamilyKind::Custom:
      out = rewrite_(a, b);
      break;
  }
  return out;
}

bool is_obstruction(const Family& f, Letter a, Letter b) { return f.is_obstruction(a, b); }

LinComb<Word> rewrite_pair(const Family& f, Letter a, Letter b) { return f.rewrite_pair(a, b); }

// ---------------------------------------------------------------------------

namespace {

// Position of the obstruction to rewrite next, or -1 when the word is reduced.
long find_obstruction(const Family& f, const Word& w, ReductionStrategy s) {
  const long n = static_cast<long>(w.size());
  if (s == ReductionStrategy::Leftmost) {
    for (long i = 0; i + 1 < n; ++i)
      if (f.is_obstruction(w.letters[i], w.letters[i + 1])) return i;
  } else {
    for (long i = n - 2; i >= 0; --i)
      if (f.is_obstruction(w.letters[i], w.letters[i + 1])) return i;
  }
  return -1;
}

}  // namespace

bool is_reduced(const Family& f, const Word& w) {
  return find_obstruction(f, w, ReductionStrategy::Leftmost) < 0;
}

LinComb<Word> normal_form(const Family& f, const LinComb<Word>& x, ReductionStrategy strategy) {
  // Every rewrite replaces a word by strictly smaller ones, so popping the
  // largest pending word means each word is expanded at most once.
  std::map<Word, Rational> pending(x.terms().begin(), x.terms().end());
  LinComb<Word> out;
  while (!pending.empty()) {
    auto node = pending.extract(std::prev(pending.end()));
    const Word& w = node.key();
    const Rational& c = node.mapped();
    const long pos = find_obstruction(f, w, strategy);
    if (pos < 0) {
      out.add(w, c);
      continue;
    }
    const auto rhs = f.rewrite_pair(w.letters[pos], w.letters[pos + 1]);
    for (const auto& [r, rc] : rhs) {
      Word next;
      next.letters.reserve(w.size() + r.size());
      next.letters.insert(next.letters.end(), w.letters.begin(), w.letters.begin() + pos);
      next.letters.insert(next.letters.end(), r.letters.begin(), r.letters.end());
      next.letters.insert(next.letters.end(), w.letters.begin() + pos + 2, w.letters.end());
      auto [it, inserted] = pending.try_emplace(std::move(next), c * rc);
      if (!inserted) {
        it->second += c * rc;
        if (it->second == 0) pending.erase(it);
      }
    }
  }
  return out;
}

LinComb<Word> normal_form(const Family& f, const Word& w, ReductionStrategy strategy) {
  return normal_form(f, LinComb<Word>(w), strategy);
}

LinComb<Word> multiply(const Family& f, const LinComb<Word>& x, const LinComb<Word>& y) {
  LinComb<Word> raw;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) raw.add(concat(a, b), ca * cb);
  return normal_form(f, raw);
}

LinComb<Word> derive(const Family& f, const LinComb<Word>& x) {
  LinComb<Word> raw;
  for (const auto& [w, c] : x) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Letter l = w.letters[i];
      if (l == 0) continue;
      Word d = w;
      d.letters[i] = l - 1;
      raw.add(d, c * l);
    }
  }
  return normal_form(f, raw);
}

LinComb<Word> derive(const Family& f, const Word& w) { return derive(f, LinComb<Word>(w)); }

RelationReport check_defining_relations(const Family& f, Letter n_max) {
  if (n_max < 3) throw PreconditionError("check_defining_relations requires n_max >= 3");
  RelationReport report;
  const Letter big_n = static_cast<Letter>(f.locality());

  for (Letter n = big_n; n <= n_max; ++n) {
    for (Letter m = 0; m <= n_max; ++m) {
      LinComb<Word> rel;
      for (Letter s = 0; s <= big_n; ++s) {
        Rational c = binomial(big_n, s);
        if (s % 2) c = -c;
        rel.add(Word{n - s, m + s}, c);
      }
      ++report.checked;
      const auto nf = normal_form(f, rel);
      if (!nf.empty()) {
        std::ostringstream os;
        os << "locality(n=" << n << ",m=" << m << ") = " << nf;
        report.failures.push_back(os.str());
      }
    }
  }
  for (Letter n = 1; n <= n_max; ++n) {
    for (Letter m = 0; m < n; ++m) {
      LinComb<Word> rel;
      rel.add(Word{n, m}, 1);
      rel.add(Word{m, n}, -1);
      rel.add(Word{n + m - 1}, -Rational(n - m));
      ++report.checked;
      const auto nf = normal_form(f, rel);
      if (!nf.empty()) {
        std::ostringstream os;
        os << "commutator(n=" << n << ",m=" << m << ") = " << nf;
        report.failures.push_back(os.str());
      }
    }
  }
  return report;
}

}  // namespace anick
