#pragma once

#include <map>
#include <ostream>
#include <utility>

#include "anick/rational.hpp"

namespace anick {

/// Formal linear combination over a totally ordered basis family. Zero
/// coefficients are never stored; iteration follows the basis ordering.
template <class Basis>
class LinComb {
 public:
  using map_type = std::map<Basis, Rational>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;
  explicit LinComb(Basis b, Rational c = Rational(1)) { add(std::move(b), c); }

  void add(const Basis& b, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const LinComb& other, const Rational& scale) {
    if (scale == 0) return;
    for (const auto& [b, c] : other.terms_) add(b, c * scale);
  }

  Rational coefficient(const Basis& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool contains(const Basis& b) const { return terms_.count(b) != 0; }
  void erase(const Basis& b) { terms_.erase(b); }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  LinComb& operator+=(const LinComb& o) {
    add(o, Rational(1));
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    add(o, Rational(-1));
    return *this;
  }
  LinComb& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [b, c] : terms_) c *= s;
    }
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
  friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
  friend bool operator==(const LinComb& a, const LinComb& b) {
    return a.terms_ == b.terms_;
  }

  template <class Pred>
  LinComb filtered(Pred keep) const {
    LinComb out;
    for (const auto& [b, c] : terms_)
      if (keep(b)) out.terms_.emplace_hint(out.terms_.end(), b, c);
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const LinComb& x) {
    if (x.empty()) return os << "0";
    bool first = true;
    for (const auto& [b, c] : x.terms_) {
      if (c < 0) {
        os << (first ? "-" : " - ");
      } else if (!first) {
        os << " + ";
      }
      Rational a = abs(c);
      if (a != 1) os << a.get_str() << "*";
      os << b;
      first = false;
    }
    return os;
  }

 private:
  map_type terms_;
};

}  // namespace anick
