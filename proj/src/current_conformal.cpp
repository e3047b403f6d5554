#include "anick/current_conformal.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "anick/errors.hpp"

namespace anick {

namespace {

using Monomial = std::vector<std::uint32_t>;
using Polynomial = LinComb<Monomial>;

void compositions(std::size_t parts, std::uint64_t total, std::vector<std::uint32_t>& prefix,
                  std::vector<std::vector<std::uint32_t>>& out) {
  if (prefix.size() + 1 == parts) {
    prefix.push_back(static_cast<std::uint32_t>(total));
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::uint64_t a = 0; a <= total; ++a) {
    prefix.push_back(static_cast<std::uint32_t>(a));
    compositions(parts, total - a, prefix, out);
    prefix.pop_back();
  }
}

// Exponent vectors of the given length summing to total, lexicographically.
std::vector<std::vector<std::uint32_t>> exponent_vectors(std::size_t length, std::uint64_t total) {
  std::vector<std::vector<std::uint32_t>> out;
  if (length == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<std::uint32_t> prefix;
  compositions(length, total, prefix, out);
  return out;
}

std::vector<std::vector<std::uint32_t>> tensor_words(std::size_t dim, std::size_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> w(n, 0);
  if (dim == 0) return out;
  while (true) {
    out.push_back(w);
    std::size_t i = n;
    while (i > 0 && w[i - 1] + 1 == dim) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

Polynomial multiply_linear(const Polynomial& p, const LinearForm& l) {
  Polynomial out;
  for (const auto& [m, c] : p) {
    for (std::size_t v = 0; v < l.size(); ++v) {
      if (l[v] == 0) continue;
      Monomial next = m;
      ++next[v];
      out.add(next, c * l[v]);
    }
  }
  return out;
}

Polynomial substitute(const std::vector<std::uint32_t>& exponents, std::size_t n,
                      const Substitution& s) {
  Polynomial p(Monomial(n, 0));
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const LinearForm l = s(n, i + 1);
    if (l.size() != n) throw PreconditionError("substitution returned a form of the wrong size");
    for (std::uint32_t e = 0; e < exponents[i]; ++e) p = multiply_linear(p, l);
  }
  return p;
}

template <class Key>
std::map<Key, std::size_t> index_of(const std::vector<Key>& basis) {
  std::map<Key, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

Rational parse_fraction(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw InputError("structure constants must be [numerator, denominator] integer pairs");
  const long den = j[1].get<long>();
  if (den == 0) throw InputError("structure constant with zero denominator");
  return make_rational(j[0].get<long>(), den);
}

}  // namespace

// ---------------------------------------------------------------------------

FiniteAlgebra::FiniteAlgebra(std::string name, std::vector<std::string> labels, Table table)
    : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)) {
  const std::size_t k = labels_.size();
  if (k == 0) throw InputError("algebra must have positive dimension");
  if (table_.size() != k) throw InputError("structure table has the wrong number of rows");
  for (const auto& row : table_) {
    if (row.size() != k) throw InputError("structure table row has the wrong length");
    for (const auto& entry : row)
      if (entry.size() != k) throw InputError("structure constant vector has the wrong length");
  }

  products_.resize(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t t = 0; t < k; ++t)
        if (table_[i][j][t] != 0)
          products_[i * k + j].emplace_back(static_cast<std::uint32_t>(t), table_[i][j][t]);

  std::vector<Rational> left(k), right(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        std::fill(left.begin(), left.end(), Rational(0));
        std::fill(right.begin(), right.end(), Rational(0));
        for (const auto& [t, c] : product(i, j))
          for (const auto& [u, c2] : product(t, l)) left[u] += c * c2;
        for (const auto& [t, c] : product(j, l))
          for (const auto& [u, c2] : product(i, t)) right[u] += c * c2;
        if (left != right) {
          std::ostringstream os;
          os << "structure constants are not associative at (" << i << ", " << j << ", " << l
             << ")";
          throw InputError(os.str());
        }
      }
    }
  }
}

FiniteAlgebra FiniteAlgebra::matrix(std::size_t k) {
  if (k == 0) throw InputError("matrix algebra size must be positive");
  const std::size_t dim = k * k;
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c)
      labels.push_back("E" + std::to_string(r + 1) + "_" + std::to_string(c + 1));
  Table t(dim, std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim)));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t s = 0; s < k; ++s) t[r * k + c][c * k + s][r * k + s] = 1;
  return FiniteAlgebra("mat(" + std::to_string(k) + ")", std::move(labels), std::move(t));
}

FiniteAlgebra FiniteAlgebra::truncated_polynomial(std::size_t n) {
  if (n < 2) throw InputError("truncated polynomial algebra needs N >= 2");
  const std::size_t dim = n - 1;
  std::vector<std::string> labels;
  for (std::size_t p = 1; p < n; ++p) labels.push_back(p == 1 ? "x" : "x^" + std::to_string(p));
  Table t(dim, std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim)));
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; a + b < n; ++b) t[a - 1][b - 1][a + b - 1] = 1;
  return FiniteAlgebra("trunc_poly(" + std::to_string(n) + ")", std::move(labels), std::move(t));
}

FiniteAlgebra FiniteAlgebra::from_json(const std::string& text, std::string name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed algebra document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_integer() ||
      !doc.contains("table"))
    throw InputError("algebra document needs integer \"dim\" and \"table\"");
  const long dim = doc["dim"].get<long>();
  if (dim <= 0) throw InputError("\"dim\" must be positive");
  const auto k = static_cast<std::size_t>(dim);

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array() || doc["labels"].size() != k)
      throw InputError("\"labels\" must be an array of length dim");
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) throw InputError("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < k; ++i) labels.push_back("e" + std::to_string(i + 1));
  }

  const auto& table = doc["table"];
  if (!table.is_array() || table.size() != k) throw InputError("\"table\" must have dim rows");
  Table t(k, std::vector<std::vector<Rational>>(k, std::vector<Rational>(k)));
  for (std::size_t i = 0; i < k; ++i) {
    if (!table[i].is_array() || table[i].size() != k)
      throw InputError("every table row must have dim entries");
    for (std::size_t j = 0; j < k; ++j) {
      const auto& entry = table[i][j];
      if (!entry.is_array() || entry.size() != k)
        throw InputError("every product must list dim coefficients");
      for (std::size_t s = 0; s < k; ++s) t[i][j][s] = parse_fraction(entry[s]);
    }
  }
  return FiniteAlgebra(std::move(name), std::move(labels), std::move(t));
}

std::size_t FiniteAlgebra::indecomposables_dim() const {
  std::vector<RationalVector> products;
  for (const auto& p : products_) {
    RationalVector v(dim());
    for (const auto& [t, c] : p) v.set(t, c);
    products.push_back(std::move(v));
  }
  return dim() - rank_of_vectors(products, dim());
}

FiniteAlgebra load_algebra(const std::string& source) {
  auto parse_size = [&](const std::string& s) {
    try {
      std::size_t pos = 0;
      const long v = std::stol(s, &pos);
      if (pos != s.size() || v <= 0) throw InputError("");
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw InputError("bad size in algebra name '" + source + "'");
    }
  };
  const std::string mat = "builtin:mat:";
  const std::string trunc = "builtin:truncpoly:";
  if (source.rfind(mat, 0) == 0) return FiniteAlgebra::matrix(parse_size(source.substr(mat.size())));
  if (source.rfind(trunc, 0) == 0)
    return FiniteAlgebra::truncated_polynomial(parse_size(source.substr(trunc.size())));
  if (source.rfind("builtin:", 0) == 0) throw InputError("unknown builtin algebra '" + source + "'");

  std::ifstream in(source);
  if (!in) throw IoError("cannot read algebra file '" + source + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return FiniteAlgebra::from_json(buf.str(), source);
}

// ---------------------------------------------------------------------------

std::ostream& operator<<(std::ostream& os, const CurrentKey& k) {
  os << "y(";
  for (std::size_t i = 0; i < k.exponents.size(); ++i) os << (i ? "," : "") << k.exponents[i];
  os << ")[";
  for (std::size_t i = 0; i < k.word.size(); ++i) os << (i ? "|" : "") << k.word[i];
  return os << "]";
}

std::ostream& operator<<(std::ostream& os, const DecoratedWord& w) {
  os << "[";
  for (std::size_t i = 0; i < w.slots.size(); ++i)
    os << (i ? "|" : "") << w.slots[i].first << "(" << w.slots[i].second << ")";
  return os << "]";
}

std::vector<CurrentKey> current_basis(std::size_t dim, std::size_t n, std::uint64_t d) {
  if (n == 0) throw PreconditionError("current cochains have length >= 1");
  std::vector<CurrentKey> basis;
  const auto words = tensor_words(dim, n);
  for (const auto& e : exponent_vectors(n - 1, d))
    for (const auto& w : words) basis.push_back(CurrentKey{e, w});
  return basis;
}

CurrentCochain current_diff(const FiniteAlgebra& a, const CurrentCochain& u) {
  if (u.n < 2) throw PreconditionError("current_diff requires n >= 2");
  CurrentCochain out;
  out.n = u.n - 1;
  out.d = u.d;
  for (const auto& [key, c] : u.terms) {
    for (std::size_t i = 1; i < u.n; ++i) {
      if (key.exponents[i - 1] != 0) continue;  // f vanishes at y_i = 0
      const Rational sign = (i % 2 == 1) ? -1 : 1;
      CurrentKey next;
      next.exponents = key.exponents;
      next.exponents.erase(next.exponents.begin() + (i - 1));
      for (const auto& [t, k] : a.product(key.word[i - 1], key.word[i])) {
        next.word.assign(key.word.begin(), key.word.begin() + (i - 1));
        next.word.push_back(t);
        next.word.insert(next.word.end(), key.word.begin() + (i + 1), key.word.end());
        out.terms.add(next, sign * c * k);
      }
    }
  }
  return out;
}

Substitution difference_substitution() {
  return [](std::size_t n, std::size_t i) {
    LinearForm l(n);
    l[i] = 1;
    l[i - 1] = -1;
    return l;
  };
}

LinComb<DecoratedWord> expand_to_bar(const CurrentCochain& u, const Substitution& s) {
  LinComb<DecoratedWord> out;
  for (const auto& [key, c] : u.terms) {
    for (const auto& [m, k] : substitute(key.exponents, u.n, s)) {
      DecoratedWord w;
      for (std::size_t j = 0; j < u.n; ++j) w.slots.emplace_back(key.word[j], m[j]);
      out.add(w, c * k);
    }
  }
  return out;
}

LinComb<DecoratedWord> e_m(std::uint32_t m, std::uint32_t a, std::uint32_t b) {
  LinComb<DecoratedWord> out;
  for (std::uint32_t s = 0; s <= m; ++s) {
    DecoratedWord w{{{a, m - s}, {b, s}}};
    out.add(w, binomial(m, s) * (s % 2 == 0 ? 1 : -1));
  }
  return out;
}

LinComb<DecoratedWord> decorated_derive(const LinComb<DecoratedWord>& x) {
  LinComb<DecoratedWord> out;
  for (const auto& [w, c] : x) {
    for (std::size_t j = 0; j < w.slots.size(); ++j) {
      const std::uint32_t m = w.slots[j].second;
      if (m == 0) continue;
      DecoratedWord next = w;
      next.slots[j].second = m - 1;
      out.add(next, c * m);
    }
  }
  return out;
}

bool d_kernel_oracle(std::size_t n, std::size_t deg_max, const Substitution& s) {
  if (n < 2) throw PreconditionError("d_kernel_oracle requires n >= 2");
  for (std::size_t k = 0; k <= deg_max; ++k) {
    const auto monomials = exponent_vectors(n, k);
    const auto idx = index_of(monomials);

    // D = sum of partial derivatives, degree k -> k - 1.
    std::vector<RationalVector> kernel;
    if (k == 0) {
      RationalVector one(1);
      one.set(0, 1);
      kernel.push_back(one);
    } else {
      const auto lower = exponent_vectors(n, k - 1);
      const auto lower_idx = index_of(lower);
      SparseRationalMatrix dm(lower.size(), monomials.size());
      for (std::size_t col = 0; col < monomials.size(); ++col) {
        for (std::size_t v = 0; v < n; ++v) {
          if (monomials[col][v] == 0) continue;
          auto m = monomials[col];
          --m[v];
          dm.add(lower_idx.at(m), col, Rational(monomials[col][v]));
        }
      }
      kernel = nullspace_basis(dm);
    }

    std::vector<RationalVector> image;
    for (const auto& e : exponent_vectors(n - 1, k)) {
      RationalVector v(monomials.size());
      for (const auto& [m, c] : substitute(e, n, s)) {
        auto it = idx.find(m);
        if (it == idx.end()) return false;  // not homogeneous of degree k
        v.set(it->second, c);
      }
      image.push_back(std::move(v));
    }

    std::vector<RationalVector> both = kernel;
    both.insert(both.end(), image.begin(), image.end());
    const std::size_t rk = rank_of_vectors(kernel, monomials.size());
    if (rank_of_vectors(image, monomials.size()) != rk) return false;
    if (rank_of_vectors(both, monomials.size()) != rk) return false;
  }
  return true;
}

std::size_t ordinary_hochschild_dim(const FiniteAlgebra& a, std::size_t n) {
  if (n == 0) throw PreconditionError("ordinary_hochschild_dim requires n >= 1");
  const std::size_t k = a.dim();
  // Tensor words encoded in base k, first slot most significant.
  auto power = [&](std::size_t e) {
    std::size_t p = 1;
    for (std::size_t i = 0; i < e; ++i) p *= k;
    return p;
  };
  auto merge_rank = [&](std::size_t len) -> std::size_t {
    if (len < 2) return 0;
    SparseRationalMatrix m(power(len - 1), power(len));
    std::vector<std::size_t> digits(len);
    for (std::size_t code = 0; code < power(len); ++code) {
      std::size_t rest = code;
      for (std::size_t j = len; j-- > 0;) {
        digits[j] = rest % k;
        rest /= k;
      }
      for (std::size_t i = 1; i < len; ++i) {
        const long sign = (i % 2 == 1) ? -1 : 1;
        for (const auto& [t, c] : a.product(digits[i - 1], digits[i])) {
          std::size_t target = 0;
          for (std::size_t j = 0; j < len; ++j) {
            if (j == i) continue;
            target = target * k + (j == i - 1 ? t : digits[j]);
          }
          m.add(target, code, c * sign);
        }
      }
    }
    return rank(m);
  };
  return power(n) - merge_rank(n) - merge_rank(n + 1);
}

// ---------------------------------------------------------------------------

std::size_t CurrentComplex::space_dim(std::size_t n, std::uint64_t d) const {
  return current_basis(algebra_.dim(), n, d).size();
}

SparseRationalMatrix CurrentComplex::diff_matrix(std::size_t n, std::uint64_t d) {
  const auto source = current_basis(algebra_.dim(), n, d);
  if (n == 1) return SparseRationalMatrix(0, source.size());
  const auto target = current_basis(algebra_.dim(), n - 1, d);
  const auto idx = index_of(target);
  SparseRationalMatrix m(target.size(), source.size());
  for (std::size_t col = 0; col < source.size(); ++col) {
    CurrentCochain u{n, d, LinComb<CurrentKey>(source[col])};
    const auto image = current_diff(algebra_, u);
    for (const auto& [key, c] : image.terms) m.set(idx.at(key), col, c);
  }
  return m;
}

std::size_t CurrentComplex::diff_rank(std::size_t n, std::uint64_t d) {
  auto it = ranks_.find({n, d});
  if (it != ranks_.end()) return it->second;
  const std::size_t r = n == 1 ? 0 : rank(diff_matrix(n, d));
  ranks_.emplace(std::make_pair(n, d), r);
  return r;
}

CohomologyCell CurrentComplex::cell(std::size_t n, std::uint64_t d) {
  if (n == 0) throw PreconditionError("cohomology cells start at n = 1");
  CohomologyCell c;
  c.n = n;
  c.d = d;
  c.dim_space = space_dim(n, d);
  c.dim_kernel = c.dim_space;  // the y-polynomials already span Ker D
  c.dim_ker_delta = c.dim_space - diff_rank(n, d);
  c.dim_im_delta = diff_rank(n + 1, d);
  if (c.dim_im_delta > c.dim_ker_delta) throw StructuralError("image exceeds kernel");
  c.cohomology = c.dim_ker_delta - c.dim_im_delta;
  return c;
}

CohomologyReport CurrentComplex::table(std::size_t n_max, std::uint64_t d_max) {
  if (n_max < 1 || d_max < 1) throw PreconditionError("caps must satisfy n_max >= 1, d_max >= 1");
  CohomologyReport r;
  r.family = "current:" + algebra_.name();
  r.n_max = n_max;
  r.d_max = d_max;
  for (std::size_t n = 1; n <= n_max; ++n) {
    r.totals[n] = 0;
    for (std::uint64_t d = 0; d <= d_max; ++d) {
      r.entries.push_back(cell(n, d));
      r.totals[n] += r.entries.back().cohomology;
    }
  }
  return r;
}

std::size_t current_cohomology_dim(const FiniteAlgebra& a, std::size_t n, std::uint64_t d) {
  CurrentComplex cc(a);
  return cc.cell(n, d).cohomology;
}

bool TheoremReport::ok() const {
  for (const auto& c : comparisons)
    if (!c.pass()) return false;
  return true;
}

TheoremReport theorem_check(const FiniteAlgebra& a, std::size_t n_max, std::uint64_t d_max) {
  if (n_max < 1 || d_max < 1) throw PreconditionError("caps must satisfy n_max >= 1, d_max >= 1");
  CurrentComplex cc(a);
  TheoremReport r;
  r.algebra = a.name();

  std::size_t h1 = 0;
  for (std::uint64_t d = 0; d <= d_max; ++d) h1 += cc.cell(1, d).cohomology;
  r.comparisons.push_back({"H^1 total = dim A/A^2", a.indecomposables_dim(), h1, true});

  bool lower_vanish = true;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::size_t ordinary = ordinary_hochschild_dim(a, n);
    const std::string tag = "H^" + std::to_string(n);
    r.comparisons.push_back(
        {tag + " at d=0 = ordinary H^" + std::to_string(n), ordinary, cc.cell(n, 0).cohomology,
         lower_vanish});
    for (std::uint64_t d = 1; d <= d_max; ++d)
      r.comparisons.push_back(
          {tag + " at d=" + std::to_string(d) + " = 0", 0, cc.cell(n, d).cohomology, lower_vanish});
    lower_vanish = lower_vanish && ordinary == 0;
  }
  return r;
}

}  // namespace anick
