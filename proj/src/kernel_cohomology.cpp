#include "anick/kernel_cohomology.hpp"

#include <sstream>

#include "anick/closed_forms.hpp"
#include "anick/errors.hpp"

namespace anick {

const char* to_string(DiffMethod m) {
  switch (m) {
    case DiffMethod::Closed:
      return "closed";
    case DiffMethod::Paths:
      return "paths";
    case DiffMethod::Both:
      return "both";
  }
  return "?";
}

RationalVector GradedChainSpace::coordinates(const LinComb<AnickChain>& x) const {
  RationalVector v(dim());
  for (const auto& [c, k] : x) {
    auto it = index.find(c);
    if (it == index.end()) {
      std::ostringstream os;
      os << "chain " << c << " is not in the graded space (" << n << ", " << d << ")";
      throw StructuralError(os.str());
    }
    v.set(it->second, k);
  }
  return v;
}

LinComb<AnickChain> GradedChainSpace::element(const RationalVector& v) const {
  LinComb<AnickChain> x;
  for (const auto& [i, k] : v.entries()) x.add(basis.at(i), k);
  return x;
}

GradedChainSpace make_space(const Family& f, std::size_t n, std::uint64_t d) {
  GradedChainSpace s;
  s.n = n;
  s.d = d;
  s.basis = enumerate_chains(f, n, d);
  for (std::size_t i = 0; i < s.basis.size(); ++i) s.index.emplace(s.basis[i], i);
  return s;
}

RationalVector KernelSpace::kernel_coordinates(const RationalVector& x) const {
  RationalVector coords(dim());
  RationalVector back(space.dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    const Rational c = x.get(free_columns[k]);
    if (c == 0) continue;
    coords.set(k, c);
    for (const auto& [i, v] : basis[k].entries()) back.add(i, c * v);
  }
  if (!(back == x)) throw StructuralError("vector does not lie in the kernel subspace");
  return coords;
}

namespace {

KernelSpace kernel_from_matrix(GradedChainSpace space, const SparseRationalMatrix& m) {
  KernelSpace k;
  k.space = std::move(space);
  k.basis = nullspace_basis(m);
  for (const auto& v : k.basis) k.free_columns.push_back(v.entries().rbegin()->first);
  return k;
}

LinComb<AnickChain> derivation_of(const Family& f, MorseComplex& morse, DerivationMethod m,
                                  const AnickChain& c) {
  if (m == DerivationMethod::Fast && f.kind() != FamilyKind::Custom)
    return tilde_partial_fast(f, c);
  return morse.tilde_partial(c);
}

SparseRationalMatrix matrix_of(const GradedChainSpace& from, const GradedChainSpace& to,
                               const std::function<LinComb<AnickChain>(const AnickChain&)>& map) {
  SparseRationalMatrix m(to.dim(), from.dim());
  for (std::size_t j = 0; j < from.dim(); ++j) {
    const RationalVector image = to.coordinates(map(from.basis[j]));
    for (const auto& [i, v] : image.entries()) m.set(i, j, v);
  }
  return m;
}

}  // namespace

KernelComplex::KernelComplex(Family f, KernelOptions opts)
    : family_(f), opts_(opts), morse_(std::move(f), MorseOptions{opts.prune_zero_components}) {}

const GradedChainSpace& KernelComplex::space(std::size_t n, std::uint64_t d) {
  auto it = spaces_.find({n, d});
  if (it != spaces_.end()) return it->second;
  return spaces_.emplace(Key{n, d}, make_space(family_, n, d)).first->second;
}

const KernelSpace& KernelComplex::kernel(std::size_t n, std::uint64_t d) {
  auto it = kernels_.find({n, d});
  if (it != kernels_.end()) return it->second;
  return kernels_.emplace(Key{n, d}, kernel_from_matrix(space(n, d), derivation_matrix(n, d)))
      .first->second;
}

const LinComb<AnickChain>& KernelComplex::diff(const AnickChain& c) {
  auto it = diff_cache_.find(c);
  if (it != diff_cache_.end()) return it->second;

  LinComb<AnickChain> value;
  if (c.length() >= 2) {
    const bool closed = has_closed_diff(family_, c) && opts_.method != DiffMethod::Paths;
    if (closed) {
      value = closed_diff(family_, c);
      ++closed_evals_;
    }
    if (!closed || opts_.method == DiffMethod::Both) {
      auto paths = morse_.anick_diff(c);
      ++path_evals_;
      if (closed && !(paths == value)) {
        std::ostringstream os;
        os << "differential mismatch on " << c << ": closed form gives " << value
           << ", paths give " << paths;
        throw ConsistencyError(os.str());
      }
      value = std::move(paths);
    }
  }
  return diff_cache_.emplace(c, std::move(value)).first->second;
}

LinComb<AnickChain> KernelComplex::diff(const LinComb<AnickChain>& x) {
  LinComb<AnickChain> out;
  for (const auto& [c, k] : x) out.add(diff(c), k);
  return out;
}

LinComb<AnickChain> KernelComplex::tilde_partial(const AnickChain& c) {
  return derivation_of(family_, morse_, opts_.derivation, c);
}

SparseRationalMatrix KernelComplex::derivation_matrix(std::size_t n, std::uint64_t d) {
  const auto& from = space(n, d);
  if (d == 0) return SparseRationalMatrix(0, from.dim());
  return matrix_of(from, space(n, d - 1), [&](const AnickChain& c) { return tilde_partial(c); });
}

SparseRationalMatrix KernelComplex::diff_matrix(std::size_t n, std::uint64_t d) {
  const auto& from = space(n, d);
  if (n == 1 || d == 0) return SparseRationalMatrix(0, from.dim());
  return matrix_of(from, space(n - 1, d - 1), [&](const AnickChain& c) { return diff(c); });
}

const SparseRationalMatrix& KernelComplex::restricted_diff(std::size_t n, std::uint64_t d) {
  auto it = restricted_.find({n, d});
  if (it != restricted_.end()) return it->second;

  const KernelSpace& source = kernel(n, d);
  SparseRationalMatrix m(0, source.dim());
  if (n >= 2 && d >= 1) {
    const KernelSpace& target = kernel(n - 1, d - 1);
    m = SparseRationalMatrix(target.dim(), source.dim());
    for (std::size_t j = 0; j < source.dim(); ++j) {
      const auto image = diff(source.element(j));
      RationalVector coords;
      try {
        coords = target.kernel_coordinates(target.space.coordinates(image));
      } catch (const StructuralError&) {
        std::ostringstream os;
        os << "differential of a kernel vector at (" << n << ", " << d
           << ") leaves the target kernel";
        throw StructuralError(os.str());
      }
      for (const auto& [i, v] : coords.entries()) m.set(i, j, v);
    }
  }
  return restricted_.emplace(Key{n, d}, std::move(m)).first->second;
}

CohomologyCell KernelComplex::cell(std::size_t n, std::uint64_t d) {
  if (n == 0) throw PreconditionError("cohomology cells start at n = 1");
  CohomologyCell cell;
  cell.n = n;
  cell.d = d;
  cell.dim_space = space(n, d).dim();
  cell.dim_kernel = kernel(n, d).dim();

  const SparseRationalMatrix down = restricted_diff(n, d);
  const SparseRationalMatrix& up = restricted_diff(n + 1, d + 1);
  const auto cycles = nullspace_basis(down);
  std::vector<RationalVector> boundaries;
  for (std::size_t j = 0; j < up.col_count(); ++j) {
    RationalVector col(up.row_count());
    for (std::size_t i = 0; i < up.row_count(); ++i) col.set(i, up.get(i, j));
    boundaries.push_back(std::move(col));
  }
  cell.dim_ker_delta = cycles.size();
  cell.dim_im_delta = rank(up);
  // quotient_dim also asserts that every boundary is a cycle.
  cell.cohomology = quotient_dim(cycles, boundaries);
  if (cell.cohomology + cell.dim_im_delta != cell.dim_ker_delta)
    throw StructuralError("inconsistent cohomology bookkeeping");
  return cell;
}

CohomologyReport KernelComplex::table(std::size_t n_max, std::uint64_t d_max) {
  if (n_max < 1 || d_max < 1) throw PreconditionError("caps must satisfy n_max >= 1, d_max >= 1");
  CohomologyReport r;
  r.family = family_.name();
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

// ---------------------------------------------------------------------------

std::size_t regular_dim(const Family& f, std::size_t n, std::uint64_t d) {
  if (n == 0) throw PreconditionError("regular_dim requires n >= 1");
  std::size_t count = 0;
  for (const auto& c : enumerate_chains(f, n, d)) {
    bool regular = true;
    for (Letter l : c.indices) regular = regular && l >= 2;
    if (regular) ++count;
  }
  return count;
}

KernelSpace kernel_basis(const Family& f, std::size_t n, std::uint64_t d, DerivationMethod m) {
  KernelComplex kc(f, KernelOptions{DiffMethod::Closed, m, true});
  return kc.kernel(n, d);
}

namespace {

bool is_regular(const AnickChain& c) {
  for (Letter l : c.indices)
    if (l < 2) return false;
  return true;
}

// Terms of x whose chain ends in k, with that last index removed.
LinComb<AnickChain> strip_last(const LinComb<AnickChain>& x, Letter k) {
  LinComb<AnickChain> out;
  for (const auto& [c, v] : x) {
    if (c.length() < 2 || c.back() != k) continue;
    AnickChain s = c;
    s.indices.pop_back();
    out.add(s, v);
  }
  return out;
}

LinComb<AnickChain> fast_derivation(const Family& f, const LinComb<AnickChain>& x) {
  LinComb<AnickChain> out;
  for (const auto& [c, k] : x) out.add(tilde_partial_fast(f, c), k);
  return out;
}

}  // namespace

LinComb<AnickChain> reconstruct_from_seed(std::size_t n, std::uint64_t d, const KernelSeed& seed) {
  static const Family u3 = Family::u3();
  if (n < 3) throw PreconditionError("reconstruct_from_seed requires n >= 3");

  LinComb<AnickChain> a0;  // the layer ending in index 0, stored without that index
  for (const auto& [j, v] : seed) {
    if (j == 0 || j == 2 || j > d) throw PreconditionError("seed slots are 1 and 3, 4, ...");
    for (const auto& [c, k] : v) {
      if (c.length() != n - 2 || c.degree() != d - j || !is_regular(c) || !chain_predicate(u3, c))
        throw PreconditionError("seed components must be regular, homogeneous chains");
    }
    a0.add(append_index(u3, v, j), 1);
  }
  // The slot-2 component is forced by requiring no [..|1] terms in the next layer.
  const auto v2 = Rational(-1, 2) * strip_last(fast_derivation(u3, a0), 1);
  a0.add(append_index(u3, v2, 2), 1);

  LinComb<AnickChain> result;
  LinComb<AnickChain> layer = a0;
  for (Letter i = 0; !layer.empty(); ++i) {
    const auto placed = append_index(u3, layer, i);
    if (placed.size() != layer.size()) throw StructuralError("reconstruction produced a non-chain");
    result.add(placed, 1);
    const auto next = strip_last(fast_derivation(u3, placed), i);
    layer = Rational(-1, static_cast<long>(i) + 1) * next;
    if (i > d) throw StructuralError("reconstruction did not terminate");
  }
  if (!fast_derivation(u3, result).empty())
    throw StructuralError("reconstructed element is not annihilated by the derivation");
  return result;
}

std::vector<KernelSeed> seed_basis(std::size_t n, std::uint64_t d) {
  static const Family u3 = Family::u3();
  if (n < 3) throw PreconditionError("seed_basis requires n >= 3");
  std::vector<KernelSeed> seeds;
  for (Letter j = 1; j <= d; ++j) {
    if (j == 2) continue;
    for (const auto& c : enumerate_chains(u3, n - 2, d - j))
      if (is_regular(c)) seeds.push_back(KernelSeed{{j, LinComb<AnickChain>(c)}});
  }
  return seeds;
}

SparseRationalMatrix restricted_diff_matrix(const Family& f, std::size_t n, std::uint64_t d,
                                            KernelOptions opts) {
  KernelComplex kc(f, opts);
  return kc.restricted_diff(n, d);
}

CohomologyCell cohomology_dim(const Family& f, std::size_t n, std::uint64_t d, KernelOptions opts) {
  KernelComplex kc(f, opts);
  return kc.cell(n, d);
}

CohomologyReport cohomology_table(const Family& f, std::size_t n_max, std::uint64_t d_max,
                                  KernelOptions opts) {
  KernelComplex kc(f, opts);
  return kc.table(n_max, d_max);
}

}  // namespace anick
