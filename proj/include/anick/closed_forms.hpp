#pragma once

#include <cstdint>

#include "anick/bar_morse.hpp"

namespace anick {

/// Closed-form Anick differential for U(3), projected onto chains. Handles
/// both the regular case (penultimate index > 1) and chains ending in |1|0.
LinComb<AnickChain> u3_diff(const AnickChain& c);

/// Closed-form Anick differential for U(2) on chains of length 2 or 3.
LinComb<AnickChain> u2_diff(const AnickChain& c);

/// Dispatches to u3_diff/u2_diff; throws PreconditionError where no closed
/// form is available (custom families, U(2) chains longer than 3).
LinComb<AnickChain> closed_diff(const Family& f, const AnickChain& c);
bool has_closed_diff(const Family& f, const AnickChain& c);

/// Slotwise derivative sum_j i_j [.. i_j - 1 ..] projected onto chains.
/// Valid for U(2) and U(3) only.
LinComb<AnickChain> tilde_partial_fast(const Family& f, const AnickChain& c);

/// e_1 = [1|0] and e_d = sum_{s=0}^{d-2} (-1)^s C(d,s) [d-s|s] for d >= 3.
/// Empty for d in {0, 2}.
LinComb<AnickChain> k2_basis_explicit(std::uint64_t d);

/// The degree-4 kernel element [2|2|0] - 2/3 [3|1|0].
LinComb<AnickChain> f3_element();

/// Appends index k to every chain of x and drops results that are not chains.
LinComb<AnickChain> append_index(const Family& f, const LinComb<AnickChain>& x, Letter k);

/// Checks d_n[v|1] = [d_{n-1}(v)|1] + (-1)^{n-1} (d - n + 1) v for v of
/// length n - 1 and degree d with every last index >= 2. Throws
/// PreconditionError if v violates those conditions. d_1 is taken as zero.
bool der10_identity_check(std::size_t n, std::uint64_t d, const LinComb<AnickChain>& v);

}  // namespace anick
