#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "cracq/group.hpp"
#include "cracq/quasigroup.hpp"

namespace cracq {

/// Hard upper bound on the generator count for group enumeration.
inline constexpr unsigned kMaxCliffordGenerators = 20;

/// Signed monomial of anticommuting generators: sign * g_{m1} g_{m2} ... with
/// bit m of `mask` set iff generator m+1 occurs. The stored form is canonical
/// (generators ascending); reordering signs are absorbed into `sign`.
struct CliffordElement {
  int sign = +1;  // +1 or -1
  std::uint32_t mask = 0;

  unsigned grade() const noexcept { return static_cast<unsigned>(std::popcount(mask)); }
  CliffordElement negated() const noexcept { return {-sign, mask}; }
  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;
};

/// Canonical product under g_m g_n = -g_n g_m (m != n) and g_m^2 = +1. The
/// reordering sign counts the transpositions that merge the two ascending
/// generator sequences; squared pairs then drop out with factor +1.
CliffordElement clifford_product(CliffordElement x, CliffordElement y,
                                 unsigned n_generators);

/// Reverses the generator string and negates each generator: the sign picks
/// up (-1)^{k(k+1)/2} for grade k. Self-inverse, fixes +1 and -1.
CliffordElement clifford_involution(CliffordElement x) noexcept;

/// Reverses the generator string: the sign picks up (-1)^{k(k-1)/2}; the
/// product with the original is +1.
CliffordElement clifford_inverse(CliffordElement x) noexcept;

/// "+1", "-1", "+g1g3", ...: sign prefix then the ascending generator list.
std::string clifford_name(CliffordElement x);

/// Parses the naming convention back; throws ArgumentError on malformed
/// names or generators beyond n_generators.
CliffordElement parse_clifford_name(const std::string& name, unsigned n_generators);

/// Index of an element in the enumeration order used by
/// enumerate_clifford_group: mask plus a sign bit on top.
std::size_t clifford_index(CliffordElement x, unsigned n_generators) noexcept;
CliffordElement clifford_element_at(std::size_t index, unsigned n_generators) noexcept;

/// All 2^{n+1} signed monomials with their Cayley table; the unit +1 sits at
/// index 0. Throws ArgumentError outside 1 <= n <= cap. Memory grows as
/// 4^{n+1}; counts beyond a dozen generators are impractical.
FiniteGroup enumerate_clifford_group(unsigned n_generators,
                                     unsigned cap = kMaxCliffordGenerators);

/// The generator-negating involution as a permutation aligned with
/// enumerate_clifford_group's indexing.
Involution clifford_involution_map(unsigned n_generators);

/// Quasigroup of the Clifford group under its canonical involution; order
/// 2^{n+1}, contains the negated right unit.
Quasigroup build_clifford_quasigroup(unsigned n_generators,
                                     unsigned cap = kMaxCliffordGenerators);

}  // namespace cracq
