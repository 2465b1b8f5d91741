#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cracq {

/// Finite group given extensionally: element names, a row-major Cayley table
/// of element indices (table[a * order + b] is the index of the product ab),
/// and the index of the unit.
struct FiniteGroup {
  std::vector<std::string> names;
  std::vector<std::size_t> table;
  std::size_t unit = 0;

  std::size_t order() const noexcept { return names.size(); }
  std::size_t product(std::size_t a, std::size_t b) const {
    return table[a * order() + b];
  }
  /// Two-sided inverse found by scanning the row; throws ArgumentError if
  /// none exists.
  std::size_t inverse(std::size_t a) const;
  /// Index of a named element; throws ArgumentError on unknown names.
  std::size_t index_of(const std::string& name) const;
};

/// Self-inverse anti-automorphism fixing the unit, stored as a permutation
/// of element indices.
struct Involution {
  std::vector<std::size_t> map;
};

/// A failed structural check: which law broke, the witnessing element
/// indices, and a rendered message.
struct Violation {
  std::string law;
  std::vector<std::size_t> witness;
  std::string detail;
};

struct GroupCheckOptions {
  /// Orders above this skip the cubic associativity sweep; they are only
  /// accepted when `trusted` is set.
  std::size_t associativity_cap = 512;
  bool trusted = false;
  unsigned jobs = 1;
};

/// Checks closure is well-formed (throws ArgumentError on out-of-range
/// entries), then associativity, the unit laws and existence of two-sided
/// inverses. Returns the first violation found, or nullopt when the table is
/// a group.
std::optional<Violation> verify_group(const FiniteGroup& g,
                                      const GroupCheckOptions& options = {});

/// Checks the involution axioms: the map is self-inverse, fixes the unit and
/// reverses products (verified on all pairs). Throws ArgumentError when the
/// permutation has the wrong length or out-of-range values.
std::optional<Violation> verify_involution(const FiniteGroup& g, const Involution& inv);

/// The induced self-map for a fixed `a`: b -> I(a) b.
std::size_t involution_automorphism(const FiniteGroup& g, const Involution& inv,
                                    std::size_t a, std::size_t b);

/// Exhaustively checks that the maps b -> I(a) b are closed under
/// composition, compose associatively, contain the identity and have
/// inverses. Cost grows like order^4; intended for small groups.
bool automorphism_group_check(const FiniteGroup& g, const Involution& inv);

/// g -> g^{-1}; a valid involution on every group.
Involution inversion_involution(const FiniteGroup& g);

/// The identity permutation; a valid involution exactly on abelian groups.
Involution identity_involution(std::size_t order);

}  // namespace cracq
