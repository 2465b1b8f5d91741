#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cracq/group.hpp"

namespace cracq {

/// Quasigroup built on a group with involution via the dot product
/// a . b = I(b) a. The table is a Latin square; tau (the image of the group
/// unit) is a right unit but in general not a left unit. Element names carry
/// a caret prefix to distinguish them from the underlying group elements.
struct Quasigroup {
  std::vector<std::string> names;
  std::vector<std::size_t> table;
  std::size_t tau = 0;

  std::size_t order() const noexcept { return names.size(); }
  /// Table lookup with bounds checks; throws DimensionError.
  std::size_t dot(std::size_t a, std::size_t b) const;
};

/// Builds the dot-product table from (g, inv) and validates the structural
/// invariants (Latin square, right unit) before returning. Full group and
/// involution verification is the caller's job (`verify_group`,
/// `verify_involution`).
Quasigroup build_quasigroup(const FiniteGroup& g, const Involution& inv);

/// Left-to-right fold of the dot product over a nonempty index list.
std::size_t chain_dot(const Quasigroup& q, std::span<const std::size_t> factors);

/// The two-sided dot inverse of `a`: the element I(a^{-1}).
std::size_t right_inverse(const Quasigroup& q, const FiniteGroup& g,
                          const Involution& inv, std::size_t a);

/// Outcome of scanning every element for left-unit behaviour.
struct LeftUnitScan {
  /// Set when some x satisfies x . a == a for all a (possible only in the
  /// degenerate abelian/identity-involution case).
  std::optional<std::size_t> left_unit;
  /// Otherwise: for every x, an a with x . a != a.
  std::vector<std::size_t> witnesses;
};

LeftUnitScan left_unit_witness(const Quasigroup& q);

struct LawOptions {
  /// Chain laws (inverse and reversal of p factors) run for p = 2..depth.
  std::size_t chain_depth = 5;
  /// Sweeps over tuples switch from exhaustive to sampled above this count.
  std::size_t exhaustive_budget = std::size_t{1} << 22;
  std::size_t samples = 10000;
  std::uint64_t sample_seed = 0x9e3779b97f4a7c15ull;
  unsigned jobs = 1;
};

struct LawResult {
  std::string law;
  bool passed = false;
  /// Sweep mode, degenerate-case remarks, or a witness summary.
  std::string note;
  std::optional<Violation> violation;
};

struct LawReport {
  std::vector<LawResult> laws;
  bool all_pass() const;
  const LawResult* find(const std::string& law) const;
};

/// Runs the full law suite for the quasigroup of (g, inv): Latin-square
/// structure, unit and inverse laws, quasi-associativity, reversal rules,
/// the p-factor chain laws, the correspondence with the group product, plus
/// informational scans for nonassociativity and left units (those two report
/// but never fail: both degenerate for abelian groups under the identity
/// involution).
LawReport verify_quasigroup_laws(const Quasigroup& q, const FiniteGroup& g,
                                 const Involution& inv, const LawOptions& options = {});

}  // namespace cracq
