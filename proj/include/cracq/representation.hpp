#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cracq/cracovian.hpp"
#include "cracq/quasigroup.hpp"

namespace cracq {

/// Assignment of a square cracovian to every quasigroup element, aligned
/// with the element indices of the source quasigroup. The right unit maps to
/// the transposing cracovian.
struct Representation {
  std::size_t dimension = 0;
  std::vector<std::string> names;
  std::vector<Cracovian> tables;
};

/// Builds n mutually anticommuting complex tables G_m with G_m^2 = identity
/// and transpose(G_m) = -G_m, so that plain transposition realizes the
/// generator-negating involution. Starts at dimension 2^ceil(n/2) and doubles
/// until a family passes all three conditions, which are verified exactly
/// before returning (entries are Gaussian integers). Accepts 1 <= n <= 10;
/// throws ConstructionError if the search space is exhausted.
std::vector<Cracovian> build_gamma_matrices(unsigned n_generators);

/// Extends generator tables to the full Clifford quasigroup: each signed
/// monomial maps to the signed classical product of its generators in
/// ascending order; the right unit maps to the transposing cracovian.
/// Element names are parsed from the quasigroup, so file-loaded quasigroups
/// work as long as they use the canonical naming.
Representation extend_to_representation(const Quasigroup& q,
                                        std::span<const Cracovian> gammas);

struct PairViolation {
  std::size_t a = 0;
  std::size_t b = 0;
  std::string detail;
};

/// Checks crac_product(C(a), C(b)) == C(a . b) over all |Q|^2 pairs within
/// `tol`; returns the first violating pair, or nullopt when the
/// correspondence holds everywhere.
std::optional<PairViolation> verify_crac_homomorphism(const Quasigroup& q,
                                                      const Representation& rep,
                                                      double tol = kDefaultTolerance,
                                                      unsigned jobs = 1);

/// Dimension of the space of matrices commuting classically with every table
/// in the set, computed as the nullity of the stacked commutator system.
/// Dimension 1 means the set is irreducible over the complex field.
std::size_t commutant_dimension(std::span<const Cracovian> tables, double tol = 1e-9);

/// Reorders a loosely loaded representation to match the quasigroup's
/// element order; throws SchemaError listing the symmetric difference when
/// the element sets disagree.
Representation match_representation(const Quasigroup& q, const Representation& loose);

}  // namespace cracq
