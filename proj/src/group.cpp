#include "cracq/group.hpp"

#include <numeric>

#include "cracq/detail/parallel.hpp"
#include "cracq/errors.hpp"

namespace cracq {

namespace {

std::string name_of(const FiniteGroup& g, std::size_t i) { return g.names[i]; }

void require_well_formed(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n == 0) throw ArgumentError("group needs at least the unit element");
  if (g.table.size() != n * n)
    throw ArgumentError("cayley table has " + std::to_string(g.table.size()) +
                        " entries, expected " + std::to_string(n * n));
  if (g.unit >= n) throw ArgumentError("unit index " + std::to_string(g.unit) +
                                       " out of range for order " + std::to_string(n));
  for (std::size_t i = 0; i < g.table.size(); ++i) {
    if (g.table[i] >= n)
      throw ArgumentError("cayley entry at (" + std::to_string(i / n) + ", " +
                          std::to_string(i % n) + ") is out of range");
  }
}

void require_permutation_shape(const FiniteGroup& g, const Involution& inv) {
  const std::size_t n = g.order();
  if (inv.map.size() != n)
    throw ArgumentError("involution permutation has length " +
                        std::to_string(inv.map.size()) + ", expected " +
                        std::to_string(n));
  for (std::size_t v : inv.map)
    if (v >= n) throw ArgumentError("involution maps outside the group");
}

}  // namespace

std::size_t FiniteGroup::inverse(std::size_t a) const {
  const std::size_t n = order();
  if (a >= n) throw ArgumentError("element index out of range");
  for (std::size_t b = 0; b < n; ++b)
    if (product(a, b) == unit && product(b, a) == unit) return b;
  throw ArgumentError("element " + names[a] + " has no two-sided inverse");
}

std::size_t FiniteGroup::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  throw ArgumentError("unknown element name '" + name + "'");
}

std::optional<Violation> verify_group(const FiniteGroup& g, const GroupCheckOptions& options) {
  require_well_formed(g);
  const std::size_t n = g.order();

  if (n > options.associativity_cap) {
    if (!options.trusted)
      throw ArgumentError("order " + std::to_string(n) +
                          " exceeds the associativity cap " +
                          std::to_string(options.associativity_cap) +
                          "; set trusted to accept the table unchecked");
  } else {
    const auto bad = [&](std::size_t idx) {
      const std::size_t a = idx / (n * n);
      const std::size_t b = (idx / n) % n;
      const std::size_t c = idx % n;
      return g.product(g.product(a, b), c) != g.product(a, g.product(b, c));
    };
    if (const auto hit = detail::find_first_index(n * n * n, options.jobs, bad)) {
      const std::size_t a = *hit / (n * n);
      const std::size_t b = (*hit / n) % n;
      const std::size_t c = *hit % n;
      return Violation{"associativity",
                       {a, b, c},
                       "(" + name_of(g, a) + " " + name_of(g, b) + ") " + name_of(g, c) +
                           " != " + name_of(g, a) + " (" + name_of(g, b) + " " +
                           name_of(g, c) + ")"};
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    if (g.product(g.unit, a) != a || g.product(a, g.unit) != a)
      return Violation{"unit", {a}, name_of(g, g.unit) + " does not fix " + name_of(g, a)};
  }

  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b)
      found = g.product(a, b) == g.unit && g.product(b, a) == g.unit;
    if (!found)
      return Violation{"inverse", {a}, name_of(g, a) + " has no two-sided inverse"};
  }
  return std::nullopt;
}

std::optional<Violation> verify_involution(const FiniteGroup& g, const Involution& inv) {
  require_permutation_shape(g, inv);
  const std::size_t n = g.order();

  for (std::size_t a = 0; a < n; ++a) {
    if (inv.map[inv.map[a]] != a)
      return Violation{"involutive", {a},
                       "I(I(" + name_of(g, a) + ")) != " + name_of(g, a)};
  }
  if (inv.map[g.unit] != g.unit)
    return Violation{"unit-fixed", {g.unit}, "I does not fix " + name_of(g, g.unit)};

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (inv.map[g.product(a, b)] != g.product(inv.map[b], inv.map[a]))
        return Violation{"anti-homomorphism",
                         {a, b},
                         "I(" + name_of(g, a) + " " + name_of(g, b) + ") != I(" +
                             name_of(g, b) + ") I(" + name_of(g, a) + ")"};
    }
  }
  return std::nullopt;
}

std::size_t involution_automorphism(const FiniteGroup& g, const Involution& inv,
                                    std::size_t a, std::size_t b) {
  require_permutation_shape(g, inv);
  if (a >= g.order() || b >= g.order())
    throw ArgumentError("element index out of range");
  return g.product(inv.map[a], b);
}

bool automorphism_group_check(const FiniteGroup& g, const Involution& inv) {
  require_permutation_shape(g, inv);
  const std::size_t n = g.order();

  // phi_a(b) = I(a) b, as explicit permutations.
  std::vector<std::vector<std::size_t>> phi(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) phi[a][b] = g.product(inv.map[a], b);

  for (std::size_t b = 0; b < n; ++b)
    if (phi[g.unit][b] != b) return false;

  // Closure: composing phi_a then phi_d lands on phi_{ad}.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t d = 0; d < n; ++d) {
      const std::size_t ad = g.product(a, d);
      for (std::size_t b = 0; b < n; ++b)
        if (phi[d][phi[a][b]] != phi[ad][b]) return false;
    }

  // Associativity of composition: bracket the three-map composite both ways
  // and compare the resulting permutation tables.
  const auto compose = [n](const std::vector<std::size_t>& outer,
                           const std::vector<std::size_t>& inner) {
    std::vector<std::size_t> out(n);
    for (std::size_t x = 0; x < n; ++x) out[x] = outer[inner[x]];
    return out;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (compose(compose(phi[a], phi[b]), phi[c]) !=
            compose(phi[a], compose(phi[b], phi[c])))
          return false;

  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t ainv = g.inverse(a);
    for (std::size_t b = 0; b < n; ++b)
      if (phi[ainv][phi[a][b]] != b || phi[a][phi[ainv][b]] != b) return false;
  }
  return true;
}

Involution inversion_involution(const FiniteGroup& g) {
  Involution inv;
  inv.map.resize(g.order());
  for (std::size_t a = 0; a < g.order(); ++a) inv.map[a] = g.inverse(a);
  return inv;
}

Involution identity_involution(std::size_t order) {
  Involution inv;
  inv.map.resize(order);
  std::iota(inv.map.begin(), inv.map.end(), std::size_t{0});
  return inv;
}

}  // namespace cracq
