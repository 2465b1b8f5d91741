#include "cracq/clifford.hpp"

#include <cctype>

#include "cracq/errors.hpp"

namespace cracq {

namespace {

void require_mask(CliffordElement x, unsigned n_generators) {
  if (n_generators == 0 || n_generators > 31)
    throw ArgumentError("generator count out of range");
  if (x.mask >> n_generators)
    throw ArgumentError("generator mask exceeds " + std::to_string(n_generators) +
                        " bits");
  if (x.sign != 1 && x.sign != -1) throw ArgumentError("sign must be +1 or -1");
}

// Transpositions needed to merge two ascending generator strings: pairs
// (i in a, j in b) with i > j.
int reorder_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : +1;
}

}  // namespace

CliffordElement clifford_product(CliffordElement x, CliffordElement y,
                                 unsigned n_generators) {
  require_mask(x, n_generators);
  require_mask(y, n_generators);
  // Shared generators square to +1 and drop out after the merge.
  return {x.sign * y.sign * reorder_sign(x.mask, y.mask), x.mask ^ y.mask};
}

CliffordElement clifford_involution(CliffordElement x) noexcept {
  const unsigned k = x.grade();
  const bool flip = ((k * (k + 1)) / 2) & 1u;
  return {flip ? -x.sign : x.sign, x.mask};
}

CliffordElement clifford_inverse(CliffordElement x) noexcept {
  const unsigned k = x.grade();
  const bool flip = ((k * (k - 1)) / 2) & 1u;
  return {flip ? -x.sign : x.sign, x.mask};
}

std::string clifford_name(CliffordElement x) {
  std::string out(x.sign < 0 ? "-" : "+");
  if (x.mask == 0) return out + "1";
  for (unsigned bit = 0; bit < 32; ++bit)
    if (x.mask & (1u << bit)) out += "g" + std::to_string(bit + 1);
  return out;
}

CliffordElement parse_clifford_name(const std::string& name, unsigned n_generators) {
  if (name.size() < 2 || (name[0] != '+' && name[0] != '-'))
    throw ArgumentError("clifford name '" + name + "' must start with a sign");
  CliffordElement x{name[0] == '-' ? -1 : +1, 0};
  if (name.substr(1) == "1") return x;

  std::size_t pos = 1;
  unsigned previous = 0;
  while (pos < name.size()) {
    if (name[pos] != 'g')
      throw ArgumentError("clifford name '" + name + "' is malformed at position " +
                          std::to_string(pos));
    ++pos;
    unsigned value = 0;
    const std::size_t digits_start = pos;
    while (pos < name.size() && std::isdigit(static_cast<unsigned char>(name[pos]))) {
      value = value * 10 + static_cast<unsigned>(name[pos] - '0');
      ++pos;
    }
    if (pos == digits_start || value == 0 || value > n_generators)
      throw ArgumentError("clifford name '" + name + "' references generator outside 1.." +
                          std::to_string(n_generators));
    if (value <= previous)
      throw ArgumentError("clifford name '" + name +
                          "' must list generators in ascending order");
    previous = value;
    x.mask |= 1u << (value - 1);
  }
  return x;
}

std::size_t clifford_index(CliffordElement x, unsigned n_generators) noexcept {
  return (static_cast<std::size_t>(x.sign < 0) << n_generators) | x.mask;
}

CliffordElement clifford_element_at(std::size_t index, unsigned n_generators) noexcept {
  const std::uint32_t mask = static_cast<std::uint32_t>(index & ((1u << n_generators) - 1));
  return {(index >> n_generators) ? -1 : +1, mask};
}

FiniteGroup enumerate_clifford_group(unsigned n_generators, unsigned cap) {
  if (cap > kMaxCliffordGenerators) cap = kMaxCliffordGenerators;
  if (n_generators < 1 || n_generators > cap)
    throw ArgumentError("generator count " + std::to_string(n_generators) +
                        " outside 1.." + std::to_string(cap));
  const std::size_t order = std::size_t{1} << (n_generators + 1);

  FiniteGroup g;
  g.unit = 0;
  g.names.reserve(order);
  for (std::size_t i = 0; i < order; ++i)
    g.names.push_back(clifford_name(clifford_element_at(i, n_generators)));
  g.table.resize(order * order);
  for (std::size_t i = 0; i < order; ++i) {
    const CliffordElement x = clifford_element_at(i, n_generators);
    for (std::size_t j = 0; j < order; ++j) {
      const CliffordElement y = clifford_element_at(j, n_generators);
      g.table[i * order + j] = clifford_index(clifford_product(x, y, n_generators),
                                              n_generators);
    }
  }
  return g;
}

Involution clifford_involution_map(unsigned n_generators) {
  if (n_generators < 1 || n_generators > kMaxCliffordGenerators)
    throw ArgumentError("generator count out of range");
  const std::size_t order = std::size_t{1} << (n_generators + 1);
  Involution inv;
  inv.map.resize(order);
  for (std::size_t i = 0; i < order; ++i)
    inv.map[i] = clifford_index(clifford_involution(clifford_element_at(i, n_generators)),
                                n_generators);
  return inv;
}

Quasigroup build_clifford_quasigroup(unsigned n_generators, unsigned cap) {
  const FiniteGroup g = enumerate_clifford_group(n_generators, cap);
  return build_quasigroup(g, clifford_involution_map(n_generators));
}

}  // namespace cracq
