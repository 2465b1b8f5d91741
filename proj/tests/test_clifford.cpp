#include <doctest.h>

#include <algorithm>
#include <vector>

#include "cracq/clifford.hpp"
#include "cracq/errors.hpp"

using namespace cracq;

namespace {

// Symbolic oracle: multiply generator strings by explicit list merging,
// counting adjacent swaps one at a time, then cancelling equal neighbours.
CliffordElement slow_product(CliffordElement x, CliffordElement y) {
  std::vector<unsigned> string;
  for (unsigned bit = 0; bit < 32; ++bit)
    if (x.mask & (1u << bit)) string.push_back(bit);
  for (unsigned bit = 0; bit < 32; ++bit)
    if (y.mask & (1u << bit)) string.push_back(bit);

  int sign = x.sign * y.sign;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < string.size(); ++i) {
      if (string[i] == string[i + 1]) {
        string.erase(string.begin() + static_cast<long>(i),
                     string.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
      if (string[i] > string[i + 1]) {
        std::swap(string[i], string[i + 1]);
        sign = -sign;
        changed = true;
        break;
      }
    }
  }
  CliffordElement out{sign, 0};
  for (unsigned bit : string) out.mask |= 1u << bit;
  return out;
}

// Two-step involution oracle: negate every generator, reverse the string.
CliffordElement slow_involution(CliffordElement x) {
  std::vector<unsigned> string;
  for (unsigned bit = 0; bit < 32; ++bit)
    if (x.mask & (1u << bit)) string.push_back(bit);
  std::reverse(string.begin(), string.end());
  CliffordElement acc{x.sign * ((string.size() % 2 == 1) ? -1 : 1), 0};
  for (unsigned bit : string) acc = slow_product(acc, CliffordElement{1, 1u << bit});
  return acc;
}

}  // namespace

TEST_CASE("signed monomial products") {
  const CliffordElement g1{1, 0b01};
  const CliffordElement g2{1, 0b10};
  CHECK(clifford_product(g1, g1, 2) == CliffordElement{1, 0});
  CHECK(clifford_product(g2, g1, 2) == CliffordElement{-1, 0b11});
  const CliffordElement g12{1, 0b11};
  CHECK(clifford_product(g12, g12, 2) == CliffordElement{-1, 0});
  CHECK_THROWS_AS(clifford_product(CliffordElement{1, 0b100}, g1, 2), ArgumentError);
}

TEST_CASE("product sign agrees with the list-merge oracle") {
  const unsigned n = 3;
  const std::size_t order = 1u << (n + 1);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) {
      const CliffordElement x = clifford_element_at(i, n);
      const CliffordElement y = clifford_element_at(j, n);
      CHECK(clifford_product(x, y, n) == slow_product(x, y));
    }
}

TEST_CASE("generator anticommutation and squares") {
  const unsigned n = 4;
  for (unsigned a = 0; a < n; ++a) {
    const CliffordElement ga{1, 1u << a};
    CHECK(clifford_product(ga, ga, n) == CliffordElement{1, 0});
    for (unsigned b = 0; b < n; ++b) {
      if (a == b) continue;
      const CliffordElement gb{1, 1u << b};
      CHECK(clifford_product(ga, gb, n) ==
            clifford_product(gb, ga, n).negated());
    }
  }
}

TEST_CASE("involution on signed monomials") {
  CHECK(clifford_involution(CliffordElement{1, 0b01}) == CliffordElement{-1, 0b01});
  CHECK(clifford_involution(CliffordElement{1, 0b11}) == CliffordElement{-1, 0b11});
  CHECK(clifford_involution(CliffordElement{1, 0}) == CliffordElement{1, 0});
  CHECK(clifford_involution(CliffordElement{-1, 0}) == CliffordElement{-1, 0});

  SUBCASE("self-inverse and matches the two-step oracle") {
    const unsigned n = 4;
    for (std::size_t i = 0; i < (1u << (n + 1)); ++i) {
      const CliffordElement x = clifford_element_at(i, n);
      CHECK(clifford_involution(clifford_involution(x)) == x);
      CHECK(clifford_involution(x) == slow_involution(x));
    }
  }
  SUBCASE("reverses products") {
    const unsigned n = 3;
    const std::size_t order = 1u << (n + 1);
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j) {
        const CliffordElement x = clifford_element_at(i, n);
        const CliffordElement y = clifford_element_at(j, n);
        CHECK(clifford_involution(clifford_product(x, y, n)) ==
              clifford_product(clifford_involution(y), clifford_involution(x), n));
      }
  }
}

TEST_CASE("monomial inverses") {
  CHECK(clifford_inverse(CliffordElement{1, 0b01}) == CliffordElement{1, 0b01});
  CHECK(clifford_inverse(CliffordElement{1, 0b11}) == CliffordElement{-1, 0b11});
  const unsigned n = 3;
  for (std::size_t i = 0; i < (1u << (n + 1)); ++i) {
    const CliffordElement x = clifford_element_at(i, n);
    CHECK(clifford_product(x, clifford_inverse(x), n) == CliffordElement{1, 0});
  }
}

TEST_CASE("group enumeration") {
  CHECK(enumerate_clifford_group(1).order() == 4);
  CHECK(enumerate_clifford_group(2).order() == 8);
  const FiniteGroup g3 = enumerate_clifford_group(3);
  CHECK(g3.order() == 16);
  CHECK_FALSE(verify_group(g3).has_value());

  CHECK(g3.names[0] == "+1");
  CHECK(g3.unit == 0);
  CHECK(g3.names[g3.index_of("-1")] == "-1");
  CHECK(g3.index_of("+g1g3") == 0b101);

  CHECK_THROWS_AS(enumerate_clifford_group(0), ArgumentError);
  CHECK_THROWS_AS(enumerate_clifford_group(9, 8), ArgumentError);
}

TEST_CASE("involution permutation verifies on enumerated groups") {
  for (unsigned n = 1; n <= 3; ++n) {
    const FiniteGroup g = enumerate_clifford_group(n);
    CHECK_FALSE(verify_involution(g, clifford_involution_map(n)).has_value());
  }
}

TEST_CASE("name convention round-trips") {
  CHECK(clifford_name(CliffordElement{1, 0}) == "+1");
  CHECK(clifford_name(CliffordElement{-1, 0}) == "-1");
  CHECK(clifford_name(CliffordElement{1, 0b101}) == "+g1g3");
  CHECK(parse_clifford_name("-g2g4", 4) == CliffordElement{-1, 0b1010});
  for (std::size_t i = 0; i < (1u << 7); ++i) {
    const CliffordElement x = clifford_element_at(i, 6);
    CHECK(parse_clifford_name(clifford_name(x), 6) == x);
  }
  CHECK_THROWS_AS(parse_clifford_name("g1", 3), ArgumentError);     // missing sign
  CHECK_THROWS_AS(parse_clifford_name("+g4", 3), ArgumentError);    // out of range
  CHECK_THROWS_AS(parse_clifford_name("+g2g1", 3), ArgumentError);  // not ascending
  CHECK_THROWS_AS(parse_clifford_name("+g1g1", 3), ArgumentError);  // repeated
}

TEST_CASE("clifford quasigroups") {
  SUBCASE("orders and the negated unit") {
    for (unsigned n = 1; n <= 4; ++n) {
      const Quasigroup q = build_clifford_quasigroup(n);
      CHECK(q.order() == (std::size_t{1} << (n + 1)));
      // The negated right unit belongs to the quasigroup.
      const auto it = std::find(q.names.begin(), q.names.end(), "^-1");
      CHECK(it != q.names.end());
    }
  }
  SUBCASE("the generator squares to the negated unit") {
    const FiniteGroup g = enumerate_clifford_group(1);
    const Quasigroup q = build_clifford_quasigroup(1);
    CHECK(q.dot(g.index_of("+g1"), g.index_of("+g1")) == g.index_of("-1"));
  }
  SUBCASE("generator dot products anticommute onto the negated unit diagonal") {
    for (unsigned n = 1; n <= 4; ++n) {
      const FiniteGroup g = enumerate_clifford_group(n);
      const Quasigroup q = build_clifford_quasigroup(n);
      const std::size_t minus_tau = g.index_of("-1");
      for (unsigned mu = 0; mu < n; ++mu) {
        const std::size_t gmu = clifford_index(CliffordElement{1, 1u << mu}, n);
        for (unsigned nu = 0; nu < n; ++nu) {
          const std::size_t gnu = clifford_index(CliffordElement{1, 1u << nu}, n);
          if (mu == nu) {
            CHECK(q.dot(gmu, gnu) == minus_tau);
          } else {
            const CliffordElement lhs = clifford_element_at(q.dot(gmu, gnu), n);
            const CliffordElement rhs = clifford_element_at(q.dot(gnu, gmu), n);
            CHECK(lhs == rhs.negated());
          }
        }
      }
    }
  }
  SUBCASE("the law suite passes at three generators") {
    const FiniteGroup g = enumerate_clifford_group(3);
    const Involution inv = clifford_involution_map(3);
    LawOptions options;
    options.chain_depth = 3;
    CHECK(verify_quasigroup_laws(build_quasigroup(g, inv), g, inv, options).all_pass());
  }
}

TEST_CASE("conjugation preserves the structural relations") {
  // Inner automorphisms keep generator squares and anticommutation intact.
  const unsigned n = 3;
  const std::size_t order = 1u << (n + 1);
  for (std::size_t i = 0; i < order; ++i) {
    const CliffordElement g = clifford_element_at(i, n);
    const CliffordElement ginv = clifford_inverse(g);
    const auto conjugate = [&](CliffordElement x) {
      return clifford_product(clifford_product(g, x, n), ginv, n);
    };
    for (unsigned mu = 0; mu < n; ++mu) {
      const CliffordElement cmu = conjugate(CliffordElement{1, 1u << mu});
      CHECK(clifford_product(cmu, cmu, n) == CliffordElement{1, 0});
      for (unsigned nu = mu + 1; nu < n; ++nu) {
        const CliffordElement cnu = conjugate(CliffordElement{1, 1u << nu});
        CHECK(clifford_product(cmu, cnu, n) ==
              clifford_product(cnu, cmu, n).negated());
      }
    }
  }
}
