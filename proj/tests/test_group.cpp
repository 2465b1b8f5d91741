#include <doctest.h>

#include "cracq/clifford.hpp"
#include "cracq/errors.hpp"
#include "cracq/group.hpp"
#include "test_support.hpp"

using namespace cracq;
using testsupport::cyclic_group;
using testsupport::symmetric_group_3;

TEST_CASE("group verification accepts real groups") {
  CHECK_FALSE(verify_group(cyclic_group(2)).has_value());
  CHECK_FALSE(verify_group(cyclic_group(7)).has_value());
  CHECK_FALSE(verify_group(symmetric_group_3()).has_value());
  CHECK_FALSE(verify_group(enumerate_clifford_group(1)).has_value());
}

TEST_CASE("group verification reports the first broken axiom with a witness") {
  SUBCASE("non-associative triple") {
    FiniteGroup g = cyclic_group(4);
    std::swap(g.table[1 * 4 + 1], g.table[1 * 4 + 3]);  // keeps the row a permutation
    const auto violation = verify_group(g);
    REQUIRE(violation.has_value());
    CHECK(violation->law == "associativity");
    CHECK(violation->witness.size() == 3);
    CHECK_FALSE(violation->detail.empty());
  }
  SUBCASE("broken unit") {
    FiniteGroup g = cyclic_group(3);
    g.unit = 1;
    const auto violation = verify_group(g);
    REQUIRE(violation.has_value());
    CHECK(violation->witness.size() >= 1);
  }
  SUBCASE("missing inverse") {
    // The two-element monoid with an absorbing element: associative, has a
    // unit, but x*x = x leaves x without an inverse.
    FiniteGroup g;
    g.names = {"e", "x"};
    g.unit = 0;
    g.table = {0, 1, 1, 1};
    const auto violation = verify_group(g);
    REQUIRE(violation.has_value());
    CHECK(violation->law == "inverse");
    CHECK(violation->witness == std::vector<std::size_t>{1});
  }
}

TEST_CASE("malformed group tables throw") {
  FiniteGroup g = cyclic_group(3);
  g.table[4] = 9;
  CHECK_THROWS_AS(verify_group(g), ArgumentError);
  FiniteGroup h = cyclic_group(3);
  h.table.pop_back();
  CHECK_THROWS_AS(verify_group(h), ArgumentError);
  FiniteGroup u = cyclic_group(3);
  u.unit = 7;
  CHECK_THROWS_AS(verify_group(u), ArgumentError);
}

TEST_CASE("associativity cap and the trusted flag") {
  const FiniteGroup g = cyclic_group(6);
  GroupCheckOptions small_cap;
  small_cap.associativity_cap = 4;
  CHECK_THROWS_AS(verify_group(g, small_cap), ArgumentError);
  small_cap.trusted = true;
  CHECK_FALSE(verify_group(g, small_cap).has_value());
}

TEST_CASE("parallel sweeps agree with the sequential result") {
  FiniteGroup g = cyclic_group(16);
  GroupCheckOptions sequential, parallel;
  parallel.jobs = 4;
  CHECK(verify_group(g, sequential) == std::nullopt);
  CHECK(verify_group(g, parallel) == std::nullopt);

  std::swap(g.table[5 * 16 + 3], g.table[5 * 16 + 9]);
  const auto a = verify_group(g, sequential);
  const auto b = verify_group(g, parallel);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->witness == b->witness);
}

TEST_CASE("involution verification") {
  SUBCASE("identity map on an abelian group") {
    const FiniteGroup g = cyclic_group(4);
    CHECK_FALSE(verify_involution(g, identity_involution(4)).has_value());
  }
  SUBCASE("inversion map on any group") {
    const FiniteGroup s3 = symmetric_group_3();
    CHECK_FALSE(verify_involution(s3, inversion_involution(s3)).has_value());
    const FiniteGroup c5 = cyclic_group(5);
    CHECK_FALSE(verify_involution(c5, inversion_involution(c5)).has_value());
  }
  SUBCASE("generator-negating involution on the two-generator clifford group") {
    CHECK_FALSE(
        verify_involution(enumerate_clifford_group(2), clifford_involution_map(2)).has_value());
  }
  SUBCASE("identity map on a nonabelian group fails the reversal law") {
    const FiniteGroup s3 = symmetric_group_3();
    const auto violation = verify_involution(s3, identity_involution(6));
    REQUIRE(violation.has_value());
    CHECK(violation->law == "anti-homomorphism");
    CHECK(violation->witness.size() == 2);
  }
  SUBCASE("non-involutive map is caught") {
    const FiniteGroup c4 = cyclic_group(4);
    Involution shift;
    shift.map = {0, 2, 3, 1};
    const auto violation = verify_involution(c4, shift);
    REQUIRE(violation.has_value());
    CHECK(violation->law == "involutive");
  }
  SUBCASE("wrong permutation length throws") {
    CHECK_THROWS_AS(verify_involution(cyclic_group(4), identity_involution(3)),
                    ArgumentError);
  }
}

TEST_CASE("induced self-maps") {
  const FiniteGroup s3 = symmetric_group_3();
  const Involution inv = inversion_involution(s3);

  SUBCASE("the unit induces the identity map") {
    for (std::size_t b = 0; b < s3.order(); ++b)
      CHECK(involution_automorphism(s3, inv, s3.unit, b) == b);
  }
  SUBCASE("clifford generators pick up the product sign") {
    const FiniteGroup g = enumerate_clifford_group(2);
    const Involution cinv = clifford_involution_map(2);
    const std::size_t g1 = g.index_of("+g1");
    const std::size_t g2 = g.index_of("+g2");
    CHECK(involution_automorphism(g, cinv, g1, g2) == g.index_of("-g1g2"));
  }
  SUBCASE("composition merges through the group product") {
    for (std::size_t d = 0; d < s3.order(); ++d)
      for (std::size_t a = 0; a < s3.order(); ++a)
        for (std::size_t b = 0; b < s3.order(); ++b) {
          const std::size_t two_steps =
              involution_automorphism(s3, inv, d, involution_automorphism(s3, inv, a, b));
          CHECK(two_steps == involution_automorphism(s3, inv, s3.product(a, d), b));
        }
  }
  SUBCASE("index guards") {
    CHECK_THROWS_AS(involution_automorphism(s3, inv, 9, 0), ArgumentError);
  }
}

TEST_CASE("the induced maps form a group") {
  CHECK(automorphism_group_check(cyclic_group(4), inversion_involution(cyclic_group(4))));
  CHECK(automorphism_group_check(symmetric_group_3(),
                                 inversion_involution(symmetric_group_3())));
  CHECK(automorphism_group_check(enumerate_clifford_group(1), clifford_involution_map(1)));
}

TEST_CASE("valid involutions always induce map groups") {
  // Theorem-style sweep: every (group, involution) pair that passes
  // verification also passes the map-group check.
  const FiniteGroup zoo[] = {cyclic_group(2), cyclic_group(4), cyclic_group(5),
                             symmetric_group_3(), enumerate_clifford_group(1),
                             enumerate_clifford_group(2)};
  for (const auto& g : zoo) {
    const Involution inv = inversion_involution(g);
    REQUIRE_FALSE(verify_involution(g, inv).has_value());
    CHECK(automorphism_group_check(g, inv));
  }
}

TEST_CASE("involution respects inverses") {
  const FiniteGroup s3 = symmetric_group_3();
  const FiniteGroup cl2 = enumerate_clifford_group(2);
  const std::pair<const FiniteGroup&, Involution> cases[] = {
      {s3, inversion_involution(s3)},
      {cl2, clifford_involution_map(2)},
  };
  for (const auto& [g, inv] : cases)
    for (std::size_t a = 0; a < g.order(); ++a)
      CHECK(inv.map[g.inverse(a)] == g.inverse(inv.map[a]));
}
