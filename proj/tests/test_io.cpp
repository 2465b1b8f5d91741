#include <doctest.h>

#include <sstream>

#include "cracq/clifford.hpp"
#include "cracq/errors.hpp"
#include "cracq/io.hpp"
#include "cracq/representation.hpp"
#include "test_support.hpp"

using namespace cracq;

TEST_CASE("scalar formatting and parsing") {
  CHECK(format_scalar(Scalar{3, 0}) == "3");
  CHECK(format_scalar(Scalar{-2.5, 0}) == "-2.5");
  CHECK(format_scalar(Scalar{1, 2}) == "1+2j");
  CHECK(format_scalar(Scalar{1.5, -0.25}) == "1.5-0.25j");
  CHECK(format_scalar(Scalar{0, 1}) == "0+1j");

  CHECK(parse_scalar("42") == Scalar{42, 0});
  CHECK(parse_scalar(" -1.25 ") == Scalar{-1.25, 0});
  CHECK(parse_scalar("1+2j") == Scalar{1, 2});
  CHECK(parse_scalar("1-2j") == Scalar{1, -2});
  CHECK(parse_scalar("2j") == Scalar{0, 2});
  CHECK(parse_scalar("-j") == Scalar{0, -1});
  CHECK(parse_scalar("j") == Scalar{0, 1});
  CHECK(parse_scalar("3+j") == Scalar{3, 1});
  CHECK(parse_scalar("1e-3+2.5e2j") == Scalar{1e-3, 2.5e2});

  CHECK_THROWS_AS(parse_scalar(""), SchemaError);
  CHECK_THROWS_AS(parse_scalar("abc"), SchemaError);
  CHECK_THROWS_AS(parse_scalar("1+2"), SchemaError);

  SUBCASE("round trip on random values") {
    testsupport::Rng rng(31);
    for (int i = 0; i < 200; ++i) {
      const Scalar v{rng.uniform(-1e6, 1e6), (i % 3 == 0) ? 0.0 : rng.uniform(-1e-3, 1e-3)};
      CHECK(parse_scalar(format_scalar(v)) == v);
    }
  }
}

TEST_CASE("cracovian csv") {
  const Cracovian a =
      Cracovian::from_rows({{Scalar{1, 0}, Scalar{2, -1}}, {Scalar{0, 0.5}, Scalar{-3, 0}}});
  std::ostringstream out;
  write_cracovian_csv(out, a);
  CHECK(out.str() == "1,2-1j\n0+0.5j,-3\n");

  std::istringstream in(out.str());
  CHECK(approx_equal(read_cracovian_csv(in), a, 0.0));

  SUBCASE("ragged rows carry the line number") {
    std::istringstream bad("1,2\n3\n");
    try {
      read_cracovian_csv(bad);
      CHECK(false);
    } catch (const SchemaError& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }
  SUBCASE("bad scalars carry the line number") {
    std::istringstream bad("1,2\n3,zebra\n");
    CHECK_THROWS_AS(read_cracovian_csv(bad), SchemaError);
  }
  SUBCASE("empty input is rejected") {
    std::istringstream bad("\n\n");
    CHECK_THROWS_AS(read_cracovian_csv(bad), SchemaError);
  }
}

TEST_CASE("cracovian json") {
  testsupport::Rng rng(32);
  const Cracovian a = testsupport::random_complex(rng, 3, 2);
  std::ostringstream out;
  write_cracovian_json(out, a);
  CHECK(out.str().find("\"entries_column_major\"") != std::string::npos);
  std::istringstream in(out.str());
  CHECK(approx_equal(read_cracovian_json(in), a, 0.0));

  std::istringstream bad(R"({"n_cols": 2, "n_rows": 2, "entries_column_major": [[1, 0]]})");
  CHECK_THROWS_AS(read_cracovian_json(bad), SchemaError);
  std::istringstream worse(R"({"n_rows": 2})");
  CHECK_THROWS_AS(read_cracovian_json(worse), SchemaError);
}

TEST_CASE("group files") {
  const FiniteGroup g = testsupport::symmetric_group_3();
  std::ostringstream out;
  write_group_json(out, g);
  std::istringstream in(out.str());
  const FiniteGroup back = read_group_json(in);
  CHECK(back.names == g.names);
  CHECK(back.table == g.table);
  CHECK(back.unit == g.unit);

  SUBCASE("missing unit field") {
    std::istringstream bad(R"({"names": ["e"], "cayley": [["e"]]})");
    try {
      read_group_json(bad);
      CHECK(false);
    } catch (const SchemaError& e) {
      CHECK(std::string(e.what()).find("unit") != std::string::npos);
    }
  }
  SUBCASE("unknown element in the table") {
    std::istringstream bad(R"({"names": ["e"], "unit": "e", "cayley": [["x"]]})");
    CHECK_THROWS_AS(read_group_json(bad), SchemaError);
  }
  SUBCASE("duplicate names") {
    std::istringstream bad(
        R"({"names": ["e", "e"], "unit": "e", "cayley": [["e", "e"], ["e", "e"]]})");
    CHECK_THROWS_AS(read_group_json(bad), SchemaError);
  }
}

TEST_CASE("involution files") {
  const FiniteGroup g = testsupport::cyclic_group(4);
  const Involution inv = inversion_involution(g);
  std::ostringstream out;
  write_involution_json(out, g, inv);
  std::istringstream in(out.str());
  CHECK(read_involution_json(in, g).map == inv.map);

  std::istringstream partial(R"({"map": {"c0": "c0"}})");
  CHECK_THROWS_AS(read_involution_json(partial, g), SchemaError);
  std::istringstream unknown(R"({"map": {"c0": "c0", "c1": "zz", "c2": "c2", "c3": "c1"}})");
  CHECK_THROWS_AS(read_involution_json(unknown, g), SchemaError);
}

TEST_CASE("quasigroup files re-validate structure on load") {
  const FiniteGroup g = enumerate_clifford_group(2);
  const Quasigroup q = build_quasigroup(g, clifford_involution_map(2));
  std::ostringstream out;
  write_quasigroup_json(out, q);
  std::istringstream in(out.str());
  const Quasigroup back = read_quasigroup_json(in);
  CHECK(back.names == q.names);
  CHECK(back.table == q.table);
  CHECK(back.tau == q.tau);

  // Corrupt one cell so a row repeats: the loader must reject it.
  std::string text = out.str();
  const auto pos = text.find("\"^-g1g2\"", text.find("cayley"));
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 8, "\"^+g1g2\"");
  std::istringstream corrupted(text);
  CHECK_THROWS_AS(read_quasigroup_json(corrupted), SchemaError);
}

TEST_CASE("cayley csv rendering") {
  const FiniteGroup g = testsupport::cyclic_group(2);
  std::ostringstream out;
  write_cayley_csv(out, g.names, g.table);
  CHECK(out.str() == "*,c0,c1\nc0,c0,c1\nc1,c1,c0\n");
}

TEST_CASE("representation bundles") {
  const Quasigroup q = build_clifford_quasigroup(1);
  const Representation rep = extend_to_representation(q, build_gamma_matrices(1));
  std::ostringstream out;
  write_representation_json(out, rep);
  std::istringstream in(out.str());
  const Representation loose = read_representation_json(in);
  const Representation matched = match_representation(q, loose);
  CHECK(matched.dimension == rep.dimension);
  for (std::size_t i = 0; i < rep.tables.size(); ++i)
    CHECK(approx_equal(matched.tables[i], rep.tables[i], 0.0));

  std::istringstream bad(R"({"dimension": 0, "elements": {}})");
  CHECK_THROWS_AS(read_representation_json(bad), SchemaError);
}

TEST_CASE("file round trips") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "cracq_io_test";
  fs::create_directories(dir);

  testsupport::Rng rng(33);
  const Cracovian a = testsupport::random_gaussian_integer(rng, 3, 3);
  save_cracovian(dir / "a.csv", a);
  CHECK(approx_equal(load_cracovian(dir / "a.csv"), a, 0.0));
  save_cracovian(dir / "a.json", a);
  CHECK(approx_equal(load_cracovian(dir / "a.json"), a, 0.0));

  CHECK_THROWS_AS(load_cracovian(dir / "missing.csv"), IoError);

  const FiniteGroup g = enumerate_clifford_group(1);
  save_group(dir / "g.json", g);
  CHECK(load_group(dir / "g.json").table == g.table);

  fs::remove_all(dir);
}
