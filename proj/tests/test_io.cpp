#include <doctest.h>

#include <complex>
#include <string>

#include "examples.hpp"
#include "specat/io.hpp"

using namespace specat;
using io::Json;

TEST_SUITE("io") {
  TEST_CASE("builtin lattices resolve by name") {
    CHECK(io::resolve_lattice("builtin:bool")->size() == 2);
    CHECK(io::resolve_lattice("builtin:b4")->size() == 4);
    CHECK(io::resolve_lattice("builtin:chain:5")->size() == 5);
    CHECK_THROWS_AS(io::resolve_lattice("builtin:m3"), ParseError);
  }

  TEST_CASE("lattice tables round-trip") {
    const auto t = HeytingTable::b4();
    const auto back = io::lattice_from_json(io::lattice_to_json(t));
    CHECK(back == t);
    auto j = io::lattice_to_json(t);
    j["meet"][1][2] = "a";
    CHECK_THROWS_AS(io::lattice_from_json(j), InvalidStructure);
    j = io::lattice_to_json(t);
    j["join"][0][0] = "q";
    CHECK_THROWS_AS(io::lattice_from_json(j), UnknownElement);
  }

  TEST_CASE("relations from grids and pairs") {
    const auto grid = io::relation_from_json(
        io::parse_json(R"({"source":["p","q"],"target":["r"],"values":[["a","0"]]})", "test"), ex::b4());
    CHECK(grid.at(0, 0) == ex::b4()->index_of("a"));
    const auto pairs = io::relation_from_json(
        io::parse_json(R"({"carrier":["1","2"],"pairs":[["2","1"]]})", "test"), ex::boolean());
    CHECK(pairs.at(1, 0) == 1);
    CHECK(pairs.at(0, 1) == 0);
    CHECK(io::relation_from_json(io::relation_to_json(grid), ex::b4()) == grid);
    CHECK_THROWS_AS(io::relation_from_json(io::parse_json(R"({"carrier":["1"],"pairs":[["1","9"]]})", "t"),
                                           ex::boolean()),
                    UnknownElement);
  }

  TEST_CASE("malformed JSON names its source") {
    CHECK_THROWS_WITH_AS(io::parse_json("{", "input.json"), doctest::Contains("input.json"), ParseError);
  }

  TEST_CASE("scalars") {
    CHECK(io::parse_real("-2.5e1", "x") == -25.0);
    CHECK_THROWS_AS(io::parse_real("1x", "x"), ParseError);
    CHECK_THROWS_AS(io::parse_real("", "x"), ParseError);
    CHECK(io::parse_complex("1+2i", "z") == std::complex<double>(1, 2));
    CHECK(io::parse_complex("-3j", "z") == std::complex<double>(0, -3));
    CHECK(io::parse_complex("0.5", "z") == std::complex<double>(0.5, 0));
    CHECK(io::parse_complex("2-i", "z") == std::complex<double>(2, -1));
    CHECK_THROWS_AS(io::parse_complex("1+", "z"), ParseError);
    CHECK(io::scalar_to_json(-0.0) == Json(0));
    CHECK(io::scalar_to_json(std::complex<double>(1, -1)) == Json::array({1.0, -1.0}));
  }

  TEST_CASE("CSV matrices") {
    const auto m = io::matrix_from_csv<RealDomain>("1, 2\n# comment\n\n3,4\n");
    CHECK(m == ScalarMatrix<RealDomain>::from_rows({{1, 2}, {3, 4}}));
    CHECK(io::matrix_from_csv<RealDomain>(io::matrix_to_csv(m)) == m);
    CHECK_THROWS_WITH_AS(io::matrix_from_csv<RealDomain>("1,2\n3,x\n"), doctest::Contains("csv line 2, field 2"),
                         ParseError);
    CHECK_THROWS_AS(io::matrix_from_csv<RealDomain>("1,2\n3\n"), ParseError);
    CHECK_THROWS_WITH_AS(io::matrix_from_csv<NonNegativeRealDomain>("1,-2\n"), doctest::Contains("csv line 1, field 2"),
                         DomainError);
    const auto c = io::matrix_from_csv<ComplexDomain>("1+i,0\n");
    CHECK(c(0, 0) == std::complex<double>(1, 1));
  }

  TEST_CASE("JSON matrices check their shape") {
    const auto j = io::parse_json("[[1,2],[3,4]]", "t");
    CHECK(io::matrix_from_json<RealDomain>(j, "m").rows() == 2);
    CHECK_THROWS_AS(io::matrix_from_json<RealDomain>(j, 2, 3, "m"), TypeMismatch);
    CHECK_THROWS_AS(io::matrix_from_json<RealDomain>(io::parse_json("[[1,2],[3]]", "t"), "m"), ParseError);
    CHECK(io::matrix_from_json<RealDomain>(Json::array(), 0, 4, "m").cols() == 4);
  }

  TEST_CASE("edge lists") {
    const auto g = io::edges_from_text("# star\n0 1\n0 2 # trailing\n\n2 3\n");
    CHECK(g.vertices == 4);
    CHECK(g.edges.size() == 3);
    CHECK_THROWS_WITH_AS(io::edges_from_text("0 1\n1 x\n"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_AS(io::edges_from_text("0 1 2\n"), ParseError);
  }

  TEST_CASE("partitions") {
    const auto p = io::partition_from_json(io::parse_json("[[0,2],[1]]", "t"), 3);
    CHECK(p.cells() == std::vector<std::vector<std::size_t>>{{0, 2}, {1}});
    CHECK(io::partition_to_json(p) == io::parse_json("[[0,2],[1]]", "t"));
    CHECK_THROWS_AS(io::partition_from_json(io::parse_json("[[0],[1]]", "t"), 3), PreconditionError);
  }

  TEST_CASE("homs from specs and tables") {
    const auto h = io::hom_from_spec("builtin:threshold:a", ex::b4());
    CHECK(h(ex::b4()->index_of("a")) == 1);
    CHECK(io::hom_from_spec("builtin:identity", ex::b4()).map() == std::vector<HeytingTable::Element>{0, 1, 2, 3});
    const auto j = io::parse_json(R"({"target":"builtin:bool","map":{"0":"0","a":"1","b":"1","1":"1"}})", "t");
    CHECK_THROWS_AS(io::hom_from_json(j, ex::b4()), InvalidStructure);
    CHECK_NOTHROW(io::hom_from_json(j, ex::b4(), false));
    auto missing = j;
    missing["map"].erase("b");
    CHECK_THROWS_AS(io::hom_from_json(missing, ex::b4()), ParseError);
    CHECK_THROWS_AS(io::hom_from_spec("builtin:threshold:z", ex::b4()), UnknownElement);
  }

  TEST_CASE("decompositions round-trip") {
    const ex::B4Split e;
    const auto j = io::decomposition_to_json(e.cat, e.dec_sum());
    const auto back = io::decomposition_from_json(e.cat, j);
    REQUIRE(back.blocks.size() == 2);
    CHECK(back.carrier == e.c);
    CHECK(back.blocks[0].kappa == e.kappa1);
    CHECK(back.blocks[1].lambda == e.dec_sum().blocks[1].lambda);

    const ex::Real3Split m;
    const auto jm = io::decomposition_to_json(m.cat, m.dec());
    CHECK(io::decomposition_from_json(m.cat, jm).blocks[1].kappa == m.kappa2);
    auto bad = jm;
    bad["blocks"][1]["kappa"] = Json::array({Json::array({1, 2})});
    CHECK_THROWS_WITH_AS(io::decomposition_from_json(m.cat, bad), doctest::Contains("blocks[1].kappa"),
                         TypeMismatch);
  }

  TEST_CASE("law reports serialize deterministically") {
    LawReport r;
    r.record("x", false, 2.0, [] { return std::vector<std::string>{"w = 1"}; });
    r.record("y", true);
    const auto j = io::law_report_to_json(r);
    CHECK(j.dump() == io::law_report_to_json(r).dump());
    CHECK(j.dump().find("w = 1") != std::string::npos);
  }
}
