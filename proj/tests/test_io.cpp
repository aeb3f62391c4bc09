#include "doctest.h"
#include "fixtures.hpp"
#include "twistk/errors.hpp"
#include "twistk/io.hpp"
#include "twistk/isomorphism.hpp"

using namespace twistk;

TEST_CASE("schema detection") {
  CHECK(io::detect_schema(R"json({"units":[],"arrows":[]})json") ==
        io::Schema::Groupoid);
  CHECK(io::detect_schema(R"json({"values":[]})json") == io::Schema::Cocycle);
  CHECK(io::detect_schema(R"json({"family":"bilinear"})json") == io::Schema::Cocycle);
  CHECK(io::detect_schema(R"json({"kind":"coboundary_path"})json") ==
        io::Schema::Homotopy);
  CHECK(io::detect_schema(R"json({"elements":[],"table":[],"zero":"0"})json") ==
        io::Schema::Semigroup);
  CHECK(io::detect_schema(R"json({"space":[],"domains":{},"theta":{}})json") ==
        io::Schema::TwistedAction);
  CHECK(io::detect_schema(R"json({"gamma":{},"P":[],"X":[]})json") ==
        io::Schema::DirectedAction);
  CHECK(io::detect_schema(R"json({"what":1})json") == io::Schema::Unknown);
  CHECK_THROWS_AS(io::detect_schema("{nope"), Error);
}

TEST_CASE("groupoid files round trip") {
  auto g = make_pair_groupoid(3);
  auto text = io::write_groupoid(*g);
  auto back = io::parse_groupoid(text);
  CHECK(back->num_arrows() == g->num_arrows());
  CHECK(back->num_units() == g->num_units());
  CHECK(validate_groupoid(*back).ok());
  CHECK(io::write_groupoid(*back) == text);  // canonical form is stable

  CHECK_THROWS_AS(io::parse_groupoid("not json"), Error);
}

TEST_CASE("cocycle files round trip bit exact") {
  auto g = fixtures::z2z2_groupoid();
  auto w = coboundary(fixtures::random_cochain(g, 8, 8));
  auto text = io::write_cocycle(w);
  auto back = io::parse_cocycle(text, g);
  CHECK(back.table_equal(w));
}

TEST_CASE("cocycle families parse") {
  auto g = fixtures::z2z2_groupoid();

  auto bil = io::parse_cocycle(
      R"json({"family":"bilinear","moduli":[2,2],"Q":[[0,0],[1,0]]})json", g);
  CHECK(bil.table_equal(fixtures::clock_shift_cocycle(g, 2)));

  auto cob = io::parse_cocycle(
      R"json({"family":"coboundary","b":{"(0,1)":"1/4","(1,0)":"1/2"}})json", g);
  CHECK(validate_cocycle(cob).ok());

  auto prod = io::parse_cocycle(
      R"json({"family":"product","of":[
            {"family":"bilinear","moduli":[2,2],"Q":[[0,0],[1,0]]},
            {"family":"bilinear","moduli":[2,2],"Q":[[0,0],[1,0]]}]})json",
      g);
  CHECK(prod.table_equal(TwoCocycle::constant_one(g)));

  CHECK_THROWS_AS(
      io::parse_cocycle(R"json({"family":"mystery"})json", g), Error);
  CHECK_THROWS_AS(
      io::parse_cocycle(
          R"json({"values":[{"pair":["(0,1)","nope"],"turns":"0/1"}]})json", g),
      Error);
}

TEST_CASE("homotopy files parse") {
  auto g = fixtures::z2z2_groupoid();
  auto h = io::parse_homotopy(
      R"json({"kind":"coboundary_path","b":{"(0,1)":"1/6"}})json", g);
  CHECK(h.sample(0.0).table_equal(TwoCocycle::constant_one(g)));
  CHECK(validate_cocycle(h.sample(0.5)).ok());

  // additive lift of the clock shift: radians as rational multiples of pi
  auto lin = io::parse_homotopy(
      R"json({"kind":"linear_lift","c":[
            {"pair":["(0,1)","(1,0)"],"radians":"1/1"},
            {"pair":["(0,1)","(1,1)"],"radians":"1/1"},
            {"pair":["(1,1)","(1,0)"],"radians":"1/1"},
            {"pair":["(1,1)","(1,1)"],"radians":"1/1"}]})json",
      g);
  CHECK(validate_cocycle(lin.sample(1.0), 1e-9).ok());

  CHECK_THROWS_AS(io::parse_homotopy(R"json({"kind":"warp"})json", g), Error);
}

TEST_CASE("semigroup and twisted action files") {
  auto s = io::parse_semigroup(
      R"json({"elements":["0","e","a"],
          "table":[["0","0","0"],["0","e","a"],["0","a","e"]],
          "zero":"0"})json");
  CHECK(s->size() == 3);

  auto a = io::parse_twisted_action(
      R"json({"space":["x"],
          "domains":{"e":["x"],"a":["x"]},
          "theta":{"e":{"x":"x"},"a":{"x":"x"}},
          "omega":{"(a,a)":{"x":"1/2"}}})json",
      s);
  CHECK(validate_twisted_action(a).ok());
  CHECK(a.omega_at(2, 2, 0).equals(CircleValue::turns(1, 2)));
  CHECK(a.omega_at(1, 2, 0).is_one());
}

TEST_CASE("directed action file") {
  auto a = io::parse_directed_action(
      R"json({"gamma":{"elements":["e","g"],"table":[["e","g"],["g","e"]]},
          "P":["e","g"],"X":["1","2"],
          "dom":{"e":["1","2"],"g":["1","2"]},
          "T":{"e":{"1":"1","2":"2"},"g":{"1":"2","2":"1"}}})json");
  CHECK(validate_directed_action(a).ok());
  CHECK(a.space.size() == 2);
}

TEST_CASE("k0 and invariance serialization is stable") {
  K0Data d;
  d.k = 2;
  d.block_sizes = {1, 3};
  d.unit_class = {1, 3};
  CHECK(io::write_k0(d) ==
        "{\n  \"k\": 2,\n  \"block_sizes\": [\n    1,\n    3\n  ],\n"
        "  \"unit_class\": [\n    1,\n    3\n  ]\n}\n");

  InvarianceReport r;
  r.pass = true;
  InvarianceReport::Sample s;
  s.t = 0.0;
  s.valid = true;
  s.k0 = d;
  r.samples.push_back(s);
  auto text = io::write_invariance(r);
  CHECK(text.find("\"verdict\": \"PASS\"") != std::string::npos);
  CHECK(text.find("\"level\": \"ALGEBRA_DATA\"") != std::string::npos);
  CHECK(io::write_invariance(r) == text);
}

TEST_CASE("digest is FNV-1a") {
  CHECK(io::digest("") == 14695981039346656037ull);
  CHECK(io::digest("a") == 0xaf63dc4c8601ec8cull);
}
