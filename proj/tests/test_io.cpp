#include "doctest.h"
#include "phl/io.hpp"
#include "phl/perverse.hpp"
#include "phl/render.hpp"
#include "support.hpp"

using namespace phl;

TEST_CASE("model spec parsing") {
  const ModelSpec s = model_spec_from_json(parse_json(R"({"kind": "verbitsky", "n": 2, "b2": 5})"));
  CHECK(s.kind == ModelKind::verbitsky);
  CHECK(s.n == 2);
  CHECK(s.b2 == 5);
  CHECK_FALSE(s.gram.has_value());

  const ModelSpec g = model_spec_from_json(
      parse_json(R"({"kind": "k3", "b2": 2, "gram": [["0", "1/2"], ["1/2", "0"]]})"));
  REQUIRE(g.gram.has_value());
  CHECK((*g.gram)(0, 1) == Rational(1, 2));
  CHECK(model_spec_to_json(g)["gram"][0][1] == "1/2");

  CHECK_THROWS_AS(model_spec_from_json(parse_json(R"({"kind": "torus"})")), ParseError);
  CHECK_THROWS_AS(model_spec_from_json(parse_json(R"({"kind": "k3", "extra": 1})")), ParseError);
  CHECK_THROWS_AS(model_spec_from_json(parse_json(R"({"kind": "k3", "n": -1})")), ParseError);
  CHECK_THROWS_AS(model_spec_from_json(parse_json(R"({"kind": "k3", "gram": [["x"]]})")), ParseError);
}

TEST_CASE("syntax errors carry line and column") {
  CHECK_THROWS_WITH_AS(parse_json("{\n  \"kind\": \"k3\",\n  oops\n}"), doctest::Contains("line 3, column"),
                       ParseError);
}

TEST_CASE("cube round trip") {
  const PerverseHodgeCube c = cube(phl::testing::load_model("verbitsky_n2_b5"));
  const Json j = cube_to_json(c);
  CHECK(j["n"] == 2);
  std::size_t total = 0;
  for (const auto& e : j["entries"]) total += e["h"].get<std::size_t>();
  CHECK(total == 27);
  CHECK(cube_from_json(parse_json(dump(j))) == c);
  CHECK(is_cube_document(j));
  CHECK_FALSE(is_cube_document(parse_json(R"({"kind": "k3"})")));
  CHECK(dump(cube_to_json(cube_from_json(j))) == dump(j));
}

TEST_CASE("cube parsing errors") {
  CHECK_THROWS_AS(cube_from_json(parse_json(R"({"n": 1, "entries": [{"i": 0, "k": 0, "d": 5, "h": 1}]})")),
                  ParseError);
  CHECK_THROWS_AS(cube_from_json(parse_json(R"({"n": 1, "entries": [{"i": 0, "k": 0, "d": 1, "h": -1}]})")),
                  ParseError);
  CHECK_THROWS_AS(cube_from_json(parse_json(R"({"n": 1, "entries": [{"i": 0, "k": 0, "d": 1}]})")), ParseError);
  CHECK_THROWS_AS(cube_from_json(parse_json(
                      R"({"n": 1, "entries": [{"i": 0, "k": 0, "d": 1, "h": 1}, {"i": 0, "k": 0, "d": 1, "h": 2}]})")),
                  ParseError);
}

TEST_CASE("ascii rendering") {
  CHECK(render_ascii(PerverseHodgeCube(1)) == "(empty)\n");
  const std::string k3 = render_ascii(cube(phl::testing::load_model("k3_b22")));
  CHECK(k3.find("d = 1\n ·  1  ·\n 1 18  1\n ·  1  ·\n") != std::string::npos);
  const PerverseHodgeCube v = cube(phl::testing::load_model("verbitsky_n2_b5"));
  for (int d = 0; d <= 4; ++d) CHECK(2 * render_radius(v, d) + 1 == std::vector<int>{1, 3, 5, 3, 1}[d]);
}

TEST_CASE("model summary") {
  const Json s = model_summary(phl::testing::load_model("k3_b22"));
  CHECK(s["total_dim"] == 24);
  CHECK(s["betti"] == Json::array({1, 0, 22, 0, 1}));
  CHECK(s["pieces"][2]["basis"][0] == "pt");
}
