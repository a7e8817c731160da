#include <doctest.h>

#include <fstream>

#include "gendiv/curvefile.hpp"
#include "gendiv/error.hpp"

using namespace gendiv;

TEST_CASE("semigroup curve files") {
  Curve c = parse_curve_json(R"({"field": "Q", "chart1": {"semigroup": [3, 4, 5]}})");
  CHECK(c.genus() == 2);
  CHECK(c.data().semigroup.has_value());
}

TEST_CASE("preset cluster files") {
  Curve c = parse_curve_json(
      R"({"field": "Q", "chart1": {"clusters": [
            {"preset": "node", "points": ["1", "-1"]},
            {"preset": "cusp", "points": ["0"]}]}})");
  CHECK(c.genus() == 2);
  CHECK(c.clusters().size() == 2);
  CHECK(c.clusters()[0].preset == "node");
}

TEST_CASE("raw cluster files") {
  // The cusp written out as a condition matrix: f'(0) = 0.
  Curve c = parse_curve_json(
      R"({"field": "Q", "chart1": {"clusters": [
            {"branches": ["0"], "conductor_orders": [2],
             "conditions": [["0", "1"]]}]}})");
  CHECK(c.genus() == 1);
  Curve preset = curve_from_clusters({cusp_cluster(Rat(0))});
  CHECK(c.conductor() == preset.conductor());
  CHECK(c.data().o1_body == preset.data().o1_body);
}

TEST_CASE("file errors carry their location") {
  CHECK_THROWS_AS(parse_curve_json("not json"), ParseError);
  CHECK_THROWS_AS(parse_curve_json(R"({"chart1": {}})"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_curve_json(R"({"field": "C", "chart1": {"semigroup": [2, 3]}})"),
      doctest::Contains("field"), ParseError);
  CHECK_THROWS_WITH_AS(parse_curve_json(R"({"chart1": {"clusters": [
        {"preset": "node", "points": ["1", "0.5"]}]}})"),
                       doctest::Contains("rational"), ParseError);
  CHECK_THROWS_WITH_AS(parse_curve_json(R"({"chart1": {"clusters": [
        {"preset": "node", "points": ["i", "1"]}]}})"),
                       doctest::Contains("points[0]"), ParseError);
  // Semantic errors surface as validation errors, not parse errors.
  CHECK_THROWS_AS(parse_curve_json(R"({"chart1": {"semigroup": [2, 4]}})"), ValidationError);
}

TEST_CASE("round trips") {
  for (const std::string& text :
       {std::string(R"({"field": "Q", "chart1": {"semigroup": [3, 4, 5]}})"),
        std::string(R"({"field": "Q", "chart1": {"clusters": [
          {"preset": "tacnode", "points": ["1", "-1"]}]}})"),
        std::string(R"({"field": "Q", "chart1": {"clusters": [
          {"branches": ["0"], "conductor_orders": [3],
           "conditions": [["0", "1", "0"], ["0", "0", "1"]]}]}})")}) {
    Curve a = parse_curve_json(text);
    Curve b = parse_curve_json(curve_to_json(a));
    CHECK(a.genus() == b.genus());
    CHECK(a.conductor() == b.conductor());
    CHECK(a.data().o1_body == b.data().o1_body);
    CHECK(a.data().omega_hull == b.data().omega_hull);
    CHECK(a.data().omega_body == b.data().omega_body);
    CHECK(curve_to_json(a) == curve_to_json(b));
  }
}

TEST_CASE("bundled data files parse to the expected curves") {
  const std::string dir = GENDIV_DATA_DIR "/curves/";
  struct Row {
    const char* file;
    long genus;
  };
  for (const Row& row : {Row{"semigroup-345.json", 2}, Row{"cusp.json", 1}, Row{"node.json", 1},
                         Row{"tacnode.json", 2}, Row{"two-node-genus-2.json", 2}}) {
    Curve c = load_curve_file(dir + row.file);
    CHECK(c.genus() == row.genus);
  }
  CHECK_THROWS_AS(load_curve_file(dir + "missing.json"), ValidationError);
}
