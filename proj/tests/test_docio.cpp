#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "exhall/docparse.hpp"
#include "exhall/format.hpp"
#include "exhall/verify.hpp"

using namespace exhall;

namespace {

const Catalog& a3() {
  static const Catalog cat = build_catalog(parse_quiver(kQuiverA3));
  return cat;
}

}  // namespace

TEST_CASE("document parser") {
  const DocValue list = parse_document("[1, [2, 3], x]");
  REQUIRE(list.is_list());
  REQUIRE(list.list.size() == 3);
  CHECK(list.list[0].atom == "1");
  CHECK(list.list[1].is_list());
  CHECK(list.list[2].atom == "x");

  // comments and quoted atoms
  const DocValue quoted = parse_document("[\"two words\"]  # note");
  CHECK(quoted.list[0].atom == "two words");

  const DocValue map = parse_document("a: 1\nb: [2, 3]\nc: {d: 4}");
  REQUIRE(map.is_map());
  REQUIRE(map.map.size() == 3);
  CHECK(map.find("a")->atom == "1");
  CHECK(map.find("c")->is_map());
  CHECK(map.find("missing") == nullptr);

  CHECK_THROWS_AS(parse_document("[1, 2"), InputError);
  CHECK_THROWS_AS(parse_document("{a: }"), InputError);
  CHECK_THROWS_AS(parse_document("[1] trailing"), InputError);
}

TEST_CASE("indecomposable labels resolve by dimension string or alias") {
  const Catalog& cat = a3();
  CHECK(indec_id(cat, "0.1.0") == 0);
  CHECK(indec_id(cat, "S2") == 0);
  CHECK(indec_id(cat, "P1") == 1);
  CHECK(indec_id(cat, "I2") == 3);
  CHECK(indec_id(cat, "S1") == 5);
  CHECK_THROWS_AS(indec_id(cat, "S9"), InputError);
  CHECK_THROWS_AS(indec_id(cat, "2.0.0"), InputError);
}

TEST_CASE("catalog numbers from the listings resolve as labels") {
  const Catalog& cat = a3();
  // "Mk" is the 1-based row number printed by the listing commands.
  CHECK(indec_id(cat, "M1") == 0);
  CHECK(indec_id(cat, "M6") == 5);
  CHECK(parse_class(cat, "M6+M1") == parse_class(cat, "S1+S2"));
  CHECK_THROWS_AS(indec_id(cat, "M0"), InputError);
  CHECK_THROWS_AS(indec_id(cat, "M7"), InputError);
  CHECK_THROWS_AS(indec_id(cat, "M"), InputError);
  CHECK_THROWS_AS(indec_id(cat, "M1x"), InputError);
}

TEST_CASE("object class parsing") {
  const Catalog& cat = a3();
  CHECK(parse_class(cat, "0") == zero_class(6));
  CHECK(parse_class(cat, "S2") == indec_class(6, 0));
  CHECK(parse_class(cat, "P1+P3") == oplus(indec_class(6, 1), indec_class(6, 2)));
  CHECK(parse_class(cat, "S1^2+I2") == oplus(indec_class(6, 5, 2), indec_class(6, 3)));
  CHECK(parse_class(cat, "S1+S1") == indec_class(6, 5, 2));

  CHECK_THROWS_AS(parse_class(cat, ""), InputError);
  CHECK_THROWS_AS(parse_class(cat, "S1+"), InputError);
  CHECK_THROWS_AS(parse_class(cat, "S1^0"), InputError);
  CHECK_THROWS_AS(parse_class(cat, "S1^x"), InputError);
  CHECK_THROWS_AS(parse_class(cat, "Q7"), InputError);
}

TEST_CASE("class labels round-trip") {
  const Catalog& cat = a3();
  CHECK(class_label(cat, zero_class(6)) == "0");
  CHECK(class_label(cat, parse_class(cat, "S2+I2")) == "0.1.0+1.1.1");
  CHECK(class_label(cat, parse_class(cat, "S1^2")) == "1.0.0^2");
  for (const char* text : {"0", "S2", "P1+P3", "S1^2+I2"}) {
    const ObjClass c = parse_class(cat, text);
    CHECK(parse_class(cat, class_label(cat, c)) == c);
  }
}

TEST_CASE("structure selector parsing") {
  const Catalog& cat = a3();
  CHECK(parse_structure(cat.ar, "max").mask == 7u);
  CHECK(parse_structure(cat.ar, "add").mask == 0u);
  CHECK(parse_structure(cat.ar, "1,2").mask == 3u);
  CHECK(parse_structure(cat.ar, "2").mask == 2u);
  CHECK(parse_structure(cat.ar, "3,1").mask == 5u);

  CHECK_THROWS_AS(parse_structure(cat.ar, "4"), InputError);
  CHECK_THROWS_AS(parse_structure(cat.ar, "0"), InputError);
  CHECK_THROWS_AS(parse_structure(cat.ar, ""), InputError);
  CHECK_THROWS_AS(parse_structure(cat.ar, "1,,2"), InputError);
  CHECK_THROWS_AS(parse_structure(cat.ar, "full"), InputError);
}

TEST_CASE("structure names round-trip through the selector grammar") {
  const Catalog& cat = a3();
  for (const ExactStructure& e : enumerate_structures(cat.ar))
    CHECK(parse_structure(cat.ar, structure_name(e)) == e);
  CHECK(structure_name(parse_structure(cat.ar, "1,2")) == "1,2");
  CHECK(structure_name(structure_max(cat.ar)) == "max");
  CHECK(structure_name(structure_add(cat.ar)) == "add");
}

TEST_CASE("valuation documents") {
  const Catalog& cat = a3();
  const Valuation w = valuation_from_text(cat, "S3: 1");
  CHECK(w.w == std::vector<int>{0, 0, 0, 0, 1, 0});

  const Valuation mixed = valuation_from_text(cat, "1.0.0: 2\nI2: 1");
  CHECK(mixed.w == std::vector<int>{0, 0, 0, 1, 0, 2});

  CHECK_THROWS_AS(valuation_from_text(cat, "[1, 2]"), InputError);
  CHECK_THROWS_AS(valuation_from_text(cat, "S3: -1"), InputError);
  CHECK_THROWS_AS(valuation_from_text(cat, "S3: x"), InputError);
  CHECK_THROWS_AS(valuation_from_text(cat, "Q9: 1"), InputError);
}

TEST_CASE("product records") {
  const Catalog& cat = a3();
  const ExactStructure e12 = parse_structure(cat.ar, "1,2");
  const ObjClass a = parse_class(cat, "I2"), c = parse_class(cat, "S2");
  const QElt prod = multiply(cat, e12, a, c, 2);
  const OrderedJson rec = product_json(cat, e12, a, c, 2, prod);
  CHECK(rec.dump() ==
        "{\"a\":\"1.1.1\",\"c\":\"0.1.0\",\"structure\":\"1,2\",\"q\":2,"
        "\"terms\":[{\"b\":\"1.1.0+0.1.1\",\"coeff\":\"1\"},"
        "{\"b\":\"0.1.0+1.1.1\",\"coeff\":\"1\"}]}");

  const ObjClass zero = zero_class(cat.n);
  const OrderedJson unit = product_json(cat, e12, zero, zero, 3, multiply(cat, e12, zero, zero, 3));
  CHECK(unit["terms"].size() == 1);
  CHECK(unit["terms"][0]["b"] == "0");
  CHECK(unit["terms"][0]["coeff"] == "1");
}

TEST_CASE("k-class records") {
  CHECK(kclass_json({0, 1, 0, -1, 1, 0}).dump() == "[0,1,0,-1,1,0]");
}
