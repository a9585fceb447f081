#include <doctest.h>

#include "brauerch/charmap.hpp"
#include "brauerch/groups.hpp"
#include "brauerch/serialize.hpp"

using namespace brauerch;

TEST_CASE("image JSON schema") {
  const ChImage img = ch_theorem(Partition({2, 2}), GroupKind::orthogonal(6));
  const Json j = to_json(img);
  CHECK(j["lambda"] == Json::array({2, 2}));
  CHECK(j["group"] == "orthogonal");
  CHECK(j["N"] == 6);
  CHECK(j["n"] == 3);
  CHECK(j["terms"][0]["nu"] == Json::array({2}));
  CHECK(j["terms"][0]["coeff"] == "1/1680");
  CHECK(j["terms"][1]["coeff"] == "1/360");
}

TEST_CASE("JSON round trips") {
  const ChImage img = ch_theorem(Partition({3, 1}), GroupKind::symplectic(8));
  CHECK(ch_image_from_json(Json::parse(dump(to_json(img)))) == img);
  const DimensionReport r = dim_orth(Partition({2, 1}), 7);
  CHECK(dimension_report_from_json(Json::parse(dump(to_json(r)))) == r);
  const auto t = standard_tableaux(Partition({2, 1}))[1];
  const TensorOperator e = primitive_idempotent(t, GroupKind::orthogonal(4));
  const Json je = to_json(e);
  CHECK(je["dimension"] == 64);
  CHECK(tensor_operator_from_json(Json::parse(dump(je))) == e);
  CHECK(schur_expansion_from_json(to_json(img.expansion), 4) == img.expansion);
}

TEST_CASE("serialization is deterministic") {
  const auto a = dump(to_json(ch_theorem(Partition({2, 2}), GroupKind::orthogonal(7))));
  const auto b = dump(to_json(ch_theorem(Partition({2, 2}), GroupKind::orthogonal(7))));
  CHECK(a == b);
}
