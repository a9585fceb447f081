#include "brauerch/serialize.hpp"

#include "brauerch/error.hpp"

namespace brauerch {

namespace {

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw DomainError("expected a rational as a string \"p/q\"");
  return Rational::parse(j.get<std::string>());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

GroupKind group_from_json(const Json& j) {
  return GroupKind(GroupKind::parse_family(field(j, "group").get<std::string>()), field(j, "N").get<int>());
}

}  // namespace

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("expected a partition as an array of parts");
  return Partition(j.get<std::vector<int>>());
}

Json to_json(const SchurExpansion& e) {
  Json terms = Json::array();
  for (const auto& [nu, c] : e.terms()) terms.push_back({{"nu", to_json(nu)}, {"coeff", c.to_string()}});
  return terms;
}

SchurExpansion schur_expansion_from_json(const Json& j, int n) {
  if (!j.is_array()) throw DomainError("expected an array of Schur terms");
  SchurExpansion e(n);
  for (const Json& t : j) e.add(partition_from_json(field(t, "nu")), rational_from_json(field(t, "coeff")));
  return e;
}

Json to_json(const ChImage& image) {
  return {{"lambda", to_json(image.lambda)},
          {"group", image.kind.family_name()},
          {"N", image.kind.N()},
          {"n", image.n},
          {"terms", to_json(image.expansion)}};
}

ChImage ch_image_from_json(const Json& j) {
  const GroupKind kind = group_from_json(j);
  const int n = field(j, "n").get<int>();
  return {partition_from_json(field(j, "lambda")), kind, n, schur_expansion_from_json(field(j, "terms"), n)};
}

Json to_json(const DimensionReport& r) {
  Json factors = Json::array();
  for (const auto& f : r.factors) factors.push_back(f.to_string());
  return {{"group", r.group.family_name()},
          {"N", r.group.N()},
          {"shape", to_json(r.shape)},
          {"value", r.value.to_string()},
          {"factors", factors},
          {"hook", r.hook.to_string()}};
}

DimensionReport dimension_report_from_json(const Json& j) {
  std::vector<Rational> factors;
  for (const Json& f : field(j, "factors")) factors.push_back(rational_from_json(f));
  return {group_from_json(j), partition_from_json(field(j, "shape")), rational_from_json(field(j, "value")),
          std::move(factors), rational_from_json(field(j, "hook"))};
}

Json to_json(const TensorOperator& op) {
  Json entries = Json::array();
  op.matrix.for_each([&](std::size_t r, std::size_t c, const Rational& v) {
    entries.push_back(Json::array({r, c, v.to_string()}));
  });
  return {{"m", op.m},
          {"N", op.N},
          {"dimension", op.dimension()},
          {"encoding", "row-major base N, leftmost factor most significant, 0-based digits"},
          {"entries", entries}};
}

TensorOperator tensor_operator_from_json(const Json& j) {
  const int m = field(j, "m").get<int>();
  const int N = field(j, "N").get<int>();
  TensorOperator op{m, N, RationalMatrix(tensor_dimension(N, m, true))};
  for (const Json& e : field(j, "entries")) {
    if (!e.is_array() || e.size() != 3) throw DomainError("operator entries are [row, col, \"p/q\"] triples");
    op.matrix.add_to(e[0].get<std::size_t>(), e[1].get<std::size_t>(), rational_from_json(e[2]));
  }
  return op;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace brauerch
