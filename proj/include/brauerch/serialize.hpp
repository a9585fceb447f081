#pragma once

#include <string>

#include <json.hpp>

#include "brauerch/charmap.hpp"
#include "brauerch/groups.hpp"
#include "brauerch/tensorrep.hpp"

namespace brauerch {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// [{"nu": [...], "coeff": "p/q"}, ...]
Json to_json(const SchurExpansion& e);
SchurExpansion schur_expansion_from_json(const Json& j, int n);

/// {"lambda", "group", "N", "n", "terms"}
Json to_json(const ChImage& image);
ChImage ch_image_from_json(const Json& j);

/// {"group", "N", "shape", "value", "factors", "hook"}
Json to_json(const DimensionReport& r);
DimensionReport dimension_report_from_json(const Json& j);

/// {"m", "N", "dimension", "encoding", "entries": [[row, col, "p/q"], ...]}
Json to_json(const TensorOperator& op);
TensorOperator tensor_operator_from_json(const Json& j);

/// Two-space indented dump followed by a newline.
std::string dump(const Json& j);

}  // namespace brauerch
