#pragma once

#include "memgrid/topology.hpp"

#include <json.hpp>

namespace memgrid {

void to_json(nlohmann::json& j, const NodeId& id);
void from_json(const nlohmann::json& j, NodeId& id);
void to_json(nlohmann::json& j, const GridNetwork& net);
void from_json(const nlohmann::json& j, GridNetwork& net);

}  // namespace memgrid
