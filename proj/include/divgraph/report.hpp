#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "divgraph/connectivity.hpp"
#include "divgraph/graph.hpp"
#include "divgraph/oracle.hpp"
#include "divgraph/topology.hpp"
#include "divgraph/verdict.hpp"

namespace divgraph {

using Json = nlohmann::json;

Json labels_json(const std::vector<Element>& elements);
Json verdict_json(const Verdict& verdict);
Json partition_json(const Partition& partition);

Json graph_json(const DivisibilityModel& model, const DivGraph& graph);
/// Atoms are drawn as double circles, boundary vertices dashed.
std::string graph_dot(const DivisibilityModel& model, const DivGraph& graph);

Json classify_json(const DivisibilityModel& model, const DivGraph& graph,
                   const FactorizationReport& report);
Json space_json(const AlexandrovSpace& space);
Json oracle_json(const OracleReport& report);
Json prime_witness_json(const PrimeWitnessReport& report);

}  // namespace divgraph
