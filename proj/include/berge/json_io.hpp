#pragma once

#include <json.hpp>

#include "berge/constructions.hpp"
#include "berge/graph_ham.hpp"
#include "berge/hypercore.hpp"
#include "berge/pipeline.hpp"
#include "berge/reduction.hpp"
#include "berge/verify.hpp"

namespace berge {

using nlohmann::json;

json to_json(VertexSet s);
json to_json(const VertexPair& p);
json to_json(const BergeCertificate& c);
json to_json(const ClassWitness& w);
json to_json(const SwapPlan& plan);
json to_json(const MatchingMap& phi);
json to_json(const PipelineTrace& trace);
json to_json(const DegreeCertificate& cert);
json to_json(const ObstructionCert& cert);
json to_json(const VerifyReport& report);

/// Each parser throws Error(parse) on malformed input.
BergeCertificate certificate_from_json(const json& j);
ClassWitness witness_from_json(const json& j);
SwapPlan swap_plan_from_json(const json& j);

}  // namespace berge
