#pragma once

#include <json.hpp>

#include "g2rs/endo.hpp"

namespace g2rs {

using Json = nlohmann::ordered_json;

Json to_json(const LaurentPoly& p);
Json to_json(const RatFunc& c);
Json to_json(const FreeElement& e);
Json to_json(const PbwMonomial& m);
Json to_json(const AlgebraElement& e);
Json to_json(const TensorElement& t);
Json to_json(const ConfluenceReport& r);
Json to_json(const HopfAxiomReport& r);
Json to_json(const RelationReport& r);
Json to_json(const HopfCompatReport& r);
Json to_json(const ConstraintLattice& l);
Json to_json(const ReorderAuditReport& r);
Json to_json(const EndoParams& p);
Json to_json(const PermCheckResult& r);

// {"sigma": [1,2] | [2,1], "lambda": [expr, expr], "gamma": [expr, expr],
//  "exp1": [a, b], "exp2": [c, d]}; scalar expressions use the element
// grammar and must be Laurent monomials.
EndoParams endo_from_json(const Json& j);

IntMatrix int_matrix_from_json(const Json& j);

}  // namespace g2rs
