#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "weave/clusterkit.hpp"
#include "weave/foldkit.hpp"
#include "weave/rootdata.hpp"

namespace weave {

// JSON encodings of the algebraic side. Laurent polynomials are lists of
// {"coef": c, "exp": [e1, ...]}; rationals are strings "p/q".
nlohmann::json to_json(const DynkinType& t);
nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const ExchangeMatrix& b);
nlohmann::json to_json(const Quiver& q);
nlohmann::json to_json(const Seed& s);
nlohmann::json to_json(const YSeedNumeric& y);
nlohmann::json to_json(const VertexAction& a);
nlohmann::json to_json(const FoldedMatrix& f);
nlohmann::json to_json(const ExchangeGraph& g);

DynkinType dynkin_from_json(const nlohmann::json& j);
LaurentPoly laurent_from_json(const nlohmann::json& j, int nvars);
ExchangeMatrix matrix_from_json(const nlohmann::json& j);
Quiver quiver_from_json(const nlohmann::json& j);
Seed seed_from_json(const nlohmann::json& j);
YSeedNumeric yseed_from_json(const nlohmann::json& j);
VertexAction action_from_json(const nlohmann::json& j);

// Vertices labeled by index, edges by mutation direction (1-based).
std::string to_dot(const ExchangeGraph& g);
std::string to_dot(const Quiver& q);

}  // namespace weave
