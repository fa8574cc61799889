#pragma once

#include <json.hpp>

#include "skewbi/bannaiito.hpp"
#include "skewbi/oddgraph.hpp"
#include "skewbi/sl2modules.hpp"
#include "skewbi/v1functor.hpp"

// JSON report shapes. Rationals are always strings "p/q" (or "p"), never
// JSON numbers. Keys are emitted in sorted order, so identical inputs give
// byte-identical reports.
namespace skewbi {

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(
    const std::vector<std::pair<Rational, std::size_t>>& spectrum);
nlohmann::json to_json(const IrrLabel& label);
nlohmann::json to_json(const RelationReport& report);
nlohmann::json to_json(const BITriple& t);
nlohmann::json to_json(const BIModuleParams& p);
nlohmann::json to_json(const Identification& id);
nlohmann::json to_json(const LeonardVerdict& v);
nlohmann::json to_json(const MatchReport& m);
nlohmann::json to_json(const SummandReport& s);
nlohmann::json to_json(const DecompositionReport& r);

}  // namespace skewbi
