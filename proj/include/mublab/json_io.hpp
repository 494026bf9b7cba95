#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "mublab/mub.hpp"
#include "mublab/pipeline.hpp"
#include "mublab/symplectic.hpp"

namespace mublab {

// File schemas. All writers emit keys in fixed (alphabetical) order and
// shortest round-trip float formatting, so identical inputs produce
// byte-identical files.
//
//   spread        {"d":, "N":, "members":[[[int]]]}
//   symbolic MCC  {"d":, "N":, "phase_order":, "classes":[[{"phase":,"a":[],"b":[]}]]}
//   numeric MCC   {"dimension":, "classes":[[matrix]]}
//   MUB set       {"dimension":, "bases":[[vector]]}
//
// Matrices are nested arrays of [re, im] pairs, row-major; vectors are arrays
// of [re, im].

nlohmann::json spread_to_json(const Spread& s);
Spread spread_from_json(const nlohmann::json& j);

nlohmann::json symbolic_mcc_to_json(const SymbolicMcc& u);
SymbolicMcc symbolic_mcc_from_json(const nlohmann::json& j);

nlohmann::json numeric_mcc_to_json(const NumericMcc& u);
NumericMcc numeric_mcc_from_json(const nlohmann::json& j);

bool is_symbolic_mcc_json(const nlohmann::json& j);

nlohmann::json mub_to_json(const MubSet& b);
MubSet mub_from_json(const nlohmann::json& j);

nlohmann::json validation_to_json(const SpreadValidation& v);
nlohmann::json validation_to_json(const MccValidation& v);
nlohmann::json validation_to_json(const MubValidation& v);

nlohmann::json fingerprint_to_json(const MccFingerprint& fp);
nlohmann::json analysis_to_json(const AnalysisReport& r);
nlohmann::json demo_to_json(const BetaNonInjectivityReport& r);

nlohmann::json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace mublab
