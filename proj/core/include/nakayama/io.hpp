#pragma once

#include <filesystem>

#include <nlohmann/json.hpp>

#include "nakayama/algebra.hpp"
#include "nakayama/auslander.hpp"
#include "nakayama/homology.hpp"
#include "nakayama/tau_tilting.hpp"

namespace nakayama {

/// {"kind":"linear"|"cyclic","kupisch":[...]}; other keys are ignored.
Algebra algebra_from_json(const nlohmann::json& j);
Algebra load_algebra(const std::filesystem::path& path);

nlohmann::json to_json(const Algebra& a);
nlohmann::json to_json(const ModuleSet& ms);
nlohmann::json to_json(const MaybeModule& m);
nlohmann::json to_json(const ExtendedNat& x);
nlohmann::json to_json(const SupportPair& p);
nlohmann::json to_json(const GorensteinProfile& p);
/// Algebra file of Γ plus "dictionary" and "projinj".
nlohmann::json to_json(const AuslanderResult& r);

}  // namespace nakayama
