#include "nakayama/io.hpp"

#include <fstream>

namespace nakayama {

Algebra algebra_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("kupisch"))
    throw Error(ErrorCode::parse_error, "algebra file needs \"kind\" and \"kupisch\"");
  const auto& kind = j.at("kind");
  const auto& series = j.at("kupisch");
  if (!kind.is_string()) throw Error(ErrorCode::parse_error, "\"kind\" must be a string");
  if (!series.is_array()) throw Error(ErrorCode::parse_error, "\"kupisch\" must be an array");
  std::vector<int> c;
  for (const auto& x : series) {
    if (!x.is_number_integer())
      throw Error(ErrorCode::parse_error, "\"kupisch\" entries must be integers");
    c.push_back(x.get<int>());
  }
  return validate_kupisch(parse_orientation(kind.get<std::string>()), std::move(c));
}

Algebra load_algebra(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::parse_error, "cannot open algebra file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::parse_error, path.string() + ": " + e.what());
  }
  return algebra_from_json(j);
}

nlohmann::json to_json(const Algebra& a) {
  return {{"kind", std::string(to_string(a.kind()))},
          {"kupisch", std::vector<int>(a.kupisch().begin(), a.kupisch().end())}};
}

nlohmann::json to_json(const ModuleSet& ms) {
  auto out = nlohmann::json::array();
  for (const auto& m : ms) out.push_back(to_string(m));
  return out;
}

nlohmann::json to_json(const MaybeModule& m) { return to_string(m); }

nlohmann::json to_json(const ExtendedNat& x) {
  if (x.is_infinite()) return "inf";
  return x.value();
}

nlohmann::json to_json(const SupportPair& p) {
  return {{"modules", to_json(p.modules)},
          {"killed", std::vector<Vertex>(p.killed.begin(), p.killed.end())}};
}

nlohmann::json to_json(const GorensteinProfile& p) {
  return {{"gldim", to_json(p.gldim)},
          {"I0", to_json(p.i0)},
          {"I1", to_json(p.i1)},
          {"I0_projective", p.i0_projective},
          {"I1_projective", p.i1_projective},
          {"is_1_gorenstein", p.is_1_gorenstein},
          {"is_auslander", p.is_auslander}};
}

nlohmann::json to_json(const AuslanderResult& r) {
  auto j = to_json(r.gamma);
  auto dict = nlohmann::json::object();
  for (std::size_t v = 0; v < r.dictionary.size(); ++v)
    dict[std::to_string(v + 1)] = to_string(r.dictionary[v]);
  j["dictionary"] = std::move(dict);
  j["projinj"] = std::vector<Vertex>(r.projinj.begin(), r.projinj.end());
  j["base"] = to_json(r.base);
  return j;
}

}  // namespace nakayama
