#include "nakayama_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nakayama/auslander.hpp"
#include "nakayama/homology.hpp"
#include "nakayama/io.hpp"
#include "nakayama/tau_tilting.hpp"
#include "nakayama/tilting.hpp"
#include "nakayama/verify.hpp"

namespace nakayama::cli {
namespace {

struct Input {
  std::string algebra_path;
  std::optional<int> n;
  std::string kind = "linear";
  bool lambda = false;
};

struct Options {
  Input input;
  std::string format;
  std::string output;
  std::vector<std::string> modules;
  int degree = 1;
  bool inverse = false;
  std::vector<int> kill;
  bool kill_projinj = false;
  int max_n = 5;
  bool with_oracle = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_input(CLI::App* cmd, Options& o) {
  cmd->add_option("--algebra", o.input.algebra_path, "Algebra file {\"kind\",\"kupisch\"}");
  cmd->add_option("--n", o.input.n, "Simples of the radical-square-zero base algebra")
      ->check(CLI::Range(1, 64));
  cmd->add_option("--kind", o.input.kind, "Orientation of the base algebra")
      ->check(CLI::IsMember({"linear", "cyclic"}));
  cmd->add_flag("--lambda", o.input.lambda,
                "With --n: use the base algebra itself instead of its Auslander algebra");
  cmd->add_option("-o,--output", o.output, "Write the document to this file");
}

void add_format(CLI::App* cmd, Options& o, std::vector<std::string> allowed) {
  cmd->add_option("--format", o.format, "Output format (default " + allowed.front() + ")")->check(CLI::IsMember(std::move(allowed)));
}

Algebra resolve(const Input& in) {
  if (!in.algebra_path.empty() && in.n)
    throw UsageError("--algebra and --n are mutually exclusive");
  if (!in.algebra_path.empty()) {
    if (in.lambda) throw UsageError("--lambda only applies to --n");
    return load_algebra(in.algebra_path);
  }
  if (!in.n) throw UsageError("an algebra is required: --algebra FILE or --n N --kind KIND");
  const Algebra base = make_rsz_nakayama(*in.n, parse_orientation(in.kind));
  return in.lambda ? base : auslander_algebra(base).gamma;
}

std::vector<IndecModule> parse_modules(const Algebra& a, const std::vector<std::string>& texts,
                                       std::size_t expected) {
  if (texts.size() != expected)
    throw UsageError("expected " + std::to_string(expected) + " module argument(s)");
  std::vector<IndecModule> out;
  for (const auto& t : texts) out.push_back(parse_module(a, t));
  return out;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string algebra_info(const Algebra& a, const std::string& format) {
  if (format == "text") {
    std::ostringstream os;
    os << to_string(a) << "\n"
       << "vertices " << a.size() << ", dimension " << a.dimension() << ", Loewy length "
       << a.loewy_length() << "\n"
       << "radical square zero " << (a.radical_square_zero() ? "yes" : "no")
       << ", self-injective " << (a.self_injective() ? "yes" : "no") << "\n";
    return os.str();
  }
  auto j = to_json(a);
  j["size"] = a.size();
  j["dimension"] = a.dimension();
  j["loewy_length"] = a.loewy_length();
  j["radical_square_zero"] = a.radical_square_zero();
  j["self_injective"] = a.self_injective();
  return dump(j);
}

std::string indec_list(const Algebra& a, const std::string& format) {
  const auto mods = indecomposables(a);
  if (format == "text") {
    std::ostringstream os;
    for (const auto& m : mods) {
      os << to_string(m);
      if (a.is_projective(m)) os << " projective";
      if (is_injective(a, m)) os << " injective";
      os << " pd=" << to_string(proj_dim(a, m)) << " id=" << to_string(inj_dim(a, m)) << "\n";
    }
    return os.str();
  }
  auto rows = nlohmann::json::array();
  for (const auto& m : mods)
    rows.push_back({{"module", to_string(m)},
                    {"projective", a.is_projective(m)},
                    {"injective", is_injective(a, m)},
                    {"pd", to_json(proj_dim(a, m))},
                    {"id", to_json(inj_dim(a, m))}});
  return dump({{"count", mods.size()}, {"modules", rows}});
}

std::string tilt_enumerate(const Algebra& a, const std::string& format) {
  const auto tilts = enumerate_tilting(a);
  if (format == "text") {
    std::ostringstream os;
    for (const auto& t : tilts) os << to_string(t.modules) << "\n";
    return os.str();
  }
  auto list = nlohmann::json::array();
  for (const auto& t : tilts) list.push_back(to_json(t.modules));
  return dump({{"count", tilts.size()}, {"tilting", list}});
}

std::string tilt_graph(const Algebra& a, const std::string& format) {
  const auto g = exchange_graph(a);
  if (format == "dot") return to_dot(g);
  auto nodes = nlohmann::json::array();
  for (const auto& t : g.nodes) nodes.push_back(to_json(t.modules));
  return dump({{"nodes", nodes},
               {"edges", g.edges},
               {"hasse", g.hasse},
               {"connected", g.connected()},
               {"hasse_matches_exchange", g.hasse_matches_exchange()}});
}

std::string sttilt_enumerate(const Algebra& a, const Options& o) {
  VertexSet kill(o.kill.begin(), o.kill.end());
  for (Vertex v : kill)
    if (!a.is_vertex(v)) throw UsageError("--kill: no vertex " + std::to_string(v));
  if (o.kill_projinj) {
    const auto pi = projective_injective_vertices(a);
    kill.insert(pi.begin(), pi.end());
  }
  const auto pairs = enumerate_sttilt(quotient_algebra(a, kill));
  if (o.format == "text") {
    std::ostringstream os;
    for (const auto& p : pairs) {
      os << to_string(p.modules) << " | killed {";
      bool first = true;
      for (Vertex v : p.killed) os << (std::exchange(first, false) ? "" : ",") << v;
      os << "}\n";
    }
    return os.str();
  }
  auto list = nlohmann::json::array();
  for (const auto& p : pairs) list.push_back(to_json(p));
  return dump({{"count", pairs.size()}, {"pairs", list}});
}

std::string auslander_build(const Options& o) {
  const auto& in = o.input;
  Algebra base = [&] {
    if (!in.algebra_path.empty() && in.n) throw UsageError("--algebra and --n are mutually exclusive");
    if (!in.algebra_path.empty()) return load_algebra(in.algebra_path);
    if (!in.n) throw UsageError("an algebra is required: --algebra FILE or --n N --kind KIND");
    return make_rsz_nakayama(*in.n, parse_orientation(in.kind));
  }();
  const auto res = auslander_algebra(base);
  if (o.format == "text") {
    std::ostringstream os;
    os << "base  " << to_string(res.base) << "\n"
       << "gamma " << to_string(res.gamma) << "\n";
    for (Vertex v = 1; v <= res.gamma.size(); ++v)
      os << v << " -> " << to_string(res.dictionary[static_cast<std::size_t>(v - 1)])
         << (res.projinj.count(v) ? " (projective-injective)" : "") << "\n";
    return os.str();
  }
  return dump(to_json(res));
}

void emit(const Options& o, const std::string& doc, std::ostream& out) {
  if (o.output.empty()) {
    out << doc;
    return;
  }
  std::ofstream file(o.output);
  if (!file) throw UsageError("cannot write " + o.output);
  file << doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tilting and support tau-tilting enumeration over Nakayama algebras", "nakayama"};
  app.require_subcommand(1);
  Options o;

  auto* algebra = app.add_subcommand("algebra", "Algebra queries")->require_subcommand(1);
  auto* algebra_info_cmd = algebra->add_subcommand("info", "Kupisch series and basic invariants");
  add_input(algebra_info_cmd, o);
  add_format(algebra_info_cmd, o, {"json", "text"});

  auto* indec = app.add_subcommand("indec", "Indecomposable modules")->require_subcommand(1);
  auto* indec_list_cmd = indec->add_subcommand("list", "List all indecomposables");
  add_input(indec_list_cmd, o);
  add_format(indec_list_cmd, o, {"json", "text"});

  auto* hom = app.add_subcommand("hom", "dim Hom(X, Y)");
  add_input(hom, o);
  hom->add_option("modules", o.modules, "X Y")->required()->expected(2);

  auto* ext = app.add_subcommand("ext", "dim Ext^d(X, Y)");
  add_input(ext, o);
  ext->add_option("--degree", o.degree, "Degree d")->check(CLI::Range(1, 64));
  ext->add_option("modules", o.modules, "X Y")->required()->expected(2);

  auto* tau_cmd = app.add_subcommand("tau", "Auslander-Reiten translate of X");
  add_input(tau_cmd, o);
  tau_cmd->add_flag("--inverse", o.inverse, "Apply the inverse translate");
  tau_cmd->add_option("modules", o.modules, "X")->required()->expected(1);

  auto* pd = app.add_subcommand("pd", "Projective and injective dimension of X");
  add_input(pd, o);
  pd->add_option("modules", o.modules, "X")->required()->expected(1);

  auto* profile = app.add_subcommand("profile", "Global dimension and Gorenstein data");
  add_input(profile, o);

  auto* tilt = app.add_subcommand("tilt", "Tilting modules")->require_subcommand(1);
  auto* tilt_enum = tilt->add_subcommand("enumerate", "All tilting modules");
  add_input(tilt_enum, o);
  add_format(tilt_enum, o, {"json", "text"});
  auto* tilt_graph_cmd = tilt->add_subcommand("graph", "Exchange graph and Gen-order Hasse diagram");
  add_input(tilt_graph_cmd, o);
  add_format(tilt_graph_cmd, o, {"dot", "json"});

  auto* sttilt = app.add_subcommand("sttilt", "Support tau-tilting modules")->require_subcommand(1);
  auto* sttilt_enum = sttilt->add_subcommand("enumerate", "All support tau-tilting pairs");
  add_input(sttilt_enum, o);
  add_format(sttilt_enum, o, {"json", "text"});
  sttilt_enum->add_option("--kill", o.kill, "Vertices killed before enumerating");
  sttilt_enum->add_flag("--kill-projinj", o.kill_projinj,
                        "Also kill every vertex whose projective is injective");

  auto* auslander = app.add_subcommand("auslander", "Auslander algebras")->require_subcommand(1);
  auto* auslander_build_cmd =
      auslander->add_subcommand("build", "Auslander algebra of a radical-square-zero algebra");
  add_input(auslander_build_cmd, o);
  add_format(auslander_build_cmd, o, {"json", "text"});

  auto* verify = app.add_subcommand("verify", "Structural verification")->require_subcommand(1);
  auto* verify_paper_cmd = verify->add_subcommand("paper", "Run every structural check");
  verify_paper_cmd->add_option("--max-n", o.max_n, "Largest number of simples")
      ->check(CLI::Range(1, kMaxVerifyN));
  verify_paper_cmd->add_flag("--with-oracle", o.with_oracle, "Include the oracle sweep");
  verify_paper_cmd->add_option("-o,--output", o.output, "Write the report to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return usage_error;
  }

  if (o.format.empty()) o.format = tilt_graph_cmd->parsed() ? "dot" : "json";

  try {
    if (verify_paper_cmd->parsed()) {
      const auto report = verify_paper({o.max_n, o.with_oracle});
      emit(o, dump(to_json(report)), out);
      const bool all = std::all_of(report.begin(), report.end(), [](const Assertion& a) { return a.pass; });
      if (!all)
        for (const auto& a : report)
          if (!a.pass) err << "FAIL " << a.name << ": " << a.detail << "\n";
      return all ? ok : assertion_failed;
    }
    if (auslander_build_cmd->parsed()) {
      emit(o, auslander_build(o), out);
      return ok;
    }

    const Algebra a = resolve(o.input);
    std::string doc;
    if (algebra_info_cmd->parsed()) {
      doc = algebra_info(a, o.format);
    } else if (indec_list_cmd->parsed()) {
      doc = indec_list(a, o.format);
    } else if (hom->parsed()) {
      const auto m = parse_modules(a, o.modules, 2);
      doc = dump({{"dim", hom_dim(a, m[0], m[1])}});
    } else if (ext->parsed()) {
      const auto m = parse_modules(a, o.modules, 2);
      doc = dump({{"degree", o.degree}, {"dim", ext_dim(a, o.degree, m[0], m[1])}});
    } else if (tau_cmd->parsed()) {
      const auto m = parse_modules(a, o.modules, 1);
      doc = o.inverse ? dump({{"tau_inv", to_json(tau_inv(a, m[0]))}})
                      : dump({{"tau", to_json(tau(a, m[0]))}});
    } else if (pd->parsed()) {
      const auto m = parse_modules(a, o.modules, 1);
      doc = dump({{"pd", to_json(proj_dim(a, m[0]))}, {"id", to_json(inj_dim(a, m[0]))}});
    } else if (profile->parsed()) {
      doc = dump(to_json(gorenstein_profile(a)));
    } else if (tilt_enum->parsed()) {
      doc = tilt_enumerate(a, o.format);
    } else if (tilt_graph_cmd->parsed()) {
      doc = tilt_graph(a, o.format);
    } else if (sttilt_enum->parsed()) {
      doc = sttilt_enumerate(a, o);
    }
    emit(o, doc, out);
    return ok;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return usage_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const bool failed_check =
        e.code() == ErrorCode::verification_failed || e.code() == ErrorCode::internal_inconsistency;
    return failed_check ? assertion_failed : usage_error;
  }
}

}  // namespace nakayama::cli
