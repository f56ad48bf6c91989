#include "liecheck/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "liecheck/verify.hpp"
#include "liecheck/witness.hpp"

namespace liecheck {

namespace {

using nlohmann::ordered_json;

int default_threads() {
  if (const char* env = std::getenv("LIECHECK_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

// --torus accepts inline JSON or a file path
TorusElement load_torus(const RootSystem& rs, const std::string& spec) {
  std::string text = spec;
  if (text.find('{') == std::string::npos) {
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot read torus file: " + spec);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return torus_element_from_json(rs, text);
}

std::vector<Weight> parse_pieces(int rank, const std::vector<std::string>& ls) {
  std::vector<Weight> out;
  for (const auto& s : ls) out.push_back(parse_weight(s, rank));
  return out;
}

std::string eps_string(const RootSystem& rs, const Weight& w) {
  auto e = rs.eps_coords(w);
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += e[i].str();
  }
  return s + ")";
}

struct Ctx {
  std::ostream* out;
  std::ostream* err;
  std::string out_file;
  std::ofstream file;
  bool json = false;

  std::ostream& sink() {
    if (!out_file.empty() && !file.is_open()) {
      file.open(out_file);
      if (!file) throw std::invalid_argument("cannot open output file: " + out_file);
    }
    return file.is_open() ? static_cast<std::ostream&>(file) : *out;
  }
};

bool positive(const RootSystem& rs, const Weight& r) {
  const auto& pos = rs.positive_roots();
  return std::find(pos.begin(), pos.end(), r) != pos.end();
}

int cmd_roots(Ctx& c, const std::string& group) {
  RootSystem rs(GroupType::parse(group));
  auto& o = c.sink();
  if (!c.json) o << rs.type().str() << ": " << rs.roots().size() << " roots\n";
  for (const auto& r : rs.roots()) {
    if (c.json) {
      ordered_json j;
      j["omega"] = format_weight(r);
      auto e = rs.eps_coords(r);
      j["eps"] = ordered_json::array();
      for (const auto& x : e) j["eps"].push_back(x.str());
      j["positive"] = positive(rs, r);
      o << j.dump() << "\n";
    } else {
      o << "  " << format_weight(r) << "   eps " << eps_string(rs, r)
        << (positive(rs, r) ? "   (+)" : "   (-)") << "\n";
    }
  }
  return 0;
}

int cmd_weights(Ctx& c, const std::string& group, int p,
                const std::vector<std::string>& lambdas) {
  RootSystem rs(GroupType::parse(group));
  WeightSystem ws = weight_system(rs, parse_pieces(rs.rank(), lambdas), CharTag(p));
  auto& o = c.sink();
  if (c.json) {
    o << weight_system_json(ws) << "\n";
    return 0;
  }
  o << rs.type().str() << " p=" << p << " dim=" << ws.dim() << "\n";
  for (const auto& [w, m] : ws.table)
    o << "  " << format_weight(w) << " : " << m << "\n";
  return 0;
}

int cmd_spectrum(Ctx& c, const std::string& group, int p,
                 const std::vector<std::string>& lambdas,
                 const std::string& torus) {
  RootSystem rs(GroupType::parse(group));
  WeightSystem ws = weight_system(rs, parse_pieces(rs.rank(), lambdas), CharTag(p));
  TorusElement t = load_torus(rs, torus);
  Spectrum sp = spectrum(ws, t);
  auto& o = c.sink();
  if (c.json) {
    ordered_json j;
    j["group"] = rs.type().str();
    j["p"] = p;
    j["dim"] = ws.dim();
    j["spectrum"] = ordered_json::array();
    for (const auto& [v, m] : sp)
      j["spectrum"].push_back({{"value", t.vg.format_value(v)}, {"mult", m}});
    o << j.dump() << "\n";
  } else {
    o << rs.type().str() << " dim=" << ws.dim() << " distinct=" << sp.size() << "\n";
    for (const auto& [v, m] : sp)
      o << "  " << t.vg.format_value(v) << " : " << m << "\n";
  }
  return 0;
}

int cmd_check(Ctx& c, const std::string& group, int p,
              const std::vector<std::string>& lambdas,
              const std::string& torus) {
  RootSystem rs(GroupType::parse(group));
  TorusElement t = load_torus(rs, torus);
  ordered_json j;
  j["group"] = rs.type().str();
  j["element"] = ordered_json::parse(torus_element_json(t));
  j["central"] = is_central(rs, t);
  j["regular"] = is_regular(rs, t);
  j["strongly_regular"] = is_strongly_regular(rs, t);
  if (!j["strongly_regular"].get<bool>()) {
    j["collisions"] = ordered_json::array();
    for (const auto& [a, b] : equal_root_pairs(rs, t))
      j["collisions"].push_back(format_weight(a) + " = " + format_weight(b));
  }
  if (!lambdas.empty()) {
    WeightSystem ws = weight_system(rs, parse_pieces(rs.rank(), lambdas), CharTag(p));
    j["cyclic"] = is_cyclic(ws, t);
    j["almost_cyclic"] = is_almost_cyclic(ws, t);
    j["separates_weights"] = separates_weights(ws, t);
  }
  auto& o = c.sink();
  if (c.json) {
    o << j.dump() << "\n";
  } else {
    for (auto& [k, v] : j.items())
      if (v.is_boolean()) o << k << ": " << (v.get<bool>() ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_witness(Ctx& c, const std::string& case_id, bool all) {
  std::vector<const WitnessCase*> cases;
  if (all)
    for (const auto& w : list_cases()) cases.push_back(&w);
  else
    cases.push_back(&case_by_id(case_id));
  auto& o = c.sink();
  bool mismatch = false;
  for (const auto* w : cases) {
    RootSystem rs(w->group);
    WitnessReport rep = verify_witness(rs, *w);
    if (rep.status == "mismatch") mismatch = true;
    if (c.json) {
      o << rep.json() << "\n";
    } else {
      o << rep.id << " (" << rep.group.str() << ", p=" << rep.p
        << "): " << rep.status;
      if (!rep.skip_reason.empty()) o << " [" << rep.skip_reason << "]";
      o << "\n";
      for (const auto& pr : rep.predicates)
        o << "    " << pr.name << " expected=" << pr.expected
          << " actual=" << pr.actual << "\n";
    }
  }
  return mismatch ? 2 : 0;
}

int cmd_verify(Ctx& c, const std::string& theorem, const std::string& group,
               int p, long long modulus, int threads) {
  GroupType t = GroupType::parse(group);
  if (modulus == 0) modulus = t.rank <= 2 ? 12 : (t.rank == 3 ? 8 : 4);
  TheoremReport rep;
  if (theorem == "th1")
    rep = verify_th1(t, CharTag(p), modulus, threads);
  else if (theorem == "re1")
    rep = verify_re1(t, CharTag(p), modulus, threads);
  else if (theorem == "sa1")
    rep = verify_sa1(t, CharTag(p), modulus, threads);
  else
    throw CLI::ValidationError("--theorem must be th1, re1 or sa1");
  auto& o = c.sink();
  if (c.json) {
    // timing omitted so identical runs produce identical bytes
    o << rep.json(false) << "\n";
  } else {
    o << rep.theorem << " " << rep.group.str() << " p=" << rep.p << " "
      << rep.scope << ": " << (rep.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& l : rep.lambdas) {
      o << "  " << l.lambda << ": checked " << l.checked << " (" << l.central
        << " central), " << l.counterexamples.size() << " counterexamples";
      if (l.exception)
        o << ", exception witness " << (l.witness ? "found" : "MISSING");
      o << "\n";
    }
    for (const auto& [l, r] : rep.skipped)
      o << "  " << l << ": skipped (" << r << ")\n";
  }
  return rep.passed() && rep.witnesses_complete() ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact torus-element spectra for simple algebraic groups"};
  app.require_subcommand(1);

  Ctx ctx;
  ctx.out = &out;
  ctx.err = &err;

  std::string group, lambda_case, torus, theorem, case_id;
  std::vector<std::string> lambdas;
  int p = 0;
  long long modulus = 0;
  bool all = false;
  int threads = default_threads();
  std::string mode = "exhaustive";
  unsigned long long seed = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", ctx.json, "JSON Lines output");
    sub->add_option("--out", ctx.out_file, "write output to a file");
  };

  auto* roots = app.add_subcommand("roots", "list the root system");
  roots->add_option("group,--group", group)->required();
  add_common(roots);

  auto* weights = app.add_subcommand("weights", "weight multiplicities");
  weights->add_option("--group", group)->required();
  weights->add_option("--p", p);
  weights->add_option("--lambda", lambdas, "highest weight; repeat for a direct sum")
      ->required();
  add_common(weights);

  auto* spec = app.add_subcommand("spectrum", "eigenvalues at a torus element");
  spec->add_option("--group", group)->required();
  spec->add_option("--p", p);
  spec->add_option("--lambda", lambdas)->required();
  spec->add_option("--torus", torus, "torus element (JSON file or inline)")->required();
  add_common(spec);

  auto* check = app.add_subcommand("check", "predicates at a torus element");
  check->add_option("--group", group)->required();
  check->add_option("--p", p);
  check->add_option("--lambda", lambdas);
  check->add_option("--torus", torus)->required();
  add_common(check);

  auto* wit = app.add_subcommand("witness", "run catalogued witness elements");
  wit->add_option("--case", case_id);
  wit->add_flag("--all", all);
  add_common(wit);

  auto* ver = app.add_subcommand("verify", "scan a theorem over mu_N-points");
  ver->add_option("--theorem", theorem, "th1 | re1 | sa1")->required();
  ver->add_option("--group", group)->required();
  ver->add_option("--p", p);
  ver->add_option("--modulus", modulus);
  ver->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive"}));
  ver->add_option("--seed", seed);
  ver->add_option("--threads", threads);
  add_common(ver);

  std::vector<std::string> argv(args);
  std::vector<const char*> cargv{"liecheck"};
  for (const auto& a : argv) cargv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (roots->parsed()) return cmd_roots(ctx, group);
    if (weights->parsed()) return cmd_weights(ctx, group, p, lambdas);
    if (spec->parsed()) return cmd_spectrum(ctx, group, p, lambdas, torus);
    if (check->parsed()) return cmd_check(ctx, group, p, lambdas, torus);
    if (wit->parsed()) {
      if (all == !case_id.empty()) {  // exactly one of --all / --case
        err << "witness needs --case ID or --all\n";
        return 1;
      }
      return cmd_witness(ctx, case_id, all);
    }
    if (ver->parsed()) return cmd_verify(ctx, theorem, group, p, modulus, threads);
  } catch (const CLI::Error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << ordered_json{{"error", e.what()}, {"type", "usage"}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << ordered_json{{"error", e.what()}, {"type", "unsupported"}}.dump() << "\n";
    return 3;
  }
  return 1;
}

}  // namespace liecheck
