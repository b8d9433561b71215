// koszul-forge: workbench for quadratic algebras over prime fields and
// finitely presented pro-p groups. See README.md for the I/O schemas.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "koszulforge/cli.hpp"

namespace {

using kf::cli::json;
using kf::cli::Params;
using kf::cli::Report;
using kf::cli::Request;

struct CommonFlags {
  std::string input;
  std::vector<std::string> relators;
  std::string graph_text;
  std::string order_csv;
  bool as_json = false;
};

json load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw kf::ValidationError("cannot open input file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw kf::ValidationError(std::string("invalid JSON input: ") + e.what());
  }
  return j;
}

std::vector<std::uint32_t> parse_order_csv(const std::string& csv) {
  std::vector<std::uint32_t> order;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      order.push_back(std::uint32_t(std::stoul(tok)));
    } catch (const std::exception&) {
      throw kf::ValidationError("bad --order entry: " + tok);
    }
  }
  return order;
}

int emit(const Report& rep, bool as_json) {
  for (const std::string& w : rep.warnings) std::cerr << "warning: " << w << "\n";
  if (as_json)
    std::cout << rep.doc.dump(2) << "\n";
  else
    std::cout << rep.text();
  return rep.exit_code;
}

std::uint64_t seed_from_env() {
  if (const char* env = std::getenv("KOSZUL_FORGE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring unparsable KOSZUL_FORGE_SEED\n";
    }
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"koszul-forge: quadratic duals, Hilbert series, Groebner "
               "certificates, Koszulity verdicts and pro-p mildness"};
  app.require_subcommand(1);

  Params params;
  params.seed = seed_from_env();
  CommonFlags flags;
  std::uint32_t p = 0, d = 0;
  int imax = 4, jmax = 6;
  std::string kind, variant = "auto";
  std::string input_a, input_b;
  std::vector<std::string> lambda_kv, mu_kv;

  app.add_option("--nmax", params.nmax, "degree bound for series and completion")
      ->capture_default_str();
  app.add_option("--Dmax", params.dmax,
                 "Magnus truncation depth (default max(p, 4))");
  app.add_option("--budget", params.budget, "search budget")
      ->capture_default_str();
  app.add_option("--seed", params.seed,
                 "RNG seed (overrides KOSZUL_FORGE_SEED)");
  app.add_option("--order", flags.order_csv,
                 "generator order, smallest first, e.g. 2,1,3");
  app.add_flag("--json", flags.as_json, "emit the JSON report");

  // allow_extra_args(false) keeps CLI11 from re-tokenizing bracketed
  // values like "[X1,X2]"; each --relator takes exactly one argument.
  auto add_algebra_flags = [&](CLI::App* cmd) {
    cmd->add_option("--p", p, "prime modulus");
    cmd->add_option("--d", d, "generator count");
    cmd->add_option("--relator", flags.relators,
                    "degree-2 relator, e.g. \"[X1,X2]\" (repeatable)")
        ->allow_extra_args(false);
    cmd->add_option("--input", flags.input, "JSON payload file");
  };
  auto add_group_flags = [&](CLI::App* cmd) {
    cmd->add_option("--p", p, "prime modulus");
    cmd->add_option("--d", d, "generator count");
    cmd->add_option("--relator", flags.relators,
                    "group relator, e.g. \"[x1,x2]*x3^-2\" (repeatable)")
        ->allow_extra_args(false);
    cmd->add_option("--input", flags.input, "JSON payload file");
  };

  CLI::App* dual = app.add_subcommand("dual", "quadratic dual of an algebra");
  add_algebra_flags(dual);
  CLI::App* comb = app.add_subcommand("combine", "direct sum / free product / tensor / wedge");
  comb->add_option("--kind", kind, "dsum|free|tensor|wedge")->required();
  comb->add_option("--a", input_a, "JSON file for the first algebra")->required();
  comb->add_option("--b", input_b, "JSON file for the second algebra")->required();
  CLI::App* hilb = app.add_subcommand("hilbert", "Hilbert series coefficients");
  add_algebra_flags(hilb);
  CLI::App* gb = app.add_subcommand("gb", "bounded-degree Groebner completion");
  add_algebra_flags(gb);
  CLI::App* kz = app.add_subcommand("koszul", "Koszulity verdict");
  add_algebra_flags(kz);
  CLI::App* ext = app.add_subcommand("ext", "bigraded Ext table");
  add_algebra_flags(ext);
  ext->add_option("--imax", imax, "homological bound")->capture_default_str();
  ext->add_option("--jmax", jmax, "internal-degree bound")->capture_default_str();
  CLI::App* mild = app.add_subcommand("mild", "mildness of a pro-p presentation");
  add_group_flags(mild);
  mild->add_flag("--search-orders", params.search_orders,
                 "retry all generator orders (d <= 6)");

  CLI::App* group = app.add_subcommand("group", "pro-p presentation pipeline");
  CLI::App* analyze = group->add_subcommand("analyze", "full dual-pair report");
  add_group_flags(analyze);

  CLI::App* graph = app.add_subcommand("graph", "graph algebras and groups");
  CLI::App* raag = graph->add_subcommand("raag", "right-angled Artin algebra");
  CLI::App* sr = graph->add_subcommand("sr", "exterior Stanley-Reisner algebra");
  CLI::App* genraag =
      graph->add_subcommand("genraag", "generalised RAAG pro-p presentation");
  for (CLI::App* cmd : {raag, sr, genraag}) {
    cmd->add_option("--p", p, "prime modulus");
    cmd->add_option("--graph", flags.graph_text, "graph text, e.g. \"4; 1-2, 2-3\"");
    cmd->add_option("--input", flags.input, "JSON payload file");
  }
  genraag->add_option("--lambda", lambda_kv, "edge parameter, e.g. 1-2=3 (repeatable)");
  genraag->add_option("--mu", mu_kv, "edge parameter, e.g. 1-2=0 (repeatable)");

  CLI::App* demushkin =
      app.add_subcommand("demushkin", "one-relator Demushkin family");
  demushkin->add_option("--p", p, "prime modulus")->required();
  demushkin->add_option("--d", d, "generator count")->required();
  demushkin->add_option("--variant", variant, "auto|a|b|c")
      ->capture_default_str();

  for (CLI::App* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (CLI::App* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (!flags.order_csv.empty()) params.order = parse_order_csv(flags.order_csv);

    Request req;
    req.params = params;

    auto algebra_payload = [&](const char* key) {
      if (!flags.input.empty()) {
        json in = load_input(flags.input);
        req.payload[key] = in.contains(key) ? in[key] : in;
      } else {
        json a;
        a["p"] = p;
        a["d"] = d;
        a["relators"] = flags.relators;
        req.payload[key] = std::move(a);
      }
    };
    auto graph_payload = [&] {
      if (!flags.input.empty()) {
        json in = load_input(flags.input);
        req.payload["graph"] = in.contains("graph") ? in["graph"] : in;
        if (in.contains("p")) req.payload["p"] = in["p"];
      }
      if (!flags.graph_text.empty()) req.payload["graph"] = flags.graph_text;
      if (p) req.payload["p"] = p;
    };
    auto edge_kv = [&](const std::vector<std::string>& kvs, const char* key) {
      json m = json::object();
      for (const std::string& kv : kvs) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos)
          throw kf::ValidationError("expected i-j=value, got: " + kv);
        m[kv.substr(0, eq)] = std::int64_t(std::stoll(kv.substr(eq + 1)));
      }
      if (!m.empty()) req.payload[key] = std::move(m);
    };

    if (dual->parsed()) { req.command = "dual"; algebra_payload("algebra"); }
    else if (comb->parsed()) {
      req.command = "combine";
      req.payload["kind"] = kind;
      json a = load_input(input_a);
      json b = load_input(input_b);
      req.payload["a"] = a.contains("algebra") ? a["algebra"] : a;
      req.payload["b"] = b.contains("algebra") ? b["algebra"] : b;
    }
    else if (hilb->parsed()) { req.command = "hilbert"; algebra_payload("algebra"); }
    else if (gb->parsed()) { req.command = "gb"; algebra_payload("algebra"); }
    else if (kz->parsed()) { req.command = "koszul"; algebra_payload("algebra"); }
    else if (ext->parsed()) {
      req.command = "ext";
      algebra_payload("algebra");
      req.payload["imax"] = imax;
      req.payload["jmax"] = jmax;
    }
    else if (mild->parsed()) { req.command = "mild"; algebra_payload("presentation"); }
    else if (group->parsed() && analyze->parsed()) {
      req.command = "analyze";
      algebra_payload("presentation");
    }
    else if (graph->parsed() && raag->parsed()) { req.command = "raag"; graph_payload(); }
    else if (graph->parsed() && sr->parsed()) { req.command = "sr"; graph_payload(); }
    else if (graph->parsed() && genraag->parsed()) {
      req.command = "genraag";
      graph_payload();
      edge_kv(lambda_kv, "lambda");
      edge_kv(mu_kv, "mu");
    }
    else if (demushkin->parsed()) {
      req.command = "demushkin";
      req.payload["p"] = p;
      req.payload["d"] = d;
      req.payload["variant"] = variant;
    }
    else {
      std::cerr << "error: no subcommand selected\n";
      return kf::cli::kExitSchema;
    }

    return emit(kf::cli::execute(req), flags.as_json);
  } catch (const kf::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kf::cli::kExitSchema;
  } catch (const kf::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kf::cli::kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kf::cli::kExitInternal;
  }
}
