#include "koszulforge/cli.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kf::cli {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw ValidationError("schema violation: " + what);
}

std::uint32_t get_u32(const json& j, const char* key, std::uint32_t lo,
                      std::uint32_t hi) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    schema_error(std::string("missing or non-integer field '") + key + "'");
  const std::uint64_t v = j[key].get<std::uint64_t>();
  if (v < lo || v > hi)
    schema_error(std::string("field '") + key + "' out of range");
  return std::uint32_t(v);
}

} // namespace

json algebra_to_json(const QuadraticAlgebra& a) {
  json j;
  j["p"] = a.field().p();
  j["d"] = a.dim_v();
  json rels = json::array();
  for (const NcPoly& f : a.relators()) rels.push_back(to_string(f));
  j["relators"] = std::move(rels);
  return j;
}

QuadraticAlgebra algebra_from_json(const json& j) {
  if (!j.is_object()) schema_error("algebra payload must be an object");
  const std::uint32_t p = get_u32(j, "p", 2, 1u << 20);
  const std::uint32_t d = get_u32(j, "d", 0, 64);
  Fp field(p);
  std::vector<NcPoly> relators;
  if (j.contains("relators")) {
    if (!j["relators"].is_array()) schema_error("'relators' must be an array");
    for (const json& r : j["relators"]) {
      if (!r.is_string()) schema_error("relators must be strings");
      relators.push_back(parse_poly(r.get<std::string>(), field, d));
    }
  }
  return QuadraticAlgebra::from_relators(field, d, relators);
}

json presentation_to_json(const GroupPresentation& g) {
  json j;
  j["p"] = g.field.p();
  j["d"] = g.ngens;
  json rels = json::array();
  for (const GroupWord& w : g.relators) rels.push_back(to_string(w));
  j["relators"] = std::move(rels);
  return j;
}

GroupPresentation presentation_from_json(const json& j) {
  if (!j.is_object()) schema_error("presentation payload must be an object");
  const std::uint32_t p = get_u32(j, "p", 2, 1u << 20);
  const std::uint32_t d = get_u32(j, "d", 0, 64);
  std::vector<GroupWord> relators;
  if (j.contains("relators")) {
    if (!j["relators"].is_array()) schema_error("'relators' must be an array");
    for (const json& r : j["relators"]) {
      if (!r.is_string()) schema_error("relators must be strings");
      relators.push_back(parse_group_word(r.get<std::string>(), d));
    }
  }
  return GroupPresentation(Fp(p), d, std::move(relators));
}

json graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.vertex_count();
  json adj = json::array();
  for (std::uint32_t v = 1; v <= g.vertex_count(); ++v) {
    json nbrs = json::array();
    for (std::uint32_t u = 1; u <= g.vertex_count(); ++u)
      if (g.adjacent(v, u)) nbrs.push_back(u);
    adj.push_back(std::move(nbrs));
  }
  j["adj"] = std::move(adj);
  return j;
}

Graph graph_from_json(const json& j) {
  if (!j.is_object()) schema_error("graph payload must be an object");
  const std::uint32_t n = get_u32(j, "n", 0, 1024);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  if (j.contains("adj")) {
    if (!j["adj"].is_array() || j["adj"].size() != n)
      schema_error("'adj' must list neighbors for each of the n vertices");
    for (std::uint32_t v = 1; v <= n; ++v)
      for (const json& u : j["adj"][v - 1]) {
        if (!u.is_number_unsigned()) schema_error("adjacency entries are vertex ids");
        edges.push_back({v, u.get<std::uint32_t>()});
      }
  } else if (j.contains("edges")) {
    if (!j["edges"].is_array()) schema_error("'edges' must be an array");
    for (const json& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2) schema_error("edges are [i, j] pairs");
      edges.push_back({e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>()});
    }
  }
  return Graph(n, edges);
}

namespace {

json params_to_json(const Params& p) {
  json j;
  j["nmax"] = p.nmax;
  if (p.dmax) j["Dmax"] = *p.dmax;
  j["budget"] = p.budget;
  j["seed"] = p.seed;
  if (p.order) j["order"] = *p.order;
  if (p.search_orders) j["search_orders"] = true;
  return j;
}

Params params_from_json(const json& j) {
  Params p;
  if (!j.is_object()) return p;
  if (j.contains("nmax")) p.nmax = j["nmax"].get<int>();
  if (j.contains("Dmax")) p.dmax = j["Dmax"].get<int>();
  if (j.contains("budget")) p.budget = j["budget"].get<int>();
  if (j.contains("seed")) p.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("order"))
    p.order = j["order"].get<std::vector<std::uint32_t>>();
  if (j.contains("search_orders")) p.search_orders = j["search_orders"].get<bool>();
  return p;
}

MonomialOrder order_for(const Params& p, std::uint32_t d) {
  if (!p.order) return MonomialOrder(d);
  if (p.order->size() != d)
    schema_error("order permutation must list all d generators");
  return MonomialOrder::from_permutation(*p.order);
}

int dmax_for(const Params& p, Fp field) {
  return p.dmax ? *p.dmax : default_dmax(field);
}

json verdict_to_json(const KoszulVerdict& v) {
  json j;
  j["verdict"] = to_string(v.status);
  j["up_to"] = v.up_to;
  j["certificate"] = to_string(v.certificate);
  json r;
  r["kind"] = to_string(v.refutation);
  if (v.refutation == RefutationKind::SeriesIdentityFailure)
    r["degree"] = v.refutation_degree;
  if (v.refutation == RefutationKind::OffDiagonalExt) {
    r["i"] = v.ext_i;
    r["j"] = v.ext_j;
  }
  j["refutation"] = std::move(r);
  j["notes"] = v.notes;
  return j;
}

json sf_to_json(const StronglyFreeResult& r) {
  json j;
  j["verdict"] = to_string(r.status);
  j["degree"] = r.degree;
  switch (r.route) {
    case StronglyFreeResult::Route::CombinatoriallyFree:
      j["certificate"] = "combinatorially_free";
      break;
    case StronglyFreeResult::Route::RationalSeries:
      j["certificate"] = "rational_series";
      break;
    case StronglyFreeResult::Route::None:
      j["certificate"] = "none";
      break;
  }
  j["notes"] = r.notes;
  return j;
}

json ext_to_json(const ExtTable& t) {
  json j;
  j["imax"] = t.imax;
  j["jmax"] = t.jmax;
  j["dims"] = t.dims;
  if (auto off = t.first_off_diagonal()) {
    j["diagonal"] = false;
    j["off_diagonal"] = {off->first, off->second};
  } else {
    j["diagonal"] = true;
  }
  return j;
}

json series_to_json(const std::vector<std::int64_t>& s) { return json(s); }

struct CommandContext {
  const Request& req;
  json doc;
  std::vector<std::string> warnings;
  int exit_code = kExitOk;

  explicit CommandContext(const Request& r) : req(r) {
    doc["command"] = r.command;
    doc["params"] = params_to_json(r.params);
  }

  Report finish() {
    doc["warnings"] = warnings;
    Report rep;
    rep.doc = std::move(doc);
    rep.warnings = std::move(warnings);
    rep.exit_code = exit_code;
    return rep;
  }
};

void echo_field(CommandContext& ctx, const QuadraticAlgebra& a) {
  ctx.doc["params"]["p"] = a.field().p();
  ctx.doc["params"]["d"] = a.dim_v();
}

Report cmd_dual(const Request& req) {
  CommandContext ctx(req);
  const QuadraticAlgebra a = algebra_from_json(req.payload.at("algebra"));
  echo_field(ctx, a);
  ctx.doc["algebra"] = algebra_to_json(a);
  ctx.doc["dual"] = algebra_to_json(a.dual());
  ctx.doc["r"] = a.r();
  ctx.doc["dual_r"] = a.dual().r();
  return ctx.finish();
}

CombineKind parse_kind(const std::string& s) {
  if (s == "dsum" || s == "direct_sum" || s == "+") return CombineKind::DirectSum;
  if (s == "free" || s == "free_product") return CombineKind::FreeProduct;
  if (s == "tensor" || s == "symmetric_tensor") return CombineKind::SymmetricTensor;
  if (s == "wedge" || s == "wedge_product") return CombineKind::WedgeProduct;
  schema_error("unknown combine kind '" + s + "'");
}

Report cmd_combine(const Request& req) {
  CommandContext ctx(req);
  const QuadraticAlgebra a = algebra_from_json(req.payload.at("a"));
  const QuadraticAlgebra b = algebra_from_json(req.payload.at("b"));
  if (!req.payload.contains("kind") || !req.payload["kind"].is_string())
    schema_error("combine needs a string field 'kind'");
  const CombineKind kind = parse_kind(req.payload["kind"].get<std::string>());
  const QuadraticAlgebra c = combine(a, b, kind);
  echo_field(ctx, c);
  ctx.doc["kind"] = to_string(kind);
  ctx.doc["algebra"] = algebra_to_json(c);
  ctx.doc["dual"] = algebra_to_json(c.dual());
  return ctx.finish();
}

Report cmd_hilbert(const Request& req) {
  CommandContext ctx(req);
  const QuadraticAlgebra a = algebra_from_json(req.payload.at("algebra"));
  echo_field(ctx, a);
  const MonomialOrder ord = order_for(req.params, a.dim_v());
  try {
    const auto series = hilbert_coeffs(a.relators(), ord, a.field(), a.dim_v(),
                                       req.params.nmax);
    ctx.doc["series"] = series_to_json(series);
    if (req.params.nmax >= 2) {
      const KBound k = k_of(a, req.params.nmax);
      ctx.doc["k"] = k.bounded ? json(k.value)
                               : json(">= " + std::to_string(k.value));
    }
  } catch (const BudgetError& e) {
    ctx.warnings.push_back(e.what());
    ctx.exit_code = kExitBudget;
  }
  return ctx.finish();
}

Report cmd_gb(const Request& req) {
  CommandContext ctx(req);
  const QuadraticAlgebra a = algebra_from_json(req.payload.at("algebra"));
  echo_field(ctx, a);
  const MonomialOrder ord = order_for(req.params, a.dim_v());
  CompletionResult comp = complete(a.relators(), ord, a.field(), a.dim_v(),
                                   req.params.nmax);
  json rules = json::array();
  for (const RewriteRule& r : comp.system.rules) {
    json jr;
    jr["lead"] = to_string(r.lead);
    jr["tail"] = to_string(r.tail);
    rules.push_back(std::move(jr));
  }
  ctx.doc["rules"] = std::move(rules);
  ctx.doc["complete_up_to"] = comp.system.complete_up_to;
  if (comp.system.complete_up_to >= 3)
    ctx.doc["pbw"] = pbw_certificate(comp.system);
  for (const std::string& n : comp.notes) ctx.warnings.push_back(n);
  if (comp.budget_exhausted) ctx.exit_code = kExitBudget;
  return ctx.finish();
}

Report cmd_koszul(const Request& req) {
  CommandContext ctx(req);
  const QuadraticAlgebra a = algebra_from_json(req.payload.at("algebra"));
  echo_field(ctx, a);
  const KoszulVerdict v = koszul_verdict(a, req.params.nmax, req.params.budget,
                                         req.params.seed);
  ctx.doc.update(verdict_to_json(v));
  try {
    ctx.doc["series"] = series_to_json(hilbert_coeffs(
        a.relators(), MonomialOrder(a.dim_v()), a.field(), a.dim_v(),
        req.params.nmax));
  } catch (const BudgetError& e) {
    ctx.warnings.push_back(e.what());
  }
  ctx.doc["dual"] = algebra_to_json(a.dual());
  return ctx.finish();
}

Report cmd_ext(const Request& req) {
  CommandContext ctx(req);
  const QuadraticAlgebra a = algebra_from_json(req.payload.at("algebra"));
  echo_field(ctx, a);
  int imax = 4, jmax = 6;
  if (req.payload.contains("imax")) imax = req.payload["imax"].get<int>();
  if (req.payload.contains("jmax")) jmax = req.payload["jmax"].get<int>();
  try {
    ctx.doc["ext_table"] = ext_to_json(ext_table(a, imax, jmax));
  } catch (const BudgetError& e) {
    ctx.warnings.push_back(e.what());
    ctx.exit_code = kExitBudget;
  }
  return ctx.finish();
}

Report cmd_mild(const Request& req) {
  CommandContext ctx(req);
  const GroupPresentation g =
      presentation_from_json(req.payload.at("presentation"));
  ctx.doc["params"]["p"] = g.field.p();
  ctx.doc["params"]["d"] = g.ngens;
  const int dmax = dmax_for(req.params, g.field);
  ctx.doc["params"]["Dmax"] = dmax;
  MonomialOrder ord = order_for(req.params, g.ngens);
  try {
    MildnessResult res = mildness_check(g, ord, dmax, req.params.nmax);
    std::vector<std::uint32_t> used = ord.permutation();
    if (res.status != CheckStatus::Certified && req.params.search_orders &&
        g.ngens <= 6) {
      std::vector<std::uint32_t> perm(g.ngens);
      std::iota(perm.begin(), perm.end(), 1u);
      do {
        const MonomialOrder cand = MonomialOrder::from_permutation(perm);
        if (cand.equal_order(ord)) continue;
        MildnessResult r2 = mildness_check(g, cand, dmax, req.params.nmax);
        if (r2.status == CheckStatus::Certified) {
          res = std::move(r2);
          used = perm;
          res.notes.push_back("certified under a permuted generator order");
          break;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    ctx.doc.update(sf_to_json(res.detail));
    ctx.doc["order_used"] = used;
    for (const std::string& n : res.notes) ctx.warnings.push_back(n);
  } catch (const BudgetError& e) {
    ctx.warnings.push_back(e.what());
    ctx.exit_code = kExitBudget;
  }
  return ctx.finish();
}

json analysis_to_json(const AnalysisReport& rep) {
  json j;
  j["d"] = rep.ngens;
  j["relators"] = rep.relator_count;
  j["minimal"] = rep.minimal;
  if (rep.violating_relator) j["violating_relator"] = *rep.violating_relator + 1;
  if (rep.dims) {
    j["h1"] = rep.dims->h1;
    j["h2"] = rep.dims->h2;
    j["h2_independent"] = to_string(rep.dims->independent);
  }
  if (!rep.weights.empty()) j["weights"] = rep.weights;
  if (!rep.gr_relators.empty()) {
    json rels = json::array();
    for (const NcPoly& f : rep.gr_relators) rels.push_back(to_string(f));
    j["gr_relators"] = std::move(rels);
  }
  if (rep.mildness) j["mild"] = sf_to_json(rep.mildness->detail);
  if (rep.quadraticity) {
    json q;
    q["condition_a"] = rep.quadraticity->condition_a;
    q["condition_b"] = to_string(rep.quadraticity->condition_b);
    q["notes"] = rep.quadraticity->notes;
    j["quadraticity"] = std::move(q);
  }
  if (rep.gr_algebra) j["gr_algebra"] = algebra_to_json(*rep.gr_algebra);
  if (rep.h_candidate) j["dual"] = algebra_to_json(*rep.h_candidate);
  if (rep.gr_verdict) j["gr_koszul"] = verdict_to_json(*rep.gr_verdict);
  if (rep.h_verdict) j["h_koszul"] = verdict_to_json(*rep.h_verdict);
  if (rep.pair_identity) {
    json id;
    id["holds"] = rep.pair_identity->holds;
    id["degree"] = rep.pair_identity->degree;
    j["series_identity"] = std::move(id);
  }
  if (!rep.gr_series.empty()) j["series"] = series_to_json(rep.gr_series);
  j["duality_conclusion"] = rep.duality_conclusion;
  return j;
}

Report cmd_analyze(const Request& req) {
  CommandContext ctx(req);
  const GroupPresentation g =
      presentation_from_json(req.payload.at("presentation"));
  ctx.doc["params"]["p"] = g.field.p();
  ctx.doc["params"]["d"] = g.ngens;
  const int dmax = dmax_for(req.params, g.field);
  ctx.doc["params"]["Dmax"] = dmax;
  const MonomialOrder ord = order_for(req.params, g.ngens);
  const AnalysisReport rep = analyze(g, ord, dmax, req.params.nmax,
                                     req.params.budget, req.params.seed);
  ctx.doc.update(analysis_to_json(rep));
  for (const std::string& w : rep.warnings) ctx.warnings.push_back(w);
  if (rep.budget_exceeded) ctx.exit_code = kExitBudget;
  return ctx.finish();
}

Graph graph_from_payload(const json& payload) {
  if (payload.contains("graph")) {
    const json& g = payload["graph"];
    if (g.is_string()) return parse_graph(g.get<std::string>());
    return graph_from_json(g);
  }
  schema_error("missing 'graph' payload");
}

Report cmd_graph_algebra(const Request& req, bool exterior) {
  CommandContext ctx(req);
  const Graph g = graph_from_payload(req.payload);
  const Fp field(get_u32(req.payload, "p", 2, 1u << 20));
  const QuadraticAlgebra a =
      exterior ? stanley_reisner(g, field) : raag_algebra(g, field);
  echo_field(ctx, a);
  ctx.doc["graph"] = graph_to_json(g);
  const TriangleResult tri = triangle_free(g);
  ctx.doc["triangle_free"] = tri.triangle_free;
  if (!tri.triangle_free)
    ctx.doc["triangle"] = {tri.witness[0], tri.witness[1], tri.witness[2]};
  ctx.doc["algebra"] = algebra_to_json(a);
  ctx.doc["dual"] = algebra_to_json(a.dual());
  ctx.doc["clique_series"] =
      series_to_json(clique_series(g, std::min(req.params.nmax, int(g.vertex_count()))));
  return ctx.finish();
}

GenRaagParams genraag_params_from_json(const json& payload) {
  GenRaagParams params;
  auto read_map = [&](const char* key, auto& target) {
    if (!payload.contains(key)) return;
    if (!payload[key].is_object())
      schema_error(std::string("'") + key + "' must map \"i-j\" to integers");
    for (const auto& [k, v] : payload[key].items()) {
      const std::size_t dash = k.find('-');
      if (dash == std::string::npos)
        schema_error("edge keys look like \"1-2\"");
      const std::uint32_t i = std::uint32_t(std::stoul(k.substr(0, dash)));
      const std::uint32_t j = std::uint32_t(std::stoul(k.substr(dash + 1)));
      target[{std::min(i, j), std::max(i, j)}] = v.template get<std::int64_t>();
    }
  };
  read_map("lambda", params.lambda);
  read_map("mu", params.mu);
  return params;
}

Report cmd_genraag(const Request& req) {
  CommandContext ctx(req);
  const Graph g = graph_from_payload(req.payload);
  const Fp field(get_u32(req.payload, "p", 2, 1u << 20));
  const GenRaagParams params = genraag_params_from_json(req.payload);
  const GroupPresentation pres = gen_raag_group(g, field, params);
  ctx.doc["params"]["p"] = field.p();
  ctx.doc["params"]["d"] = pres.ngens;
  ctx.doc["graph"] = graph_to_json(g);
  const TriangleResult tri = triangle_free(g);
  ctx.doc["triangle_free"] = tri.triangle_free;
  ctx.doc["presentation"] = presentation_to_json(pres);
  if (!tri.triangle_free)
    ctx.warnings.push_back(
        "graph has a triangle; the triangle-free mildness conclusion does not "
        "apply");
  return ctx.finish();
}

DemushkinVariant variant_from_string(const std::string& s) {
  if (s == "auto") return DemushkinVariant::Auto;
  if (s == "a") return DemushkinVariant::A;
  if (s == "b") return DemushkinVariant::B;
  if (s == "c") return DemushkinVariant::C;
  schema_error("unknown Demushkin variant '" + s + "'");
}

Report cmd_demushkin(const Request& req) {
  CommandContext ctx(req);
  const std::uint32_t p = get_u32(req.payload, "p", 2, 1u << 20);
  const std::uint32_t d = get_u32(req.payload, "d", 1, 64);
  DemushkinVariant variant = DemushkinVariant::Auto;
  if (req.payload.contains("variant"))
    variant = variant_from_string(req.payload["variant"].get<std::string>());
  const Fp field(p);
  ctx.doc["params"]["p"] = p;
  ctx.doc["params"]["d"] = d;
  const NcPoly relator = demushkin_relator(field, d, variant);
  const QuadraticAlgebra a = demushkin_algebra(field, d, variant);
  ctx.doc["relator"] = to_string(relator);
  ctx.doc["algebra"] = algebra_to_json(a);
  ctx.doc["dual"] = algebra_to_json(a.dual());
  const GroupPresentation pres = demushkin_presentation(field, d, variant);
  ctx.doc["presentation"] = presentation_to_json(pres);
  try {
    ctx.doc["series"] = series_to_json(
        hilbert_coeffs(a.relators(), MonomialOrder(d), field, d,
                       req.params.nmax));
  } catch (const BudgetError& e) {
    ctx.warnings.push_back(e.what());
  }
  return ctx.finish();
}

} // namespace

Report execute(const Request& req) {
  if (req.command == "dual") return cmd_dual(req);
  if (req.command == "combine") return cmd_combine(req);
  if (req.command == "hilbert") return cmd_hilbert(req);
  if (req.command == "gb") return cmd_gb(req);
  if (req.command == "koszul") return cmd_koszul(req);
  if (req.command == "ext") return cmd_ext(req);
  if (req.command == "mild") return cmd_mild(req);
  if (req.command == "analyze") return cmd_analyze(req);
  if (req.command == "raag") return cmd_graph_algebra(req, false);
  if (req.command == "sr") return cmd_graph_algebra(req, true);
  if (req.command == "genraag") return cmd_genraag(req);
  if (req.command == "demushkin") return cmd_demushkin(req);
  schema_error("unknown command '" + req.command + "'");
}

json request_to_json(const Request& r) {
  json j = r.payload;
  j["command"] = r.command;
  j["params"] = params_to_json(r.params);
  return j;
}

Request request_from_json(const json& j) {
  if (!j.is_object() || !j.contains("command") || !j["command"].is_string())
    schema_error("request needs a string field 'command'");
  Request r;
  r.command = j["command"].get<std::string>();
  r.payload = j;
  r.payload.erase("command");
  if (j.contains("params")) {
    r.params = params_from_json(j["params"]);
    r.payload.erase("params");
  }
  return r;
}

namespace {

void render_value(std::ostream& os, const std::string& key, const json& v,
                  int indent) {
  const std::string pad(std::size_t(indent), ' ');
  if (v.is_object()) {
    os << pad << key << ":\n";
    for (const auto& [k, sub] : v.items()) render_value(os, k, sub, indent + 2);
    return;
  }
  if (v.is_array()) {
    bool scalar = true;
    for (const json& e : v)
      if (e.is_object() || e.is_array()) scalar = false;
    if (scalar) {
      os << pad << key << ":";
      for (const json& e : v)
        os << " " << (e.is_string() ? e.get<std::string>() : e.dump());
      os << "\n";
      return;
    }
    os << pad << key << ":\n";
    std::size_t idx = 0;
    for (const json& e : v) render_value(os, "[" + std::to_string(idx++) + "]", e, indent + 2);
    return;
  }
  os << pad << key << ": "
     << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

} // namespace

std::string Report::text() const {
  std::ostringstream os;
  if (doc.contains("command"))
    os << "== koszul-forge " << doc["command"].get<std::string>() << " ==\n";
  for (const auto& [k, v] : doc.items()) {
    if (k == "command") continue;
    render_value(os, k, v, 0);
  }
  return os.str();
}

} // namespace kf::cli
