#ifndef HYPERCHROM_TOOLS_CLI_HPP
#define HYPERCHROM_TOOLS_CLI_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperchrom/hyperchrom.hpp"

namespace hyperchrom::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { kSuccess = 0, kAnalysedFailure = 1, kUsage = 2, kInternal = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

inline json flags_json(const std::map<std::string, bool>& flags) {
  json j = json::object();
  for (const auto& [k, v] : flags) j[k] = v;
  return j;
}

inline json certificate_json(const PartitionCertificate& c) {
  json j;
  json parts = json::object();
  for (const auto& [name, ids] : c.parts) parts[name] = ids;
  j["parts"] = parts;
  j["flags"] = flags_json(c.flags);
  json wit = json::object();
  for (const auto& [name, w] : c.witness)
    if (w) wit[name] = *w;
  j["witnesses"] = wit;
  j["vacuous"] = std::vector<std::string>(c.vacuous.begin(), c.vacuous.end());
  j["trivial"] = c.trivial;
  std::vector<std::string> cases;
  for (auto k : c.reorder_cases) cases.push_back(k == ReorderCase::A ? "A" : "B");
  j["reorder_cases"] = cases;
  return j;
}

inline json stages_json(const std::vector<StageReport>& stages) {
  json arr = json::array();
  for (const auto& s : stages) {
    json j{{"stage", s.stage}, {"status", s.status}, {"colours_used", s.colours_used}};
    if (s.certificate) j["certificate"] = flags_json(*s.certificate);
    j["seed"] = s.seed;
    if (!s.detail.empty()) j["detail"] = s.detail;
    arr.push_back(j);
  }
  return arr;
}

inline std::uint64_t default_time_cap_ms() {
  if (const char* env = std::getenv("HYPERCHROM_TIME_CAP_MS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && end != env) return v;
  }
  return 60'000;
}

/// Options shared by the subcommands; strings hold rationals until parsed.
struct Options {
  std::string in, out, lists;
  std::size_t t = 1;
  std::uint64_t seed = 0;
  bool json_out = false;
  // gen
  std::string family = "plane";
  std::uint32_t q = 2;
  std::size_t n = 7, fold = 1, min_size = 2, max_size = 3, density = 10;
  // order / color
  std::string mode;
  std::string sigma = "1/50", delta = "1/10", gamma = "1/8", eps = "1/4", alpha = "1/4";
  std::optional<std::size_t> r0, probe;
  std::size_t r1 = 4;
  std::size_t budget_edges = 24;
  std::optional<std::uint64_t> time_cap_ms;
  bool non_intersecting = false;
  // sweep
  std::string task = "verify";
  std::size_t count = 20, threads = 0;
};

struct Loaded {
  Hypergraph h;
  std::string digest;
};

inline Loaded load_input(const Options& o) {
  if (o.in.empty()) throw UsageError("--in is required");
  std::string text = read_file(o.in);
  return {parse_hg(text), fnv1a_hex(text)};
}

inline ListAssignment load_lists(const Options& o, std::size_t m, std::size_t fallback) {
  if (o.lists.empty()) return ListAssignment::uniform(m, fallback);
  if (o.lists.rfind("uniform:", 0) == 0) return lists_from_spec(o.lists, m);
  return lists_from_spec(read_file(o.lists), m);
}

inline std::uint64_t time_cap(const Options& o) { return o.time_cap_ms ? *o.time_cap_ms : default_time_cap_ms(); }

struct Outcome {
  json report;
  int code = kSuccess;
};

inline json base_report(const std::string& command, const std::string& digest, const Options& o) {
  json r;
  r["schema"] = 1;
  r["command"] = command;
  r["input_digest"] = digest;
  r["seed"] = o.seed;
  return r;
}

inline Outcome cmd_gen(const Options& o) {
  Hypergraph h;
  json params{{"family", o.family}, {"fold", o.fold}};
  if (o.family == "plane") {
    h = projective_plane(o.q);
    params["q"] = o.q;
  } else if (o.family == "near-pencil") {
    h = near_pencil(o.n);
    params["n"] = o.n;
  } else if (o.family == "random") {
    GeneratorParams gp{o.seed, o.n, o.t, o.min_size, o.max_size, o.density};
    h = random_bounded_codegree(gp).hypergraph;
    params.update({{"n", o.n}, {"t", o.t}, {"min_size", o.min_size}, {"max_size", o.max_size}, {"density", o.density}});
  } else {
    throw UsageError("unknown family '" + o.family + "'");
  }
  if (o.fold > 1) h = t_fold(h, o.fold);
  std::string text = serialize_hg(h);
  Outcome out;
  out.report = base_report("gen", fnv1a_hex(text), o);
  out.report["parameters"] = params;
  out.report["outcome"] = "generated";
  out.report["n"] = h.vertex_count();
  out.report["edges"] = h.edge_count();
  if (!o.out.empty()) write_file(o.out, text);
  else out.report["hg"] = text;
  return out;
}

inline Outcome cmd_order(const Options& o) {
  Loaded in = load_input(o);
  const Hypergraph& h = in.h;
  Outcome out;
  out.report = base_report("order", in.digest, o);
  const std::string mode = o.mode.empty() ? "size" : o.mode;
  out.report["parameters"] = {{"mode", mode}, {"t", o.t}, {"sigma", o.sigma}, {"delta", o.delta}, {"gamma", o.gamma}};
  EdgeOrdering ord;
  if (mode == "size") {
    ord = size_monotone_ordering(h);
  } else if (mode == "stability") {
    auto c = partition_stability(h, o.t, parse_rational(o.sigma), parse_rational(o.delta), o.probe);
    ord = c.ordering;
    out.report["certificates"] = certificate_json(c);
    if (!c.all_flags()) out.code = kAnalysedFailure;
  } else if (mode == "extremal") {
    auto c = partition_extremal(h, o.t, parse_rational(o.delta), parse_rational(o.gamma),
                                o.r0 ? *o.r0 : default_r0(h.vertex_count()));
    ord = c.ordering;
    out.report["certificates"] = certificate_json(c);
    if (!c.all_flags()) out.code = kAnalysedFailure;
  } else {
    throw UsageError("unknown order mode '" + mode + "'");
  }
  auto fwd = forward_degrees(h, ord);
  json table = json::array();
  std::size_t mx = 0;
  for (EdgeId e : ord.sequence()) {
    table.push_back({{"edge", e}, {"size", h.edge_size(e)}, {"fwddeg", fwd[e]}});
    mx = std::max(mx, fwd[e]);
  }
  out.report["ordering"] = ord.sequence();
  out.report["forward_degrees"] = table;
  out.report["max_fwddeg"] = mx;
  out.report["outcome"] = out.code == kSuccess ? "ok" : "flag-failed";
  return out;
}

inline Outcome cmd_color(const Options& o) {
  Loaded in = load_input(o);
  const Hypergraph& h = in.h;
  const std::size_t m = h.edge_count();
  const std::size_t tn = o.t * h.vertex_count();
  ListAssignment lists = load_lists(o, m, tn);
  const std::string mode = o.mode.empty() ? "pipeline" : o.mode;
  Outcome out;
  out.report = base_report("color", in.digest, o);
  out.report["parameters"] = {{"mode", mode},   {"t", o.t},         {"lists", o.lists.empty() ? "uniform:tn" : o.lists},
                              {"eps", o.eps},   {"delta", o.delta}, {"gamma", o.gamma},
                              {"sigma", o.sigma}, {"alpha", o.alpha}, {"r1", o.r1}};
  if (o.r0) out.report["parameters"]["r0"] = *o.r0;
  std::optional<EdgeColouring> phi;
  if (mode == "extremal") {
    ExtremalParams ep;
    ep.alpha = parse_rational(o.alpha);
    ep.delta = parse_rational(o.delta);
    ep.exact_budget = OracleBudget{o.budget_edges, 64, time_cap(o)};
    auto rep = colour_extremal(h, o.t, lists, ep);
    phi = rep.colouring;
    out.report["rung"] = rep.rung;
    out.report["log"] = rep.log;
    out.report["certificates"] = {{"size_premise", rep.size_premise_ok}};
    if (rep.family) out.report["useful_family"] = rep.family->edges;
    if (rep.matching) {
      json pairs = json::array();
      for (auto [a, b] : rep.matching->pairs) pairs.push_back({a, b});
      out.report["matching"] = pairs;
    }
  } else if (mode == "stability" || mode == "pipeline") {
    PipelineResult res;
    if (mode == "stability") {
      StabilityParams sp{parse_rational(o.delta), parse_rational(o.sigma), o.r0, o.r1, o.seed};
      res = colour_stability(h, o.t, lists, sp);
    } else {
      MainParams mp;
      mp.eps = parse_rational(o.eps);
      mp.delta = parse_rational(o.delta);
      mp.gamma = parse_rational(o.gamma);
      mp.sigma = parse_rational(o.sigma);
      mp.r0 = o.r0;
      mp.r1 = o.r1;
      mp.exact_budget = o.budget_edges;
      mp.time_cap_ms = time_cap(o);
      mp.seed = o.seed;
      mp.non_intersecting_variant = o.non_intersecting;
      res = colour_main(h, o.t, lists, mp);
    }
    phi = res.colouring;
    out.report["stages"] = stages_json(res.stages);
    if (!res.route.empty()) out.report["route"] = res.route;
    if (!res.failed_stage.empty()) out.report["failed_stage"] = res.failed_stage;
  } else {
    throw UsageError("unknown color mode '" + mode + "'");
  }
  if (phi) {
    auto check = validate_colouring(h, *phi, lists);
    if (!check.valid) throw InternalError("color: output failed validation");
    out.report["outcome"] = "success";
    out.report["colours_used"] = check.colour_count;
    out.report["colouring"] = *phi;
    if (!o.out.empty()) {
      std::ostringstream ss;
      for (Colour c : *phi) ss << c << '\n';
      write_file(o.out, ss.str());
    }
  } else {
    out.report["outcome"] = "failure";
    out.code = kAnalysedFailure;
  }
  return out;
}

inline Outcome cmd_exact(const Options& o) {
  Loaded in = load_input(o);
  const Hypergraph& h = in.h;
  OracleBudget b{o.budget_edges, 64, time_cap(o)};
  Outcome out;
  out.report = base_report("exact", in.digest, o);
  out.report["parameters"] = {{"budget_edges", b.max_edges}, {"time_cap_ms", b.time_cap_ms}};
  if (!o.lists.empty()) {
    ListAssignment lists = load_lists(o, h.edge_count(), 0);
    b.max_colours = std::max<std::size_t>(b.max_colours, lists.max_size());
    auto r = exact_list_colourable(h, lists, b);
    out.report["parameters"]["lists"] = o.lists;
    out.report["nodes"] = r.nodes;
    if (r.answer == ListAnswer::Yes) {
      out.report["outcome"] = "colourable";
      out.report["colouring"] = *r.witness;
      out.report["colours_used"] = validate_colouring(h, *r.witness, lists).colour_count;
    } else if (r.answer == ListAnswer::No) {
      out.report["outcome"] = "not-colourable";
      out.code = kAnalysedFailure;
    } else {
      out.report["outcome"] = "budget-exceeded";
      out.report["reason"] = r.reason;
      out.code = kAnalysedFailure;
    }
    return out;
  }
  auto r = exact_chromatic_index(h, b);
  out.report["nodes"] = r.nodes;
  out.report["lower_bound"] = r.lower_bound;
  if (r.status == OracleStatus::Solved) {
    out.report["outcome"] = "solved";
    out.report["chromatic_index"] = *r.value;
    out.report["colours_used"] = *r.value;
    out.report["colouring"] = r.witness;
  } else {
    out.report["outcome"] = "budget-exceeded";
    out.report["reason"] = r.reason;
    out.code = kAnalysedFailure;
  }
  return out;
}

inline Outcome cmd_classify(const Options& o) {
  Loaded in = load_input(o);
  auto c = classify_extremal(in.h, o.t);
  Outcome out;
  out.report = base_report("classify", in.digest, o);
  out.report["parameters"] = {{"t", o.t}};
  out.report["outcome"] = to_string(c.kind);
  json cl{{"kind", to_string(c.kind)}, {"t", c.t}};
  if (c.kind == ClassKind::TFoldProjectivePlane) cl["k"] = c.k;
  if (!c.reason.empty()) cl["reason"] = c.reason;
  if (!c.remark.empty()) cl["remark"] = c.remark;
  if (c.witness_vertex) cl["witness_vertex"] = *c.witness_vertex;
  cl["isolated"] = c.isolated;
  cl["bound"] = {{"applies", c.bound.applies}, {"edges", c.bound.e_count}, {"bound", c.bound.bound}, {"tight", c.bound.tight}};
  out.report["classification"] = cl;
  if (c.kind == ClassKind::NotApplicable) out.code = kAnalysedFailure;
  return out;
}

inline json verification_json(const InstanceVerification& v) {
  json viol = json::array();
  for (const auto& x : v.report.violations) viol.push_back({{"property", x.property}, {"at", x.where}, {"detail", x.detail}});
  return {{"codegree_ok", v.codegree_ok}, {"max_codegree", v.max_codegree}, {"checks", v.report.checks},
          {"skipped", v.report.skipped}, {"violations", viol}};
}

inline Outcome cmd_verify(const Options& o) {
  Loaded in = load_input(o);
  auto v = verify_instance(in.h, o.t);
  Outcome out;
  out.report = base_report("verify", in.digest, o);
  out.report["parameters"] = {{"t", o.t}};
  out.report["certificates"] = verification_json(v);
  const bool holds = v.codegree_ok && v.report.clean();
  out.report["outcome"] = !v.codegree_ok ? "premise-failed" : holds ? "holds" : "violated";
  if (!holds) out.code = kAnalysedFailure;
  return out;
}

/// One sweep instance; pure function of (options, index).
struct SweepItem {
  bool pass = true;
  bool coloured = false;
  std::string note;
};

inline SweepItem sweep_one(const Options& o, std::size_t i) {
  GeneratorParams gp{o.seed + i, o.n, o.t, o.min_size, o.max_size, o.density};
  Hypergraph h = random_bounded_codegree(gp).hypergraph;
  SweepItem item;
  if (o.task == "verify") {
    auto v = verify_instance(h, o.t);
    item.pass = v.codegree_ok && v.report.clean();
    if (!item.pass) item.note = v.report.violations.empty() ? "premise" : v.report.violations.front().property;
  } else if (o.task == "color") {
    const Rational sigma = parse_rational(o.sigma);
    const auto k = static_cast<std::size_t>(ceil_i64((1 - sigma) * Rational(BigInt(o.t * o.n))));
    ListAssignment lists = ListAssignment::uniform(h.edge_count(), k);
    MainParams mp;
    mp.sigma = sigma;
    mp.seed = o.seed + i;
    mp.exact_budget = o.budget_edges;
    mp.time_cap_ms = time_cap(o);
    auto res = colour_main(h, o.t, lists, mp);
    if (res.colouring) {
      item.coloured = true;
      item.pass = validate_colouring(h, *res.colouring, lists).valid && res.colours_used <= lists.max_size();
    }
  } else if (o.task == "greedy") {
    auto ord = size_monotone_ordering(h);
    auto fwd = forward_degrees(h, ord);
    std::vector<std::vector<Colour>> l(h.edge_count());
    for (EdgeId e = 0; e < h.edge_count(); ++e)
      for (std::size_t c = 0; c <= fwd[e]; ++c) l[e].push_back(static_cast<Colour>(c));
    ListAssignment lists(std::move(l));
    auto r = greedy_list_colour(h, ord, lists);
    item.pass = std::holds_alternative<EdgeColouring>(r) && validate_colouring(h, std::get<EdgeColouring>(r), lists).valid;
    item.coloured = item.pass;
  } else {
    throw UsageError("unknown sweep task '" + o.task + "'");
  }
  return item;
}

inline Outcome cmd_sweep(const Options& o) {
  if (o.task != "verify" && o.task != "color" && o.task != "greedy")
    throw UsageError("unknown sweep task '" + o.task + "'");
  std::vector<SweepItem> items(o.count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < o.count;) {
      try {
        items[i] = sweep_one(o, i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::size_t threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(o.count, 1));
  std::vector<std::thread> pool;
  for (std::size_t k = 0; k < threads; ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  std::size_t passed = 0, coloured = 0;
  json failures = json::array();
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].pass) ++passed;
    else failures.push_back({{"index", i}, {"seed", o.seed + i}, {"note", items[i].note}});
    if (items[i].coloured) ++coloured;
  }
  Outcome out;
  out.report = base_report("sweep", "", o);
  out.report["parameters"] = {{"task", o.task},         {"count", o.count},       {"n", o.n},
                              {"t", o.t},               {"min_size", o.min_size}, {"max_size", o.max_size},
                              {"density", o.density}};
  out.report["instances"] = o.count;
  out.report["passed"] = passed;
  out.report["failed"] = o.count - passed;
  if (o.task != "verify") out.report["coloured"] = coloured;
  out.report["failures"] = failures;
  out.report["outcome"] = passed == o.count ? "pass" : "fail";
  if (passed != o.count) out.code = kAnalysedFailure;
  return out;
}

/// Parses argv and runs one subcommand; the report goes to `out` (JSON with
/// --json, otherwise a one-line summary), diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"hypergraph edge-colouring toolkit"};
  app.require_subcommand(1);
  Options o;
  auto common = [&o](CLI::App* s, bool input) {
    if (input) s->add_option("--in", o.in, "input .hg file")->required();
    s->add_option("--out", o.out, "output path");
    s->add_option("--t", o.t, "codegree bound t");
    s->add_option("--seed", o.seed, "random seed");
    s->add_flag("--json", o.json_out, "print the full JSON report");
  };
  auto* gen = app.add_subcommand("gen", "generate a hypergraph");
  common(gen, false);
  gen->add_option("--family", o.family, "plane | near-pencil | random");
  gen->add_option("--q", o.q, "plane order");
  gen->add_option("--n", o.n, "vertex count");
  gen->add_option("--fold", o.fold, "edge multiplicity");
  gen->add_option("--min-size", o.min_size);
  gen->add_option("--max-size", o.max_size);
  gen->add_option("--density", o.density, "target edge count");

  auto* order = app.add_subcommand("order", "edge ordering and partition certificates");
  common(order, true);
  order->add_option("--mode", o.mode, "size | stability | extremal");
  order->add_option("--sigma", o.sigma);
  order->add_option("--delta", o.delta);
  order->add_option("--gamma", o.gamma);
  order->add_option("--r0", o.r0);
  order->add_option("--probe", o.probe, "list size to test greedy against");

  auto* color = app.add_subcommand("color", "list edge-colouring");
  common(color, true);
  color->add_option("--mode", o.mode, "pipeline | extremal | stability");
  color->add_option("--lists", o.lists, "uniform:K or a list file");
  color->add_option("--eps", o.eps);
  color->add_option("--delta", o.delta);
  color->add_option("--gamma", o.gamma);
  color->add_option("--sigma", o.sigma);
  color->add_option("--alpha", o.alpha);
  color->add_option("--r0", o.r0);
  color->add_option("--r1", o.r1);
  color->add_option("--budget-edges", o.budget_edges);
  color->add_option("--time-cap-ms", o.time_cap_ms);
  color->add_flag("--non-intersecting", o.non_intersecting, "tn - 1 list variant");

  auto* exact = app.add_subcommand("exact", "exact chromatic index or list colourability");
  common(exact, true);
  exact->add_option("--lists", o.lists, "uniform:K or a list file");
  exact->add_option("--budget-edges", o.budget_edges);
  exact->add_option("--time-cap-ms", o.time_cap_ms);

  auto* classify = app.add_subcommand("classify", "intersecting bound and extremal classification");
  common(classify, true);

  auto* verify = app.add_subcommand("verify", "run the invariant suite on one instance");
  common(verify, true);

  auto* sweep = app.add_subcommand("sweep", "seeded corpus run");
  common(sweep, false);
  sweep->add_option("--task", o.task, "verify | color | greedy");
  sweep->add_option("--count", o.count);
  sweep->add_option("--n", o.n);
  sweep->add_option("--min-size", o.min_size);
  sweep->add_option("--max-size", o.max_size);
  sweep->add_option("--density", o.density);
  sweep->add_option("--threads", o.threads);
  sweep->add_option("--sigma", o.sigma);
  sweep->add_option("--budget-edges", o.budget_edges);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome res;
  try {
    if (gen->parsed()) res = cmd_gen(o);
    else if (order->parsed()) res = cmd_order(o);
    else if (color->parsed()) res = cmd_color(o);
    else if (exact->parsed()) res = cmd_exact(o);
    else if (classify->parsed()) res = cmd_classify(o);
    else if (verify->parsed()) res = cmd_verify(o);
    else res = cmd_sweep(o);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  res.report["wall_time_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  if (o.json_out) {
    out << res.report.dump(2) << '\n';
  } else {
    out << res.report["command"].get<std::string>() << ": " << res.report["outcome"].get<std::string>();
    if (res.report.contains("colours_used")) out << " colours_used=" << res.report["colours_used"];
    if (res.report.contains("chromatic_index")) out << " chromatic_index=" << res.report["chromatic_index"];
    if (res.report.contains("hg") && o.out.empty()) out << '\n' << res.report["hg"].get<std::string>();
    out << '\n';
  }
  return res.code;
}

}  // namespace hyperchrom::cli

#endif  // HYPERCHROM_TOOLS_CLI_HPP
