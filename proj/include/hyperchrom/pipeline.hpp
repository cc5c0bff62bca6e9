#ifndef HYPERCHROM_PIPELINE_HPP
#define HYPERCHROM_PIPELINE_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperchrom/core.hpp"
#include "hyperchrom/extremal.hpp"
#include "hyperchrom/hypergraph.hpp"
#include "hyperchrom/oracle.hpp"
#include "hyperchrom/ordering.hpp"
#include "hyperchrom/rational.hpp"

namespace hyperchrom {

struct SizeSplit {
  std::vector<EdgeId> sml, med, lrg;
  std::size_t r0 = 0, r1 = 0;
};

inline SizeSplit split_by_size(const Hypergraph& h, std::size_t r0, std::size_t r1) {
  if (r1 < 1 || r1 > r0) throw std::domain_error("split_by_size: need 1 <= r1 <= r0");
  SizeSplit s;
  s.r0 = r0;
  s.r1 = r1;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    std::size_t k = h.edge_size(e);
    if (k <= r1) s.sml.push_back(e);
    else if (k <= r0) s.med.push_back(e);
    else s.lrg.push_back(e);
  }
  return s;
}

struct ReservedColours {
  std::vector<Colour> R;  // sorted
  Rational gamma, xi;
  std::uint64_t seed = 0;
  std::size_t retries_used = 0;
};

struct ReservationOutcome {
  std::optional<ReservedColours> reserved;
  std::size_t attempts = 0;
  std::optional<EdgeId> last_failing_edge;
};

/// First edge whose list violates (gamma - xi)|C(e)| <= |R ∩ C(e)| <= (gamma + xi)|C(e)|.
inline std::optional<EdgeId> reservation_window_violation(const ListAssignment& lists, const std::vector<Colour>& r,
                                                          const Rational& gamma, const Rational& xi) {
  for (EdgeId e = 0; e < lists.size(); ++e) {
    const auto& l = lists.list(e);
    std::size_t hit = 0;
    for (Colour c : l)
      if (std::binary_search(r.begin(), r.end(), c)) ++hit;
    const Rational size{BigInt(l.size())};
    const Rational got{BigInt(hit)};
    if (got < (gamma - xi) * size || got > (gamma + xi) * size) return e;
  }
  return std::nullopt;
}

/// Puts each colour of the union of the lists into R independently with
/// probability gamma, using mt19937_64(seed + attempt); keeps the first draw
/// that meets every edge's window, giving up after max_attempts.
inline ReservationOutcome reserve_colours(const ListAssignment& lists, const Rational& gamma, const Rational& xi,
                                          std::uint64_t seed, std::size_t max_attempts = 100) {
  if (gamma < 0 || gamma > 1) throw std::domain_error("reserve_colours: gamma must lie in [0,1]");
  if (xi <= 0 || xi >= 1) throw std::domain_error("reserve_colours: xi must lie in (0,1)");
  const BigInt den = denominator_of(gamma);
  if (den > BigInt(std::numeric_limits<std::uint64_t>::max()))
    throw std::domain_error("reserve_colours: gamma denominator exceeds 64 bits");
  const auto q = den.convert_to<std::uint64_t>();
  const auto p = numerator_of(gamma).convert_to<std::uint64_t>();
  std::vector<Colour> universe;
  for (const auto& l : lists.lists()) universe.insert(universe.end(), l.begin(), l.end());
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());

  ReservationOutcome out;
  std::uniform_int_distribution<std::uint64_t> draw(0, q - 1);
  for (std::size_t a = 0; a < max_attempts; ++a) {
    std::mt19937_64 rng(seed + a);
    std::vector<Colour> r;
    for (Colour c : universe)
      if (draw(rng) < p) r.push_back(c);
    ++out.attempts;
    auto bad = reservation_window_violation(lists, r, gamma, xi);
    if (!bad) {
      out.reserved = ReservedColours{std::move(r), gamma, xi, seed, a};
      out.last_failing_edge.reset();
      return out;
    }
    out.last_failing_edge = bad;
  }
  return out;
}

/// Per-edge lists C(e) ∩ R (inside = true) or C(e) \ R, for edges in `part`;
/// other edges get empty lists.
inline ListAssignment split_lists(const ListAssignment& lists, const std::vector<Colour>& r,
                                  const std::vector<EdgeId>& part, bool inside) {
  std::vector<std::vector<Colour>> out(lists.size());
  for (EdgeId e : part)
    for (Colour c : lists.list(e))
      if (std::binary_search(r.begin(), r.end(), c) == inside) out[e].push_back(c);
  return ListAssignment(std::move(out));
}

inline ListAssignment restrict_to(const ListAssignment& lists, const std::vector<EdgeId>& part) {
  std::vector<std::vector<Colour>> out(lists.size());
  for (EdgeId e : part) out[e] = lists.list(e);
  return ListAssignment(std::move(out));
}

struct StageColouring {
  bool ok = false;
  PartialColouring colouring;  // indexed by edge id of the full hypergraph
  std::optional<EdgeId> stuck;
  std::string method;
  std::size_t attempts = 0;
  std::size_t repairs = 0;
};

namespace detail {

// Neighbours of each part edge inside the part.
inline std::vector<std::vector<EdgeId>> part_neighbours(const Hypergraph& h, const std::vector<EdgeId>& part) {
  std::vector<char> in(h.edge_count(), 0);
  for (EdgeId e : part) in[e] = 1;
  std::vector<std::vector<EdgeId>> nb(h.edge_count());
  for (EdgeId e : part)
    for (EdgeId f : edge_neighbourhood(h, e))
      if (in[f]) nb[e].push_back(f);
  return nb;
}

inline std::vector<Colour> allowed_colours(const ListAssignment& lists, const std::vector<std::vector<Colour>>& forbidden,
                                           EdgeId e) {
  std::vector<Colour> out;
  for (Colour c : lists.list(e)) {
    if (e < forbidden.size() && std::find(forbidden[e].begin(), forbidden[e].end(), c) != forbidden[e].end()) continue;
    out.push_back(c);
  }
  return out;
}

// Greedy along `order`, smallest free colour; a stuck edge may take colour c
// if exactly one neighbour f holds c and f can move to another free colour.
inline std::optional<EdgeId> greedy_with_repair(const std::vector<EdgeId>& order,
                                                const std::vector<std::vector<EdgeId>>& nb,
                                                const std::vector<std::vector<Colour>>& allowed, PartialColouring& phi,
                                                std::size_t& repairs) {
  auto free_colour = [&](EdgeId e, std::optional<Colour> skip) -> std::optional<Colour> {
    for (Colour c : allowed[e]) {
      if (skip && c == *skip) continue;
      bool clash = false;
      for (EdgeId f : nb[e])
        if (phi[f] && *phi[f] == c) { clash = true; break; }
      if (!clash) return c;
    }
    return std::nullopt;
  };
  for (EdgeId e : order) {
    if (auto c = free_colour(e, std::nullopt)) {
      phi[e] = c;
      continue;
    }
    bool fixed = false;
    for (Colour c : allowed[e]) {
      std::optional<EdgeId> holder;
      std::size_t holders = 0;
      for (EdgeId f : nb[e])
        if (phi[f] && *phi[f] == c) { holder = f; ++holders; }
      if (holders != 1) continue;
      if (auto c2 = free_colour(*holder, c)) {
        phi[*holder] = c2;
        phi[e] = c;
        ++repairs;
        fixed = true;
        break;
      }
    }
    if (!fixed) return e;
  }
  return std::nullopt;
}

}  // namespace detail

/// Proper colouring of the edges in `part`, each from C(e) minus forbidden(e)
/// (forbidden may be empty or indexed by edge id). Conflicts are only
/// checked inside the part. Tries `random_passes` seeded random orders,
/// then one pass by descending degree inside the part.
inline StageColouring colour_small(const Hypergraph& h, const std::vector<EdgeId>& part, const ListAssignment& lists,
                                   const std::vector<std::vector<Colour>>& forbidden, std::uint64_t seed,
                                   std::size_t random_passes = 8) {
  if (lists.size() != h.edge_count()) throw std::invalid_argument("colour_small: lists do not cover the edge set");
  StageColouring out;
  out.colouring.assign(h.edge_count(), std::nullopt);
  auto nb = detail::part_neighbours(h, part);
  std::vector<std::vector<Colour>> allowed(h.edge_count());
  for (EdgeId e : part) allowed[e] = detail::allowed_colours(lists, forbidden, e);

  for (std::size_t a = 0; a < random_passes; ++a) {
    ++out.attempts;
    std::vector<EdgeId> order = part;
    std::mt19937_64 rng(seed + a);
    std::shuffle(order.begin(), order.end(), rng);
    PartialColouring phi(h.edge_count(), std::nullopt);
    auto stuck = detail::greedy_with_repair(order, nb, allowed, phi, out.repairs);
    if (!stuck) {
      out.ok = true;
      out.colouring = std::move(phi);
      out.method = "random-greedy";
      return out;
    }
  }
  ++out.attempts;
  std::vector<EdgeId> order = part;
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return nb[a].size() > nb[b].size(); });
  PartialColouring phi(h.edge_count(), std::nullopt);
  out.stuck = detail::greedy_with_repair(order, nb, allowed, phi, out.repairs);
  out.method = "degree-greedy";
  if (!out.stuck) {
    out.ok = true;
    out.colouring = std::move(phi);
  }
  return out;
}

struct SparseBlockReport {
  StageColouring result;
  std::size_t r = 0;     // min edge size in W
  std::size_t rmax = 0;  // max edge size in W
  bool window_ok = false;    // rmax <= (1 + alpha) r
  bool size_ok = false;      // r <= (1 - zeta) sqrt(n)
  bool codegree_ok = false;  // codegree of W <= t
  std::size_t colours_used = 0;
  Rational target;  // (1 - zeta/500) t n
  bool within_target = false;
};

/// Checks the sparse-block premises on W and colours W greedily along a
/// smallest-last order of its line graph. The target is reported, not enforced.
inline SparseBlockReport colour_sparse_block(const Hypergraph& h, const std::vector<EdgeId>& w,
                                             const ListAssignment& lists, std::size_t t, const Rational& alpha,
                                             const Rational& zeta) {
  SparseBlockReport rep;
  const std::size_t n = h.vertex_count();
  rep.target = (1 - zeta / 500) * Rational(BigInt(t)) * Rational(BigInt(n));
  rep.result.colouring.assign(h.edge_count(), std::nullopt);
  rep.result.method = "smallest-last-greedy";
  if (w.empty()) {
    rep.result.ok = rep.window_ok = rep.size_ok = rep.codegree_ok = true;
    rep.within_target = rep.target >= 0;
    return rep;
  }
  rep.r = h.edge_size(w.front());
  for (EdgeId e : w) {
    rep.r = std::min(rep.r, h.edge_size(e));
    rep.rmax = std::max(rep.rmax, h.edge_size(e));
  }
  rep.window_ok = Rational(BigInt(rep.rmax)) <= (1 + alpha) * Rational(BigInt(rep.r));
  rep.size_ok = at_most_scaled_sqrt(rep.r, 1 - zeta, n);
  rep.codegree_ok = max_codegree(spanning_subhypergraph(h, w)) <= t;

  auto nb = detail::part_neighbours(h, w);
  std::vector<std::size_t> deg(h.edge_count(), 0);
  std::vector<char> removed(h.edge_count(), 1);
  for (EdgeId e : w) {
    deg[e] = nb[e].size();
    removed[e] = 0;
  }
  std::vector<EdgeId> peel;
  for (std::size_t step = 0; step < w.size(); ++step) {
    EdgeId best = 0;
    bool found = false;
    for (EdgeId e : w)
      if (!removed[e] && (!found || deg[e] < deg[best])) { best = e; found = true; }
    removed[best] = 1;
    peel.push_back(best);
    for (EdgeId f : nb[best])
      if (!removed[f]) --deg[f];
  }
  std::reverse(peel.begin(), peel.end());
  std::vector<std::vector<Colour>> allowed(h.edge_count());
  for (EdgeId e : w) allowed[e] = lists.list(e);
  rep.result.attempts = 1;
  rep.result.stuck = detail::greedy_with_repair(peel, nb, allowed, rep.result.colouring, rep.result.repairs);
  rep.result.ok = !rep.result.stuck;
  std::vector<Colour> used;
  for (EdgeId e : w)
    if (rep.result.colouring[e]) used.push_back(*rep.result.colouring[e]);
  std::sort(used.begin(), used.end());
  rep.colours_used = static_cast<std::size_t>(std::unique(used.begin(), used.end()) - used.begin());
  rep.within_target = Rational(BigInt(rep.colours_used)) <= rep.target;
  return rep;
}

struct StageReport {
  std::string stage;
  std::string status;  // ok, failed, skipped, fallback
  std::size_t colours_used = 0;
  std::optional<std::map<std::string, bool>> certificate;
  std::uint64_t seed = 0;
  std::string detail;
};

struct PipelineResult {
  std::optional<EdgeColouring> colouring;
  std::vector<StageReport> stages;
  std::string failed_stage;
  std::string route;  // which ladder step produced the colouring
  std::size_t colours_used = 0;
};

struct StabilityParams {
  Rational delta = Rational(1, 10);
  Rational sigma = Rational(1, 50);
  std::optional<std::size_t> r0;  // default ceil(sqrt(n)) + 2
  std::size_t r1 = 4;
  std::uint64_t seed = 0;
};

struct MainParams {
  Rational eps = Rational(1, 4);
  Rational delta = Rational(1, 10);
  Rational gamma = Rational(1, 8);
  Rational sigma = Rational(1, 50);
  std::optional<std::size_t> r0;
  std::size_t r1 = 4;
  std::size_t exact_budget = 24;
  std::uint64_t time_cap_ms = 60'000;
  std::uint64_t seed = 0;
  /// Lists of size tn - 1 on a non-intersecting H.
  bool non_intersecting_variant = false;
};

inline std::vector<EdgeId> all_edges(const Hypergraph& h) {
  std::vector<EdgeId> ids(h.edge_count());
  for (EdgeId e = 0; e < h.edge_count(); ++e) ids[e] = e;
  return ids;
}

inline std::size_t default_r0(std::size_t n) {
  std::size_t s = 0;
  while ((s + 1) * (s + 1) <= n) ++s;
  if (s * s < n) ++s;
  return s + 2;
}

namespace detail {

inline std::size_t count_colours(const PartialColouring& phi, const std::vector<EdgeId>& part) {
  std::vector<Colour> used;
  for (EdgeId e : part)
    if (phi[e]) used.push_back(*phi[e]);
  std::sort(used.begin(), used.end());
  return static_cast<std::size_t>(std::unique(used.begin(), used.end()) - used.begin());
}

inline void merge(PartialColouring& into, const PartialColouring& from, const std::vector<EdgeId>& part) {
  for (EdgeId e : part) into[e] = from[e];
}

inline std::vector<EdgeId> globalize(const std::vector<EdgeId>& local, const std::vector<EdgeId>& ids) {
  std::vector<EdgeId> out;
  out.reserve(local.size());
  for (EdgeId e : local) out.push_back(ids[e]);
  return out;
}

inline std::vector<std::vector<Colour>> neighbour_colours(const Hypergraph& h, const std::vector<EdgeId>& part,
                                                          const std::vector<EdgeId>& from, const PartialColouring& phi) {
  std::vector<char> src(h.edge_count(), 0);
  for (EdgeId f : from) src[f] = 1;
  std::vector<std::vector<Colour>> out(h.edge_count());
  for (EdgeId e : part)
    for (EdgeId f : edge_neighbourhood(h, e))
      if (src[f] && phi[f]) out[e].push_back(*phi[f]);
  return out;
}

inline EdgeColouring finish(const Hypergraph& h, const ListAssignment& lists, const PartialColouring& phi,
                            PipelineResult& res, const std::string& route) {
  EdgeColouring out(h.edge_count());
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    if (!phi[e]) throw InternalError(route + ": edge " + std::to_string(e) + " left uncoloured");
    out[e] = *phi[e];
  }
  auto check = validate_colouring(h, out, lists);
  if (!check.valid) throw InternalError(route + ": assembled colouring fails validation");
  res.route = route;
  res.failed_stage.clear();
  res.colours_used = check.colour_count;
  res.stages.push_back({"validate", "ok", check.colour_count, std::nullopt, 0, route});
  return out;
}

inline void fail(PipelineResult& res, StageReport rep) {
  rep.status = "failed";
  res.failed_stage = rep.stage;
  res.stages.push_back(std::move(rep));
}

inline std::string edge_note(const char* what, std::optional<EdgeId> e) {
  return e ? std::string(what) + " at edge " + std::to_string(*e) : std::string(what);
}

}  // namespace detail

/// Stability route: split by size, reserve R, colour lrg from C \ R through
/// the (H2, W, H1) partition, med from C ∩ R, sml from C \ R minus the
/// colours of meeting lrg edges.
inline PipelineResult colour_stability(const Hypergraph& h, std::size_t t, const ListAssignment& lists,
                                       const StabilityParams& p = {}) {
  if (p.delta <= 0 || p.delta >= 1) throw std::domain_error("colour_stability: delta must lie in (0,1)");
  if (p.sigma <= 0 || p.sigma >= Rational(1, 2)) throw std::domain_error("colour_stability: sigma must lie in (0,1/2)");
  if (lists.size() != h.edge_count()) throw std::invalid_argument("colour_stability: lists do not cover the edge set");
  PipelineResult res;
  const std::size_t n = h.vertex_count();
  const std::size_t m = h.edge_count();
  const std::size_t r0 = p.r0 ? *p.r0 : default_r0(n);
  SizeSplit split = split_by_size(h, r0, p.r1);
  res.stages.push_back({"split", "ok", 0, std::nullopt, 0,
                        "sml=" + std::to_string(split.sml.size()) + " med=" + std::to_string(split.med.size()) +
                            " lrg=" + std::to_string(split.lrg.size()) + " r0=" + std::to_string(r0) +
                            " r1=" + std::to_string(p.r1)});

  std::vector<Colour> R;
  if (split.med.empty() && split.lrg.empty()) {
    res.stages.push_back({"reserve", "skipped", 0, std::nullopt, p.seed, "only small edges, R is empty"});
  } else {
    auto outer = reserve_colours(lists, 2 * p.sigma, p.sigma / 2, p.seed);
    if (!outer.reserved) {
      detail::fail(res, {"reserve", "", 0, std::nullopt, p.seed,
                         detail::edge_note("no draw met the window", outer.last_failing_edge) + " after " +
                             std::to_string(outer.attempts) + " attempts"});
      return res;
    }
    R = outer.reserved->R;
    res.stages.push_back({"reserve", "ok", 0, std::nullopt, p.seed,
                          "|R|=" + std::to_string(R.size()) + " retries=" + std::to_string(outer.reserved->retries_used)});
  }

  PartialColouring phi(m, std::nullopt);
  ListAssignment c_lrg = split_lists(lists, R, split.lrg, false);

  if (!split.lrg.empty()) {
    Hypergraph hl = spanning_subhypergraph(h, split.lrg);
    PartitionCertificate cert = partition_stability(hl, t, p.sigma, p.delta);
    std::vector<EdgeId> order = detail::globalize(cert.ordering.sequence(), split.lrg);
    std::vector<EdgeId> w = detail::globalize(cert.parts["W"], split.lrg);
    res.stages.push_back({"lrg:partition", cert.all_flags() ? "ok" : "flagged", 0, cert.flags, 0,
                          cert.trivial ? "case A, H1 = lrg" : "case B, |W|=" + std::to_string(w.size())});

    std::string skip_reason;
    std::optional<Rational> zeta;
    if (w.empty()) {
      skip_reason = "W is empty";
    } else {
      std::size_t r_w = h.edge_size(w.front());
      for (EdgeId e : w) r_w = std::min(r_w, h.edge_size(e));
      Enclosure root = root_enclosure(Rational(BigInt(n)), 2);
      Rational z = 1 - Rational(BigInt(r_w)) / root.lo;
      if (z <= 0) skip_reason = "zeta = 1 - r'/sqrt(n) is not positive";
      else zeta = z;
    }
    std::optional<ReservedColours> inner;
    if (zeta) {
      ListAssignment lrg_only = restrict_to(c_lrg, split.lrg);
      std::vector<std::vector<Colour>> sub;
      for (EdgeId e : split.lrg) sub.push_back(lrg_only.list(e));
      auto got = reserve_colours(ListAssignment(std::move(sub)), *zeta / 900, *zeta / 10000, p.seed + 1);
      if (got.reserved) inner = got.reserved;
      else skip_reason = "inner reservation failed after " + std::to_string(got.attempts) + " attempts";
    }

    if (inner) {
      std::vector<EdgeId> h2 = detail::globalize(cert.parts["H2"], split.lrg);
      std::vector<EdgeId> h1 = detail::globalize(cert.parts["H1"], split.lrg);
      ListAssignment w_lists = split_lists(c_lrg, inner->R, w, false);
      auto block = colour_sparse_block(h, w, w_lists, t, Rational(1, 4), *zeta);
      std::map<std::string, bool> prem{{"window", block.window_ok},
                                       {"size", block.size_ok},
                                       {"codegree", block.codegree_ok},
                                       {"target", block.within_target}};
      if (!block.result.ok) {
        detail::fail(res, {"lrg:W", "", 0, prem, 0, detail::edge_note("greedy stuck", block.result.stuck)});
        return res;
      }
      detail::merge(phi, block.result.colouring, w);
      res.stages.push_back({"lrg:W", "ok", block.colours_used, prem, 0, "zeta=" + to_string(*zeta)});

      ListAssignment h2_lists = split_lists(c_lrg, inner->R, h2, true);
      std::vector<EdgeId> h2_seq;
      for (EdgeId e : order)
        if (std::binary_search(h2.begin(), h2.end(), e)) h2_seq.push_back(e);
      if (auto bad = greedy_extend(h, h2_seq, h2_lists, phi)) {
        detail::fail(res, {"lrg:H2", "", 0, std::nullopt, p.seed + 1, detail::edge_note("greedy stuck", bad)});
        return res;
      }
      res.stages.push_back({"lrg:H2", "ok", detail::count_colours(phi, h2), std::nullopt, p.seed + 1, ""});

      std::vector<EdgeId> h1_seq;
      for (EdgeId e : order)
        if (std::binary_search(h1.begin(), h1.end(), e)) h1_seq.push_back(e);
      if (auto bad = greedy_extend(h, h1_seq, c_lrg, phi)) {
        detail::fail(res, {"lrg:H1", "", 0, std::nullopt, 0, detail::edge_note("greedy stuck", bad)});
        return res;
      }
      res.stages.push_back({"lrg:H1", "ok", detail::count_colours(phi, h1), std::nullopt, 0, ""});
    } else {
      const bool plain = w.empty();
      if (auto bad = greedy_extend(h, order, c_lrg, phi)) {
        detail::fail(res, {plain ? "lrg:H1" : "lrg:ordered-greedy", "", 0, std::nullopt, 0,
                           detail::edge_note("greedy stuck", bad) + (plain ? "" : "; " + skip_reason)});
        return res;
      }
      res.stages.push_back({plain ? "lrg:H1" : "lrg:ordered-greedy", plain ? "ok" : "fallback",
                            detail::count_colours(phi, split.lrg), std::nullopt, 0, skip_reason});
    }
  } else {
    res.stages.push_back({"lrg", "skipped", 0, std::nullopt, 0, "no large edges"});
  }

  if (!split.med.empty()) {
    ListAssignment med_lists = split_lists(lists, R, split.med, true);
    auto got = colour_small(h, split.med, med_lists, {}, p.seed + 2);
    if (!got.ok) {
      detail::fail(res, {"med", "", 0, std::nullopt, p.seed + 2, detail::edge_note(got.method.c_str(), got.stuck)});
      return res;
    }
    detail::merge(phi, got.colouring, split.med);
    res.stages.push_back({"med", "ok", detail::count_colours(phi, split.med), std::nullopt, p.seed + 2, got.method});
  } else {
    res.stages.push_back({"med", "skipped", 0, std::nullopt, 0, "no medium edges"});
  }

  if (!split.sml.empty()) {
    ListAssignment sml_lists = split_lists(lists, R, split.sml, false);
    auto forbidden = detail::neighbour_colours(h, split.sml, split.lrg, phi);
    auto got = colour_small(h, split.sml, sml_lists, forbidden, p.seed + 3);
    if (!got.ok) {
      detail::fail(res, {"sml", "", 0, std::nullopt, p.seed + 3, detail::edge_note(got.method.c_str(), got.stuck)});
      return res;
    }
    detail::merge(phi, got.colouring, split.sml);
    res.stages.push_back({"sml", "ok", detail::count_colours(phi, split.sml), std::nullopt, p.seed + 3, got.method});
  } else {
    res.stages.push_back({"sml", "skipped", 0, std::nullopt, 0, "no small edges"});
  }
  res.colouring = detail::finish(h, lists, phi, res, "stability");
  return res;
}

namespace detail {

// Extremal route: lrg keeps C and med gets C ∩ R; partition med ∪ lrg,
// colour H3 by the extremal ladder, extend over H2 then H1, then sml from
// C \ R minus lrg-neighbour colours.
inline bool extremal_route(const Hypergraph& h, std::size_t t, const ListAssignment& lists, const MainParams& p,
                           std::size_t r0, PipelineResult& res) {
  const std::size_t m = h.edge_count();
  SizeSplit split = split_by_size(h, r0, p.r1);
  auto outer = reserve_colours(lists, 2 * p.gamma, p.gamma / 2, p.seed + 10);
  if (!outer.reserved) {
    fail(res, {"extremal:reserve", "", 0, std::nullopt, p.seed + 10,
               edge_note("no draw met the window", outer.last_failing_edge)});
    return false;
  }
  const auto& R = outer.reserved->R;
  res.stages.push_back({"extremal:reserve", "ok", 0, std::nullopt, p.seed + 10,
                        "|R|=" + std::to_string(R.size()) + " retries=" + std::to_string(outer.reserved->retries_used)});

  std::vector<std::vector<Colour>> c1(m);
  for (EdgeId e : split.lrg) c1[e] = lists.list(e);
  ListAssignment med_c1 = split_lists(lists, R, split.med, true);
  for (EdgeId e : split.med) c1[e] = med_c1.list(e);
  ListAssignment C1(std::move(c1));

  PartialColouring phi(m, std::nullopt);
  std::vector<EdgeId> big = split.med;
  big.insert(big.end(), split.lrg.begin(), split.lrg.end());
  std::sort(big.begin(), big.end());
  if (!big.empty() && h.vertex_count() >= 2) {
    Hypergraph hb = spanning_subhypergraph(h, big);
    PartitionCertificate cert = partition_extremal(hb, t, p.delta, p.gamma, r0);
    res.stages.push_back({"extremal:partition", cert.all_flags() ? "ok" : "flagged", 0, cert.flags, 0,
                          cert.trivial ? "case A, H1 = med ∪ lrg" : "case B"});
    std::vector<EdgeId> h3 = globalize(cert.parts["H3"], big);
    std::vector<EdgeId> order = globalize(cert.ordering.sequence(), big);
    if (!h3.empty()) {
      Hypergraph sub = spanning_subhypergraph(h, h3);
      std::vector<std::vector<Colour>> sl;
      for (EdgeId e : h3) sl.push_back(C1.list(e));
      ExtremalParams ep;
      ep.delta = 2 * p.delta;
      ep.exact_budget.time_cap_ms = p.time_cap_ms;
      auto rep = colour_extremal(sub, t, ListAssignment(std::move(sl)), ep);
      if (!rep.colouring) {
        fail(res, {"extremal:H3", "", 0, std::nullopt, 0, rep.log.empty() ? "no rung succeeded" : rep.log.back()});
        return false;
      }
      for (std::size_t j = 0; j < h3.size(); ++j) phi[h3[j]] = (*rep.colouring)[j];
      res.stages.push_back({"extremal:H3", "ok", rep.colours_used, std::nullopt, 0,
                            "rung " + std::to_string(rep.rung)});
    }
    std::vector<EdgeId> rest;
    for (EdgeId e : order)
      if (!std::binary_search(h3.begin(), h3.end(), e)) rest.push_back(e);
    if (auto bad = greedy_extend(h, rest, C1, phi)) {
      fail(res, {"extremal:H2+H1", "", 0, std::nullopt, 0, edge_note("greedy stuck", bad)});
      return false;
    }
    res.stages.push_back({"extremal:H2+H1", "ok", count_colours(phi, rest), std::nullopt, 0, ""});
  }
  if (!split.sml.empty()) {
    ListAssignment sml_lists = split_lists(lists, R, split.sml, false);
    auto forbidden = neighbour_colours(h, split.sml, split.lrg, phi);
    auto got = colour_small(h, split.sml, sml_lists, forbidden, p.seed + 11);
    if (!got.ok) {
      fail(res, {"extremal:sml", "", 0, std::nullopt, p.seed + 11, edge_note(got.method.c_str(), got.stuck)});
      return false;
    }
    merge(phi, got.colouring, split.sml);
    res.stages.push_back({"extremal:sml", "ok", count_colours(phi, split.sml), std::nullopt, p.seed + 11, got.method});
  }
  res.colouring = finish(h, lists, phi, res, "extremal");
  return true;
}

}  // namespace detail

/// Ladder: stability route, then the extremal route, then the exact list
/// colouring search when e(H) <= exact_budget.
inline PipelineResult colour_main(const Hypergraph& h, std::size_t t, const ListAssignment& lists,
                                  const MainParams& p = {}) {
  if (p.eps <= 0 || p.eps >= 1) throw std::domain_error("colour_main: eps must lie in (0,1)");
  if (p.delta <= 0 || p.delta >= 1) throw std::domain_error("colour_main: delta must lie in (0,1)");
  if (p.gamma <= 0 || p.gamma > Rational(1, 2)) throw std::domain_error("colour_main: gamma must lie in (0,1/2]");
  if (lists.size() != h.edge_count()) throw std::invalid_argument("colour_main: lists do not cover the edge set");
  if (p.non_intersecting_variant && h.edge_count() > 0 && predicates(h).is_intersecting)
    throw std::domain_error("colour_main: the tn - 1 variant needs a non-intersecting hypergraph");
  const std::size_t n = h.vertex_count();
  const std::size_t r0 = p.r0 ? *p.r0 : default_r0(n);

  PipelineResult res;
  {
    const std::size_t need = t * n - (p.non_intersecting_variant && t * n > 0 ? 1 : 0);
    DegreeStats ds = degree_stats(h);
    std::map<std::string, bool> prem{
        {"codegree", ds.max_codegree <= t},
        {"lists", lists.min_size() >= need},
        {"max_degree", Rational(BigInt(ds.max_degree)) <= (1 - p.eps) * Rational(BigInt(t * n))}};
    res.stages.push_back({"premises", "ok", 0, prem, 0, "expected list size " + std::to_string(need)});
  }

  StabilityParams sp{p.delta, p.sigma, r0, p.r1, p.seed};
  PipelineResult stab = colour_stability(h, t, lists, sp);
  for (auto& s : stab.stages) {
    s.stage = "stability:" + s.stage;
    res.stages.push_back(s);
  }
  if (stab.colouring) {
    res.colouring = std::move(stab.colouring);
    res.route = stab.route;
    res.colours_used = stab.colours_used;
    return res;
  }

  if (detail::extremal_route(h, t, lists, p, r0, res)) return res;

  if (h.edge_count() <= p.exact_budget) {
    OracleBudget b{p.exact_budget, std::max<std::size_t>(64, lists.max_size()), p.time_cap_ms};
    auto ex = exact_list_colourable(h, lists, b);
    if (ex.answer == ListAnswer::Yes) {
      PartialColouring phi(h.edge_count());
      for (EdgeId e = 0; e < h.edge_count(); ++e) phi[e] = (*ex.witness)[e];
      res.stages.push_back({"exact", "ok", detail::count_colours(phi, all_edges(h)), std::nullopt, 0,
                            std::to_string(ex.nodes) + " nodes"});
      res.colouring = detail::finish(h, lists, phi, res, "exact");
      return res;
    }
    detail::fail(res, {"exact", "", 0, std::nullopt, 0,
                       ex.answer == ListAnswer::No ? "no list colouring exists" : "budget exceeded: " + ex.reason});
    return res;
  }
  detail::fail(res, {"exact", "", 0, std::nullopt, 0,
                     "skipped: " + std::to_string(h.edge_count()) + " edges exceed the budget of " +
                         std::to_string(p.exact_budget)});
  return res;
}

}  // namespace hyperchrom

#endif  // HYPERCHROM_PIPELINE_HPP
