#ifndef HYPERCHROM_EXTREMAL_HPP
#define HYPERCHROM_EXTREMAL_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperchrom/core.hpp"
#include "hyperchrom/hypergraph.hpp"
#include "hyperchrom/matching.hpp"
#include "hyperchrom/oracle.hpp"
#include "hyperchrom/ordering.hpp"
#include "hyperchrom/rational.hpp"

namespace hyperchrom {

/// |N(e) ∩ N(f)| counted over edge ids.
inline std::size_t common_neighbourhood_size(const Hypergraph& h, EdgeId e, EdgeId f) {
  auto ne = edge_neighbourhood(h, e);
  auto nf = edge_neighbourhood(h, f);
  std::vector<EdgeId> common;
  std::set_intersection(ne.begin(), ne.end(), nf.begin(), nf.end(), std::back_inserter(common));
  return common.size();
}

/// {e, f} is t-useful: they intersect and |N(e) ∩ N(f)| <= tn - 3.
inline bool is_t_useful(const Hypergraph& h, std::size_t t, EdgeId e, EdgeId f) {
  if (e == f) throw std::invalid_argument("is_t_useful: e and f must be distinct");
  if (e >= h.edge_count() || f >= h.edge_count()) throw std::out_of_range("is_t_useful: edge id out of range");
  if (!h.intersects(e, f)) return false;
  const auto tn = static_cast<std::int64_t>(t * h.vertex_count());
  return static_cast<std::int64_t>(common_neighbourhood_size(h, e, f)) <= tn - 3;
}

enum class MatchingStrategy { Greedy, Maximum };

/// Greedy: first fit over pairs (e, f) in lexicographic id order.
/// Maximum: augmenting paths on the complement of L(H).
inline ComplementMatching maximal_complement_matching(const Hypergraph& h, MatchingStrategy strategy) {
  ComplementMatching out;
  if (strategy == MatchingStrategy::Maximum) {
    out = maximum_complement_matching(h);
  } else {
    std::vector<char> used(h.edge_count(), 0);
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      if (used[e]) continue;
      for (EdgeId f = e + 1; f < h.edge_count(); ++f)
        if (!used[f] && !h.intersects(e, f)) {
          used[e] = used[f] = 1;
          out.pairs.emplace_back(e, f);
          break;
        }
    }
  }
  if (auto problem = complement_matching_problem(h, out); !problem.empty())
    throw InternalError("maximal_complement_matching: " + problem);
  return out;
}

namespace detail {

// Perfect system of distinct representatives for `items` from their lists
// (Kuhn's augmenting paths). Returns colour per item or nullopt.
inline std::optional<std::vector<Colour>> distinct_representatives(const std::vector<std::vector<Colour>>& lists) {
  std::vector<Colour> palette;
  for (const auto& l : lists) palette.insert(palette.end(), l.begin(), l.end());
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  auto index = [&](Colour c) {
    return static_cast<std::size_t>(std::lower_bound(palette.begin(), palette.end(), c) - palette.begin());
  };
  std::vector<std::int64_t> owner(palette.size(), -1);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) -> bool {
    for (Colour c : lists[i]) {
      std::size_t ci = index(c);
      if (seen[ci]) continue;
      seen[ci] = 1;
      if (owner[ci] < 0 || augment(static_cast<std::size_t>(owner[ci]))) {
        owner[ci] = static_cast<std::int64_t>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < lists.size(); ++i) {
    seen.assign(palette.size(), 0);
    if (!augment(i)) return std::nullopt;
  }
  std::vector<Colour> out(lists.size());
  for (std::size_t ci = 0; ci < palette.size(); ++ci)
    if (owner[ci] >= 0) out[static_cast<std::size_t>(owner[ci])] = palette[ci];
  return out;
}

}  // namespace detail

/// List colouring with colour classes given by N (pairs) and singletons.
/// While some remaining pair has a colour common to both lists, both edges
/// take the smallest such colour (lowest pair first) and it leaves every
/// other list. Once no pair shares a colour, the remaining edges receive
/// distinct colours from a system of distinct representatives. When every
/// list has at least e(H) - |N| colours each step keeps that invariant for
/// the remaining classes, and Hall's condition holds at the end.
inline EdgeColouring colour_from_matching(const Hypergraph& h, const ComplementMatching& n,
                                          const ListAssignment& lists) {
  const std::size_t m = h.edge_count();
  if (lists.size() != m) throw std::invalid_argument("colour_from_matching: lists do not cover the edge set");
  if (auto problem = complement_matching_problem(h, n); !problem.empty())
    throw std::invalid_argument("colour_from_matching: " + problem);
  const std::size_t need = m - n.size();
  for (EdgeId e = 0; e < m; ++e)
    if (lists.list(e).size() < need)
      throw std::invalid_argument("colour_from_matching: edge " + std::to_string(e) + " has " +
                                  std::to_string(lists.list(e).size()) + " colours, needs e(H) - |N| = " +
                                  std::to_string(need));
  std::vector<std::vector<Colour>> avail = lists.lists();
  EdgeColouring phi(m, 0);
  std::vector<char> done(m, 0);
  std::vector<char> pair_done(n.size(), 0);
  auto drop = [&](Colour c) {
    for (EdgeId e = 0; e < m; ++e)
      if (!done[e]) avail[e].erase(std::remove(avail[e].begin(), avail[e].end(), c), avail[e].end());
  };
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (pair_done[i]) continue;
      auto [e, f] = n.pairs[i];
      std::vector<Colour> common;
      std::set_intersection(avail[e].begin(), avail[e].end(), avail[f].begin(), avail[f].end(),
                            std::back_inserter(common));
      if (common.empty()) continue;
      phi[e] = phi[f] = common.front();
      done[e] = done[f] = 1;
      pair_done[i] = 1;
      drop(common.front());
      progress = true;
      break;
    }
  }
  std::vector<EdgeId> rest;
  std::vector<std::vector<Colour>> rest_lists;
  for (EdgeId e = 0; e < m; ++e)
    if (!done[e]) {
      rest.push_back(e);
      rest_lists.push_back(avail[e]);
    }
  auto sdr = detail::distinct_representatives(rest_lists);
  if (!sdr) throw InternalError("colour_from_matching: no distinct representatives although lists are large enough");
  for (std::size_t i = 0; i < rest.size(); ++i) phi[rest[i]] = (*sdr)[i];
  if (!validate_colouring(h, phi, lists).valid) throw InternalError("colour_from_matching: produced an invalid colouring");
  return phi;
}

/// e_1..e_{2r+2} with {e_{2i-1}, e_{2i}} t-useful; witnesses are the
/// vertices the search used to find each pair, when it used one.
struct UsefulFamily {
  std::vector<EdgeId> edges;
  std::vector<std::optional<Vertex>> pair_witnesses;
};

/// Empty when `family` is valid for (h, t): 2r+2 distinct pairwise
/// intersecting edges, r = e(H) - tn >= 0, consecutive pairs t-useful.
inline std::string useful_family_problem(const Hypergraph& h, std::size_t t, const UsefulFamily& family) {
  const auto m = static_cast<std::int64_t>(h.edge_count());
  const auto r = m - static_cast<std::int64_t>(t * h.vertex_count());
  if (r < 0) return "e(H) < tn, so r = e(H) - tn is negative";
  if (static_cast<std::int64_t>(family.edges.size()) != 2 * r + 2)
    return "family has " + std::to_string(family.edges.size()) + " edges, expected 2r+2 = " + std::to_string(2 * r + 2);
  std::vector<EdgeId> sorted = family.edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return "family repeats an edge";
  if (!sorted.empty() && sorted.back() >= h.edge_count()) return "family names an edge outside the hypergraph";
  for (std::size_t i = 0; i < family.edges.size(); ++i)
    for (std::size_t j = i + 1; j < family.edges.size(); ++j)
      if (!h.intersects(family.edges[i], family.edges[j])) return "family edges are not pairwise intersecting";
  for (std::size_t i = 0; i + 1 < family.edges.size(); i += 2)
    if (!is_t_useful(h, t, family.edges[i], family.edges[i + 1]))
      return "pair (" + std::to_string(family.edges[i]) + ", " + std::to_string(family.edges[i + 1]) +
             ") is not t-useful";
  return {};
}

struct UsefulCoverResult {
  EdgeColouring colouring;
  ComplementMatching matching;  // size r + 1
  std::vector<EdgeId> f;        // f_1..f_{r+1}
};

/// Picks f_i (lowest id) in S = H \ ((N(e_{2i-1}) ∩ N(e_{2i})) ∪ {e_{2i-1},
/// e_{2i}, f_1..f_{i-1}}), pairs it with the family edge it misses (e_{2i-1}
/// if possible), and colours from the resulting size-(r+1) matching.
inline UsefulCoverResult useful_cover_colour(const Hypergraph& h, std::size_t t, const UsefulFamily& family,
                                             const ListAssignment& lists) {
  if (auto problem = useful_family_problem(h, t, family); !problem.empty())
    throw std::invalid_argument("useful_cover_colour: " + problem);
  if (lists.size() != h.edge_count()) throw std::invalid_argument("useful_cover_colour: lists do not cover the edge set");
  const std::size_t tn = t * h.vertex_count();
  if (lists.min_size() < tn) throw std::invalid_argument("useful_cover_colour: every list needs at least tn colours");
  UsefulCoverResult out;
  std::vector<char> taken(h.edge_count(), 0);
  for (EdgeId e : family.edges) taken[e] = 1;
  for (std::size_t i = 0; i + 1 < family.edges.size(); i += 2) {
    EdgeId a = family.edges[i], b = family.edges[i + 1];
    std::optional<EdgeId> pick;
    for (EdgeId f = 0; f < h.edge_count() && !pick; ++f)
      if (!taken[f] && (!h.intersects(f, a) || !h.intersects(f, b))) pick = f;
    if (!pick)
      throw InternalError("useful_cover_colour: S is empty at step " + std::to_string(i / 2 + 1) +
                          " although the family is valid");
    taken[*pick] = 1;
    out.f.push_back(*pick);
    EdgeId partner = h.intersects(*pick, a) ? b : a;
    out.matching.pairs.emplace_back(std::min(*pick, partner), std::max(*pick, partner));
  }
  std::sort(out.matching.pairs.begin(), out.matching.pairs.end());
  out.colouring = colour_from_matching(h, out.matching, lists);
  return out;
}

/// k with k^2 - k + 2 <= n <= k^2 + k + 1 (n >= 2).
inline std::size_t extremal_k(std::size_t n) {
  if (n < 2) throw std::domain_error("extremal_k: n must be >= 2");
  std::size_t k = 1;
  while (k * k + k + 1 < n) ++k;
  return k;
}

struct UsefulSearch {
  std::optional<UsefulFamily> family;
  std::string branch;  // branch that produced the family, empty if none
  std::vector<std::string> notes;
  std::int64_t r = 0;
  std::size_t k = 0;
  std::size_t a_minus = 0, a_plus = 0, b = 0;
  std::size_t matching_size = 0;
};

namespace detail {

// Pairs up to `want` disjoint pairs from `pool` (in order) satisfying
// `admissible` and certified t-useful.
inline std::vector<std::pair<EdgeId, EdgeId>> pair_up(const Hypergraph& h, std::size_t t,
                                                      const std::vector<EdgeId>& pool, std::size_t want,
                                                      const std::function<bool(EdgeId, EdgeId)>& admissible) {
  std::vector<std::pair<EdgeId, EdgeId>> out;
  std::vector<char> used(pool.size(), 0);
  for (std::size_t i = 0; i < pool.size() && out.size() < want; ++i) {
    if (used[i]) continue;
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      if (used[j] || !h.intersects(pool[i], pool[j]) || !admissible(pool[i], pool[j])) continue;
      if (!is_t_useful(h, t, pool[i], pool[j])) continue;
      used[i] = used[j] = 1;
      out.emplace_back(pool[i], pool[j]);
      break;
    }
  }
  return out;
}

inline UsefulFamily family_from(const std::vector<std::pair<EdgeId, EdgeId>>& pairs,
                                const std::vector<std::optional<Vertex>>& witnesses = {}) {
  UsefulFamily f;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    f.edges.push_back(pairs[i].first);
    f.edges.push_back(pairs[i].second);
    f.pair_witnesses.push_back(i < witnesses.size() ? witnesses[i] : std::nullopt);
  }
  return f;
}

}  // namespace detail

/// Executable form of the extremal-case branch analysis. With k the integer
/// with k^2-k+2 <= n <= k^2+k+1, A- = sizes <= k-1, A+ = size k, A = A- ∪ A+,
/// B = sizes >= k+1 and N a maximum matching in the complement of L(H):
///   small-A:    |A| <= t/(2 delta); pair any intersecting edges of A \ V(N)
///   small-A-:   |A-| <= t/(4 delta); pairs in A \ V(N) with small intersection
///   A+-vs-A-:   |A+| <= alpha sqrt(n) |A-|; pairs in A- \ V(N), small intersection
///   bad-vertex: V_bad = vertices in >= t/(4 delta) edges of A-; A+_bad =
///               edges of A+ with |V(e) ∩ V_bad|^2 >= delta n; for each pair a
///               vertex w outside V_bad with d_{A_i}(w) > 2t/alpha^2 and two
///               edges of A_i through w meeting in <= alpha k vertices.
/// Each branch runs only when its gate holds, every pair is certified with
/// is_t_useful, and the first branch yielding r + 1 pairs wins.
inline UsefulSearch find_useful_family(const Hypergraph& h, std::size_t t, const Rational& alpha,
                                       const Rational& delta) {
  if (alpha <= 0 || alpha >= 1) throw std::domain_error("find_useful_family: alpha must lie in (0,1)");
  if (delta <= 0 || delta >= 1) throw std::domain_error("find_useful_family: delta must lie in (0,1)");
  UsefulSearch out;
  const std::size_t n = h.vertex_count();
  if (n < 2) {
    out.notes.push_back("n < 2");
    return out;
  }
  const std::size_t m = h.edge_count();
  out.k = extremal_k(n);
  out.r = static_cast<std::int64_t>(m) - static_cast<std::int64_t>(t * n);
  if (out.r < 0) {
    out.notes.push_back("e(H) < tn: no family of size 2r+2 exists");
    return out;
  }
  const std::size_t want = static_cast<std::size_t>(out.r) + 1;
  const std::size_t k = out.k;
  std::vector<EdgeId> a_minus, a_plus, a_all;
  for (EdgeId e = 0; e < m; ++e) {
    std::size_t s = h.edge_size(e);
    if (s + 1 <= k) a_minus.push_back(e);
    else if (s == k) a_plus.push_back(e);
    else ++out.b;
    if (s <= k) a_all.push_back(e);
  }
  out.a_minus = a_minus.size();
  out.a_plus = a_plus.size();
  const ComplementMatching nm = maximum_complement_matching(h);
  out.matching_size = nm.size();
  std::vector<char> in_vn(m, 0);
  for (auto [e, f] : nm.pairs) in_vn[e] = in_vn[f] = 1;
  auto outside_vn = [&](const std::vector<EdgeId>& part) {
    std::vector<EdgeId> keep;
    for (EdgeId e : part)
      if (!in_vn[e]) keep.push_back(e);
    return keep;
  };
  const Rational tr{BigInt(t)};
  auto small_intersection = [&](EdgeId e, EdgeId f) {
    return Rational(BigInt(h.intersection_size(e, f))) <= alpha * Rational(BigInt(std::max(h.edge_size(e), h.edge_size(f))));
  };
  auto finish = [&](const std::string& branch, const std::vector<std::pair<EdgeId, EdgeId>>& pairs,
                    const std::vector<std::optional<Vertex>>& witnesses = {}) {
    if (pairs.size() < want) {
      out.notes.push_back(branch + ": gate open but only " + std::to_string(pairs.size()) + " of " +
                          std::to_string(want) + " certified pairs found");
      return false;
    }
    UsefulFamily fam = detail::family_from(pairs, witnesses);
    if (auto problem = useful_family_problem(h, t, fam); !problem.empty()) {
      out.notes.push_back(branch + ": rejected (" + problem + ")");
      return false;
    }
    out.family = std::move(fam);
    out.branch = branch;
    return true;
  };

  if (Rational(BigInt(a_all.size())) <= tr / (2 * delta)) {
    if (finish("small-A", detail::pair_up(h, t, outside_vn(a_all), want, [](EdgeId, EdgeId) { return true; })))
      return out;
  } else {
    out.notes.push_back("small-A: gate closed (|A| > t/(2 delta))");
  }
  if (Rational(BigInt(a_minus.size())) <= tr / (4 * delta)) {
    if (finish("small-A-", detail::pair_up(h, t, outside_vn(a_all), want, small_intersection))) return out;
  } else {
    out.notes.push_back("small-A-: gate closed (|A-| > t/(4 delta))");
  }
  {
    // |A+| <= alpha sqrt(n) |A-|  <=>  |A+|^2 <= alpha^2 n |A-|^2
    Rational lhs = Rational(BigInt(a_plus.size())) * Rational(BigInt(a_plus.size()));
    Rational rhs = alpha * alpha * Rational(BigInt(n)) * Rational(BigInt(a_minus.size())) * Rational(BigInt(a_minus.size()));
    if (!a_minus.empty() && lhs <= rhs) {
      if (finish("A+-vs-A-", detail::pair_up(h, t, outside_vn(a_minus), want, small_intersection))) return out;
    } else {
      out.notes.push_back("A+-vs-A-: gate closed (|A+| > alpha sqrt(n) |A-|)");
    }
  }
  // Bad-vertex search over A+.
  std::vector<char> bad(n, 0);
  {
    std::vector<std::size_t> d_minus(n, 0);
    for (EdgeId e : a_minus)
      for (Vertex v : h.edge(e)) ++d_minus[v];
    for (Vertex v = 0; v < n; ++v)
      if (Rational(BigInt(d_minus[v])) >= tr / (4 * delta)) bad[v] = 1;
  }
  std::vector<char> usable(m, 0);
  for (EdgeId e : a_plus) {
    std::size_t c = 0;
    for (Vertex v : h.edge(e)) c += bad[v];
    if (Rational(BigInt(c * c)) < delta * Rational(BigInt(n)) && !in_vn[e]) usable[e] = 1;
  }
  const Rational degree_gate = 2 * tr / (alpha * alpha);
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
  std::vector<std::optional<Vertex>> witnesses;
  while (pairs.size() < want) {
    std::vector<std::size_t> d_ai(n, 0);
    for (EdgeId e = 0; e < m; ++e)
      if (usable[e])
        for (Vertex v : h.edge(e)) ++d_ai[v];
    std::optional<std::pair<EdgeId, EdgeId>> found;
    Vertex witness = 0;
    for (Vertex w = 0; w < n && !found; ++w) {
      if (bad[w] || Rational(BigInt(d_ai[w])) <= degree_gate) continue;
      std::vector<EdgeId> through;
      for (EdgeId e : h.incident(w))
        if (usable[e]) through.push_back(e);
      for (std::size_t i = 0; i < through.size() && !found; ++i)
        for (std::size_t j = i + 1; j < through.size(); ++j) {
          EdgeId e = through[i], f = through[j];
          if (Rational(BigInt(h.intersection_size(e, f))) > alpha * Rational(BigInt(k))) continue;
          if (!is_t_useful(h, t, e, f)) continue;
          found = std::make_pair(e, f);
          witness = w;
          break;
        }
    }
    if (!found) break;
    usable[found->first] = usable[found->second] = 0;
    pairs.push_back(*found);
    witnesses.push_back(witness);
  }
  if (pairs.empty()) {
    out.notes.push_back("bad-vertex: no vertex outside V_bad passes d_{A_i}(w) > 2t/alpha^2 with a certified pair");
    return out;
  }
  finish("bad-vertex", pairs, witnesses);
  return out;
}

struct ExtremalParams {
  Rational alpha = Rational(1, 4);
  Rational delta = Rational(1, 10);
  OracleBudget exact_budget{24, 64, 60'000};
};

struct ExtremalReport {
  std::optional<EdgeColouring> colouring;
  int rung = 0;  // 1..5 on success, 0 on failure
  std::vector<std::string> log;
  bool size_premise_ok = false;  // every |V(e)| >= (1 - delta) sqrt(n)
  std::size_t colours_used = 0;
  std::optional<UsefulFamily> family;
  std::optional<ComplementMatching> matching;
};

/// Colouring ladder for the extremal regime:
///   1  e(H) < tn: all edges get distinct colours
///   2  e(H) = tn, H not intersecting: one disjoint pair shares a colour
///   3  e(H) > tn: useful family, then useful_cover_colour
///   4  maximum complement matching, then colour_from_matching
///   5  exact list-colouring search within the budget
/// Each rung checks its list-size precondition first and is skipped
/// (with a log line) when it does not hold.
inline ExtremalReport colour_extremal(const Hypergraph& h, std::size_t t, const ListAssignment& lists,
                                      const ExtremalParams& params = {}) {
  ExtremalReport out;
  const std::size_t n = h.vertex_count();
  const std::size_t m = h.edge_count();
  if (lists.size() != m) throw std::invalid_argument("colour_extremal: lists do not cover the edge set");
  if (n < 2) throw std::domain_error("colour_extremal: n must be >= 2");
  out.size_premise_ok = true;
  for (EdgeId e = 0; e < m; ++e)
    if (!at_least_scaled_sqrt(h.edge_size(e), 1 - params.delta, n)) out.size_premise_ok = false;
  if (!out.size_premise_ok) out.log.push_back("size premise |V(e)| >= (1 - delta) sqrt(n) fails for some edge");
  const std::size_t tn = t * n;
  const std::size_t min_list = m ? lists.min_size() : 0;
  auto accept = [&](int rung, EdgeColouring phi) {
    auto check = validate_colouring(h, phi, lists);
    if (!check.valid) throw InternalError("colour_extremal: rung " + std::to_string(rung) + " produced an invalid colouring");
    out.colours_used = check.colour_count;
    out.colouring = std::move(phi);
    out.rung = rung;
  };
  auto try_matching = [&](int rung, const ComplementMatching& nm) {
    if (min_list < m - nm.size()) {
      out.log.push_back("rung " + std::to_string(rung) + ": lists smaller than e(H) - |N| = " + std::to_string(m - nm.size()));
      return false;
    }
    accept(rung, colour_from_matching(h, nm, lists));
    out.matching = nm;
    return true;
  };
  if (m == 0) {
    accept(1, {});
    return out;
  }
  const bool intersecting = predicates(h).is_intersecting;
  if (m < tn) {
    if (try_matching(1, ComplementMatching{})) return out;
  } else {
    out.log.push_back("rung 1: e(H) >= tn");
  }
  ComplementMatching maximum = maximum_complement_matching(h);
  if (m == tn && !intersecting) {
    ComplementMatching one;
    one.pairs.push_back(maximum.pairs.front());
    if (try_matching(2, one)) return out;
  } else {
    out.log.push_back("rung 2: needs e(H) = tn and H not intersecting");
  }
  if (m > tn) {
    UsefulSearch search = find_useful_family(h, t, params.alpha, params.delta);
    for (const auto& note : search.notes) out.log.push_back("rung 3: " + note);
    if (search.family) {
      if (min_list >= tn) {
        auto cover = useful_cover_colour(h, t, *search.family, lists);
        out.family = search.family;
        out.matching = cover.matching;
        accept(3, std::move(cover.colouring));
        return out;
      }
      out.log.push_back("rung 3: lists smaller than tn");
    }
  } else {
    out.log.push_back("rung 3: needs e(H) > tn");
  }
  if (try_matching(4, maximum)) return out;
  if (m <= params.exact_budget.max_edges) {
    auto exact = exact_list_colourable(h, lists, params.exact_budget);
    if (exact.answer == ListAnswer::Yes) {
      accept(5, *exact.witness);
      return out;
    }
    out.log.push_back(exact.answer == ListAnswer::No ? "rung 5: not colourable from these lists"
                                                     : "rung 5: " + exact.reason);
  } else {
    out.log.push_back("rung 5: e(H) exceeds the exact budget");
  }
  return out;
}

}  // namespace hyperchrom

#endif  // HYPERCHROM_EXTREMAL_HPP
