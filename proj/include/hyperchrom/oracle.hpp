#ifndef HYPERCHROM_ORACLE_HPP
#define HYPERCHROM_ORACLE_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "hyperchrom/canonical.hpp"
#include "hyperchrom/core.hpp"
#include "hyperchrom/hypergraph.hpp"
#include "hyperchrom/matching.hpp"

namespace hyperchrom {

struct OracleBudget {
  std::size_t max_edges = 64;
  std::size_t max_colours = 64;
  std::uint64_t time_cap_ms = 60'000;
};

enum class OracleStatus { Solved, BudgetExceeded };

struct ChromaticIndexResult {
  OracleStatus status = OracleStatus::BudgetExceeded;
  std::optional<std::size_t> value;
  EdgeColouring witness;  // optimal colouring when solved
  std::size_t lower_bound = 0;
  std::uint64_t nodes = 0;
  std::string reason;  // why the budget ran out
};

enum class ListAnswer { Yes, No, BudgetExceeded };

struct ListColourResult {
  ListAnswer answer = ListAnswer::BudgetExceeded;
  std::optional<EdgeColouring> witness;
  std::uint64_t nodes = 0;
  std::string reason;
};

namespace detail {

class Deadline {
 public:
  explicit Deadline(std::uint64_t cap_ms)
      : end_(std::chrono::steady_clock::now() + std::chrono::milliseconds(cap_ms)) {}
  // Polls the clock every 1024 calls.
  bool expired() {
    if ((++ticks_ & 1023) != 0) return hit_;
    if (std::chrono::steady_clock::now() >= end_) hit_ = true;
    return hit_;
  }
  bool hit() const { return hit_; }

 private:
  std::chrono::steady_clock::time_point end_;
  std::uint64_t ticks_ = 0;
  bool hit_ = false;
};

// Greedy clique: repeatedly add the highest-degree vertex adjacent to all chosen.
inline std::vector<std::uint32_t> greedy_clique(const SimpleGraph& g) {
  std::vector<std::uint32_t> order(g.n);
  for (std::uint32_t v = 0; v < g.n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return g.degree(a) > g.degree(b); });
  std::vector<std::uint32_t> best;
  for (std::size_t start = 0; start < std::min<std::size_t>(order.size(), 8); ++start) {
    std::vector<std::uint32_t> clique{order[start]};
    for (auto v : order) {
      if (v == order[start]) continue;
      bool all = true;
      for (auto u : clique)
        if (!g.adjacent(u, v)) { all = false; break; }
      if (all) clique.push_back(v);
    }
    if (clique.size() > best.size()) best = clique;
  }
  return best;
}

class DsaturSearch {
 public:
  DsaturSearch(const SimpleGraph& g, std::size_t max_colours, Deadline& deadline)
      : g_(g), cap_(max_colours), deadline_(deadline), colour_(g.n, -1),
        count_(g.n, std::vector<std::uint16_t>(max_colours + 1, 0)), sat_(g.n, 0) {}

  // Smallest k <= cap with a proper k-colouring, searching below `upper`.
  void run(std::size_t lower, std::size_t upper, const std::vector<std::int32_t>& initial) {
    best_ = upper;
    best_colouring_ = initial;
    lower_ = lower;
    if (best_ <= lower_) return;
    recurse(0, 0);
  }
  std::size_t best() const { return best_; }
  const std::vector<std::int32_t>& best_colouring() const { return best_colouring_; }
  std::uint64_t nodes() const { return nodes_; }
  bool aborted() const { return aborted_; }

 private:
  void assign(std::uint32_t v, std::int32_t c) {
    colour_[v] = c;
    for (auto u : g_.adj[v])
      if (count_[u][static_cast<std::size_t>(c)]++ == 0) ++sat_[u];
  }
  void unassign(std::uint32_t v) {
    std::int32_t c = colour_[v];
    colour_[v] = -1;
    for (auto u : g_.adj[v])
      if (--count_[u][static_cast<std::size_t>(c)] == 0) --sat_[u];
  }

  void recurse(std::size_t coloured, std::size_t used) {
    if (aborted_ || best_ <= lower_) return;
    ++nodes_;
    if (deadline_.expired()) { aborted_ = true; return; }
    if (coloured == g_.n) {
      best_ = used;
      best_colouring_ = colour_;
      return;
    }
    // DSATUR choice: max saturation, then max degree, then lowest id.
    std::int64_t pick = -1;
    for (std::uint32_t v = 0; v < g_.n; ++v) {
      if (colour_[v] != -1) continue;
      if (pick < 0 || sat_[v] > sat_[pick] || (sat_[v] == sat_[pick] && g_.degree(v) > g_.degree(pick))) pick = v;
    }
    auto v = static_cast<std::uint32_t>(pick);
    for (std::size_t c = 0; c < used && c + 1 < best_; ++c) {
      if (count_[v][c] != 0) continue;
      assign(v, static_cast<std::int32_t>(c));
      recurse(coloured + 1, used);
      unassign(v);
      if (aborted_ || best_ <= lower_) return;
    }
    // A fresh colour is only ever the next unused index.
    if (used + 1 < best_ && used < cap_) {
      assign(v, static_cast<std::int32_t>(used));
      recurse(coloured + 1, used + 1);
      unassign(v);
    }
  }

  const SimpleGraph& g_;
  std::size_t cap_;
  Deadline& deadline_;
  std::vector<std::int32_t> colour_;
  std::vector<std::vector<std::uint16_t>> count_;
  std::vector<std::size_t> sat_;
  std::size_t best_ = 0;
  std::size_t lower_ = 0;
  std::vector<std::int32_t> best_colouring_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

// Plain DSATUR greedy colouring; returns colours per vertex.
inline std::vector<std::int32_t> dsatur_greedy(const SimpleGraph& g) {
  std::vector<std::int32_t> colour(g.n, -1);
  std::vector<std::set<std::int32_t>> seen(g.n);
  for (std::size_t step = 0; step < g.n; ++step) {
    std::int64_t pick = -1;
    for (std::uint32_t v = 0; v < g.n; ++v) {
      if (colour[v] != -1) continue;
      if (pick < 0 || seen[v].size() > seen[pick].size() ||
          (seen[v].size() == seen[pick].size() && g.degree(v) > g.degree(pick)))
        pick = v;
    }
    auto v = static_cast<std::uint32_t>(pick);
    std::int32_t c = 0;
    while (seen[v].count(c)) ++c;
    colour[v] = c;
    for (auto u : g.adj[v]) seen[u].insert(c);
  }
  return colour;
}

}  // namespace detail

/// Exact chromatic index: branch-and-bound DSATUR colouring of L(H) with a
/// greedy-clique lower bound and colour-class symmetry breaking.
inline ChromaticIndexResult exact_chromatic_index(const Hypergraph& h, const OracleBudget& budget = {}) {
  ChromaticIndexResult out;
  if (h.edge_count() > budget.max_edges) {
    out.reason = "e(H) = " + std::to_string(h.edge_count()) + " exceeds max_edges = " + std::to_string(budget.max_edges);
    return out;
  }
  if (h.edge_count() == 0) {
    out.status = OracleStatus::Solved;
    out.value = 0;
    return out;
  }
  SimpleGraph g = line_graph(h);
  out.lower_bound = detail::greedy_clique(g).size();
  if (out.lower_bound > budget.max_colours) {
    out.reason = "clique lower bound exceeds max_colours";
    return out;
  }
  auto greedy = detail::dsatur_greedy(g);
  std::size_t upper = static_cast<std::size_t>(*std::max_element(greedy.begin(), greedy.end())) + 1;
  detail::Deadline deadline(budget.time_cap_ms);
  detail::DsaturSearch search(g, std::max(budget.max_colours, upper), deadline);
  search.run(out.lower_bound, upper, greedy);
  out.nodes = search.nodes();
  if (search.aborted()) {
    out.reason = "time cap of " + std::to_string(budget.time_cap_ms) + " ms reached";
    return out;
  }
  if (search.best() > budget.max_colours) {
    out.reason = "chromatic index exceeds max_colours";
    return out;
  }
  out.status = OracleStatus::Solved;
  out.value = search.best();
  out.witness.assign(search.best_colouring().begin(), search.best_colouring().end());
  return out;
}

/// Decides C-edge-colourability by backtracking with minimum-remaining-values
/// edge choice and forward checking on intersecting edges.
inline ListColourResult exact_list_colourable(const Hypergraph& h, const ListAssignment& lists,
                                              const OracleBudget& budget = {}) {
  ListColourResult out;
  const std::size_t m = h.edge_count();
  if (lists.size() != m) throw std::invalid_argument("exact_list_colourable: lists do not cover the edge set");
  if (m > budget.max_edges) {
    out.reason = "e(H) = " + std::to_string(m) + " exceeds max_edges = " + std::to_string(budget.max_edges);
    return out;
  }
  SimpleGraph g = line_graph(h);
  // Colours are remapped to dense indices so forbidden-counts fit in arrays.
  std::vector<Colour> palette;
  for (const auto& l : lists.lists()) palette.insert(palette.end(), l.begin(), l.end());
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  std::vector<std::vector<std::uint32_t>> avail(m);
  for (EdgeId e = 0; e < m; ++e)
    for (Colour c : lists.list(e))
      avail[e].push_back(static_cast<std::uint32_t>(std::lower_bound(palette.begin(), palette.end(), c) - palette.begin()));
  std::vector<std::vector<std::uint16_t>> blocked(m, std::vector<std::uint16_t>(palette.size(), 0));
  std::vector<std::int64_t> colour(m, -1);
  detail::Deadline deadline(budget.time_cap_ms);
  bool aborted = false;

  auto options = [&](EdgeId e) {
    std::size_t k = 0;
    for (auto c : avail[e])
      if (!blocked[e][c]) ++k;
    return k;
  };
  std::function<bool(std::size_t)> recurse = [&](std::size_t coloured) -> bool {
    ++out.nodes;
    if (deadline.expired()) { aborted = true; return false; }
    if (coloured == m) return true;
    std::int64_t pick = -1;
    std::size_t pick_opts = SIZE_MAX;
    for (EdgeId e = 0; e < m; ++e) {
      if (colour[e] != -1) continue;
      std::size_t k = options(e);
      if (k == 0) return false;
      if (k < pick_opts || (k == pick_opts && g.degree(e) > g.degree(static_cast<std::uint32_t>(pick)))) {
        pick = e;
        pick_opts = k;
      }
    }
    auto e = static_cast<EdgeId>(pick);
    for (auto c : avail[e]) {
      if (blocked[e][c]) continue;
      colour[e] = c;
      for (auto f : g.adj[e]) ++blocked[f][c];
      bool ok = recurse(coloured + 1);
      for (auto f : g.adj[e]) --blocked[f][c];
      if (ok) return true;
      colour[e] = -1;
      if (aborted) return false;
    }
    return false;
  };
  bool found = recurse(0);
  if (aborted) {
    out.reason = "time cap of " + std::to_string(budget.time_cap_ms) + " ms reached";
    return out;
  }
  if (!found) {
    out.answer = ListAnswer::No;
    return out;
  }
  out.answer = ListAnswer::Yes;
  EdgeColouring phi(m);
  for (EdgeId e = 0; e < m; ++e) phi[e] = palette[static_cast<std::size_t>(colour[e])];
  out.witness = std::move(phi);
  return out;
}

/// Maximum matching in the complement of L(H).
inline ComplementMatching maximum_complement_matching(const Hypergraph& h) {
  ComplementMatching out;
  for (auto [u, v] : matching_pairs(maximum_matching(complement_line_graph(h)))) out.pairs.emplace_back(u, v);
  return out;
}

struct EnumerationConstraints {
  bool intersecting = false;
  std::size_t max_edges = 10;
};

namespace detail {

inline std::vector<std::vector<Vertex>> admissible_subsets(std::size_t n, std::size_t min_size) {
  std::vector<std::vector<Vertex>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1u) s.push_back(v);
    if (s.size() >= min_size) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Visits every hypergraph on n vertices (up to relabeling) whose edges have
/// size >= min_size, with codegree <= t, at most max_edges edges and, when
/// requested, pairwise intersecting edges. Instances are generated level by
/// level (by edge count); level k+1 extends each level-k instance by one
/// admissible edge and deduplicates by canonical form. The empty hypergraph
/// is included. The visitor returns false to stop early.
inline void for_each_hypergraph(std::size_t n, std::size_t t, std::size_t min_size, const EnumerationConstraints& c,
                                const std::function<bool(const Hypergraph&)>& visit) {
  if (n > 6) throw std::invalid_argument("enumerate_hypergraphs: n must be <= 6");
  if (c.max_edges > 10) throw std::invalid_argument("enumerate_hypergraphs: max_edges must be <= 10");
  if (min_size < 1) throw std::invalid_argument("enumerate_hypergraphs: min_size must be >= 1");
  const auto subsets = detail::admissible_subsets(n, min_size);
  std::vector<CanonicalForm> level{CanonicalForm{n, {}}};
  for (std::size_t k = 0;; ++k) {
    for (const auto& form : level)
      if (!visit(form.to_hypergraph())) return;
    if (k == c.max_edges) return;
    std::set<CanonicalForm> next;
    for (const auto& form : level) {
      // Codegree table of the current instance.
      std::vector<std::size_t> codeg(n * n, 0);
      for (const auto& e : form.edges)
        for (std::size_t i = 0; i < e.size(); ++i)
          for (std::size_t j = i + 1; j < e.size(); ++j) ++codeg[e[i] * n + e[j]];
      for (const auto& s : subsets) {
        bool ok = true;
        for (std::size_t i = 0; i < s.size() && ok; ++i)
          for (std::size_t j = i + 1; j < s.size(); ++j)
            if (codeg[s[i] * n + s[j]] + 1 > t) { ok = false; break; }
        if (ok && c.intersecting)
          for (const auto& e : form.edges) {
            std::vector<Vertex> common;
            std::set_intersection(e.begin(), e.end(), s.begin(), s.end(), std::back_inserter(common));
            if (common.empty()) { ok = false; break; }
          }
        if (!ok) continue;
        auto edges = form.edges;
        edges.push_back(s);
        next.insert(canonical_form(Hypergraph(n, std::move(edges))));
      }
    }
    if (next.empty()) return;
    level.assign(next.begin(), next.end());
  }
}

inline std::vector<Hypergraph> enumerate_hypergraphs(std::size_t n, std::size_t t, std::size_t min_size,
                                                     const EnumerationConstraints& c) {
  std::vector<Hypergraph> out;
  for_each_hypergraph(n, t, min_size, c, [&](const Hypergraph& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

}  // namespace hyperchrom

#endif  // HYPERCHROM_ORACLE_HPP
