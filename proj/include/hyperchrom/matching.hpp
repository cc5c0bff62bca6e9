#ifndef HYPERCHROM_MATCHING_HPP
#define HYPERCHROM_MATCHING_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "hyperchrom/core.hpp"
#include "hyperchrom/hypergraph.hpp"

namespace hyperchrom {

/// Maximum cardinality matching in a general graph (Edmonds' blossom
/// algorithm, O(V^3)). Returns mate[v], or -1 for unmatched vertices.
inline std::vector<std::int32_t> maximum_matching(const SimpleGraph& g) {
  const std::int32_t n = static_cast<std::int32_t>(g.n);
  std::vector<std::int32_t> mate(n, -1), parent(n), base(n);
  std::vector<char> used(n), blossom(n);

  auto lca = [&](std::int32_t a, std::int32_t b) {
    std::vector<char> seen(n, 0);
    for (;;) {
      a = base[a];
      seen[a] = 1;
      if (mate[a] == -1) break;
      a = parent[mate[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[mate[b]];
    }
  };
  auto mark_path = [&](std::int32_t v, std::int32_t b, std::int32_t child) {
    while (base[v] != b) {
      blossom[base[v]] = blossom[base[mate[v]]] = 1;
      parent[v] = child;
      child = mate[v];
      v = parent[mate[v]];
    }
  };
  auto find_path = [&](std::int32_t root) -> std::int32_t {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    for (std::int32_t i = 0; i < n; ++i) base[i] = i;
    used[root] = 1;
    std::queue<std::int32_t> q;
    q.push(root);
    while (!q.empty()) {
      std::int32_t v = q.front();
      q.pop();
      for (auto uu : g.adj[v]) {
        std::int32_t to = static_cast<std::int32_t>(uu);
        if (base[v] == base[to] || mate[v] == to) continue;
        if (to == root || (mate[to] != -1 && parent[mate[to]] != -1)) {
          std::int32_t cur = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::int32_t i = 0; i < n; ++i) {
            if (blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                q.push(i);
              }
            }
          }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (mate[to] == -1) return to;
          used[mate[to]] = 1;
          q.push(mate[to]);
        }
      }
    }
    return -1;
  };

  // Greedy warm start keeps the augmenting phase short.
  for (std::int32_t v = 0; v < n; ++v) {
    if (mate[v] != -1) continue;
    for (auto uu : g.adj[v]) {
      std::int32_t u = static_cast<std::int32_t>(uu);
      if (mate[u] == -1) {
        mate[u] = v;
        mate[v] = u;
        break;
      }
    }
  }
  for (std::int32_t v = 0; v < n; ++v) {
    if (mate[v] != -1) continue;
    std::int32_t end = find_path(v);
    while (end != -1) {
      std::int32_t pv = parent[end];
      std::int32_t ppv = mate[pv];
      mate[end] = pv;
      mate[pv] = end;
      end = ppv;
    }
  }
  return mate;
}

/// Matched pairs (u < v) in ascending order of u.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> matching_pairs(const std::vector<std::int32_t>& mate) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::size_t v = 0; v < mate.size(); ++v)
    if (mate[v] > static_cast<std::int32_t>(v)) out.emplace_back(static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(mate[v]));
  return out;
}

/// Pairs of vertex-disjoint edges, no edge in two pairs: a matching in the
/// complement of the line graph.
struct ComplementMatching {
  std::vector<std::pair<EdgeId, EdgeId>> pairs;  // first < second, ascending

  std::size_t size() const { return pairs.size(); }
  friend bool operator==(const ComplementMatching&, const ComplementMatching&) = default;
};

/// Empty string when `m` is a valid complement matching of h, else a reason.
inline std::string complement_matching_problem(const Hypergraph& h, const ComplementMatching& m) {
  std::vector<char> used(h.edge_count(), 0);
  for (auto [e, f] : m.pairs) {
    if (e >= h.edge_count() || f >= h.edge_count()) return "pair names an edge outside the hypergraph";
    if (e == f) return "pair repeats edge " + std::to_string(e);
    if (used[e] || used[f]) return "edge appears in two pairs";
    used[e] = used[f] = 1;
    if (h.intersects(e, f)) return "edges " + std::to_string(e) + " and " + std::to_string(f) + " intersect";
  }
  return {};
}

inline SimpleGraph complement_line_graph(const Hypergraph& h) {
  SimpleGraph g(h.edge_count());
  for (EdgeId e = 0; e < h.edge_count(); ++e)
    for (EdgeId f = e + 1; f < h.edge_count(); ++f)
      if (!h.intersects(e, f)) g.add_edge(e, f);
  return g;
}

}  // namespace hyperchrom

#endif  // HYPERCHROM_MATCHING_HPP
