#ifndef HYPERCHROM_CANONICAL_HPP
#define HYPERCHROM_CANONICAL_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "hyperchrom/hypergraph.hpp"

namespace hyperchrom {

/// Relabeling-invariant representative of a hypergraph: n plus the sorted
/// list of relabeled edges. Two hypergraphs are isomorphic iff their forms
/// are equal. Meant for small instances (about 16 vertices, 20 edges).
struct CanonicalForm {
  std::size_t n = 0;
  std::vector<std::vector<Vertex>> edges;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    return a.edges <=> b.edges;
  }

  Hypergraph to_hypergraph() const { return Hypergraph(n, edges); }
};

namespace detail {

// Ranks items by their signature; equal signatures share a rank.
template <typename Sig>
std::vector<std::uint32_t> rank_by(const std::vector<Sig>& sigs) {
  std::vector<Sig> sorted = sigs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::uint32_t> out(sigs.size());
  for (std::size_t i = 0; i < sigs.size(); ++i)
    out[i] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), sigs[i]) - sorted.begin());
  return out;
}

inline std::size_t distinct(const std::vector<std::uint32_t>& v) {
  std::vector<std::uint32_t> s = v;
  std::sort(s.begin(), s.end());
  return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
}

// Colour refinement on the vertex/edge incidence structure.
inline void refine(const Hypergraph& h, std::vector<std::uint32_t>& vc) {
  std::size_t cells = distinct(vc);
  for (;;) {
    std::vector<std::vector<std::uint32_t>> esig(h.edge_count());
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      for (Vertex v : h.edge(e)) esig[e].push_back(vc[v]);
      std::sort(esig[e].begin(), esig[e].end());
    }
    auto ec = rank_by(esig);
    std::vector<std::vector<std::uint32_t>> vsig(h.vertex_count());
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
      vsig[v].push_back(vc[v]);
      std::size_t start = vsig[v].size();
      for (EdgeId e : h.incident(v)) vsig[v].push_back(ec[e]);
      std::sort(vsig[v].begin() + static_cast<std::ptrdiff_t>(start), vsig[v].end());
    }
    vc = rank_by(vsig);
    std::size_t now = distinct(vc);
    if (now == cells) return;
    cells = now;
  }
}

inline std::vector<std::vector<Vertex>> relabeled_form(const Hypergraph& h, const std::vector<std::uint32_t>& vc) {
  std::vector<Vertex> order(h.vertex_count());
  for (Vertex v = 0; v < order.size(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return vc[a] != vc[b] ? vc[a] < vc[b] : a < b; });
  std::vector<Vertex> label(h.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) label[order[i]] = static_cast<Vertex>(i);
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(h.edge_count());
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    std::vector<Vertex> vs;
    for (Vertex v : h.edge(e)) vs.push_back(label[v]);
    std::sort(vs.begin(), vs.end());
    edges.push_back(std::move(vs));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

inline void search(const Hypergraph& h, std::vector<std::uint32_t> vc,
                   std::optional<std::vector<std::vector<Vertex>>>& best) {
  refine(h, vc);
  // Target cell: smallest colour shared by two or more non-isolated vertices.
  std::optional<std::uint32_t> target;
  std::vector<std::uint32_t> count(h.vertex_count() + 1, 0);
  for (Vertex v = 0; v < h.vertex_count(); ++v)
    if (h.degree(v) > 0) ++count[vc[v]];
  for (std::uint32_t c = 0; c < count.size(); ++c)
    if (count[c] >= 2) { target = c; break; }
  if (!target) {
    auto form = relabeled_form(h, vc);
    if (!best || form < *best) best = std::move(form);
    return;
  }
  for (Vertex x = 0; x < h.vertex_count(); ++x) {
    if (vc[x] != *target || h.degree(x) == 0) continue;
    std::vector<std::uint32_t> next(vc.size());
    for (Vertex v = 0; v < vc.size(); ++v) next[v] = 2 * vc[v] + (v == x ? 0 : 1);
    search(h, std::move(next), best);
  }
}

}  // namespace detail

inline CanonicalForm canonical_form(const Hypergraph& h) {
  std::optional<std::vector<std::vector<Vertex>>> best;
  detail::search(h, std::vector<std::uint32_t>(h.vertex_count(), 0), best);
  return CanonicalForm{h.vertex_count(), best ? std::move(*best) : std::vector<std::vector<Vertex>>{}};
}

inline bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto profile = [](const Hypergraph& h) {
    std::vector<std::size_t> sizes, degrees;
    for (EdgeId e = 0; e < h.edge_count(); ++e) sizes.push_back(h.edge_size(e));
    for (Vertex v = 0; v < h.vertex_count(); ++v) degrees.push_back(h.degree(v));
    std::sort(sizes.begin(), sizes.end());
    std::sort(degrees.begin(), degrees.end());
    return std::make_pair(sizes, degrees);
  };
  if (profile(a) != profile(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace hyperchrom

#endif  // HYPERCHROM_CANONICAL_HPP
