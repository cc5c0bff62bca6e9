#ifndef HYPERCHROM_CORE_HPP
#define HYPERCHROM_CORE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperchrom/hypergraph.hpp"
#include "hyperchrom/rational.hpp"

namespace hyperchrom {

struct DegreeStats {
  std::vector<std::size_t> degree;
  /// Codegree of covered pairs, keyed by pair_key(u, v); absent pairs have codegree 0.
  std::unordered_map<std::uint64_t, std::size_t> codegree_map;
  std::size_t max_degree = 0;
  std::size_t max_codegree = 0;

  static std::uint64_t pair_key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (std::uint64_t{u} << 32) | v;
  }
  std::size_t codegree(Vertex u, Vertex v) const {
    auto it = codegree_map.find(pair_key(u, v));
    return it == codegree_map.end() ? 0 : it->second;
  }
};

inline DegreeStats degree_stats(const Hypergraph& h) {
  DegreeStats s;
  s.degree.assign(h.vertex_count(), 0);
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    s.degree[v] = h.degree(v);
    s.max_degree = std::max(s.max_degree, s.degree[v]);
  }
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    auto vs = h.edge(e);
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        std::size_t c = ++s.codegree_map[DegreeStats::pair_key(vs[i], vs[j])];
        s.max_codegree = std::max(s.max_codegree, c);
      }
  }
  return s;
}

inline std::size_t max_codegree(const Hypergraph& h) { return degree_stats(h).max_codegree; }

inline BigInt choose2(std::size_t k) { return BigInt(k) * BigInt(k == 0 ? 0 : k - 1) / 2; }

/// vol(S) = sum over e in S of C(|e|,2) / C(n,2).
inline Rational volume(const Hypergraph& h, const std::vector<EdgeId>& edges) {
  if (h.vertex_count() < 2) throw std::domain_error("volume needs at least 2 vertices");
  BigInt num = 0;
  for (EdgeId e : edges) num += choose2(h.edge_size(e));
  return Rational(num, choose2(h.vertex_count()));
}

inline Rational volume(const Hypergraph& h) {
  std::vector<EdgeId> all(h.edge_count());
  for (std::size_t e = 0; e < all.size(); ++e) all[e] = static_cast<EdgeId>(e);
  return volume(h, all);
}

/// One vertex per edge of h, one edge per vertex v of h listing the edges through v.
inline Hypergraph dual(const Hypergraph& h) {
  std::vector<std::vector<Vertex>> edges(h.vertex_count());
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (h.degree(v) == 0)
      throw std::invalid_argument("dual: vertex " + std::to_string(v) + " has degree 0");
    auto inc = h.incident(v);
    edges[v].assign(inc.begin(), inc.end());
  }
  return Hypergraph(h.edge_count(), std::move(edges));
}

inline SimpleGraph line_graph(const Hypergraph& h) {
  SimpleGraph g(h.edge_count());
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    auto inc = h.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j) g.add_edge(inc[i], inc[j]);
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

struct Predicates {
  bool is_linear = true;
  bool is_intersecting = true;
};

inline Predicates predicates(const Hypergraph& h) {
  Predicates p;
  p.is_linear = max_codegree(h) <= 1;
  for (EdgeId e = 0; e < h.edge_count() && p.is_intersecting; ++e)
    for (EdgeId f = e + 1; f < h.edge_count(); ++f)
      if (!h.intersects(e, f)) { p.is_intersecting = false; break; }
  return p;
}

/// N(e): edge ids f != e meeting e, ascending.
inline std::vector<EdgeId> edge_neighbourhood(const Hypergraph& h, EdgeId e) {
  std::vector<EdgeId> out;
  for (Vertex v : h.edge(e))
    for (EdgeId f : h.incident(v))
      if (f != e) out.push_back(f);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// N[v]: v together with every vertex sharing an edge with it. An isolated
/// vertex gets {v}.
inline std::vector<Vertex> closed_neighbourhood(const Hypergraph& h, Vertex v) {
  std::vector<Vertex> out{v};
  for (EdgeId e : h.incident(v))
    for (Vertex w : h.edge(e)) out.push_back(w);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct Neighbourhoods {
  std::vector<std::vector<Vertex>> closed_vertex;
  std::vector<std::vector<EdgeId>> edge;
};

inline Neighbourhoods neighbourhoods(const Hypergraph& h) {
  Neighbourhoods nb;
  nb.closed_vertex.reserve(h.vertex_count());
  for (Vertex v = 0; v < h.vertex_count(); ++v) nb.closed_vertex.push_back(closed_neighbourhood(h, v));
  nb.edge.reserve(h.edge_count());
  for (EdgeId e = 0; e < h.edge_count(); ++e) nb.edge.push_back(edge_neighbourhood(h, e));
  return nb;
}

struct Violation {
  enum class Kind { Conflict, OffList };
  Kind kind;
  EdgeId e;
  EdgeId f;  // equals e for OffList
};

struct ColouringCheck {
  bool valid = true;
  std::size_t colour_count = 0;
  std::vector<Violation> violations;
};

inline ColouringCheck validate_colouring(const Hypergraph& h, const EdgeColouring& phi,
                                         const ListAssignment* lists = nullptr) {
  if (phi.size() != h.edge_count())
    throw std::invalid_argument("colouring covers " + std::to_string(phi.size()) + " edges, hypergraph has " +
                                std::to_string(h.edge_count()));
  if (lists && lists->size() != h.edge_count())
    throw std::invalid_argument("list assignment size does not match edge count");
  ColouringCheck out;
  std::set<std::pair<EdgeId, EdgeId>> seen;
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    auto inc = h.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j)
        if (phi[inc[i]] == phi[inc[j]] && seen.emplace(inc[i], inc[j]).second)
          out.violations.push_back({Violation::Kind::Conflict, inc[i], inc[j]});
  }
  if (lists)
    for (EdgeId e = 0; e < h.edge_count(); ++e)
      if (!lists->contains(e, phi[e])) out.violations.push_back({Violation::Kind::OffList, e, e});
  std::vector<Colour> used(phi.begin(), phi.end());
  std::sort(used.begin(), used.end());
  out.colour_count = static_cast<std::size_t>(std::unique(used.begin(), used.end()) - used.begin());
  out.valid = out.violations.empty();
  return out;
}

inline ColouringCheck validate_colouring(const Hypergraph& h, const EdgeColouring& phi, const ListAssignment& lists) {
  return validate_colouring(h, phi, &lists);
}

enum class SubMode { Induced, Restriction };

/// A derived hypergraph with maps back to the parent: vertices[i] is the
/// parent id of new vertex i, edges[j] the parent id of new edge j.
struct SubHypergraph {
  Hypergraph hypergraph;
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
};

/// H[S] (edges inside S) or H|_S (every edge cut down to S). New vertex ids
/// follow ascending parent ids.
inline SubHypergraph restrict_and_induce(const Hypergraph& h, std::vector<Vertex> s, SubMode mode) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::vector<std::int64_t> relabel(h.vertex_count(), -1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= h.vertex_count()) throw std::invalid_argument("vertex set contains an id outside the hypergraph");
    relabel[s[i]] = static_cast<std::int64_t>(i);
  }
  SubHypergraph out;
  out.vertices = s;
  std::vector<std::vector<Vertex>> edges;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    std::vector<Vertex> kept;
    bool inside = true;
    for (Vertex v : h.edge(e)) {
      if (relabel[v] >= 0) kept.push_back(static_cast<Vertex>(relabel[v]));
      else inside = false;
    }
    if (mode == SubMode::Induced) {
      if (!inside) continue;
    } else if (kept.empty()) {
      throw std::invalid_argument("restriction: edge " + std::to_string(e) + " misses the vertex set");
    }
    edges.push_back(std::move(kept));
    out.edges.push_back(e);
  }
  out.hypergraph = Hypergraph(s.size(), std::move(edges));
  return out;
}

/// The edges `ids` of h as a hypergraph on the same vertex set; new edge j is h's ids[j].
inline Hypergraph spanning_subhypergraph(const Hypergraph& h, const std::vector<EdgeId>& ids) {
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(ids.size());
  for (EdgeId e : ids) {
    auto vs = h.edge(e);
    edges.emplace_back(vs.begin(), vs.end());
  }
  return Hypergraph(h.vertex_count(), std::move(edges));
}

/// Drops degree-0 vertices, keeping edge order.
inline Hypergraph drop_isolated(const Hypergraph& h) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < h.vertex_count(); ++v)
    if (h.degree(v) > 0) keep.push_back(v);
  return restrict_and_induce(h, keep, SubMode::Induced).hypergraph;
}

}  // namespace hyperchrom

#endif  // HYPERCHROM_CORE_HPP
