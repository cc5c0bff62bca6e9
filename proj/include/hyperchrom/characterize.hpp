#ifndef HYPERCHROM_CHARACTERIZE_HPP
#define HYPERCHROM_CHARACTERIZE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperchrom/core.hpp"
#include "hyperchrom/hypergraph.hpp"
#include "hyperchrom/ordering.hpp"
#include "hyperchrom/rational.hpp"

namespace hyperchrom {

struct MotzkinResult {
  Rational sum;
  bool holds = false;
  std::size_t terms = 0;
};

/// Evaluates sum over non-adjacent (x, y) of
///   (|X| d(x) - |Y| d(y)) / ((|X| - d(y)) (|Y| - d(x)))
/// for a bipartite graph given as (x, y) pairs with x < x_size, y < y_size.
/// Requires that no x is adjacent to every y.
inline MotzkinResult motzkin_check(std::size_t x_size, std::size_t y_size,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& adjacency) {
  std::vector<std::vector<char>> adj(x_size, std::vector<char>(y_size, 0));
  for (auto [x, y] : adjacency) {
    if (x >= x_size || y >= y_size) throw std::out_of_range("motzkin_check: adjacency pair out of range");
    adj[x][y] = 1;
  }
  std::vector<std::size_t> dx(x_size, 0), dy(y_size, 0);
  for (std::size_t x = 0; x < x_size; ++x)
    for (std::size_t y = 0; y < y_size; ++y)
      if (adj[x][y]) { ++dx[x]; ++dy[y]; }
  for (std::size_t x = 0; x < x_size; ++x)
    if (dx[x] == y_size)
      throw std::invalid_argument("motzkin_check: x = " + std::to_string(x) + " is adjacent to every vertex of Y");
  MotzkinResult out;
  const Rational X{BigInt(x_size)}, Y{BigInt(y_size)};
  for (std::size_t x = 0; x < x_size; ++x)
    for (std::size_t y = 0; y < y_size; ++y) {
      if (adj[x][y]) continue;
      if (dy[y] == x_size) throw InternalError("motzkin_check: zero denominator on a non-edge");
      Rational num = X * Rational(BigInt(dx[x])) - Y * Rational(BigInt(dy[y]));
      Rational den = (X - Rational(BigInt(dy[y]))) * (Y - Rational(BigInt(dx[x])));
      out.sum += num / den;
      ++out.terms;
    }
  out.holds = out.sum >= 0;
  return out;
}

/// The incidence instance with X = N[v] and Y = E(H), x ~ e iff x ∈ V(e).
inline MotzkinResult motzkin_for_vertex(const Hypergraph& h, Vertex v) {
  auto nv = closed_neighbourhood(h, v);
  std::vector<std::pair<std::size_t, std::size_t>> adj;
  for (std::size_t i = 0; i < nv.size(); ++i)
    for (EdgeId e : h.incident(nv[i])) adj.emplace_back(i, e);
  return motzkin_check(nv.size(), h.edge_count(), adj);
}

struct BoundReport {
  bool applies = false;
  std::string reason;  // why it does not apply
  std::size_t e_count = 0;
  std::size_t bound = 0;  // t * max |N[v]| over non-isolated v
  bool tight = false;
  std::optional<Vertex> witness_vertex;  // lowest-id maximiser of |N[v]|
};

/// Applies to intersecting H with codegree <= t, no edge of size one and at
/// least one edge. Isolated vertices are allowed and excluded from the max.
inline BoundReport intersecting_bound(const Hypergraph& h, std::size_t t) {
  BoundReport out;
  out.e_count = h.edge_count();
  if (h.edge_count() == 0) {
    out.reason = "no edges";
    return out;
  }
  for (EdgeId e = 0; e < h.edge_count(); ++e)
    if (h.edge_size(e) < 2) {
      out.reason = "edge " + std::to_string(e) + " has size one";
      return out;
    }
  if (max_codegree(h) > t) {
    out.reason = "codegree exceeds t";
    return out;
  }
  if (!predicates(h).is_intersecting) {
    out.reason = "not intersecting";
    return out;
  }
  out.applies = true;
  std::size_t best = 0;
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (h.degree(v) == 0) continue;
    std::size_t s = closed_neighbourhood(h, v).size();
    if (s > best) {
      best = s;
      out.witness_vertex = v;
    }
  }
  out.bound = t * best;
  out.tight = out.e_count == out.bound;
  return out;
}

enum class ClassKind { TFoldProjectivePlane, TFoldNearPencil, NotExtremal, NotApplicable, TightUnclassified };

inline const char* to_string(ClassKind k) {
  switch (k) {
    case ClassKind::TFoldProjectivePlane: return "TFoldProjectivePlane";
    case ClassKind::TFoldNearPencil: return "TFoldNearPencil";
    case ClassKind::NotExtremal: return "NotExtremal";
    case ClassKind::NotApplicable: return "NotApplicable";
    case ClassKind::TightUnclassified: return "TightUnclassified";
  }
  return "?";
}

struct Classification {
  ClassKind kind = ClassKind::NotApplicable;
  std::size_t k = 0;  // plane order
  std::size_t t = 0;
  std::string reason;
  std::string remark;
  BoundReport bound;
  std::optional<Vertex> witness_vertex;
  std::vector<Vertex> isolated;  // degree-0 vertices outside N[v]
};

namespace detail {

// Linear intersecting base on n0 vertices with n0 edges: plane of order k >= 2?
inline std::optional<std::size_t> plane_order(const Hypergraph& base) {
  const std::size_t n0 = base.vertex_count();
  std::size_t k = 2;
  while (k * k + k + 1 < n0) ++k;
  if (k * k + k + 1 != n0 || base.edge_count() != n0) return std::nullopt;
  for (EdgeId e = 0; e < base.edge_count(); ++e)
    if (base.edge_size(e) != k + 1) return std::nullopt;
  for (Vertex v = 0; v < n0; ++v)
    if (base.degree(v) != k + 1) return std::nullopt;
  auto p = predicates(base);
  if (!p.is_linear || !p.is_intersecting) return std::nullopt;
  return k;
}

inline bool is_near_pencil(const Hypergraph& base) {
  const std::size_t n0 = base.vertex_count();
  if (n0 < 3 || base.edge_count() != n0) return false;
  for (EdgeId big = 0; big < base.edge_count(); ++big) {
    if (base.edge_size(big) != n0 - 1) continue;
    std::vector<char> in_big(n0, 0);
    for (Vertex v : base.edge(big)) in_big[v] = 1;
    Vertex apex = 0;
    while (in_big[apex]) ++apex;
    std::vector<char> covered(n0, 0);
    bool ok = true;
    for (EdgeId e = 0; e < base.edge_count() && ok; ++e) {
      if (e == big) continue;
      auto vs = base.edge(e);
      if (vs.size() != 2 || !base.contains(e, apex)) { ok = false; break; }
      Vertex other = vs[0] == apex ? vs[1] : vs[0];
      if (covered[other]) ok = false;
      covered[other] = 1;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace detail

/// Classifies equality cases of e(H) <= t max|N[v]|: the tight instance
/// restricted to N[v] must be an exact t-fold of a linear base, which is
/// then a projective plane of order k >= 2 or a near-pencil. The triangle is
/// reported as a near-pencil with a remark.
inline Classification classify_extremal(const Hypergraph& h, std::size_t t) {
  Classification out;
  out.t = t;
  out.bound = intersecting_bound(h, t);
  out.witness_vertex = out.bound.witness_vertex;
  if (!out.bound.applies) {
    out.kind = ClassKind::NotApplicable;
    out.reason = out.bound.reason;
    return out;
  }
  if (!out.bound.tight) {
    out.kind = ClassKind::NotExtremal;
    return out;
  }
  out.kind = ClassKind::TightUnclassified;
  const Vertex v = *out.bound.witness_vertex;
  auto nv = closed_neighbourhood(h, v);
  std::vector<char> in_nv(h.vertex_count(), 0);
  for (Vertex x : nv) in_nv[x] = 1;
  for (Vertex x = 0; x < h.vertex_count(); ++x) {
    if (in_nv[x]) continue;
    if (h.degree(x) != 0) {
      out.reason = "vertex " + std::to_string(x) + " outside N[v] has positive degree";
      return out;
    }
    out.isolated.push_back(x);
  }
  SubHypergraph sub = restrict_and_induce(h, nv, SubMode::Induced);
  std::map<std::vector<Vertex>, std::size_t> multiplicity;
  for (EdgeId e = 0; e < sub.hypergraph.edge_count(); ++e) {
    auto vs = sub.hypergraph.edge(e);
    ++multiplicity[std::vector<Vertex>(vs.begin(), vs.end())];
  }
  std::vector<std::vector<Vertex>> base_edges;
  for (const auto& [vs, mult] : multiplicity) {
    if (mult != t) {
      out.reason = "an edge has multiplicity " + std::to_string(mult) + ", expected t = " + std::to_string(t);
      return out;
    }
    base_edges.push_back(vs);
  }
  Hypergraph base(nv.size(), std::move(base_edges));
  if (!predicates(base).is_linear) {
    out.reason = "the base of the t-fold is not linear";
    return out;
  }
  if (auto k = detail::plane_order(base)) {
    out.kind = ClassKind::TFoldProjectivePlane;
    out.k = *k;
    return out;
  }
  if (detail::is_near_pencil(base)) {
    out.kind = ClassKind::TFoldNearPencil;
    if (base.vertex_count() == 3) out.remark = "the triangle is also the projective plane of order 1";
    return out;
  }
  out.reason = "tight, but the base is neither a projective plane nor a near-pencil";
  return out;
}

struct DeBruijnErdos {
  bool applies = false;
  std::string reason;
  bool bound_holds = false;  // e(H) <= n
  bool tight = false;        // e(H) == n
  Classification classification;
};

inline DeBruijnErdos debruijn_erdos_check(const Hypergraph& h) {
  DeBruijnErdos out;
  auto p = predicates(h);
  if (!p.is_linear) out.reason = "not linear";
  else if (!p.is_intersecting) out.reason = "not intersecting";
  for (EdgeId e = 0; e < h.edge_count() && out.reason.empty(); ++e)
    if (h.edge_size(e) < 2) out.reason = "edge of size one";
  if (!out.reason.empty()) {
    out.classification.kind = ClassKind::NotApplicable;
    out.classification.reason = out.reason;
    return out;
  }
  out.applies = true;
  out.bound_holds = h.edge_count() <= h.vertex_count();
  out.tight = h.edge_count() == h.vertex_count();
  out.classification = classify_extremal(h, 1);
  return out;
}

/// On a tight instance: every non-isolated x and edge e with x ∉ V(e) has
/// d(x, w) = t for all w ∈ V(e). Returns the first offending (x, e).
inline std::optional<std::pair<Vertex, EdgeId>> tight_codegree_violation(const Hypergraph& h, std::size_t t) {
  DegreeStats ds = degree_stats(h);
  for (Vertex x = 0; x < h.vertex_count(); ++x) {
    if (h.degree(x) == 0) continue;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      if (h.contains(e, x)) continue;
      for (Vertex w : h.edge(e))
        if (ds.codegree(x, w) != t) return std::make_pair(x, e);
    }
  }
  return std::nullopt;
}

}  // namespace hyperchrom

#endif  // HYPERCHROM_CHARACTERIZE_HPP
