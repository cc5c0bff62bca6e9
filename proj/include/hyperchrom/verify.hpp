#ifndef HYPERCHROM_VERIFY_HPP
#define HYPERCHROM_VERIFY_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "hyperchrom/core.hpp"
#include "hyperchrom/hypergraph.hpp"
#include "hyperchrom/rational.hpp"

namespace hyperchrom {

struct PropertyViolation {
  std::string property;
  std::size_t where = 0;  // vertex or edge id, per property
  std::string detail;
};

struct PropertyReport {
  std::size_t checks = 0;
  std::size_t skipped = 0;  // evaluations whose premise did not hold
  std::vector<PropertyViolation> violations;

  bool clean() const { return violations.empty(); }
  void absorb(const PropertyReport& o) {
    checks += o.checks;
    skipped += o.skipped;
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
  }
};

namespace detail {
inline Rational q(std::size_t x) { return Rational(BigInt(x)); }
}  // namespace detail

/// For r >= 2: every vertex lies in at most t(n-1)/(r-1) edges of size >= r.
inline PropertyReport check_large_degree_bound(const Hypergraph& h, std::size_t t, std::size_t r) {
  if (r < 2) throw std::domain_error("check_large_degree_bound: r must be >= 2");
  PropertyReport rep;
  const Rational bound = detail::q(t) * detail::q(h.vertex_count() == 0 ? 0 : h.vertex_count() - 1) / detail::q(r - 1);
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    std::size_t k = 0;
    for (EdgeId e : h.incident(v))
      if (h.edge_size(e) >= r) ++k;
    ++rep.checks;
    if (detail::q(k) > bound)
      rep.violations.push_back({"large-degree", v,
                                std::to_string(k) + " edges of size >= " + std::to_string(r) + " > " + to_string(bound)});
  }
  return rep;
}

/// For every edge e with alpha|V(e)| >= 2: at most 2t/alpha^2 edges f
/// (e included) have |V(e) ∩ V(f)| >= alpha|V(e)|.
inline PropertyReport check_overlap_count(const Hypergraph& h, std::size_t t, const Rational& alpha) {
  if (alpha <= 0) throw std::domain_error("check_overlap_count: alpha must be positive");
  PropertyReport rep;
  const Rational bound = 2 * detail::q(t) / (alpha * alpha);
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const Rational need = alpha * detail::q(h.edge_size(e));
    if (need < 2) {
      ++rep.skipped;
      continue;
    }
    std::size_t k = 0;
    for (EdgeId f = 0; f < h.edge_count(); ++f)
      if (detail::q(h.intersection_size(e, f)) >= need) ++k;
    ++rep.checks;
    if (detail::q(k) > bound)
      rep.violations.push_back({"overlap-count", e, std::to_string(k) + " heavy overlaps > " + to_string(bound)});
  }
  return rep;
}

struct NeighbourSplit {
  std::size_t m1 = 0;  // neighbours of size >= (1 + a1) r
  std::size_t m2 = 0;  // neighbours of size in [r/(1 + a2), (1 + a1) r)
};

inline NeighbourSplit neighbour_split(const Hypergraph& h, EdgeId e, const Rational& a1, const Rational& a2) {
  NeighbourSplit s;
  const Rational r = detail::q(h.edge_size(e));
  const Rational hi = (1 + a1) * r;
  const Rational lo = r / (1 + a2);
  for (EdgeId f : edge_neighbourhood(h, e)) {
    const Rational k = detail::q(h.edge_size(f));
    if (k >= hi) ++s.m1;
    else if (k >= lo) ++s.m2;
  }
  return s;
}

/// Weighted neighbour bound and its far-neighbour consequence, per edge:
///   (1 + a1) m1 + m2/(1 + a2) <= tn (1 + (1 + a2)/(r - 1 - a2))
/// and, when m1 + m2 >= t(1 - tau)n and a1 > 0,
///   m1 <= (tau + (1 + a2 + a2 r)/(r - 1 - a2)) tn / a1.
/// Skipped (counted) unless every edge has size >= 2(1 + a2)^2.
inline PropertyReport check_neighbour_size_bound(const Hypergraph& h, std::size_t t, const Rational& a1,
                                                 const Rational& a2, const Rational& tau) {
  if (a1 < 0 || a2 < 0 || tau < 0) throw std::domain_error("check_neighbour_size_bound: parameters must be >= 0");
  PropertyReport rep;
  const Rational min_size = 2 * (1 + a2) * (1 + a2);
  for (EdgeId e = 0; e < h.edge_count(); ++e)
    if (detail::q(h.edge_size(e)) < min_size) {
      rep.skipped += h.edge_count();
      return rep;
    }
  const Rational tn = detail::q(t) * detail::q(h.vertex_count());
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const Rational r = detail::q(h.edge_size(e));
    const Rational slack = r - 1 - a2;
    auto s = neighbour_split(h, e, a1, a2);
    const Rational lhs = (1 + a1) * detail::q(s.m1) + detail::q(s.m2) / (1 + a2);
    const Rational rhs = tn * (1 + (1 + a2) / slack);
    ++rep.checks;
    if (lhs > rhs)
      rep.violations.push_back({"neighbour-weight", e, "lhs " + to_string(lhs) + " > rhs " + to_string(rhs)});
    if (a1 > 0 && detail::q(s.m1 + s.m2) >= (1 - tau) * tn) {
      const Rational far = (tau + (1 + a2 + a2 * r) / slack) * tn / a1;
      ++rep.checks;
      if (detail::q(s.m1) > far)
        rep.violations.push_back({"far-neighbours", e, "m1 " + std::to_string(s.m1) + " > " + to_string(far)});
    }
  }
  return rep;
}

/// vol(H) <= t.
inline PropertyReport check_volume_bound(const Hypergraph& h, std::size_t t) {
  PropertyReport rep;
  if (h.vertex_count() < 2) {
    ++rep.skipped;
    return rep;
  }
  ++rep.checks;
  Rational v = volume(h);
  if (v > detail::q(t)) rep.violations.push_back({"volume", 0, "vol " + to_string(v) + " > t"});
  return rep;
}

struct InstanceVerification {
  bool codegree_ok = false;  // premise of every property below
  std::size_t max_codegree = 0;
  PropertyReport report;
};

/// Runs every property over a fixed parameter grid:
/// r in 2..max edge size, alpha in {1/4, 1/3, 1/2, 2/3, 1},
/// (a1, a2) in {0, 1/4, 1/2}^2, tau in {0, 1/10, 1/4, 1/2}.
inline InstanceVerification verify_instance(const Hypergraph& h, std::size_t t) {
  InstanceVerification out;
  out.max_codegree = max_codegree(h);
  out.codegree_ok = out.max_codegree <= t;
  std::size_t rmax = 0;
  for (EdgeId e = 0; e < h.edge_count(); ++e) rmax = std::max(rmax, h.edge_size(e));
  for (std::size_t r = 2; r <= std::max<std::size_t>(rmax, 2); ++r) out.report.absorb(check_large_degree_bound(h, t, r));
  for (const Rational& a : {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1)})
    out.report.absorb(check_overlap_count(h, t, a));
  const Rational grid[] = {Rational(0), Rational(1, 4), Rational(1, 2)};
  for (const Rational& a1 : grid)
    for (const Rational& a2 : grid)
      for (const Rational& tau : {Rational(0), Rational(1, 10), Rational(1, 4), Rational(1, 2)})
        out.report.absorb(check_neighbour_size_bound(h, t, a1, a2, tau));
  out.report.absorb(check_volume_bound(h, t));
  return out;
}

}  // namespace hyperchrom

#endif  // HYPERCHROM_VERIFY_HPP
