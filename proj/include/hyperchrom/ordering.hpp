#ifndef HYPERCHROM_ORDERING_HPP
#define HYPERCHROM_ORDERING_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hyperchrom/core.hpp"
#include "hyperchrom/hypergraph.hpp"
#include "hyperchrom/rational.hpp"

namespace hyperchrom {

/// Thrown when a procedure detects a broken internal invariant.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// N(e) for every edge.
inline std::vector<std::vector<EdgeId>> edge_neighbourhoods(const Hypergraph& h) {
  std::vector<std::vector<EdgeId>> out(h.edge_count());
  std::vector<std::uint32_t> stamp(h.edge_count(), UINT32_MAX);
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    stamp[e] = e;
    for (Vertex v : h.edge(e))
      for (EdgeId f : h.incident(v))
        if (stamp[f] != e) {
          stamp[f] = e;
          out[e].push_back(f);
        }
    std::sort(out[e].begin(), out[e].end());
  }
  return out;
}

/// fwddeg(e): number of edges meeting e that come strictly earlier in ord.
inline std::vector<std::size_t> forward_degrees(const Hypergraph& h, const EdgeOrdering& ord) {
  if (ord.size() != h.edge_count()) throw std::invalid_argument("ordering does not cover the edge set");
  auto nbrs = edge_neighbourhoods(h);
  std::vector<std::size_t> out(h.edge_count(), 0);
  for (EdgeId e = 0; e < h.edge_count(); ++e)
    for (EdgeId f : nbrs[e])
      if (ord.rank(f) < ord.rank(e)) ++out[e];
  return out;
}

/// Larger edges first; equal sizes by ascending id.
inline EdgeOrdering size_monotone_ordering(const Hypergraph& h) {
  std::vector<EdgeId> seq(h.edge_count());
  for (EdgeId e = 0; e < seq.size(); ++e) seq[e] = e;
  std::stable_sort(seq.begin(), seq.end(), [&](EdgeId a, EdgeId b) { return h.edge_size(a) > h.edge_size(b); });
  return EdgeOrdering(std::move(seq));
}

enum class ReorderCase { A, B };

struct ReorderCertificates {
  Rational W1_ratio;   // max |V(f)| / min |V(f)| over W
  bool W1_ok = false;  // W1_ratio <= 1 + 3 tau^{1/4} K^3
  Rational W2_volume;  // vol(W)
  Rational W2_bound;   // rational upper bound of t (1 - tau - 7 tau^{1/4}/K)^2 / (1 + 3 tau^{1/4} K^3)
  bool W2_ok = false;  // W2_volume >= W2_bound
  bool O1_ok = false;  // every edge after e* has fwddeg <= t(1 - tau)n
  bool O2_ok = false;  // sizes non-increasing up to e*
};

struct ReorderOutcome {
  EdgeOrdering ordering;
  ReorderCase kase = ReorderCase::A;
  /// Number of edges up to and including e* (0 in case A).
  std::size_t prefix_length = 0;
  std::optional<EdgeId> e_star;
  std::vector<EdgeId> W;  // in ordering order
  std::optional<ReorderCertificates> certificates;
  Rational threshold;      // t(1 - tau)n
  bool premise_ok = false;  // 1 - tau - 7 tau^{1/4}/K > 0, decided conservatively
  std::size_t shrinks = 0;
  std::size_t moves = 0;
};

/// Threshold helper: count <= x for a rational x.
inline bool count_at_most(std::size_t count, const Rational& x) { return Rational(BigInt(count)) <= x; }

/// Exchange local search over edge orderings. Starts from the
/// size-monotone order with the whole edge set as prefix and repeatedly
/// either drops e* (the prefix's last edge) when its forward degree is at
/// most t(1 - tau)n, or moves the earliest prefix edge with at most that
/// many prefix neighbours to just after e*. Ends in case A when the prefix
/// empties, otherwise in case B with W = {f <= e* : r <= |V(f)| < (1 + 3
/// tau^{1/4} K^3) r}, r = |V(e*)|.
inline ReorderOutcome reorder(const Hypergraph& h, std::size_t t, const Rational& tau, const Rational& k) {
  if (tau <= 0 || tau >= 1) throw std::domain_error("reorder: tau must lie in (0,1)");
  if (k < 1) throw std::domain_error("reorder: K must be >= 1");
  const std::size_t m = h.edge_count();
  const std::size_t n = h.vertex_count();
  ReorderOutcome out;
  out.threshold = Rational(BigInt(t)) * (1 - tau) * Rational(BigInt(n));
  const std::int64_t cap = floor_i64(out.threshold);

  const Enclosure quarter = root_enclosure(tau, 4);
  out.premise_ok = 1 - tau - 7 * quarter.hi / k > 0;

  auto nbrs = edge_neighbourhoods(h);
  std::vector<EdgeId> seq = size_monotone_ordering(h).sequence();
  std::vector<char> in_prefix(m, 1);
  std::vector<std::int64_t> cnt(m, 0);
  for (EdgeId e = 0; e < m; ++e) cnt[e] = static_cast<std::int64_t>(nbrs[e].size());
  auto leave_prefix = [&](EdgeId e) {
    in_prefix[e] = 0;
    for (EdgeId f : nbrs[e])
      if (in_prefix[f]) --cnt[f];
  };

  std::size_t p = m;
  std::size_t iterations = 0;
  while (p > 0) {
    if (++iterations > m + 1) throw InternalError("reorder: local search exceeded e(H) + 1 iterations");
    EdgeId estar = seq[p - 1];
    if (cnt[estar] <= cap) {
      leave_prefix(estar);
      --p;
      ++out.shrinks;
      continue;
    }
    std::optional<std::size_t> idx;
    for (std::size_t i = 0; i + 1 < p; ++i)
      if (cnt[seq[i]] <= cap) { idx = i; break; }
    if (!idx) break;
    EdgeId e = seq[*idx];
    seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(*idx));
    seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(p - 1), e);
    leave_prefix(e);
    --p;
    ++out.moves;
  }
  out.ordering = EdgeOrdering(seq);
  out.prefix_length = p;
  const auto fwd = forward_degrees(h, out.ordering);

  if (p == 0) {
    out.kase = ReorderCase::A;
    for (EdgeId e = 0; e < m; ++e)
      if (static_cast<std::int64_t>(fwd[e]) > cap) throw InternalError("reorder: case A ordering has a large forward degree");
    return out;
  }

  out.kase = ReorderCase::B;
  const EdgeId estar = seq[p - 1];
  out.e_star = estar;
  const std::size_t r = h.edge_size(estar);
  const Rational k3 = k * k * k;
  // |V(f)| < (1 + 3 s K^3) r with s = tau^{1/4}  <=>  ((|V(f)| - r) / (3 K^3 r))^4 < tau
  auto below_window = [&](std::size_t size) {
    if (size < r) return false;
    Rational x = Rational(BigInt(size - r)) / (3 * k3 * Rational(BigInt(r)));
    return x * x * x * x < tau;
  };
  for (std::size_t i = 0; i < p; ++i)
    if (below_window(h.edge_size(seq[i]))) out.W.push_back(seq[i]);

  ReorderCertificates c;
  std::size_t wmax = 0, wmin = SIZE_MAX;
  for (EdgeId f : out.W) {
    wmax = std::max(wmax, h.edge_size(f));
    wmin = std::min(wmin, h.edge_size(f));
  }
  c.W1_ratio = Rational(BigInt(wmax), BigInt(wmin));
  {
    Rational x = (c.W1_ratio - 1) / (3 * k3);
    c.W1_ok = x * x * x * x <= tau;
  }
  c.W2_volume = n >= 2 ? volume(h, out.W) : Rational(0);
  {
    Rational a_lo = 1 - tau - 7 * quarter.hi / k;
    Rational a_hi = 1 - tau - 7 * quarter.lo / k;
    Rational sq = std::max(a_lo * a_lo, a_hi * a_hi);
    if (a_lo <= 0 && a_hi >= 0) sq = std::max(a_lo * a_lo, a_hi * a_hi);
    c.W2_bound = Rational(BigInt(t)) * sq / (1 + 3 * quarter.lo * k3);
    c.W2_ok = c.W2_volume >= c.W2_bound;
  }
  c.O1_ok = true;
  for (std::size_t i = p; i < m; ++i)
    if (static_cast<std::int64_t>(fwd[seq[i]]) > cap) c.O1_ok = false;
  c.O2_ok = true;
  for (std::size_t i = 1; i < p; ++i)
    if (h.edge_size(seq[i]) > h.edge_size(seq[i - 1])) c.O2_ok = false;
  out.certificates = c;
  return out;
}

/// Parts, ordering and property flags of a partition. Flags are named after
/// the properties they test; `vacuous` lists flags whose quantifier ranged
/// over an empty part (such flags are true).
struct PartitionCertificate {
  std::map<std::string, std::vector<EdgeId>> parts;
  EdgeOrdering ordering;
  std::map<std::string, bool> flags;
  std::map<std::string, std::optional<EdgeId>> witness;
  std::set<std::string> vacuous;
  /// True when the first reorder ended in case A and no split was needed.
  bool trivial = false;
  std::vector<ReorderCase> reorder_cases;

  bool all_flags() const {
    for (const auto& [name, ok] : flags)
      if (!ok) return false;
    return true;
  }
};

namespace detail {

inline std::vector<char> membership(std::size_t m, const std::vector<EdgeId>& part) {
  std::vector<char> in(m, 0);
  for (EdgeId e : part) in[e] = 1;
  return in;
}

// All edges of `before` precede all edges of `after`; on failure returns an
// offending edge from `after`.
inline std::optional<EdgeId> order_violation(const EdgeOrdering& ord, const std::vector<EdgeId>& before,
                                             const std::vector<EdgeId>& after) {
  if (before.empty() || after.empty()) return std::nullopt;
  std::uint32_t last = 0;
  for (EdgeId e : before) last = std::max(last, ord.rank(e));
  std::optional<EdgeId> bad;
  for (EdgeId f : after)
    if (ord.rank(f) < last && (!bad || ord.rank(f) < ord.rank(*bad))) bad = f;
  return bad;
}

inline void set_flag(PartitionCertificate& c, const std::string& name, bool vacuous, std::optional<EdgeId> witness,
                     bool ok) {
  c.flags[name] = vacuous ? true : ok;
  c.witness[name] = vacuous || ok ? std::nullopt : witness;
  if (vacuous) c.vacuous.insert(name);
}

// First edge of `part` (in ordering order) whose forward degree exceeds `bound`.
inline std::optional<EdgeId> fwd_violation(const std::vector<std::size_t>& fwd, const EdgeOrdering& ord,
                                           const std::vector<EdgeId>& part, const Rational& bound) {
  std::optional<EdgeId> bad;
  for (EdgeId e : part)
    if (!count_at_most(fwd[e], bound) && (!bad || ord.rank(e) < ord.rank(*bad))) bad = e;
  return bad;
}

}  // namespace detail

/// Evaluates P1-P3 and FD1-FD3 for a (H1, W, H2) split with ordering ord.
inline void evaluate_stability_flags(const Hypergraph& h, std::size_t t, const Rational& sigma, const Rational& delta,
                                     PartitionCertificate& c) {
  const auto& h1 = c.parts["H1"];
  const auto& w = c.parts["W"];
  const auto& h2 = c.parts["H2"];
  const auto fwd = forward_degrees(h, c.ordering);
  const Rational tn = Rational(BigInt(t)) * Rational(BigInt(h.vertex_count()));
  c.flags.clear();
  c.witness.clear();
  c.vacuous.clear();

  std::size_t wmax = 0, wmin = SIZE_MAX;
  std::optional<EdgeId> wmax_edge;
  for (EdgeId f : w) {
    if (h.edge_size(f) > wmax) { wmax = h.edge_size(f); wmax_edge = f; }
    wmin = std::min(wmin, h.edge_size(f));
  }
  detail::set_flag(c, "P1", w.empty(), wmax_edge,
                   !w.empty() && Rational(BigInt(wmax)) <= (1 + delta) * Rational(BigInt(wmin)));
  detail::set_flag(c, "P2", w.empty(), std::nullopt,
                   !w.empty() && h.vertex_count() >= 2 && volume(h, w) >= (1 - delta) * Rational(BigInt(t)));
  std::optional<EdgeId> p3;
  for (EdgeId e : h2)
    if (h.edge_size(e) < wmax && (!p3 || c.ordering.rank(e) < c.ordering.rank(*p3))) p3 = e;
  detail::set_flag(c, "P3", h2.empty() || w.empty(), p3, !p3);

  auto fd1 = detail::fwd_violation(fwd, c.ordering, h1, (1 - 2 * sigma) * tn);
  detail::set_flag(c, "FD1", h1.empty(), fd1, !fd1);
  auto fd2 = detail::fwd_violation(fwd, c.ordering, h2, tn / 2000);
  detail::set_flag(c, "FD2", h2.empty(), fd2, !fd2);
  auto fd3 = detail::order_violation(c.ordering, h2, w);
  if (!fd3) fd3 = detail::order_violation(c.ordering, w, h1);
  if (!fd3 && w.empty()) fd3 = detail::order_violation(c.ordering, h2, h1);
  const bool fd3_vacuous = (h2.empty() ? 0 : 1) + (w.empty() ? 0 : 1) + (h1.empty() ? 0 : 1) <= 1;
  detail::set_flag(c, "FD3", fd3_vacuous, fd3, !fd3);
}

/// Evaluates P'1, P'2 and FD'1-FD'3 for a (H1, H2, H3) split with ordering ord.
inline void evaluate_extremal_flags(const Hypergraph& h, std::size_t t, const Rational& delta, const Rational& gamma,
                                    std::size_t r0, PartitionCertificate& c) {
  const auto& h1 = c.parts["H1"];
  const auto& h2 = c.parts["H2"];
  const auto& h3 = c.parts["H3"];
  const std::size_t m = h.edge_count();
  const auto fwd = forward_degrees(h, c.ordering);
  const Rational tn = Rational(BigInt(t)) * Rational(BigInt(h.vertex_count()));
  c.flags.clear();
  c.witness.clear();
  c.vacuous.clear();

  auto in1 = detail::membership(m, h1);
  std::optional<EdgeId> p1;
  bool any_small = false;
  for (EdgeId e = 0; e < m; ++e)
    if (h.edge_size(e) <= r0) {
      any_small = true;
      if (!in1[e] && !p1) p1 = e;
    }
  detail::set_flag(c, "P'1", !any_small, p1, !p1);

  std::optional<EdgeId> p2;
  for (EdgeId e : h3)
    if (!at_least_scaled_sqrt(h.edge_size(e), 1 - 2 * delta, h.vertex_count()) &&
        (!p2 || c.ordering.rank(e) < c.ordering.rank(*p2)))
      p2 = e;
  detail::set_flag(c, "P'2", h3.empty(), p2, !p2);

  auto fd1 = detail::fwd_violation(fwd, c.ordering, h2, tn - 2);
  detail::set_flag(c, "FD'1", h2.empty(), fd1, !fd1);
  auto fd2 = detail::fwd_violation(fwd, c.ordering, h1, gamma * tn);
  detail::set_flag(c, "FD'2", h1.empty(), fd2, !fd2);
  auto fd3 = detail::order_violation(c.ordering, h3, h2);
  if (!fd3) fd3 = detail::order_violation(c.ordering, h2, h1);
  if (!fd3 && h2.empty()) fd3 = detail::order_violation(c.ordering, h3, h1);
  const bool fd3_vacuous = (h3.empty() ? 0 : 1) + (h2.empty() ? 0 : 1) + (h1.empty() ? 0 : 1) <= 1;
  detail::set_flag(c, "FD'3", fd3_vacuous, fd3, !fd3);
}

namespace detail {

// Reorders the spanning subhypergraph on `ids` and returns the ids (of h)
// in the resulting order, together with the outcome in local ids.
inline std::pair<std::vector<EdgeId>, ReorderOutcome> reorder_part(const Hypergraph& h, const std::vector<EdgeId>& ids,
                                                                   std::size_t t, const Rational& tau,
                                                                   const Rational& k) {
  Hypergraph sub = spanning_subhypergraph(h, ids);
  ReorderOutcome r = reorder(sub, t, tau, k);
  std::vector<EdgeId> seq;
  seq.reserve(ids.size());
  for (EdgeId local : r.ordering.sequence()) seq.push_back(ids[local]);
  return {seq, r};
}

inline std::vector<EdgeId> concat(std::initializer_list<const std::vector<EdgeId>*> parts) {
  std::vector<EdgeId> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

}  // namespace detail

/// Partition (H1, W, H2) with ordering: reorder with (2 sigma, 1); on case A
/// the partition is trivial (H1 = H). On case B, H1 is everything after e*,
/// W the window block ending at e*, H2 everything before W; H2 is then
/// reordered with (1 - 1/2000, 2000^2) and the orders are spliced as H2, W, H1.
/// With `probe` set, flag "probe" records whether greedy colouring along the
/// final ordering is guaranteed from lists of that size (max fwddeg < probe).
inline PartitionCertificate partition_stability(const Hypergraph& h, std::size_t t, const Rational& sigma,
                                                const Rational& delta, std::optional<std::size_t> probe = std::nullopt) {
  if (sigma <= 0 || sigma >= 1) throw std::domain_error("partition_stability: sigma must lie in (0,1)");
  if (delta <= 0 || delta >= 1) throw std::domain_error("partition_stability: delta must lie in (0,1)");
  PartitionCertificate c;
  ReorderOutcome r1 = reorder(h, t, 2 * sigma, Rational(1));
  c.reorder_cases.push_back(r1.kase);
  const auto& seq1 = r1.ordering.sequence();
  if (r1.kase == ReorderCase::A) {
    c.trivial = true;
    c.parts["H1"] = seq1;
    c.parts["W"] = {};
    c.parts["H2"] = {};
    c.ordering = r1.ordering;
  } else {
    const std::size_t p = r1.prefix_length;
    std::vector<EdgeId> h1(seq1.begin() + static_cast<std::ptrdiff_t>(p), seq1.end());
    std::vector<EdgeId> w = r1.W;  // contiguous block ending at e*, by O2
    std::size_t first_w = r1.ordering.rank(w.front());
    std::vector<EdgeId> h2(seq1.begin(), seq1.begin() + static_cast<std::ptrdiff_t>(first_w));
    std::vector<EdgeId> block(seq1.begin() + static_cast<std::ptrdiff_t>(first_w),
                              seq1.begin() + static_cast<std::ptrdiff_t>(p));
    if (block != w) throw InternalError("partition_stability: W is not a contiguous block ending at e*");
    std::vector<EdgeId> h2_seq;
    if (!h2.empty()) {
      auto [seq2, r2] = detail::reorder_part(h, h2, t, 1 - Rational(1, 2000), Rational(2000 * 2000));
      c.reorder_cases.push_back(r2.kase);
      h2_seq = std::move(seq2);
    }
    c.parts["H1"] = h1;
    c.parts["W"] = w;
    c.parts["H2"] = h2;
    c.ordering = EdgeOrdering(detail::concat({&h2_seq, &w, &h1}));
  }
  for (auto& [name, part] : c.parts) std::sort(part.begin(), part.end());
  evaluate_stability_flags(h, t, sigma, delta, c);
  if (probe) {
    auto fwd = forward_degrees(h, c.ordering);
    std::optional<EdgeId> bad;
    for (EdgeId e : c.ordering.sequence())
      if (fwd[e] + 1 > *probe) { bad = e; break; }
    detail::set_flag(c, "probe", h.edge_count() == 0, bad, !bad);
  }
  return c;
}

/// Partition (H1, H2, H3) with ordering: reorder with (1 - gamma, gamma^-2);
/// on case A, H1 = H. On case B, H1 is everything after e1* and the prefix
/// is reordered with (sigma_inner, 1); if that ends in case B, H3 is the
/// new prefix up to e2* and H2 the rest. Spliced order: H3, H2, H1.
inline PartitionCertificate partition_extremal(const Hypergraph& h, std::size_t t, const Rational& delta,
                                               const Rational& gamma, std::size_t r0,
                                               std::optional<Rational> sigma_inner = std::nullopt) {
  if (delta <= 0 || delta >= 1) throw std::domain_error("partition_extremal: delta must lie in (0,1)");
  if (gamma <= 0 || gamma >= 1) throw std::domain_error("partition_extremal: gamma must lie in (0,1)");
  if (r0 < 1) throw std::domain_error("partition_extremal: r0 must be >= 1");
  const Rational sigma = sigma_inner ? *sigma_inner : delta / 4;
  if (sigma <= 0 || sigma >= 1) throw std::domain_error("partition_extremal: sigma must lie in (0,1)");
  PartitionCertificate c;
  ReorderOutcome r1 = reorder(h, t, 1 - gamma, 1 / (gamma * gamma));
  c.reorder_cases.push_back(r1.kase);
  const auto& seq1 = r1.ordering.sequence();
  if (r1.kase == ReorderCase::A) {
    c.trivial = true;
    c.parts["H1"] = seq1;
    c.parts["H2"] = {};
    c.parts["H3"] = {};
    c.ordering = r1.ordering;
  } else {
    const std::size_t p = r1.prefix_length;
    std::vector<EdgeId> h1(seq1.begin() + static_cast<std::ptrdiff_t>(p), seq1.end());
    std::vector<EdgeId> left(seq1.begin(), seq1.begin() + static_cast<std::ptrdiff_t>(p));
    auto [seq2, r2] = detail::reorder_part(h, left, t, sigma, Rational(1));
    c.reorder_cases.push_back(r2.kase);
    std::vector<EdgeId> h2, h3;
    if (r2.kase == ReorderCase::A) {
      h2 = seq2;
    } else {
      h3.assign(seq2.begin(), seq2.begin() + static_cast<std::ptrdiff_t>(r2.prefix_length));
      h2.assign(seq2.begin() + static_cast<std::ptrdiff_t>(r2.prefix_length), seq2.end());
    }
    c.parts["H1"] = h1;
    c.parts["H2"] = h2;
    c.parts["H3"] = h3;
    c.ordering = EdgeOrdering(detail::concat({&h3, &h2, &h1}));
  }
  for (auto& [name, part] : c.parts) std::sort(part.begin(), part.end());
  evaluate_extremal_flags(h, t, delta, gamma, r0, c);
  return c;
}

struct GreedyFailure {
  EdgeId edge = 0;
  std::size_t rank = 0;
  std::size_t fwddeg = 0;
  std::size_t list_size = 0;
};

/// Colours edges in ord order, each with the smallest list colour not used
/// by an earlier edge meeting it.
inline std::variant<EdgeColouring, GreedyFailure> greedy_list_colour(const Hypergraph& h, const EdgeOrdering& ord,
                                                                     const ListAssignment& lists) {
  if (ord.size() != h.edge_count() || lists.size() != h.edge_count())
    throw std::invalid_argument("greedy_list_colour: ordering or lists do not cover the edge set");
  auto nbrs = edge_neighbourhoods(h);
  EdgeColouring phi(h.edge_count(), 0);
  std::vector<char> done(h.edge_count(), 0);
  for (std::size_t i = 0; i < ord.size(); ++i) {
    EdgeId e = ord.at(i);
    std::vector<Colour> taken;
    std::size_t fwd = 0;
    for (EdgeId f : nbrs[e])
      if (done[f]) {
        taken.push_back(phi[f]);
        ++fwd;
      }
    std::sort(taken.begin(), taken.end());
    std::optional<Colour> pick;
    for (Colour c : lists.list(e))
      if (!std::binary_search(taken.begin(), taken.end(), c)) { pick = c; break; }
    if (!pick) return GreedyFailure{e, i, fwd, lists.list(e).size()};
    phi[e] = *pick;
    done[e] = 1;
  }
  return phi;
}

/// Extends a partial colouring along `seq`: each edge takes the smallest
/// colour of its list unused by any already coloured edge meeting it.
/// Returns the first edge that cannot be coloured.
inline std::optional<EdgeId> greedy_extend(const Hypergraph& h, const std::vector<EdgeId>& seq,
                                           const ListAssignment& lists, PartialColouring& phi) {
  for (EdgeId e : seq) {
    std::vector<Colour> taken;
    for (EdgeId f : edge_neighbourhood(h, e))
      if (phi[f]) taken.push_back(*phi[f]);
    std::sort(taken.begin(), taken.end());
    std::optional<Colour> pick;
    for (Colour c : lists.list(e))
      if (!std::binary_search(taken.begin(), taken.end(), c)) { pick = c; break; }
    if (!pick) return e;
    phi[e] = *pick;
  }
  return std::nullopt;
}

}  // namespace hyperchrom

#endif  // HYPERCHROM_ORDERING_HPP
