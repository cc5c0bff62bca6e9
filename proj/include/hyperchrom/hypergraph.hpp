#ifndef HYPERCHROM_HYPERGRAPH_HPP
#define HYPERCHROM_HYPERGRAPH_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperchrom {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Colour = std::uint32_t;

/// Hypergraph on vertices 0..n-1 with an ordered sequence of edges.
/// Edges are non-empty vertex sets; the same set may occur under several
/// edge ids. Values are immutable once built.
class Hypergraph {
 public:
  Hypergraph() = default;

  Hypergraph(std::size_t n, std::vector<std::vector<Vertex>> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ > std::numeric_limits<std::uint32_t>::max())
      throw std::invalid_argument("vertex count does not fit in 32 bits");
    if (edges_.size() > std::numeric_limits<std::uint32_t>::max())
      throw std::invalid_argument("edge count does not fit in 32 bits");
    incidence_.assign(n_, {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      auto& vs = edges_[e];
      if (vs.empty()) throw std::invalid_argument("edge " + std::to_string(e) + " is empty");
      std::sort(vs.begin(), vs.end());
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] >= n_)
          throw std::invalid_argument("edge " + std::to_string(e) + " has vertex " + std::to_string(vs[i]) +
                                      " outside 0.." + std::to_string(n_ == 0 ? 0 : n_ - 1));
        if (i > 0 && vs[i] == vs[i - 1])
          throw std::invalid_argument("edge " + std::to_string(e) + " repeats vertex " + std::to_string(vs[i]));
        incidence_[vs[i]].push_back(static_cast<EdgeId>(e));
      }
    }
    if (n_ <= 128) {
      masks_.resize(edges_.size());
      for (std::size_t e = 0; e < edges_.size(); ++e) {
        Mask m{0, 0};
        for (Vertex v : edges_[e]) m[v >> 6] |= std::uint64_t{1} << (v & 63);
        masks_[e] = m;
      }
    }
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Sorted vertex list of edge e.
  std::span<const Vertex> edge(EdgeId e) const { return edges_.at(e); }
  std::size_t edge_size(EdgeId e) const { return edges_.at(e).size(); }
  const std::vector<std::vector<Vertex>>& edges() const { return edges_; }

  /// Edge ids containing v, ascending.
  std::span<const EdgeId> incident(Vertex v) const { return incidence_.at(v); }
  std::size_t degree(Vertex v) const { return incidence_.at(v).size(); }

  bool contains(EdgeId e, Vertex v) const {
    if (!masks_.empty()) return v < n_ && (masks_[e][v >> 6] >> (v & 63)) & 1;
    return std::binary_search(edges_[e].begin(), edges_[e].end(), v);
  }

  bool intersects(EdgeId e, EdgeId f) const {
    if (!masks_.empty()) return (masks_[e][0] & masks_[f][0]) || (masks_[e][1] & masks_[f][1]);
    const auto& a = edges_[e];
    const auto& b = edges_[f];
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return true;
      if (a[i] < b[j]) ++i; else ++j;
    }
    return false;
  }

  std::size_t intersection_size(EdgeId e, EdgeId f) const {
    if (!masks_.empty())
      return static_cast<std::size_t>(__builtin_popcountll(masks_[e][0] & masks_[f][0]) +
                                      __builtin_popcountll(masks_[e][1] & masks_[f][1]));
    const auto& a = edges_[e];
    const auto& b = edges_[f];
    std::size_t i = 0, j = 0, c = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) { ++c; ++i; ++j; }
      else if (a[i] < b[j]) ++i;
      else ++j;
    }
    return c;
  }

  /// Structural equality: same n and the same edge sequence.
  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  using Mask = std::array<std::uint64_t, 2>;
  std::size_t n_ = 0;
  std::vector<std::vector<Vertex>> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<Mask> masks_;
};

/// Linear order on edge ids: perm lists edges first to last, position is the
/// inverse.
class EdgeOrdering {
 public:
  EdgeOrdering() = default;

  explicit EdgeOrdering(std::vector<EdgeId> perm) : perm_(std::move(perm)), position_(perm_.size(), kUnset) {
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      EdgeId e = perm_[i];
      if (e >= perm_.size() || position_[e] != kUnset)
        throw std::invalid_argument("edge ordering is not a permutation");
      position_[e] = static_cast<std::uint32_t>(i);
    }
  }

  static EdgeOrdering identity(std::size_t m) {
    std::vector<EdgeId> p(m);
    for (std::size_t i = 0; i < m; ++i) p[i] = static_cast<EdgeId>(i);
    return EdgeOrdering(std::move(p));
  }

  std::size_t size() const { return perm_.size(); }
  const std::vector<EdgeId>& sequence() const { return perm_; }
  EdgeId at(std::size_t rank) const { return perm_.at(rank); }
  std::uint32_t rank(EdgeId e) const { return position_.at(e); }
  bool precedes(EdgeId e, EdgeId f) const { return rank(e) < rank(f); }

  friend bool operator==(const EdgeOrdering& a, const EdgeOrdering& b) { return a.perm_ == b.perm_; }

 private:
  static constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<EdgeId> perm_;
  std::vector<std::uint32_t> position_;
};

/// Per-edge colour lists, each stored sorted and without repeats.
class ListAssignment {
 public:
  ListAssignment() = default;

  explicit ListAssignment(std::vector<std::vector<Colour>> lists) : lists_(std::move(lists)) {
    for (std::size_t e = 0; e < lists_.size(); ++e) {
      auto& l = lists_[e];
      std::sort(l.begin(), l.end());
      if (std::adjacent_find(l.begin(), l.end()) != l.end())
        throw std::invalid_argument("list of edge " + std::to_string(e) + " repeats a colour");
    }
  }

  /// m lists, each {0, ..., k-1}.
  static ListAssignment uniform(std::size_t m, std::size_t k) {
    std::vector<Colour> base(k);
    for (std::size_t c = 0; c < k; ++c) base[c] = static_cast<Colour>(c);
    return ListAssignment(std::vector<std::vector<Colour>>(m, base));
  }

  std::size_t size() const { return lists_.size(); }
  const std::vector<Colour>& list(EdgeId e) const { return lists_.at(e); }
  const std::vector<std::vector<Colour>>& lists() const { return lists_; }
  bool contains(EdgeId e, Colour c) const { return std::binary_search(lists_.at(e).begin(), lists_.at(e).end(), c); }

  std::size_t min_size() const {
    std::size_t m = std::numeric_limits<std::size_t>::max();
    for (const auto& l : lists_) m = std::min(m, l.size());
    return lists_.empty() ? 0 : m;
  }
  std::size_t max_size() const {
    std::size_t m = 0;
    for (const auto& l : lists_) m = std::max(m, l.size());
    return m;
  }

  friend bool operator==(const ListAssignment& a, const ListAssignment& b) { return a.lists_ == b.lists_; }

 private:
  std::vector<std::vector<Colour>> lists_;
};

/// Colour of each edge, indexed by edge id.
using EdgeColouring = std::vector<Colour>;
/// Colouring in progress; nullopt marks an uncoloured edge.
using PartialColouring = std::vector<std::optional<Colour>>;

/// Simple undirected graph with adjacency lists and an adjacency matrix.
struct SimpleGraph {
  std::size_t n = 0;
  std::vector<std::vector<std::uint32_t>> adj;
  std::vector<std::uint8_t> matrix;

  explicit SimpleGraph(std::size_t order = 0) : n(order), adj(order), matrix(order * order, 0) {}

  void add_edge(std::uint32_t u, std::uint32_t v) {
    if (u == v || matrix[u * n + v]) return;
    matrix[u * n + v] = matrix[v * n + u] = 1;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  bool adjacent(std::uint32_t u, std::uint32_t v) const { return matrix[u * n + v] != 0; }
  std::size_t degree(std::uint32_t v) const { return adj[v].size(); }
  std::size_t edge_count() const {
    std::size_t s = 0;
    for (const auto& a : adj) s += a.size();
    return s / 2;
  }
};

}  // namespace hyperchrom

#endif  // HYPERCHROM_HYPERGRAPH_HPP
