#ifndef HYPERCHROM_GENERATORS_HPP
#define HYPERCHROM_GENERATORS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperchrom/hypergraph.hpp"

namespace hyperchrom {

/// Arithmetic tables for a small finite field GF(p^e); elements are the
/// integers 0..q-1 read as base-p coefficient vectors.
class FiniteField {
 public:
  static const std::vector<std::uint32_t>& supported_orders() {
    static const std::vector<std::uint32_t> orders{2, 3, 4, 5, 7, 8, 9, 11, 13};
    return orders;
  }

  explicit FiniteField(std::uint32_t q) : q_(q), add_(q * q), mul_(q * q) {
    // modulus[i] = coefficient of x^i in the monic irreducible polynomial, i < e
    std::uint32_t p = q;
    std::vector<std::uint32_t> modulus;
    switch (q) {
      case 4: p = 2; modulus = {1, 1}; break;      // x^2 + x + 1
      case 8: p = 2; modulus = {1, 1, 0}; break;   // x^3 + x + 1
      case 9: p = 3; modulus = {1, 0}; break;      // x^2 + 1
      case 2: case 3: case 5: case 7: case 11: case 13: break;
      default: throw std::invalid_argument(unsupported_message(q));
    }
    const std::size_t e = modulus.empty() ? 1 : modulus.size();
    auto digits = [&](std::uint32_t a) {
      std::vector<std::uint32_t> d(e, 0);
      for (std::size_t i = 0; i < e; ++i) { d[i] = a % p; a /= p; }
      return d;
    };
    auto number = [&](const std::vector<std::uint32_t>& d) {
      std::uint32_t a = 0;
      for (std::size_t i = e; i-- > 0;) a = a * p + d[i];
      return a;
    };
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        auto da = digits(a), db = digits(b);
        std::vector<std::uint32_t> sum(e);
        for (std::size_t i = 0; i < e; ++i) sum[i] = (da[i] + db[i]) % p;
        add_[a * q + b] = number(sum);
        std::vector<std::uint32_t> prod(2 * e, 0);
        for (std::size_t i = 0; i < e; ++i)
          for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        // reduce using x^e = -sum modulus[i] x^i
        for (std::size_t k = 2 * e - 1; k >= e; --k) {
          std::uint32_t c = prod[k];
          if (c == 0) continue;
          prod[k] = 0;
          for (std::size_t i = 0; i < modulus.size(); ++i)
            prod[k - e + i] = (prod[k - e + i] + (p - c) * modulus[i]) % p;
        }
        prod.resize(e);
        mul_[a * q + b] = number(prod);
      }
  }

  std::uint32_t order() const { return q_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }

  static std::string unsupported_message(std::uint32_t q) {
    std::string s = "unsupported plane order " + std::to_string(q) + "; supported orders are {";
    const auto& o = supported_orders();
    for (std::size_t i = 0; i < o.size(); ++i) s += (i ? "," : "") + std::to_string(o[i]);
    return s + "} (the order-1 plane is the triangle, near_pencil(3))";
  }

 private:
  std::uint32_t q_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
};

/// Point-line incidence hypergraph of PG(2,q).
inline Hypergraph projective_plane(std::uint32_t q) {
  const auto& orders = FiniteField::supported_orders();
  if (std::find(orders.begin(), orders.end(), q) == orders.end())
    throw std::invalid_argument(FiniteField::unsupported_message(q));
  FiniteField f(q);
  // Normalised homogeneous triples: (1,a,b), (0,1,b), (0,0,1).
  std::vector<std::array<std::uint32_t, 3>> pts;
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) pts.push_back({1, a, b});
  for (std::uint32_t b = 0; b < q; ++b) pts.push_back({0, 1, b});
  pts.push_back({0, 0, 1});
  std::vector<std::vector<Vertex>> lines;
  for (const auto& l : pts) {
    std::vector<Vertex> on;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto& p = pts[i];
      std::uint32_t dot = f.add(f.add(f.mul(l[0], p[0]), f.mul(l[1], p[1])), f.mul(l[2], p[2]));
      if (dot == 0) on.push_back(static_cast<Vertex>(i));
    }
    lines.push_back(std::move(on));
  }
  return Hypergraph(pts.size(), std::move(lines));
}

/// Apex 0; edge 0 is {1, ..., n-1}; edge i is {0, i}.
inline Hypergraph near_pencil(std::size_t n) {
  if (n < 3) throw std::invalid_argument("near_pencil needs n >= 3");
  std::vector<std::vector<Vertex>> edges;
  std::vector<Vertex> big;
  for (Vertex v = 1; v < n; ++v) big.push_back(v);
  edges.push_back(big);
  for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
  return Hypergraph(n, std::move(edges));
}

/// Each edge replaced by t consecutive copies (edge e becomes ids e*t .. e*t+t-1).
inline Hypergraph t_fold(const Hypergraph& h, std::size_t t) {
  if (t < 1) throw std::invalid_argument("t_fold needs t >= 1");
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(h.edge_count() * t);
  for (const auto& e : h.edges())
    for (std::size_t i = 0; i < t; ++i) edges.push_back(e);
  return Hypergraph(h.vertex_count(), std::move(edges));
}

/// Hypergraph whose line graph is the union of the given cliques: one vertex
/// per clique, one edge per ground vertex g listing the cliques containing g.
/// Ground vertices are 0..max id and each must lie in some clique.
inline Hypergraph from_cliques(const std::vector<std::vector<std::uint32_t>>& family) {
  if (family.empty()) throw std::invalid_argument("from_cliques: empty family");
  std::uint32_t ground = 0;
  for (const auto& c : family) {
    if (c.empty()) throw std::invalid_argument("from_cliques: empty clique");
    for (auto g : c) ground = std::max(ground, g + 1);
  }
  std::vector<std::vector<Vertex>> edges(ground);
  for (std::size_t i = 0; i < family.size(); ++i) {
    std::vector<std::uint32_t> c = family[i];
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end())
      throw std::invalid_argument("from_cliques: clique " + std::to_string(i) + " repeats a vertex");
    for (auto g : c) edges[g].push_back(static_cast<Vertex>(i));
  }
  for (std::uint32_t g = 0; g < ground; ++g)
    if (edges[g].empty()) throw std::invalid_argument("from_cliques: ground vertex " + std::to_string(g) + " is in no clique");
  return Hypergraph(family.size(), std::move(edges));
}

struct GeneratorParams {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t t = 1;
  std::size_t min_size = 2;
  std::size_t max_size = 2;
  std::size_t density = 0;  // target edge count
};

struct GeneratedHypergraph {
  Hypergraph hypergraph;
  std::size_t shortfall = 0;  // density minus edges produced
  std::size_t attempts = 0;
};

/// Rejection sampler: draws edges with sizes uniform in [min_size, max_size]
/// and keeps each one that leaves every codegree <= t. Stops at density
/// edges or after 50 * density draws.
inline GeneratedHypergraph random_bounded_codegree(const GeneratorParams& p) {
  if (p.min_size < 1) throw std::invalid_argument("min_size must be >= 1");
  if (p.min_size > p.max_size) throw std::invalid_argument("min_size exceeds max_size");
  if (p.density > 0 && p.max_size > p.n) throw std::invalid_argument("max_size exceeds n");
  std::mt19937_64 rng(p.seed);
  std::uniform_int_distribution<std::size_t> size_dist(p.min_size, p.max_size);
  std::unordered_map<std::uint64_t, std::size_t> codeg;
  auto key = [](Vertex u, Vertex v) { return (std::uint64_t{u} << 32) | v; };
  std::vector<Vertex> pool(p.n);
  for (Vertex v = 0; v < p.n; ++v) pool[v] = v;
  std::vector<std::vector<Vertex>> edges;
  const std::size_t budget = 50 * p.density;
  std::size_t attempts = 0;
  while (edges.size() < p.density && attempts < budget) {
    ++attempts;
    std::size_t k = size_dist(rng);
    for (std::size_t i = 0; i < k; ++i) {  // partial Fisher-Yates
      std::uniform_int_distribution<std::size_t> pick(i, p.n - 1);
      std::swap(pool[i], pool[pick(rng)]);
    }
    std::vector<Vertex> e(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(e.begin(), e.end());
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (codeg[key(e[i], e[j])] + 1 > p.t) { ok = false; break; }
    if (!ok) continue;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) ++codeg[key(e[i], e[j])];
    edges.push_back(std::move(e));
  }
  GeneratedHypergraph out{Hypergraph(p.n, std::move(edges)), 0, attempts};
  out.shortfall = p.density - out.hypergraph.edge_count();
  return out;
}

}  // namespace hyperchrom

#endif  // HYPERCHROM_GENERATORS_HPP
