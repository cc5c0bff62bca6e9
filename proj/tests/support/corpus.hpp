#ifndef HYPERCHROM_TESTS_CORPUS_HPP
#define HYPERCHROM_TESTS_CORPUS_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "hyperchrom/generators.hpp"
#include "hyperchrom/hypergraph.hpp"

namespace corpus {

struct Instance {
  hyperchrom::Hypergraph h;
  std::size_t t = 1;
  std::uint64_t seed = 0;
};

/// Seeded random bounded-codegree instance with n in [4, max_n], t in [1, max_t].
inline Instance random_instance(std::uint64_t seed, std::size_t max_n = 30, std::size_t max_t = 3,
                                std::size_t max_edges = 60) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 17);
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  hyperchrom::GeneratorParams p;
  p.seed = seed;
  p.n = pick(4, max_n);
  p.t = pick(1, max_t);
  p.min_size = pick(2, std::min<std::size_t>(4, p.n));
  p.max_size = pick(p.min_size, std::min<std::size_t>(p.n, p.min_size + 6));
  p.density = pick(1, max_edges);
  return {hyperchrom::random_bounded_codegree(p).hypergraph, p.t, seed};
}

/// A projective plane of order q with some lines dropped and some points
/// deleted from lines; codegree stays <= 1.
inline hyperchrom::Hypergraph perturbed_plane(std::uint32_t q, std::uint64_t seed, std::size_t drop_lines,
                                              std::size_t shrink_lines) {
  auto base = hyperchrom::projective_plane(q);
  std::mt19937_64 rng(seed);
  std::vector<std::vector<hyperchrom::Vertex>> edges = base.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  edges.resize(edges.size() - std::min(drop_lines, edges.size() - 1));
  for (std::size_t i = 0; i < shrink_lines && i < edges.size(); ++i) {
    auto& e = edges[i];
    if (e.size() > 2) e.erase(e.begin() + static_cast<std::ptrdiff_t>(rng() % e.size()));
  }
  return hyperchrom::Hypergraph(base.vertex_count(), std::move(edges));
}

}  // namespace corpus

#endif  // HYPERCHROM_TESTS_CORPUS_HPP
