#include <gtest/gtest.h>

#include <random>

#include "hyperchrom/canonical.hpp"
#include "hyperchrom/generators.hpp"
#include "hyperchrom/io.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace hyperchrom;

namespace {

Hypergraph relabel(const Hypergraph& h, std::uint64_t seed) {
  std::vector<Vertex> perm(h.vertex_count());
  for (Vertex v = 0; v < perm.size(); ++v) perm[v] = v;
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<Vertex>> edges;
  for (const auto& e : h.edges()) {
    std::vector<Vertex> f;
    for (Vertex v : e) f.push_back(perm[v]);
    edges.push_back(f);
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Hypergraph(h.vertex_count(), std::move(edges));
}

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_hg(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(ParseHg, ReadsCommentsAndBlankLines) {
  auto h = parse_hg("# fano-ish\n3 2\n\n0 1  # first\n2 1\n");
  EXPECT_EQ(h.vertex_count(), 3u);
  EXPECT_EQ(h.edges(), (std::vector<std::vector<Vertex>>{{0, 1}, {1, 2}}));
}

TEST(ParseHg, ReportsOffendingLine) {
  EXPECT_EQ(parse_error_line("2 1\n"), 2u);
  EXPECT_EQ(parse_error_line("2 1\n0 2\n"), 2u);
  EXPECT_EQ(parse_error_line("3 1\n0 0\n"), 2u);
  EXPECT_EQ(parse_error_line("3 1\n0 1\n1 2\n"), 3u);
  EXPECT_EQ(parse_error_line("3\n"), 1u);
  EXPECT_EQ(parse_error_line("3 1\n0 x\n"), 2u);
  EXPECT_EQ(parse_error_line(""), 1u);
}

TEST(ParseHg, RoundTripsCorpus) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto inst = corpus::random_instance(seed);
    EXPECT_EQ(parse_hg(serialize_hg(inst.h)), inst.h) << "seed " << seed;
  }
  auto p = projective_plane(4);
  EXPECT_EQ(parse_hg(serialize_hg(p)), p);
}

TEST(ParseLists, CountsAndRepeats) {
  auto l = parse_lists("0 1 2\n\n5\n", 2);
  EXPECT_EQ(l.list(0), (std::vector<Colour>{0, 1, 2}));
  EXPECT_EQ(l.list(1), (std::vector<Colour>{5}));
  EXPECT_THROW(parse_lists("0 1\n", 2), ParseError);
  EXPECT_THROW(parse_lists("0 0\n", 1), ParseError);
  EXPECT_EQ(parse_lists(serialize_lists(l), 2), l);
}

TEST(ListsFromSpec, UniformAndFile) {
  auto u = lists_from_spec("uniform:3", 2);
  EXPECT_EQ(u.list(1), (std::vector<Colour>{0, 1, 2}));
  EXPECT_THROW(lists_from_spec("uniform:x", 2), ParseError);
  EXPECT_EQ(lists_from_spec("4\n7 8\n", 2).list(1), (std::vector<Colour>{7, 8}));
}

TEST(CanonicalForm, InvariantUnderRelabelling) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto inst = corpus::random_instance(seed, 12, 2, 20);
    EXPECT_EQ(canonical_form(inst.h), canonical_form(relabel(inst.h, seed + 1))) << "seed " << seed;
  }
  auto p = projective_plane(3);
  EXPECT_EQ(canonical_form(p), canonical_form(relabel(p, 5)));
  EXPECT_TRUE(isomorphic(canonical_form(p).to_hypergraph(), p));
}

TEST(Isomorphic, AgreesWithPermutationSearch) {
  std::size_t yes = 0, no = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto a = corpus::random_instance(seed, 6, 2, 6).h;
    auto b = corpus::random_instance(seed + 1000, 6, 2, 6).h;
    if (seed % 3 == 0) b = relabel(a, seed);
    bool expect = oracle::isomorphic(oracle::edges_of(a), a.vertex_count(), oracle::edges_of(b), b.vertex_count());
    EXPECT_EQ(isomorphic(a, b), expect) << "seed " << seed;
    (expect ? yes : no) += 1;
  }
  EXPECT_GT(yes, 30u);
  EXPECT_GT(no, 30u);
}

TEST(Isomorphic, DistinguishesRegularNonIsomorphicPair) {
  // Two 2-regular graphs on 6 vertices: a hexagon and two triangles.
  Hypergraph hex(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  Hypergraph tri(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_FALSE(isomorphic(hex, tri));
  EXPECT_TRUE(isomorphic(hex, relabel(hex, 9)));
}
