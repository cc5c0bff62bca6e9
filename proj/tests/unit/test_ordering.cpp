#include <gtest/gtest.h>

#include "hyperchrom/generators.hpp"
#include "hyperchrom/ordering.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace hyperchrom;

namespace {

std::vector<std::uint32_t> seq_of(const EdgeOrdering& o) { return {o.sequence().begin(), o.sequence().end()}; }

std::vector<std::uint32_t> part(const PartitionCertificate& c, const std::string& name) {
  const auto& p = c.parts.at(name);
  return {p.begin(), p.end()};
}

void expect_is_permutation(const EdgeOrdering& o, std::size_t m) {
  auto s = o.sequence();
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < m; ++i) ASSERT_EQ(s.at(i), i);
  ASSERT_EQ(s.size(), m);
}

void expect_partition(const PartitionCertificate& c, std::size_t m) {
  std::vector<int> seen(m, 0);
  for (const auto& [name, p] : c.parts)
    for (EdgeId e : p) ++seen.at(e);
  for (std::size_t e = 0; e < m; ++e) EXPECT_EQ(seen[e], 1) << "edge " << e;
}

}  // namespace

TEST(SizeMonotone, ExamplesAndTies) {
  EXPECT_EQ(size_monotone_ordering(near_pencil(5)).sequence(), (std::vector<EdgeId>{0, 1, 2, 3, 4}));
  Hypergraph h(8, {{0, 1, 2, 3, 4}, {5, 6}, {0, 1, 2, 3, 4, 5, 6}});
  EXPECT_EQ(size_monotone_ordering(h).sequence(), (std::vector<EdgeId>{2, 0, 1}));
}

TEST(ForwardDegrees, MatchPairwiseScan) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    auto inst = corpus::random_instance(seed);
    std::vector<EdgeId> seq(inst.h.edge_count());
    for (EdgeId e = 0; e < seq.size(); ++e) seq[e] = e;
    std::mt19937_64 rng(seed);
    std::shuffle(seq.begin(), seq.end(), rng);
    EdgeOrdering o(seq);
    EXPECT_EQ(forward_degrees(inst.h, o), oracle::forward_degrees(oracle::edges_of(inst.h), seq_of(o)));
  }
}

TEST(Reorder, FanoStaysWhole) {
  auto f = projective_plane(2);
  auto r = reorder(f, 1, make_rational(1, 2), make_rational(8));
  EXPECT_EQ(r.kase, ReorderCase::B);
  EXPECT_EQ(r.prefix_length, 7u);
  EXPECT_EQ(r.W.size(), 7u);
  ASSERT_TRUE(r.certificates);
  EXPECT_TRUE(r.certificates->W1_ok);
  EXPECT_EQ(r.certificates->W2_volume, make_rational(1));
  EXPECT_TRUE(r.certificates->O1_ok);
  EXPECT_TRUE(r.certificates->O2_ok);
}

TEST(Reorder, SparseInstanceEndsInCaseA) {
  Hypergraph h(6, {{0, 1}, {2, 3}, {4, 5}});
  auto r = reorder(h, 1, make_rational(1, 2), make_rational(1));
  EXPECT_EQ(r.kase, ReorderCase::A);
  EXPECT_EQ(r.prefix_length, 0u);
  EXPECT_FALSE(r.e_star);
}

TEST(Reorder, RejectsBadParameters) {
  auto f = projective_plane(2);
  EXPECT_THROW(reorder(f, 1, make_rational(0), make_rational(1)), std::domain_error);
  EXPECT_THROW(reorder(f, 1, make_rational(1), make_rational(1)), std::domain_error);
  EXPECT_THROW(reorder(f, 1, make_rational(1, 2), make_rational(1, 2)), std::domain_error);
}

TEST(Reorder, PostconditionsOverCorpus) {
  std::size_t case_a = 0, case_b = 0;
  const Rational taus[] = {make_rational(1, 50), make_rational(1, 10), make_rational(1, 2), make_rational(9, 10)};
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    auto inst = corpus::random_instance(seed);
    for (const auto& tau : taus) {
      auto r = reorder(inst.h, inst.t, tau, make_rational(1));
      expect_is_permutation(r.ordering, inst.h.edge_count());
      auto es = oracle::edges_of(inst.h);
      auto fwd = oracle::forward_degrees(es, seq_of(r.ordering));
      const Rational cap = Rational(BigInt(inst.t * inst.h.vertex_count())) * (1 - tau);
      if (r.kase == ReorderCase::A) {
        ++case_a;
        for (auto d : fwd) EXPECT_LE(Rational(BigInt(d)), cap);
        continue;
      }
      ++case_b;
      ASSERT_TRUE(r.e_star && r.certificates);
      EXPECT_EQ(r.ordering.at(r.prefix_length - 1), *r.e_star);
      // Every edge after e* has small forward degree.
      for (std::size_t i = r.prefix_length; i < r.ordering.size(); ++i)
        EXPECT_LE(Rational(BigInt(fwd[r.ordering.at(i)])), cap);
      EXPECT_TRUE(r.certificates->O1_ok);
      // Sizes are non-increasing up to e*.
      for (std::size_t i = 1; i < r.prefix_length; ++i)
        EXPECT_LE(inst.h.edge_size(r.ordering.at(i)), inst.h.edge_size(r.ordering.at(i - 1)));
      EXPECT_TRUE(r.certificates->O2_ok);
      // e* itself has more than the threshold earlier neighbours.
      EXPECT_GT(Rational(BigInt(fwd[*r.e_star])), cap);
      EXPECT_FALSE(r.W.empty());
      EXPECT_EQ(r.W.back(), *r.e_star);
    }
  }
  EXPECT_GT(case_a, 0u);
  EXPECT_GT(case_b, 0u);
}

TEST(PartitionStability, FlagsMatchDefinitions) {
  const Rational sigma = make_rational(1, 100), delta = make_rational(1, 10);
  std::vector<Hypergraph> hs{t_fold(projective_plane(2), 2), projective_plane(3), near_pencil(6)};
  for (std::uint64_t seed = 0; seed < 80; ++seed) hs.push_back(corpus::random_instance(seed).h);
  std::size_t nontrivial = 0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const auto& h = hs[i];
    const std::size_t t = std::max<std::size_t>(1, oracle::max_codegree(oracle::edges_of(h)));
    auto c = partition_stability(h, t, sigma, delta);
    expect_is_permutation(c.ordering, h.edge_count());
    expect_partition(c, h.edge_count());
    auto expect = oracle::stability_flags(oracle::edges_of(h), h.vertex_count(), t, sigma, delta, part(c, "H1"),
                                          part(c, "W"), part(c, "H2"), seq_of(c.ordering));
    for (const auto& [name, ok] : expect) EXPECT_EQ(c.flags.at(name), ok) << name << " instance " << i;
    EXPECT_TRUE(c.flags.at("FD3"));
    EXPECT_TRUE(c.flags.at("FD1")) << "instance " << i;
    if (!c.trivial) ++nontrivial;
    for (const auto& v : c.vacuous) EXPECT_TRUE(c.flags.at(v));
  }
  EXPECT_GT(nontrivial, 0u);
}

TEST(PartitionStability, DoubledFanoIsTrivial) {
  // Every edge has 13 neighbours, within t(1 - 2 sigma)n = 13.72.
  auto h = t_fold(projective_plane(2), 2);
  auto c = partition_stability(h, 2, make_rational(1, 100), make_rational(1, 10));
  EXPECT_TRUE(c.trivial);
  EXPECT_EQ(c.parts.at("H1").size(), 14u);
  EXPECT_TRUE(c.parts.at("W").empty());
  EXPECT_TRUE(c.vacuous.count("P1"));
  EXPECT_TRUE(c.flags.at("FD1"));
  EXPECT_TRUE(c.all_flags());
}

TEST(PartitionStability, ProbeFlagMatchesGreedyGuarantee) {
  auto h = projective_plane(2);
  EXPECT_FALSE(partition_stability(h, 1, make_rational(1, 10), make_rational(1, 10), 6).flags.at("probe"));
  EXPECT_TRUE(partition_stability(h, 1, make_rational(1, 10), make_rational(1, 10), 7).flags.at("probe"));
}

TEST(PartitionExtremal, FlagsMatchDefinitions) {
  const Rational delta = make_rational(1, 10), gamma = make_rational(1, 4);
  std::vector<Hypergraph> hs{t_fold(projective_plane(2), 2), projective_plane(4), near_pencil(9)};
  for (std::uint64_t seed = 0; seed < 60; ++seed) hs.push_back(corpus::perturbed_plane(3 + seed % 3, seed, seed % 4, seed % 5));
  for (std::uint64_t seed = 0; seed < 60; ++seed) hs.push_back(corpus::random_instance(seed).h);
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const auto& h = hs[i];
    const std::size_t t = std::max<std::size_t>(1, oracle::max_codegree(oracle::edges_of(h)));
    for (std::size_t r0 : {1u, 2u, 3u}) {
      auto c = partition_extremal(h, t, delta, gamma, r0);
      expect_is_permutation(c.ordering, h.edge_count());
      expect_partition(c, h.edge_count());
      auto expect = oracle::extremal_flags(oracle::edges_of(h), h.vertex_count(), t, delta, gamma, r0, part(c, "H1"),
                                           part(c, "H2"), part(c, "H3"), seq_of(c.ordering));
      for (const auto& [name, ok] : expect) EXPECT_EQ(c.flags.at(name), ok) << name << " instance " << i;
      EXPECT_TRUE(c.flags.at("FD'3"));
      EXPECT_TRUE(c.flags.at("FD'2")) << "instance " << i;
    }
  }
}

TEST(PartitionExtremal, DoubledFanoKeepsEverythingBig) {
  auto h = t_fold(projective_plane(2), 2);
  auto c = partition_extremal(h, 2, make_rational(1, 10), make_rational(1, 4), 2);
  EXPECT_TRUE(c.flags.at("P'1"));
  EXPECT_TRUE(c.vacuous.count("P'1"));
  EXPECT_EQ(c.parts.at("H1").size() + c.parts.at("H2").size() + c.parts.at("H3").size(), 14u);
}

TEST(GreedyListColour, FanoFromSixColoursFailsOnLastLine) {
  auto h = projective_plane(2);
  auto res = greedy_list_colour(h, EdgeOrdering::identity(7), ListAssignment::uniform(7, 6));
  ASSERT_TRUE(std::holds_alternative<GreedyFailure>(res));
  auto f = std::get<GreedyFailure>(res);
  EXPECT_EQ(f.rank, 6u);
  EXPECT_EQ(f.fwddeg, 6u);
  EXPECT_EQ(f.list_size, 6u);
  auto ok = greedy_list_colour(h, EdgeOrdering::identity(7), ListAssignment::uniform(7, 7));
  ASSERT_TRUE(std::holds_alternative<EdgeColouring>(ok));
  EXPECT_TRUE(validate_colouring(h, std::get<EdgeColouring>(ok)).valid);
}

TEST(GreedyListColour, SucceedsWheneverListsBeatForwardDegree) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto inst = corpus::random_instance(seed);
    auto ord = size_monotone_ordering(inst.h);
    auto fwd = forward_degrees(inst.h, ord);
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Colour>> lists;
    for (EdgeId e = 0; e < inst.h.edge_count(); ++e) {
      std::vector<Colour> pool(3 * (fwd[e] + 1));
      for (Colour c = 0; c < pool.size(); ++c) pool[c] = c;
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(fwd[e] + 1);
      lists.push_back(pool);
    }
    ListAssignment la(lists);
    auto res = greedy_list_colour(inst.h, ord, la);
    ASSERT_TRUE(std::holds_alternative<EdgeColouring>(res)) << "seed " << seed;
    EXPECT_TRUE(validate_colouring(inst.h, std::get<EdgeColouring>(res), la).valid);
  }
}

TEST(GreedyExtend, RespectsPrecolouredEdges) {
  Hypergraph h(3, {{0, 1}, {1, 2}, {0, 2}});
  PartialColouring phi(3);
  phi[0] = 1;
  auto stuck = greedy_extend(h, {1, 2}, ListAssignment::uniform(3, 3), phi);
  EXPECT_FALSE(stuck);
  EXPECT_EQ(*phi[1], 0u);
  EXPECT_EQ(*phi[2], 2u);
  PartialColouring psi(3);
  psi[0] = 0;
  EXPECT_EQ(greedy_extend(h, {1, 2}, ListAssignment({{0}, {0, 1}, {1}}), psi), std::optional<EdgeId>(2));
}
