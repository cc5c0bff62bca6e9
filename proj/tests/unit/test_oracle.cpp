#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hyperchrom/core.hpp"
#include "hyperchrom/generators.hpp"
#include "hyperchrom/oracle.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace hyperchrom;

namespace {

std::vector<std::vector<std::uint32_t>> random_lists(std::size_t m, std::size_t size, std::size_t palette,
                                                     std::mt19937_64& rng) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t e = 0; e < m; ++e) {
    std::vector<std::uint32_t> pool(palette);
    for (std::uint32_t c = 0; c < palette; ++c) pool[c] = c;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(size);
    std::sort(pool.begin(), pool.end());
    out.push_back(pool);
  }
  return out;
}

// Lexicographically least relabelled edge list over all vertex permutations.
std::vector<std::vector<std::uint32_t>> brute_canon(const std::vector<std::vector<std::uint32_t>>& es, std::size_t n) {
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<std::vector<std::vector<std::uint32_t>>> best;
  do {
    std::vector<std::vector<std::uint32_t>> mapped;
    for (const auto& e : es) {
      std::vector<std::uint32_t> f;
      for (auto v : e) f.push_back(perm[v]);
      std::sort(f.begin(), f.end());
      mapped.push_back(f);
    }
    std::sort(mapped.begin(), mapped.end());
    if (!best || mapped < *best) best = mapped;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

// Isomorphism classes of simple (no repeated edge) hypergraphs on n vertices
// with edges of size >= 2 and codegree <= 1, by subset enumeration.
std::size_t brute_linear_classes(std::size_t n, bool intersecting) {
  std::vector<std::vector<std::uint32_t>> subsets;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::uint32_t> s;
    for (std::uint32_t v = 0; v < n; ++v)
      if (mask >> v & 1u) s.push_back(v);
    if (s.size() >= 2) subsets.push_back(s);
  }
  std::set<std::vector<std::vector<std::uint32_t>>> classes;
  for (std::uint32_t pick = 0; pick < (1u << subsets.size()); ++pick) {
    std::vector<std::vector<std::uint32_t>> es;
    for (std::size_t i = 0; i < subsets.size(); ++i)
      if (pick >> i & 1u) es.push_back(subsets[i]);
    oracle::Edges sets;
    for (auto& e : es) sets.emplace_back(e.begin(), e.end());
    if (oracle::max_codegree(sets) > 1) continue;
    bool ok = true;
    if (intersecting)
      for (std::size_t i = 0; i < sets.size() && ok; ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
          if (!oracle::meet(sets[i], sets[j])) { ok = false; break; }
    if (ok) classes.insert(brute_canon(es, n));
  }
  return classes.size();
}

}  // namespace

TEST(ExactChromaticIndex, FanoFolds) {
  for (std::size_t t : {1u, 2u, 3u}) {
    auto h = t_fold(projective_plane(2), t);
    auto r = exact_chromatic_index(h);
    ASSERT_EQ(r.status, OracleStatus::Solved);
    EXPECT_EQ(*r.value, 7 * t);
    EXPECT_TRUE(validate_colouring(h, r.witness).valid);
    EXPECT_EQ(validate_colouring(h, r.witness).colour_count, 7 * t);
  }
}

TEST(ExactChromaticIndex, AgreesWithPlainSearch) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    auto inst = corpus::random_instance(seed, 10, 2, 12);
    auto r = exact_chromatic_index(inst.h);
    ASSERT_EQ(r.status, OracleStatus::Solved);
    EXPECT_EQ(*r.value, oracle::chromatic_index(oracle::edges_of(inst.h))) << "seed " << seed;
    if (inst.h.edge_count()) {
      EXPECT_EQ(validate_colouring(inst.h, r.witness).colour_count, *r.value);
    }
  }
}

TEST(ExactChromaticIndex, EqualsChromaticNumberOfLineGraph) {
  for (std::uint64_t seed = 200; seed < 260; ++seed) {
    auto inst = corpus::random_instance(seed, 9, 2, 10);
    auto es = oracle::edges_of(inst.h);
    std::vector<std::vector<char>> adj(es.size(), std::vector<char>(es.size(), 0));
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = 0; j < es.size(); ++j) adj[i][j] = i != j && oracle::meet(es[i], es[j]);
    EXPECT_EQ(*exact_chromatic_index(inst.h).value, oracle::graph_chromatic_number(adj));
  }
}

TEST(ExactChromaticIndex, ReportsBudget) {
  auto h = t_fold(projective_plane(2), 3);
  auto r = exact_chromatic_index(h, {10, 64, 60000});
  EXPECT_EQ(r.status, OracleStatus::BudgetExceeded);
  EXPECT_FALSE(r.value);
  EXPECT_FALSE(r.reason.empty());
  auto c = exact_chromatic_index(h, {64, 5, 60000});
  EXPECT_EQ(c.status, OracleStatus::BudgetExceeded);
  EXPECT_EQ(*exact_chromatic_index(Hypergraph(3, {})).value, 0u);
}

TEST(ExactListColourable, FanoFromUniformLists) {
  auto f = projective_plane(2);
  EXPECT_EQ(exact_list_colourable(f, ListAssignment::uniform(7, 6)).answer, ListAnswer::No);
  auto yes = exact_list_colourable(f, ListAssignment::uniform(7, 7));
  ASSERT_EQ(yes.answer, ListAnswer::Yes);
  EXPECT_TRUE(validate_colouring(f, *yes.witness, ListAssignment::uniform(7, 7)).valid);
}

TEST(ExactListColourable, AgreesWithPlainSearch) {
  std::size_t yes = 0, no = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto inst = corpus::random_instance(seed, 10, 2, 10);
    std::mt19937_64 rng(seed);
    const std::size_t m = inst.h.edge_count();
    auto raw = random_lists(m, 1 + seed % 3, 4, rng);
    ListAssignment lists(raw);
    bool expect = oracle::list_colourable(oracle::edges_of(inst.h), raw);
    auto r = exact_list_colourable(inst.h, lists);
    ASSERT_NE(r.answer, ListAnswer::BudgetExceeded);
    EXPECT_EQ(r.answer == ListAnswer::Yes, expect) << "seed " << seed;
    if (r.witness) {
      EXPECT_TRUE(validate_colouring(inst.h, *r.witness, lists).valid);
    }
    (expect ? yes : no) += 1;
  }
  EXPECT_GT(yes, 10u);
  EXPECT_GT(no, 10u);
}

TEST(ExactListColourable, EmptyListIsNo) {
  Hypergraph h(2, {{0, 1}});
  EXPECT_EQ(exact_list_colourable(h, ListAssignment(std::vector<std::vector<Colour>>(1))).answer, ListAnswer::No);
  EXPECT_EQ(exact_list_colourable(h, ListAssignment::uniform(1, 1), {0, 64, 1000}).answer,
            ListAnswer::BudgetExceeded);
}

TEST(MaximumComplementMatching, AgreesWithExhaustivePairing) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    auto inst = corpus::random_instance(seed, 12, 2, 12);
    auto m = maximum_complement_matching(inst.h);
    EXPECT_EQ(complement_matching_problem(inst.h, m), "");
    EXPECT_EQ(m.size(), oracle::max_disjoint_pairing(oracle::edges_of(inst.h))) << "seed " << seed;
  }
  EXPECT_EQ(maximum_complement_matching(projective_plane(2)).size(), 0u);
}

TEST(Enumeration, SmallestCaseByHand) {
  auto all = enumerate_hypergraphs(3, 1, 2, {});
  EXPECT_EQ(all.size(), 5u);
  EXPECT_EQ(all.front().edge_count(), 0u);
}

TEST(Enumeration, LinearClassesMatchSubsetSearch) {
  EXPECT_EQ(enumerate_hypergraphs(4, 1, 2, {}).size(), brute_linear_classes(4, false));
  EXPECT_EQ(enumerate_hypergraphs(4, 1, 2, {true, 10}).size(), brute_linear_classes(4, true));
}

TEST(Enumeration, InstancesAreDistinctAndAdmissible) {
  auto all = enumerate_hypergraphs(4, 2, 2, {false, 6});
  std::set<std::vector<std::vector<std::uint32_t>>> seen;
  for (const auto& h : all) {
    EXPECT_LE(h.edge_count(), 6u);
    EXPECT_LE(oracle::max_codegree(oracle::edges_of(h)), 2u);
    EXPECT_TRUE(seen.insert(brute_canon(h.edges(), 4)).second);
  }
  EXPECT_GT(all.size(), 50u);
}

TEST(Enumeration, VisitorCanStop) {
  std::size_t calls = 0;
  for_each_hypergraph(4, 1, 2, {}, [&](const Hypergraph&) { return ++calls < 3; });
  EXPECT_EQ(calls, 3u);
  EXPECT_THROW(enumerate_hypergraphs(7, 1, 2, {}), std::invalid_argument);
}
