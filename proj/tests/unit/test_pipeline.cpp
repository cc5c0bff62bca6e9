#include <gtest/gtest.h>

#include <random>

#include "hyperchrom/generators.hpp"
#include "hyperchrom/oracle.hpp"
#include "hyperchrom/pipeline.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace hyperchrom;

namespace {

ListAssignment random_lists(std::size_t m, std::size_t size, std::size_t palette, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Colour>> out;
  for (std::size_t e = 0; e < m; ++e) {
    std::vector<Colour> pool(palette);
    for (Colour c = 0; c < palette; ++c) pool[c] = c;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(size);
    out.push_back(pool);
  }
  return ListAssignment(out);
}

const StageReport* find_stage(const PipelineResult& r, const std::string& name) {
  for (const auto& s : r.stages)
    if (s.stage == name) return &s;
  return nullptr;
}

Hypergraph fano_minus_line() {
  auto lines = oracle::fano_lines();
  lines.pop_back();
  return Hypergraph(7, lines);
}

}  // namespace

TEST(SplitBySize, Examples) {
  auto f = projective_plane(2);
  auto s = split_by_size(f, 3, 2);
  EXPECT_EQ(s.med.size(), 7u);
  EXPECT_TRUE(s.sml.empty() && s.lrg.empty());
  EXPECT_EQ(split_by_size(f, 5, 4).sml.size(), 7u);
  Hypergraph h(10, {{0, 1}, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4, 5, 6, 7, 8}});
  auto t = split_by_size(h, 8, 3);
  EXPECT_EQ(t.sml, std::vector<EdgeId>{0});
  EXPECT_EQ(t.med, std::vector<EdgeId>{1});
  EXPECT_EQ(t.lrg, std::vector<EdgeId>{2});
  EXPECT_THROW(split_by_size(h, 2, 3), std::domain_error);
  EXPECT_THROW(split_by_size(h, 2, 0), std::domain_error);
}

TEST(SplitBySize, PartitionsCorpus) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto inst = corpus::random_instance(seed);
    auto s = split_by_size(inst.h, 5, 3);
    EXPECT_EQ(s.sml.size() + s.med.size() + s.lrg.size(), inst.h.edge_count());
    for (EdgeId e : s.sml) EXPECT_LE(inst.h.edge_size(e), 3u);
    for (EdgeId e : s.med) EXPECT_TRUE(inst.h.edge_size(e) > 3 && inst.h.edge_size(e) <= 5);
    for (EdgeId e : s.lrg) EXPECT_GT(inst.h.edge_size(e), 5u);
  }
}

TEST(ReserveColours, DegenerateProbabilities) {
  auto lists = ListAssignment::uniform(4, 10);
  auto none = reserve_colours(lists, make_rational(0), make_rational(1, 10), 1);
  ASSERT_TRUE(none.reserved);
  EXPECT_TRUE(none.reserved->R.empty());
  EXPECT_EQ(none.attempts, 1u);
  auto all = reserve_colours(lists, make_rational(1), make_rational(1, 10), 1);
  ASSERT_TRUE(all.reserved);
  EXPECT_EQ(all.reserved->R.size(), 10u);
  EXPECT_THROW(reserve_colours(lists, make_rational(2), make_rational(1, 10), 1), std::domain_error);
  EXPECT_THROW(reserve_colours(lists, make_rational(1, 2), make_rational(0), 1), std::domain_error);
}

TEST(ReserveColours, WindowOnHundredColourLists) {
  auto lists = ListAssignment::uniform(30, 100);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto got = reserve_colours(lists, make_rational(3, 10), make_rational(1, 20), seed);
    ASSERT_TRUE(got.reserved) << "seed " << seed;
    for (EdgeId e = 0; e < 30; ++e) {
      std::size_t k = 0;
      for (Colour c : lists.list(e)) k += std::binary_search(got.reserved->R.begin(), got.reserved->R.end(), c);
      EXPECT_GE(k, 25u);
      EXPECT_LE(k, 35u);
    }
    EXPECT_FALSE(reservation_window_violation(lists, got.reserved->R, make_rational(3, 10), make_rational(1, 20)));
    EXPECT_EQ(got.reserved->retries_used + 1, got.attempts);
  }
}

TEST(ReserveColours, DeterministicAndReportsFailure) {
  auto lists = random_lists(12, 40, 80, 3);
  auto a = reserve_colours(lists, make_rational(1, 3), make_rational(1, 10), 7);
  auto b = reserve_colours(lists, make_rational(1, 3), make_rational(1, 10), 7);
  ASSERT_TRUE(a.reserved && b.reserved);
  EXPECT_EQ(a.reserved->R, b.reserved->R);
  // Lists of size one cannot meet a window strictly inside (0, 1).
  auto c = reserve_colours(ListAssignment::uniform(3, 1), make_rational(1, 2), make_rational(1, 10), 0, 5);
  EXPECT_FALSE(c.reserved);
  EXPECT_EQ(c.attempts, 5u);
  EXPECT_TRUE(c.last_failing_edge);
}

TEST(SplitLists, InsideAndOutside) {
  ListAssignment lists({{0, 1, 2, 3}, {2, 3, 4}});
  std::vector<Colour> r{1, 3};
  auto in = split_lists(lists, r, {0}, true);
  EXPECT_EQ(in.list(0), (std::vector<Colour>{1, 3}));
  EXPECT_TRUE(in.list(1).empty());
  auto out = split_lists(lists, r, {0, 1}, false);
  EXPECT_EQ(out.list(1), (std::vector<Colour>{2, 4}));
}

TEST(ColourSmall, Examples) {
  Hypergraph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  auto ok = colour_small(tri, {0, 1, 2}, ListAssignment::uniform(3, 3), {}, 0);
  ASSERT_TRUE(ok.ok);
  EdgeColouring phi{*ok.colouring[0], *ok.colouring[1], *ok.colouring[2]};
  EXPECT_TRUE(validate_colouring(tri, phi).valid);
  auto bad = colour_small(tri, {0, 1, 2}, ListAssignment::uniform(3, 1), {}, 0);
  EXPECT_FALSE(bad.ok);
  EXPECT_TRUE(bad.stuck);
  Hypergraph disjoint(6, {{0, 1}, {2, 3}, {4, 5}});
  auto d = colour_small(disjoint, {0, 1, 2}, ListAssignment({{4}, {4}, {7}}), {}, 0);
  ASSERT_TRUE(d.ok);
  EXPECT_EQ(*d.colouring[0], 4u);
}

TEST(ColourSmall, HonoursForbiddenColoursAndPart) {
  Hypergraph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  std::vector<std::vector<Colour>> forbidden(3);
  forbidden[1] = {0, 1};
  auto r = colour_small(tri, {0, 1}, ListAssignment::uniform(3, 3), forbidden, 5);
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(*r.colouring[1], 2u);
  EXPECT_NE(*r.colouring[0], 2u);
  EXPECT_FALSE(r.colouring[2]);
}

TEST(ColourSmall, ValidOnCorpusWhenItSucceeds) {
  std::size_t ok = 0;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    auto inst = corpus::random_instance(seed, 20, 2, 30);
    const std::size_t m = inst.h.edge_count();
    auto lists = random_lists(m, 6, 9, seed);
    auto r = colour_small(inst.h, all_edges(inst.h), lists, {}, seed);
    if (!r.ok) continue;
    ++ok;
    EdgeColouring phi(m);
    for (EdgeId e = 0; e < m; ++e) phi[e] = *r.colouring[e];
    EXPECT_TRUE(validate_colouring(inst.h, phi, lists).valid);
  }
  EXPECT_GT(ok, 20u);
}

TEST(ColourSparseBlock, Examples) {
  Hypergraph disjoint(6, {{0, 1}, {2, 3}, {4, 5}});
  auto a = colour_sparse_block(disjoint, {0, 1, 2}, ListAssignment::uniform(3, 3), 1, make_rational(1, 4),
                               make_rational(1, 10));
  EXPECT_TRUE(a.result.ok);
  EXPECT_EQ(a.colours_used, 1u);
  auto f = projective_plane(2);
  auto b = colour_sparse_block(f, all_edges(f), ListAssignment::uniform(7, 7), 1, make_rational(1, 4),
                               make_rational(1, 10));
  EXPECT_TRUE(b.result.ok);
  EXPECT_EQ(b.colours_used, 7u);
  EXPECT_EQ(b.r, 3u);
  EXPECT_FALSE(b.size_ok);  // 3 > (9/10) sqrt 7
  EXPECT_TRUE(b.window_ok);
  EXPECT_TRUE(b.codegree_ok);
  EXPECT_FALSE(b.within_target);
  auto c = colour_sparse_block(f, {}, ListAssignment::uniform(7, 7), 1, make_rational(1, 4), make_rational(1, 10));
  EXPECT_TRUE(c.result.ok);
  EXPECT_EQ(c.colours_used, 0u);
}

TEST(ColourStability, DisjointEdgesWithSingletonLists) {
  Hypergraph h(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  ListAssignment lists({{3}, {3}, {1}, {3}});
  auto r = colour_stability(h, 1, lists);
  ASSERT_TRUE(r.colouring);
  EXPECT_EQ(r.route, "stability");
  EXPECT_EQ(*r.colouring, (EdgeColouring{3, 3, 1, 3}));
  for (const auto& s : r.stages) EXPECT_NE(s.status, "failed");
}

TEST(ColourStability, FanoFromSixColoursFails) {
  auto f = projective_plane(2);
  auto lists = ListAssignment::uniform(7, 6);
  auto r = colour_stability(f, 1, lists);
  EXPECT_FALSE(r.colouring);
  EXPECT_FALSE(r.failed_stage.empty());
  EXPECT_EQ(exact_list_colourable(f, lists).answer, ListAnswer::No);
  auto m = colour_main(f, 1, lists);
  EXPECT_FALSE(m.colouring);
  EXPECT_EQ(m.failed_stage, "exact");
}

TEST(ColourStability, ParameterDomain) {
  auto f = projective_plane(2);
  StabilityParams p;
  p.sigma = make_rational(1, 2);
  EXPECT_THROW(colour_stability(f, 1, ListAssignment::uniform(7, 7), p), std::domain_error);
  EXPECT_THROW(colour_stability(f, 1, ListAssignment::uniform(6, 7)), std::invalid_argument);
}

TEST(ColourMain, DoubledFanoUsesFourteenColours) {
  auto h = t_fold(projective_plane(2), 2);
  auto lists = ListAssignment::uniform(14, 14);
  auto r = colour_main(h, 2, lists);
  ASSERT_TRUE(r.colouring);
  EXPECT_EQ(r.colours_used, 14u);
  EXPECT_TRUE(validate_colouring(h, *r.colouring, lists).valid);
  ASSERT_TRUE(find_stage(r, "premises"));
  EXPECT_TRUE(find_stage(r, "premises")->certificate->at("codegree"));
  const auto& last = r.stages.back();
  EXPECT_TRUE(last.stage == "validate" || last.stage == "stability:validate") << last.stage;
  EXPECT_EQ(last.detail, r.route);
}

TEST(ColourMain, FanoMinusLineFromSixColours) {
  auto h = fano_minus_line();
  auto lists = ListAssignment::uniform(6, 6);
  auto r = colour_main(h, 1, lists);
  ASSERT_TRUE(r.colouring);
  EXPECT_LE(r.colours_used, 6u);
  EXPECT_EQ(oracle::chromatic_index(oracle::edges_of(h)), 6u);
}

TEST(ColourMain, NonIntersectingVariantPreconditions) {
  MainParams p;
  p.non_intersecting_variant = true;
  EXPECT_THROW(colour_main(projective_plane(2), 1, ListAssignment::uniform(7, 6), p), std::domain_error);
  Hypergraph h(6, {{0, 1, 2}, {3, 4, 5}, {0, 3}});
  auto r = colour_main(h, 1, ListAssignment::uniform(3, 5), p);
  ASSERT_TRUE(r.colouring);
  EXPECT_TRUE(find_stage(r, "premises")->certificate->at("lists"));
}

TEST(ColourMain, SoundOnRandomCorpus) {
  std::size_t success = 0, stability = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto inst = corpus::random_instance(seed, 30, 2, 60);
    const std::size_t tn = inst.t * inst.h.vertex_count();
    const std::size_t size = tn - tn / 50;
    auto lists = random_lists(inst.h.edge_count(), size, size + size / 2, seed);
    MainParams p;
    p.seed = seed;
    auto r = colour_main(inst.h, inst.t, lists, p);
    if (r.colouring) {
      ++success;
      EXPECT_TRUE(validate_colouring(inst.h, *r.colouring, lists).valid);
      EXPECT_TRUE(r.failed_stage.empty());
      stability += r.route == "stability";
    } else {
      EXPECT_FALSE(r.failed_stage.empty());
    }
    StabilityParams sp;
    sp.seed = seed;
    auto s = colour_stability(inst.h, inst.t, lists, sp);
    if (s.colouring) {
      EXPECT_TRUE(validate_colouring(inst.h, *s.colouring, lists).valid);
    }
  }
  std::cout << "[ info ] colour_main succeeded on " << success << " of 60, " << stability << " by stability\n";
  EXPECT_GT(success, 30u);
}

TEST(ColourMain, DeterministicForSeed) {
  auto inst = corpus::random_instance(4, 25, 2, 50);
  auto lists = random_lists(inst.h.edge_count(), 40, 60, 1);
  MainParams p;
  p.seed = 9;
  auto a = colour_main(inst.h, inst.t, lists, p);
  auto b = colour_main(inst.h, inst.t, lists, p);
  EXPECT_EQ(a.colouring, b.colouring);
  EXPECT_EQ(a.route, b.route);
}
