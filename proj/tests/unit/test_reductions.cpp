// Copyright 2026 The minparent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <random>

#include "doctest.h"
#include "minparent/error.hpp"
#include "minparent/exact.hpp"
#include "minparent/mendel.hpp"
#include "minparent/reductions.hpp"
#include "support/oracles.hpp"

namespace mp = minparent;
namespace mt = minparent::testing;

namespace {

// A = {a1, a2} in one group, B = {b1}, edges a1-b1 and a2-b1.
mp::MinRepInstance Toy() { return mp::MinRepInstance({0, 0}, {0}, {{0, 0}, {1, 0}}); }

bool HasPair(const std::vector<mp::SlotPair>& pairs, std::size_t a, std::size_t b) {
  return std::find(pairs.begin(), pairs.end(), mp::SlotPair::Of(a, b)) != pairs.end();
}

mp::FindMinParentInstance Fmp(const char* universe, const char* pool,
                              std::vector<mp::MemberSet> cells) {
  return mp::FindMinParentInstance(mp::ParsePopulation(universe),
                                   mp::ParsePopulation(pool), std::move(cells));
}

}  // namespace

TEST_CASE("graph basics and parsing") {
  const mp::Graph g = mp::ParseGraph("4 4\n0 1\n1 2\n2 3\n3 0\n");
  CHECK(g.node_count() == 4);
  CHECK(g.Adjacent(0, 3));
  CHECK_FALSE(g.Adjacent(0, 2));
  CHECK(g.MaxDegree() == 2);
  CHECK(g.Connected());
  CHECK(g.Distances(0) == std::vector<std::size_t>{0, 1, 2, 1});
  CHECK(mp::ParseGraph(mp::SerializeGraph(g)).edges() == g.edges());
  CHECK(mt::K4().ContainsK4());
  CHECK_FALSE(mt::Bowtie().ContainsK4());
  CHECK_THROWS_AS(mp::ParseGraph("2 1\n0 5\n"), mp::Error);
  CHECK_THROWS_AS(mp::ParseGraph("2 1\n0 0\n"), mp::Error);
  CHECK_THROWS_AS(mp::ParseGraph("2 2\n0 1\n"), mp::Error);
}

TEST_CASE("graph catalog matches known counts") {
  // Connected graphs on 1..5 nodes: 1, 1, 2, 6, 21. On 6 nodes there are 112,
  // of which 34 (one per graph on 5 nodes) have a vertex of degree 5.
  const auto catalog = mt::ConnectedGraphCatalog(6);
  std::vector<std::size_t> by_size(7, 0);
  for (const auto& g : catalog) ++by_size[g.node_count()];
  CHECK(by_size == std::vector<std::size_t>{0, 1, 1, 2, 6, 21, 78});
}

TEST_CASE("triangle gadget shapes") {
  const mp::Population k3 = mp::ReduceTriangles(mt::K3());
  CHECK(k3.size() == 3);
  CHECK(k3.num_loci() == 3);
  CHECK(k3.LocusColumn(0, {0, 1, 2}) ==
        std::vector<mp::Genotype>{{0, 0}, {1, 1}, {1, 1}});

  const mp::Population c4 = mp::ReduceTriangles(mt::C4());
  CHECK(c4.size() == 4);
  CHECK(c4.num_loci() == 8);

  const mp::Population k2 = mp::ReduceTriangles(mp::Graph(2, {{0, 1}}));
  CHECK(mp::SerializePopulation(k2) == "2 2\nv0 0/0 1/1\nv1 1/1 0/0");

  CHECK_THROWS_AS(mp::ReduceTriangles(mp::Graph(3, {{0, 1}})), mp::Error);
  CHECK_THROWS_AS(
      mp::ReduceTriangles(mp::Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}})),
      mp::Error);
}

TEST_CASE("triangle gadget properties") {
  auto graphs = mt::ConnectedGraphCatalog(5);
  for (auto& g : mt::SevenNodeGraphs()) graphs.push_back(std::move(g));
  for (const mp::Graph& g : graphs) {
    const mp::Population pop = mp::ReduceTriangles(g);
    const std::size_t n = g.node_count();
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        for (std::size_t w = v + 1; w < n; ++w) {
          const bool tri = g.Adjacent(u, v) && g.Adjacent(v, w) && g.Adjacent(u, w);
          CHECK(mp::IsSiblingSet(pop, mp::MemberSet{u, v, w}) == tri);
          if (!tri) continue;
          // Distance loci: labels of a triangle span at most {L, L + 1}.
          for (std::size_t o = 0; o < n; ++o) {
            const auto col = pop.LocusColumn(o, {u, v, w});
            mp::Allele lo = col[0].lo, hi = col[0].lo;
            for (const auto& x : col) {
              CHECK(x.lo == x.hi);
              lo = std::min(lo, x.lo);
              hi = std::max(hi, x.lo);
            }
            CHECK(hi - lo <= 1);
          }
        }
  }
}

TEST_CASE("brute triangle packing") {
  CHECK(mp::BruteTrianglePacking(mt::K3()).t() == 1);
  CHECK(mp::BruteTrianglePacking(mt::C4()).t() == 0);
  CHECK(mp::BruteTrianglePacking(mt::K4()).t() == 1);
  CHECK(mp::BruteTrianglePacking(mt::Bowtie()).t() == 1);
  const auto strip = mt::SevenNodeGraphs()[3];
  const auto packing = mp::BruteTrianglePacking(strip);
  CHECK(packing.t() == 2);
  std::vector<bool> used(strip.node_count(), false);
  for (const auto& t : packing.triangles) {
    CHECK(strip.Adjacent(t[0], t[1]));
    CHECK(strip.Adjacent(t[1], t[2]));
    CHECK(strip.Adjacent(t[0], t[2]));
    for (auto x : t) {
      CHECK_FALSE(used[x]);
      used[x] = true;
    }
  }
}

TEST_CASE("triangle gadget correspondence on named graphs") {
  CHECK(mp::ExactMinParent(mp::ReduceTriangles(mt::K3())).parent_count() == 2);
  CHECK(mp::ExactMinParent(mp::ReduceTriangles(mt::C4())).parent_count() == 4);
  CHECK(mp::ExactMinParent(mp::ReduceTriangles(mt::P4())).parent_count() == 4);
  CHECK(mp::ExactMinParent(mp::ReduceTriangles(mt::Bowtie())).parent_count() == 4);
}

TEST_CASE("pair-child gadget") {
  using mp::Genotype;
  CHECK_FALSE(mp::CanBeChildAtLocus({1, 3}, {1, 2}, {1, 2}));
  CHECK(mp::CanBeChildAtLocus({1, 3}, {1, 2}, {1, 3}));
  for (Genotype a : {Genotype{1, 2}, Genotype{1, 3}})
    for (Genotype b : {Genotype{1, 2}, Genotype{1, 3}})
      CHECK(mp::CanBeChildAtLocus({1, 1}, a, b));

  const mp::LocusColumn col = mp::ForbidPairChildLocus(4, 3, {1, 3}, 2);
  CHECK(col.parents[1] == Genotype{1, 2});
  CHECK(col.parents[0] == Genotype{1, 3});
  CHECK(col.children[2] == Genotype{1, 3});
  CHECK(col.children[0] == Genotype{1, 1});
  const mp::LocusColumn all = mp::ForbidPairChildLocus(3, 2, {0, 1}, std::nullopt);
  CHECK(all.children == std::vector<Genotype>{{1, 3}, {1, 3}});

  CHECK_THROWS_AS(mp::ForbidPairChildLocus(3, 2, {1, 1}, 0), mp::Error);
  CHECK_THROWS_AS(mp::ForbidPairChildLocus(3, 2, {0, 3}, 0), mp::Error);
  CHECK_THROWS_AS(mp::ForbidPairChildLocus(3, 2, {0, 1}, 2), mp::Error);
}

TEST_CASE("minrep parsing and validation") {
  const mp::MinRepInstance toy = Toy();
  CHECK(toy.SuperEdges().size() == 1);
  const mp::MinRepInstance back = mp::ParseMinRep(mp::SerializeMinRep(toy));
  CHECK(back.edges() == toy.edges());
  CHECK(back.group_of_a() == toy.group_of_a());
  CHECK_THROWS_AS(mp::MinRepInstance({0, 0}, {0}, {}), mp::Error);
  // Unequal group sizes on the A side.
  CHECK_THROWS_AS(mp::MinRepInstance({0, 0, 1}, {0}, {{0, 0}}), mp::Error);
  CHECK_THROWS_AS(mp::ParseMinRep("2 1 1 1 1\n0 0\n0\n0 4\n"), mp::Error);
}

TEST_CASE("minrep gadget on the toy instance") {
  for (auto mode : {mp::NonEdgeMode::kCompact, mp::NonEdgeMode::kFaithful}) {
    const mp::FindMinParentInstance fmp = mp::ReduceMinRep(Toy(), mode);
    CHECK(fmp.pool().size() == 3);
    CHECK(fmp.universe().size() == 2);
    CHECK(fmp.partition().size() == 1);
    CHECK(fmp.partition()[0].size() == 2);
    CHECK(fmp.pool()[0].id == "pa0");
    CHECK(fmp.pool()[2].id == "pb0");
    CHECK(fmp.universe()[1].id == "s_a1_b0");
    const auto pairs = mp::FeasiblePairsForGroup(fmp, fmp.partition()[0]);
    CHECK(HasPair(pairs, 0, 2));
    CHECK(HasPair(pairs, 1, 2));
    CHECK_FALSE(HasPair(pairs, 0, 1));
    const mp::ParentSelection sel = mp::ExactFindMinParent(fmp);
    CHECK(sel.chosen == mp::MemberSet{0, 2});
    CHECK(sel.status == mp::SolveStatus::kOptimal);
    CHECK_NOTHROW(mp::VerifyParentSelection(fmp, sel));
    const mp::ParentSelection g = mp::GreedyFindMinParent(fmp);
    CHECK_NOTHROW(mp::VerifyParentSelection(fmp, g));
  }
  // Compact mode adds one locus for the non-edge a1-a2; faithful adds one per child.
  CHECK(mp::ReduceMinRep(Toy(), mp::NonEdgeMode::kCompact).universe().num_loci() == 1);
  CHECK(mp::ReduceMinRep(Toy(), mp::NonEdgeMode::kFaithful).universe().num_loci() == 2);
  const mp::FindMinParentInstance single =
      mp::ReduceMinRep(mp::MinRepInstance({0}, {0}, {{0, 0}}));
  CHECK(single.universe().num_loci() == 0);
  CHECK(mp::FeasiblePairsForGroup(single, single.partition()[0]).size() == 1);
}

TEST_CASE("brute minrep") {
  CHECK(mp::BruteMinRep(Toy()).gamma == 2);
  CHECK(mp::BruteMinRep(mp::MinRepInstance({0}, {0}, {{0, 0}})).gamma == 2);
  const mp::MinRepSolution star =
      mp::BruteMinRep(mp::MinRepInstance({0}, {0, 1}, {{0, 0}, {0, 1}}));
  CHECK(star.gamma == 3);
  CHECK(star.a_vertices == std::vector<std::size_t>{0});
  CHECK(star.b_vertices == std::vector<std::size_t>{0, 1});
}

TEST_CASE("minrep rule enforcement and correspondence") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 40; ++it) {
    const std::size_t size = 1 + rng() % 2;
    const std::size_t ag = 1 + rng() % 2, bg = 1 + rng() % 2;
    std::vector<std::size_t> ga, gb;
    for (std::size_t i = 0; i < ag * size; ++i) ga.push_back(i / size);
    for (std::size_t i = 0; i < bg * size; ++i) gb.push_back(i / size);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < ga.size(); ++a)
      for (std::size_t b = 0; b < gb.size(); ++b)
        if (rng() % 2) edges.emplace_back(a, b);
    if (edges.empty()) edges.emplace_back(0, 0);
    const mp::MinRepInstance inst(ga, gb, edges);
    const auto supers = inst.SuperEdges();
    const std::size_t na = ga.size();
    for (auto mode : {mp::NonEdgeMode::kCompact, mp::NonEdgeMode::kFaithful}) {
      const mp::FindMinParentInstance fmp = mp::ReduceMinRep(inst, mode);
      REQUIRE(fmp.partition().size() == supers.size());
      for (std::size_t c = 0; c < supers.size(); ++c) {
        const auto [gi, gj] = supers[c];
        const auto pairs = mp::FeasiblePairsForGroup(fmp, fmp.partition()[c]);
        for (std::size_t x = 0; x < fmp.pool().size(); ++x)
          for (std::size_t y = x + 1; y < fmp.pool().size(); ++y) {
            const bool expected = x < na && y >= na && inst.HasEdge(x, y - na) &&
                                  ga[x] == gi && gb[y - na] == gj;
            CHECK(HasPair(pairs, x, y) == expected);
          }
      }
      CHECK(mp::ExactFindMinParent(fmp).size() == mp::BruteMinRep(inst).gamma);
    }
  }
}

TEST_CASE("find-min-parent edge cases") {
  // Only pair (0,1) can parent the single child.
  const auto forced =
      Fmp("1 1\nC 1/2", "3 1\nP 1/1\nQ 2/2\nR 3/3", {{0}});
  const mp::ParentSelection sel = mp::ExactFindMinParent(forced);
  CHECK(sel.chosen == mp::MemberSet{0, 1});
  const mp::ParentSelection g = mp::GreedyFindMinParent(forced);
  CHECK(g.size() == 2);

  const auto absent = Fmp("1 1\nC 1/1", "2 1\nP 9/9\nQ 9/9", {{0}});
  CHECK(mp::FeasiblePairsForGroup(absent, {0}).empty());
  CHECK(mp::FeasiblePairsForGroup(absent, {}).size() == 1);
  try {
    mp::ExactFindMinParent(absent);
    FAIL("expected infeasible");
  } catch (const mp::Error& e) {
    CHECK(e.code() == mp::ErrorCode::kInfeasible);
  }
  CHECK_THROWS_AS(mp::GreedyFindMinParent(absent), mp::Error);

  // A universal pair (0,1) serves both cells.
  const auto universal = Fmp("2 1\nC 1/2\nD 1/1", "3 1\nP 1/2\nQ 1/2\nR 4/4",
                             {{0}, {1}});
  CHECK(mp::ExactFindMinParent(universal).size() == 2);
  CHECK(mp::GreedyFindMinParent(universal).size() == 2);
}
