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

// Gadget generators mapping triangle packing onto MIN-PARENT and MINREP onto
// FIND-MIN-PARENT, with exhaustive solvers for the source problems so the
// correspondences can be checked on small instances.

#ifndef MINPARENT_REDUCTIONS_HPP_
#define MINPARENT_REDUCTIONS_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "minparent/genotypes.hpp"

namespace minparent {

// Simple undirected graph. Edges are stored with first < second, sorted and
// unique.
class Graph {
 public:
  Graph() = default;
  // Throws Error(kInvalidArgument) on self loops or out-of-range endpoints.
  // Duplicate edges are merged.
  Graph(std::size_t node_count,
        std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t node_count() const { return node_count_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const {
    return edges_;
  }
  bool Adjacent(std::size_t u, std::size_t v) const;
  std::size_t Degree(std::size_t u) const;
  std::size_t MaxDegree() const;
  bool Connected() const;
  bool ContainsK4() const;
  // Breadth-first distances from `origin`; unreachable nodes get SIZE_MAX.
  std::vector<std::size_t> Distances(std::size_t origin) const;

 private:
  std::size_t node_count_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<bool>> adjacency_;
};

// "n m" then m lines "u v" (0-based). '#' comments allowed.
Graph ParseGraph(std::string_view text);
std::string SerializeGraph(const Graph& graph);

using Triangle = std::array<std::size_t, 3>;

struct TpSolution {
  std::vector<Triangle> triangles;
  std::size_t t() const { return triangles.size(); }
};

// One individual "v<i>" per node with homozygous labels. Loci: one per node
// (label = distance from that node), then one per non-triangle triple in
// lexicographic order (label 1 and 2 on the lexicographically smallest
// non-adjacent pair, 3 elsewhere). Throws Error(kInvalidArgument) for a
// disconnected graph or a node of degree above 4.
Population ReduceTriangles(const Graph& graph);

// Maximum set of vertex-disjoint triangles by exhaustive search; the witness
// is the first maximum found scanning nodes in increasing order.
TpSolution BruteTrianglePacking(const Graph& graph);

// One locus of the MINREP gadget: a genotype for every pool member and every
// child.
struct LocusColumn {
  std::vector<Genotype> parents;
  std::vector<Genotype> children;
};

// Locus that stops the pool pair `forbidden_parents` from producing
// `forbidden_child` (every child when nullopt) while leaving every other
// pool-pair/child combination producible. Forbidden parents get {1,2}; the
// target child gets {1,3}; other pool members {1,3}; other children {1,1}.
// With every child targeted, all children get {1,3}.
LocusColumn ForbidPairChildLocus(std::size_t pool_size, std::size_t child_count,
                                 std::pair<std::size_t, std::size_t> forbidden_parents,
                                 std::optional<std::size_t> forbidden_child);

// Bipartite graph with vertex groups on each side. A-vertices are 0..a_count-1
// and B-vertices 0..b_count-1; edges are (a, b) pairs.
class MinRepInstance {
 public:
  MinRepInstance() = default;
  // Throws Error(kInvalidArgument) for unequal group sizes, bad indices or an
  // empty edge set.
  MinRepInstance(std::vector<std::size_t> group_of_a,
                 std::vector<std::size_t> group_of_b,
                 std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t a_count() const { return group_of_a_.size(); }
  std::size_t b_count() const { return group_of_b_.size(); }
  std::size_t a_groups() const { return a_groups_; }
  std::size_t b_groups() const { return b_groups_; }
  const std::vector<std::size_t>& group_of_a() const { return group_of_a_; }
  const std::vector<std::size_t>& group_of_b() const { return group_of_b_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const {
    return edges_;
  }
  bool HasEdge(std::size_t a, std::size_t b) const;

  // Group pairs (i, j) joined by at least one edge, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> SuperEdges() const;

 private:
  std::vector<std::size_t> group_of_a_;
  std::vector<std::size_t> group_of_b_;
  std::size_t a_groups_ = 0;
  std::size_t b_groups_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

// Line 1 "|A| |B| gA gB m"; line 2: group of each A-vertex; line 3: group of
// each B-vertex; then m lines "a b". A line may be empty when its side is.
MinRepInstance ParseMinRep(std::string_view text);
std::string SerializeMinRep(const MinRepInstance& instance);

enum class NonEdgeMode {
  // One locus per non-adjacent vertex pair, forbidding it for every child.
  kCompact,
  // One locus per (non-adjacent pair, edge individual) combination.
  kFaithful,
};

// Pool "pa<i>"/"pb<j>" (A-vertices first), universe "s_a<i>_b<j>" per edge in
// edge order, one partition cell per super-edge. Loci: for each edge {u,v}
// with u in A_i, v in B_j, forbid (p_u, p_v) for every edge individual outside
// A_i x B_j; then for each non-adjacent vertex pair, forbid that pair.
FindMinParentInstance ReduceMinRep(const MinRepInstance& instance,
                                   NonEdgeMode mode = NonEdgeMode::kCompact);

struct MinRepSolution {
  std::size_t gamma = 0;
  // Chosen A-vertices and B-vertices, sorted.
  std::vector<std::size_t> a_vertices;
  std::vector<std::size_t> b_vertices;
};

// Minimum vertex set witnessing every super-edge, by ascending subset size
// over vertices ordered A first; the first witness found is returned.
MinRepSolution BruteMinRep(const MinRepInstance& instance);

}  // namespace minparent

#endif  // MINPARENT_REDUCTIONS_HPP_
