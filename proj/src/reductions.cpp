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

#include "minparent/reductions.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <queue>
#include <set>

#include "minparent/error.hpp"

namespace minparent {
namespace {

constexpr std::size_t kMaxTpDegree = 4;

// Whitespace tokenizer over data lines ('#' comment lines skipped) that keeps
// blank lines, because an empty group line is meaningful in MINREP files.
struct TextLines {
  explicit TextLines(std::string_view text) {
    std::size_t pos = 0;
    int number = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      std::string_view line = text.substr(pos, end - pos);
      std::size_t first = line.find_first_not_of(" \t\r");
      if (first == std::string_view::npos || line[first] != '#') {
        lines.emplace_back(number, line);
      }
      if (end == text.size()) break;
      pos = end + 1;
    }
  }

  std::vector<std::pair<int, std::string_view>> lines;
};

std::vector<std::size_t> ParseNumbers(std::string_view line, int line_number) {
  std::vector<std::size_t> values;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() &&
           (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
      ++i;
    if (i == line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r')
      ++i;
    std::string_view token = line.substr(start, i - start);
    std::size_t value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      ThrowParse(line_number,
                 "expected a non-negative integer, found '" +
                     std::string(token) + "'");
    }
    values.push_back(value);
  }
  return values;
}

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

Graph::Graph(std::size_t node_count,
             std::vector<std::pair<std::size_t, std::size_t>> edges)
    : node_count_(node_count),
      adjacency_(node_count, std::vector<bool>(node_count, false)) {
  for (auto& [u, v] : edges) {
    if (u >= node_count || v >= node_count) {
      ThrowInvalidArgument("edge endpoint out of range");
    }
    if (u == v) ThrowInvalidArgument("self loop on node " + std::to_string(u));
    if (u > v) std::swap(u, v);
    adjacency_[u][v] = adjacency_[v][u] = true;
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

bool Graph::Adjacent(std::size_t u, std::size_t v) const {
  return adjacency_[u][v];
}

std::size_t Graph::Degree(std::size_t u) const {
  return static_cast<std::size_t>(
      std::count(adjacency_[u].begin(), adjacency_[u].end(), true));
}

std::size_t Graph::MaxDegree() const {
  std::size_t best = 0;
  for (std::size_t u = 0; u < node_count_; ++u) best = std::max(best, Degree(u));
  return best;
}

std::vector<std::size_t> Graph::Distances(std::size_t origin) const {
  std::vector<std::size_t> distance(node_count_,
                                    std::numeric_limits<std::size_t>::max());
  std::queue<std::size_t> frontier;
  distance[origin] = 0;
  frontier.push(origin);
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop();
    for (std::size_t v = 0; v < node_count_; ++v) {
      if (adjacency_[u][v] &&
          distance[v] == std::numeric_limits<std::size_t>::max()) {
        distance[v] = distance[u] + 1;
        frontier.push(v);
      }
    }
  }
  return distance;
}

bool Graph::Connected() const {
  if (node_count_ == 0) return true;
  const auto distance = Distances(0);
  return std::none_of(distance.begin(), distance.end(), [](std::size_t d) {
    return d == std::numeric_limits<std::size_t>::max();
  });
}

bool Graph::ContainsK4() const {
  const std::size_t n = node_count_;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!adjacency_[a][b]) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (!adjacency_[a][c] || !adjacency_[b][c]) continue;
        for (std::size_t d = c + 1; d < n; ++d) {
          if (adjacency_[a][d] && adjacency_[b][d] && adjacency_[c][d]) {
            return true;
          }
        }
      }
    }
  return false;
}

Graph ParseGraph(std::string_view text) {
  TextLines input(text);
  std::vector<std::vector<std::size_t>> rows;
  std::vector<int> numbers;
  for (const auto& [number, line] : input.lines) {
    if (IsBlank(line)) continue;
    rows.push_back(ParseNumbers(line, number));
    numbers.push_back(number);
  }
  if (rows.empty() || rows[0].size() != 2) {
    ThrowParse(numbers.empty() ? 0 : numbers[0],
               "malformed header (expected 'n m')");
  }
  const std::size_t n = rows[0][0];
  const std::size_t m = rows[0][1];
  if (rows.size() - 1 != m) {
    ThrowParse(numbers.back(), "declared m=" + std::to_string(m) +
                                   " but found " +
                                   std::to_string(rows.size() - 1) + " edges");
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != 2) ThrowParse(numbers[r], "expected 'u v'");
    const auto [u, v] = std::pair{rows[r][0], rows[r][1]};
    if (u >= n || v >= n) ThrowParse(numbers[r], "node index out of range");
    if (u == v) ThrowParse(numbers[r], "self loop");
    edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

std::string SerializeGraph(const Graph& graph) {
  std::string out = std::to_string(graph.node_count()) + " " +
                    std::to_string(graph.edges().size());
  for (const auto& [u, v] : graph.edges()) {
    out += "\n" + std::to_string(u) + " " + std::to_string(v);
  }
  return out;
}

Population ReduceTriangles(const Graph& graph) {
  const std::size_t n = graph.node_count();
  if (!graph.Connected()) ThrowInvalidArgument("graph is not connected");
  if (graph.MaxDegree() > kMaxTpDegree) {
    ThrowInvalidArgument("graph has a node of degree above 4");
  }
  std::vector<Individual> individuals(n);
  for (std::size_t v = 0; v < n; ++v) individuals[v].id = "v" + std::to_string(v);

  auto label = [](std::size_t x) {
    return Genotype::Homozygous(static_cast<Allele>(x));
  };
  for (std::size_t origin = 0; origin < n; ++origin) {
    const auto distance = graph.Distances(origin);
    for (std::size_t v = 0; v < n; ++v) {
      individuals[v].loci.push_back(label(distance[v]));
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        std::pair<std::size_t, std::size_t> apart;
        if (!graph.Adjacent(a, b)) {
          apart = {a, b};
        } else if (!graph.Adjacent(a, c)) {
          apart = {a, c};
        } else if (!graph.Adjacent(b, c)) {
          apart = {b, c};
        } else {
          continue;  // triangle
        }
        for (std::size_t v = 0; v < n; ++v) {
          std::size_t value = 3;
          if (v == apart.first) value = 1;
          if (v == apart.second) value = 2;
          individuals[v].loci.push_back(label(value));
        }
      }
  const std::size_t num_loci = n == 0 ? 0 : individuals[0].loci.size();
  return Population(num_loci, std::move(individuals));
}

namespace {

class TrianglePacker {
 public:
  explicit TrianglePacker(const Graph& graph)
      : graph_(graph), used_(graph.node_count(), false) {}

  TpSolution Run() {
    Search(0);
    return TpSolution{best_};
  }

 private:
  void Search(std::size_t from) {
    if (current_.size() > best_.size()) best_ = current_;
    const std::size_t n = graph_.node_count();
    // Upper bound: remaining free nodes / 3.
    std::size_t free_nodes = 0;
    for (std::size_t v = from; v < n; ++v) free_nodes += used_[v] ? 0 : 1;
    if (current_.size() + free_nodes / 3 <= best_.size()) return;
    std::size_t v = from;
    while (v < n && used_[v]) ++v;
    if (v >= n) return;
    used_[v] = true;
    for (std::size_t x = v + 1; x < n; ++x) {
      if (used_[x] || !graph_.Adjacent(v, x)) continue;
      for (std::size_t y = x + 1; y < n; ++y) {
        if (used_[y] || !graph_.Adjacent(v, y) || !graph_.Adjacent(x, y)) {
          continue;
        }
        used_[x] = used_[y] = true;
        current_.push_back(Triangle{v, x, y});
        Search(v + 1);
        current_.pop_back();
        used_[x] = used_[y] = false;
      }
    }
    // Leave v out of every triangle.
    Search(v + 1);
    used_[v] = false;
  }

  const Graph& graph_;
  std::vector<bool> used_;
  std::vector<Triangle> current_;
  std::vector<Triangle> best_;
};

}  // namespace

TpSolution BruteTrianglePacking(const Graph& graph) {
  return TrianglePacker(graph).Run();
}

LocusColumn ForbidPairChildLocus(
    std::size_t pool_size, std::size_t child_count,
    std::pair<std::size_t, std::size_t> forbidden_parents,
    std::optional<std::size_t> forbidden_child) {
  const auto [u, v] = forbidden_parents;
  if (u == v) ThrowInvalidArgument("forbidden parents must be distinct");
  if (u >= pool_size || v >= pool_size) {
    ThrowInvalidArgument("forbidden parent index out of range");
  }
  if (forbidden_child && *forbidden_child >= child_count) {
    ThrowInvalidArgument("forbidden child index out of range");
  }
  const Genotype pair_genotype = Genotype::Of(1, 2);
  const Genotype open_genotype = Genotype::Of(1, 3);
  LocusColumn column;
  column.parents.assign(pool_size, open_genotype);
  column.parents[u] = column.parents[v] = pair_genotype;
  if (forbidden_child) {
    column.children.assign(child_count, Genotype::Homozygous(1));
    column.children[*forbidden_child] = open_genotype;
  } else {
    column.children.assign(child_count, open_genotype);
  }
  return column;
}

MinRepInstance::MinRepInstance(
    std::vector<std::size_t> group_of_a, std::vector<std::size_t> group_of_b,
    std::vector<std::pair<std::size_t, std::size_t>> edges)
    : group_of_a_(std::move(group_of_a)), group_of_b_(std::move(group_of_b)) {
  auto check_groups = [](const std::vector<std::size_t>& groups,
                         const char* side) -> std::size_t {
    if (groups.empty()) return 0;
    const std::size_t count =
        *std::max_element(groups.begin(), groups.end()) + 1;
    std::vector<std::size_t> sizes(count, 0);
    for (std::size_t g : groups) ++sizes[g];
    if (std::adjacent_find(sizes.begin(), sizes.end(),
                           std::not_equal_to<>()) != sizes.end()) {
      ThrowInvalidArgument(std::string(side) + "-groups differ in size");
    }
    return count;
  };
  a_groups_ = check_groups(group_of_a_, "A");
  b_groups_ = check_groups(group_of_b_, "B");
  for (auto [a, b] : edges) {
    if (a >= group_of_a_.size() || b >= group_of_b_.size()) {
      ThrowInvalidArgument("edge endpoint out of range");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (edges.empty()) ThrowInvalidArgument("MINREP instance has no edges");
  edges_ = std::move(edges);
}

bool MinRepInstance::HasEdge(std::size_t a, std::size_t b) const {
  return std::binary_search(edges_.begin(), edges_.end(), std::pair{a, b});
}

std::vector<std::pair<std::size_t, std::size_t>> MinRepInstance::SuperEdges()
    const {
  std::set<std::pair<std::size_t, std::size_t>> super;
  for (auto [a, b] : edges_) super.emplace(group_of_a_[a], group_of_b_[b]);
  return {super.begin(), super.end()};
}

MinRepInstance ParseMinRep(std::string_view text) {
  TextLines input(text);
  auto& lines = input.lines;
  // Drop trailing blank lines only; interior blank lines can be empty groups.
  while (!lines.empty() && IsBlank(lines.back().second)) lines.pop_back();
  std::size_t cursor = 0;
  while (cursor < lines.size() && IsBlank(lines[cursor].second)) ++cursor;
  if (cursor >= lines.size()) ThrowParse(0, "missing header line");
  const auto header = ParseNumbers(lines[cursor].second, lines[cursor].first);
  if (header.size() != 5) {
    ThrowParse(lines[cursor].first, "malformed header (expected '|A| |B| gA gB m')");
  }
  const std::size_t a_count = header[0];
  const std::size_t b_count = header[1];
  const std::size_t a_groups = header[2];
  const std::size_t b_groups = header[3];
  const std::size_t m = header[4];
  ++cursor;
  auto read_groups = [&](std::size_t count, std::size_t groups,
                         const char* side) {
    if (cursor >= lines.size()) {
      ThrowParse(0, std::string("missing ") + side + "-group line");
    }
    const int number = lines[cursor].first;
    auto values = ParseNumbers(lines[cursor].second, number);
    ++cursor;
    if (values.size() != count) {
      ThrowParse(number, std::string("expected ") + std::to_string(count) +
                             " " + side + "-group indices");
    }
    for (std::size_t g : values) {
      if (g >= groups) ThrowParse(number, "group index out of range");
    }
    std::vector<bool> present(groups, false);
    for (std::size_t g : values) present[g] = true;
    if (std::find(present.begin(), present.end(), false) != present.end()) {
      ThrowParse(number, std::string("some ") + side + "-group is empty");
    }
    return values;
  };
  auto group_of_a = read_groups(a_count, a_groups, "A");
  auto group_of_b = read_groups(b_count, b_groups, "B");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (; cursor < lines.size(); ++cursor) {
    const auto& [number, line] = lines[cursor];
    if (IsBlank(line)) continue;
    const auto values = ParseNumbers(line, number);
    if (values.size() != 2) ThrowParse(number, "expected 'a b'");
    if (values[0] >= a_count || values[1] >= b_count) {
      ThrowParse(number, "edge endpoint out of range");
    }
    edges.emplace_back(values[0], values[1]);
  }
  if (edges.size() != m) {
    ThrowParse(0, "declared m=" + std::to_string(m) + " but found " +
                      std::to_string(edges.size()) + " edges");
  }
  try {
    return MinRepInstance(std::move(group_of_a), std::move(group_of_b),
                          std::move(edges));
  } catch (const Error& e) {
    ThrowParse(0, e.what());
  }
}

std::string SerializeMinRep(const MinRepInstance& instance) {
  std::string out = std::to_string(instance.a_count()) + " " +
                    std::to_string(instance.b_count()) + " " +
                    std::to_string(instance.a_groups()) + " " +
                    std::to_string(instance.b_groups()) + " " +
                    std::to_string(instance.edges().size()) + "\n";
  auto join = [](const std::vector<std::size_t>& values) {
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0) line += ' ';
      line += std::to_string(values[i]);
    }
    return line;
  };
  out += join(instance.group_of_a()) + "\n" + join(instance.group_of_b());
  for (auto [a, b] : instance.edges()) {
    out += "\n" + std::to_string(a) + " " + std::to_string(b);
  }
  return out;
}

FindMinParentInstance ReduceMinRep(const MinRepInstance& instance,
                                   NonEdgeMode mode) {
  const std::size_t a_count = instance.a_count();
  const std::size_t pool_size = a_count + instance.b_count();
  const auto& edges = instance.edges();
  const std::size_t child_count = edges.size();

  std::vector<LocusColumn> columns;
  // Edge rule: the endpoints of an edge between A_i and B_j may not parent an
  // edge individual lying outside A_i x B_j.
  for (const auto& [u, v] : edges) {
    const std::size_t gu = instance.group_of_a()[u];
    const std::size_t gv = instance.group_of_b()[v];
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto [a, b] = edges[e];
      if (instance.group_of_a()[a] == gu && instance.group_of_b()[b] == gv) {
        continue;
      }
      columns.push_back(
          ForbidPairChildLocus(pool_size, child_count, {u, a_count + v}, e));
    }
  }
  // Non-edge rule: a non-adjacent vertex pair may not parent anyone.
  auto adjacent = [&](std::size_t x, std::size_t y) {
    if (x < a_count && y >= a_count) return instance.HasEdge(x, y - a_count);
    return false;
  };
  for (std::size_t x = 0; x < pool_size; ++x) {
    for (std::size_t y = x + 1; y < pool_size; ++y) {
      if (adjacent(x, y)) continue;
      if (mode == NonEdgeMode::kCompact) {
        columns.push_back(
            ForbidPairChildLocus(pool_size, child_count, {x, y}, std::nullopt));
      } else {
        for (std::size_t e = 0; e < child_count; ++e) {
          columns.push_back(
              ForbidPairChildLocus(pool_size, child_count, {x, y}, e));
        }
      }
    }
  }

  std::vector<Individual> pool(pool_size);
  for (std::size_t x = 0; x < pool_size; ++x) {
    pool[x].id = x < a_count ? "pa" + std::to_string(x)
                             : "pb" + std::to_string(x - a_count);
    pool[x].loci.reserve(columns.size());
  }
  std::vector<Individual> universe(child_count);
  for (std::size_t e = 0; e < child_count; ++e) {
    universe[e].id = "s_a" + std::to_string(edges[e].first) + "_b" +
                     std::to_string(edges[e].second);
    universe[e].loci.reserve(columns.size());
  }
  for (const LocusColumn& column : columns) {
    for (std::size_t x = 0; x < pool_size; ++x) {
      pool[x].loci.push_back(column.parents[x]);
    }
    for (std::size_t e = 0; e < child_count; ++e) {
      universe[e].loci.push_back(column.children[e]);
    }
  }

  std::vector<MemberSet> partition;
  for (const auto& [gi, gj] : instance.SuperEdges()) {
    MemberSet cell;
    for (std::size_t e = 0; e < child_count; ++e) {
      if (instance.group_of_a()[edges[e].first] == gi &&
          instance.group_of_b()[edges[e].second] == gj) {
        cell.push_back(e);
      }
    }
    partition.push_back(std::move(cell));
  }
  return FindMinParentInstance(Population(columns.size(), std::move(universe)),
                               Population(columns.size(), std::move(pool)),
                               std::move(partition));
}

MinRepSolution BruteMinRep(const MinRepInstance& instance) {
  const std::size_t a_count = instance.a_count();
  const std::size_t total = a_count + instance.b_count();
  const auto super_edges = instance.SuperEdges();
  std::vector<bool> chosen(total, false);
  auto witnesses_all = [&] {
    for (const auto& [gi, gj] : super_edges) {
      bool witnessed = false;
      for (const auto& [a, b] : instance.edges()) {
        if (instance.group_of_a()[a] == gi && instance.group_of_b()[b] == gj &&
            chosen[a] && chosen[a_count + b]) {
          witnessed = true;
          break;
        }
      }
      if (!witnessed) return false;
    }
    return true;
  };
  for (std::size_t size = 0; size <= total; ++size) {
    std::vector<std::size_t> positions(size);
    for (std::size_t i = 0; i < size; ++i) positions[i] = i;
    while (true) {
      std::fill(chosen.begin(), chosen.end(), false);
      for (std::size_t p : positions) chosen[p] = true;
      if (witnesses_all()) {
        MinRepSolution solution;
        solution.gamma = size;
        for (std::size_t p : positions) {
          if (p < a_count) {
            solution.a_vertices.push_back(p);
          } else {
            solution.b_vertices.push_back(p - a_count);
          }
        }
        return solution;
      }
      std::size_t i = size;
      while (i > 0 && positions[i - 1] == total - size + i - 1) --i;
      if (i == 0) break;
      ++positions[i - 1];
      for (std::size_t t = i; t < size; ++t) positions[t] = positions[t - 1] + 1;
    }
  }
  throw Error(ErrorCode::kInfeasible, "some super-edge cannot be witnessed");
}

}  // namespace minparent
