#include "stacksort/partitions.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "stacksort/errors.hpp"

namespace stacksort {

namespace {

int parse_int(std::string_view text, std::size_t& pos, std::string_view what) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
  if (ec != std::errc{} || end == text.data() + pos) {
    throw std::invalid_argument("malformed " + std::string(what) + " text: '" + std::string(text) +
                                "'");
  }
  pos = static_cast<std::size_t>(end - text.data());
  return value;
}

// Backtracks over edges in order, keeping for every vertex the set of vertices
// it reaches so a cycle-closing arc is rejected as soon as it is tried.
template <class Emit>
void orientations_with_source(const Graph& graph, int source, Emit&& emit) {
  const int n = graph.vertex_count();
  if (n > 64) throw std::length_error("orientation enumeration supports at most 64 vertices");
  if (source < 0 || source >= n) throw std::invalid_argument("source vertex out of range");
  const auto& edges = graph.edges();
  const int m = static_cast<int>(edges.size());

  std::vector<int> last_edge(n, -1);
  for (int e = 0; e < m; ++e) {
    last_edge[edges[e].first] = e;
    last_edge[edges[e].second] = e;
  }
  for (int v = 0; v < n; ++v) {
    if (v != source && last_edge[v] < 0) return;
  }

  std::vector<std::uint64_t> reach(n, 0);
  std::vector<int> indegree(n, 0);
  Orientation current;
  current.arcs.reserve(m);

  auto place = [&](auto&& self, int e) -> void {
    if (e == m) {
      emit(current);
      return;
    }
    const auto [u, v] = edges[e];
    for (const auto& [from, to] : {std::pair{u, v}, std::pair{v, u}}) {
      if (to == source) continue;
      if ((reach[to] >> from) & 1u) continue;
      if (from != source && last_edge[from] == e && indegree[from] == 0) continue;
      const std::vector<std::uint64_t> saved = reach;
      const std::uint64_t gained = reach[to] | (std::uint64_t{1} << to);
      for (int x = 0; x < n; ++x) {
        if (x == from || ((reach[x] >> from) & 1u)) reach[x] |= gained;
      }
      ++indegree[to];
      current.arcs.emplace_back(from, to);
      self(self, e + 1);
      current.arcs.pop_back();
      --indegree[to];
      reach = saved;
    }
  };
  place(place, 0);
}

bool joined_without(int vertex_count, const std::vector<std::pair<int, int>>& edges, int from,
                    int to) {
  std::vector<std::vector<int>> adjacency(vertex_count);
  for (const auto& [a, b] : edges) {
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
  std::vector<char> seen(vertex_count, 0);
  std::vector<int> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    if (x == to) return true;
    for (int y : adjacency[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return false;
}

// T(1, 0) on a multigraph: loops give 0, bridges contract, other edges split.
mpz_class deletion_contraction(int vertex_count, std::vector<std::pair<int, int>> edges) {
  if (edges.empty()) return 1;
  for (const auto& [a, b] : edges) {
    if (a == b) return 0;
  }
  const auto [u, v] = edges.back();
  edges.pop_back();
  std::vector<std::pair<int, int>> contracted = edges;
  for (auto& [a, b] : contracted) {
    if (a == v) a = u;
    if (b == v) b = u;
  }
  if (!joined_without(vertex_count, edges, u, v)) {
    return deletion_contraction(vertex_count, std::move(contracted));
  }
  return deletion_contraction(vertex_count, std::move(edges)) +
         deletion_contraction(vertex_count, std::move(contracted));
}

void require_matching(const SetPartition& matching, const char* routine) {
  if (!is_matching(matching) || matching.ground_size() < 2) {
    throw std::invalid_argument(std::string(routine) + " expects a matching of {1,...,2k+2}");
  }
}

}  // namespace

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n < 0) throw std::invalid_argument("ground set size must be nonnegative");
  std::vector<char> seen(n + 1, 0);
  for (auto& block : blocks_) {
    if (block.empty()) throw std::invalid_argument("partition blocks must be nonempty");
    std::sort(block.begin(), block.end());
    for (int x : block) {
      if (x < 1 || x > n) {
        throw std::invalid_argument("element " + std::to_string(x) + " outside 1.." +
                                    std::to_string(n));
      }
      if (seen[x]) throw std::invalid_argument("element " + std::to_string(x) + " repeated");
      seen[x] = 1;
    }
  }
  if (std::count(seen.begin() + 1, seen.end(), 1) != n) {
    throw std::invalid_argument("partition blocks do not cover 1.." + std::to_string(n));
  }
  std::sort(blocks_.begin(), blocks_.end());
}

SetPartition SetPartition::from_restricted_growth(std::span<const int> rgs) {
  std::vector<std::vector<int>> blocks;
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    const int b = rgs[i];
    if (b < 0 || b > static_cast<int>(blocks.size())) {
      throw std::invalid_argument("not a restricted growth string");
    }
    if (b == static_cast<int>(blocks.size())) blocks.emplace_back();
    blocks[b].push_back(static_cast<int>(i) + 1);
  }
  return SetPartition(static_cast<int>(rgs.size()), std::move(blocks));
}

int SetPartition::block_of(int element) const {
  for (int i = 0; i < block_count(); ++i) {
    if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), element)) return i;
  }
  throw std::out_of_range("element " + std::to_string(element) + " not in the ground set");
}

bool blocks_cross(std::span<const int> first, std::span<const int> second) {
  std::vector<std::pair<int, int>> merged;
  merged.reserve(first.size() + second.size());
  for (int x : first) merged.emplace_back(x, 0);
  for (int x : second) merged.emplace_back(x, 1);
  std::sort(merged.begin(), merged.end());
  int runs = 0;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    if (i > 0 && merged[i].first == merged[i - 1].first) {
      throw std::invalid_argument("blocks overlap at " + std::to_string(merged[i].first));
    }
    if (i == 0 || merged[i].second != merged[i - 1].second) ++runs;
  }
  // Four alternating runs contain an interleaving i < j < k < l.
  return runs >= 4;
}

Graph::Graph(int vertex_count) : Graph(vertex_count, {}) {}

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      matrix_(vertex_count, std::vector<char>(vertex_count, 0)) {
  for (auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count || u == v) {
      throw std::invalid_argument("graph edge out of range or a loop");
    }
    if (u > v) std::swap(u, v);
    if (matrix_[u][v]) throw std::invalid_argument("graph edge repeated");
    matrix_[u][v] = matrix_[v][u] = 1;
  }
  std::sort(edges_.begin(), edges_.end());
}

Graph Graph::complete(int vertex_count) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < vertex_count; ++u) {
    for (int v = u + 1; v < vertex_count; ++v) edges.emplace_back(u, v);
  }
  return Graph(vertex_count, std::move(edges));
}

bool Graph::adjacent(int u, int v) const { return matrix_.at(u).at(v) != 0; }

Graph crossing_graph(const SetPartition& partition) {
  std::vector<std::pair<int, int>> edges;
  const auto& blocks = partition.blocks();
  for (int i = 0; i < partition.block_count(); ++i) {
    for (int j = i + 1; j < partition.block_count(); ++j) {
      if (blocks_cross(blocks[i], blocks[j])) edges.emplace_back(i, j);
    }
  }
  return Graph(partition.block_count(), std::move(edges));
}

std::vector<int> connected_component_labels(const Graph& graph) {
  const int n = graph.vertex_count();
  std::vector<std::vector<int>> adjacency(n);
  for (const auto& [u, v] : graph.edges()) {
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  std::vector<int> label(n, -1);
  int next = 0;
  for (int start = 0; start < n; ++start) {
    if (label[start] >= 0) continue;
    std::queue<int> frontier;
    frontier.push(start);
    label[start] = next;
    while (!frontier.empty()) {
      const int x = frontier.front();
      frontier.pop();
      for (int y : adjacency[x]) {
        if (label[y] < 0) {
          label[y] = next;
          frontier.push(y);
        }
      }
    }
    ++next;
  }
  return label;
}

bool is_connected(const Graph& graph) {
  const auto labels = connected_component_labels(graph);
  return std::all_of(labels.begin(), labels.end(), [](int c) { return c == 0; });
}

bool is_connected(const SetPartition& partition) { return is_connected(crossing_graph(partition)); }

bool is_matching(const SetPartition& partition) {
  return std::all_of(partition.blocks().begin(), partition.blocks().end(),
                     [](const auto& block) { return block.size() == 2; });
}

bool is_noncrossing(const SetPartition& partition) {
  return crossing_graph(partition).edge_count() == 0;
}

bool orients(const Graph& graph, const Orientation& orientation) {
  if (orientation.arcs.size() != graph.edges().size()) return false;
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    auto [a, b] = orientation.arcs[e];
    if (a > b) std::swap(a, b);
    if (std::pair{a, b} != graph.edges()[e]) return false;
  }
  return true;
}

bool is_acyclic(const Graph& graph, const Orientation& orientation) {
  const int n = graph.vertex_count();
  std::vector<std::vector<int>> out(n);
  std::vector<int> indegree(n, 0);
  for (const auto& [from, to] : orientation.arcs) {
    out[from].push_back(to);
    ++indegree[to];
  }
  std::vector<int> ready;
  for (int v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  int removed = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++removed;
    for (int w : out[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return removed == n;
}

std::vector<int> sources(const Graph& graph, const Orientation& orientation) {
  std::vector<char> has_in(graph.vertex_count(), 0);
  for (const auto& arc : orientation.arcs) has_in[arc.second] = 1;
  std::vector<int> result;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (!has_in[v]) result.push_back(v);
  }
  return result;
}

std::vector<Orientation> acyclic_orientations_unique_source(const Graph& graph, int source) {
  std::vector<Orientation> result;
  orientations_with_source(graph, source, [&](const Orientation& o) { result.push_back(o); });
  return result;
}

mpz_class count_acyclic_orientations_unique_source(const Graph& graph, int source) {
  mpz_class count = 0;
  orientations_with_source(graph, source, [&](const Orientation&) { ++count; });
  return count;
}

TutteEvaluation tutte_10(const Graph& graph) {
  if (graph.vertex_count() == 0 || !is_connected(graph)) {
    return {0, TutteStatus::disconnected};
  }
  if (graph.edge_count() > kEnumerationEdgeLimit) {
    return {tutte_10_deletion_contraction(graph), TutteStatus::ok};
  }
  return {count_acyclic_orientations_unique_source(graph, 0), TutteStatus::ok};
}

mpz_class tutte_10_deletion_contraction(const Graph& graph) {
  return deletion_contraction(graph.vertex_count(), graph.edges());
}

void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& visit) {
  if (n == 0) {
    visit(SetPartition(0, {}));
    return;
  }
  std::vector<int> rgs(n, 0);
  auto extend = [&](auto&& self, int i, int blocks) -> void {
    if (i == n) {
      visit(SetPartition::from_restricted_growth(rgs));
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[i] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  extend(extend, 1, 1);
}

void for_each_matching(int n, const std::function<void(const SetPartition&)>& visit) {
  if (n % 2 != 0) return;
  std::vector<int> mate(n + 1, 0);
  std::vector<std::vector<int>> blocks;
  auto pair_up = [&](auto&& self) -> void {
    int first = 1;
    while (first <= n && mate[first] != 0) ++first;
    if (first > n) {
      visit(SetPartition(n, blocks));
      return;
    }
    for (int other = first + 1; other <= n; ++other) {
      if (mate[other] != 0) continue;
      mate[first] = other;
      mate[other] = first;
      blocks.push_back({first, other});
      self(self);
      blocks.pop_back();
      mate[first] = mate[other] = 0;
    }
  };
  pair_up(pair_up);
}

std::vector<SetPartition> connected_partitions(int n) {
  std::vector<SetPartition> result;
  for_each_set_partition(n, [&](const SetPartition& rho) {
    if (is_connected(rho)) result.push_back(rho);
  });
  std::sort(result.begin(), result.end());
  return result;
}

namespace {

void append_oriented(const SetPartition& rho, std::vector<OrientedPartition>& out) {
  const Graph graph = crossing_graph(rho);
  if (!is_connected(graph)) return;
  const int source = rho.block_of(rho.ground_size());
  orientations_with_source(graph, source,
                           [&](const Orientation& alpha) { out.push_back({rho, alpha}); });
}

}  // namespace

std::vector<OrientedPartition> enumerate_P_tilde(int n, int bound) {
  if (n > bound) throw BoundExceeded("enumerate_P_tilde", n, bound);
  if (n < 1) throw std::invalid_argument("enumerate_P_tilde needs n >= 1");
  std::vector<OrientedPartition> result;
  for_each_set_partition(n, [&](const SetPartition& rho) { append_oriented(rho, result); });
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<OrientedPartition> enumerate_M_tilde(int n, int bound) {
  if (n > bound) throw BoundExceeded("enumerate_M_tilde", n, bound);
  if (n < 1) throw std::invalid_argument("enumerate_M_tilde needs n >= 1");
  std::vector<OrientedPartition> result;
  for_each_matching(n, [&](const SetPartition& rho) { append_oriented(rho, result); });
  std::sort(result.begin(), result.end());
  return result;
}

Relabeling relabel(const SetPartition& partition, const std::function<int(int)>& element_map) {
  std::vector<std::vector<int>> blocks;
  for (const auto& block : partition.blocks()) {
    auto& image = blocks.emplace_back();
    for (int x : block) image.push_back(element_map(x));
  }
  Relabeling result{SetPartition(partition.ground_size(), blocks), {}};
  for (const auto& block : blocks) result.block_map.push_back(result.image.block_of(block.front()));
  return result;
}

Orientation transfer_orientation(const Graph& image_graph, const Orientation& orientation,
                                 std::span<const int> block_map) {
  Orientation moved;
  for (const auto& [from, to] : orientation.arcs) {
    moved.arcs.emplace_back(block_map[from], block_map[to]);
  }
  Orientation result;
  for (const auto& edge : image_graph.edges()) {
    const auto it = std::find_if(moved.arcs.begin(), moved.arcs.end(), [&](const auto& arc) {
      return std::pair{std::min(arc.first, arc.second), std::max(arc.first, arc.second)} == edge;
    });
    if (it == moved.arcs.end()) {
      throw std::invalid_argument("block map is not a crossing-graph isomorphism");
    }
    result.arcs.push_back(*it);
  }
  if (result.arcs.size() != moved.arcs.size()) {
    throw std::invalid_argument("block map is not a crossing-graph isomorphism");
  }
  return result;
}

Relabeling reflect_matching_with_map(const SetPartition& matching) {
  require_matching(matching, "reflect_matching");
  const int top = matching.ground_size();
  return relabel(matching, [top](int x) { return x == top ? top : top - x; });
}

SetPartition reflect_matching(const SetPartition& matching) {
  return reflect_matching_with_map(matching).image;
}

int partner(const SetPartition& matching, int i) {
  require_matching(matching, "partner");
  const auto& block = matching.block(matching.block_of(i));
  return block[0] == i ? block[1] : block[0];
}

Relabeling tilde_map_with_map(const SetPartition& matching) {
  require_matching(matching, "tilde_map");
  const int top = matching.ground_size();
  return relabel(matching, [top](int x) {
    if (x == top) return top - 1;
    if (x == top - 1) return top;
    return top - 1 - x;
  });
}

SetPartition tilde_map(const SetPartition& matching) { return tilde_map_with_map(matching).image; }

std::string to_string(const SetPartition& partition) {
  std::string out;
  for (int b = 0; b < partition.block_count(); ++b) {
    if (b > 0) out += '|';
    const auto& block = partition.block(b);
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(block[i]);
    }
  }
  return out;
}

SetPartition parse_partition(std::string_view text) {
  std::vector<std::vector<int>> blocks(1);
  int max_element = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == ' ') {
      ++pos;
    } else if (c == '|') {
      blocks.emplace_back();
      ++pos;
    } else if (c == ',') {
      ++pos;
    } else {
      const int x = parse_int(text, pos, "partition");
      blocks.back().push_back(x);
      max_element = std::max(max_element, x);
    }
  }
  if (max_element == 0) return SetPartition(0, {});
  return SetPartition(max_element, std::move(blocks));
}

std::vector<std::string> arc_strings(const Orientation& orientation) {
  std::vector<std::string> out;
  for (const auto& [from, to] : orientation.arcs) {
    out.push_back(std::to_string(from) + "->" + std::to_string(to));
  }
  return out;
}

std::string to_string(const Orientation& orientation) {
  std::string out;
  for (const auto& arc : arc_strings(orientation)) {
    if (!out.empty()) out += ' ';
    out += arc;
  }
  return out;
}

Orientation parse_orientation(std::string_view text) {
  Orientation orientation;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == ',') {
      ++pos;
      continue;
    }
    const int from = parse_int(text, pos, "orientation");
    if (text.substr(pos, 2) != "->") throw std::invalid_argument("arcs are written i->j");
    pos += 2;
    const int to = parse_int(text, pos, "orientation");
    orientation.arcs.emplace_back(from, to);
  }
  return orientation;
}

}  // namespace stacksort
