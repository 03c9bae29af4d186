#include "stacksort/bijections.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stacksort {

namespace {

struct Colored {
  std::vector<std::vector<int>> values;     // per color
  std::vector<std::vector<int>> positions;  // per color
};

Colored color_classes(const ValidHookConfiguration& config) {
  const auto coloring = induced_coloring(config, ColoringVariant::extended);
  Colored out{std::vector<std::vector<int>>(coloring.color_count),
              std::vector<std::vector<int>>(coloring.color_count)};
  for (int i = 1; i <= config.host.size(); ++i) {
    const int c = coloring.color_of[i - 1];
    out.values[c].push_back(config.host.entry(i));
    out.positions[c].push_back(i);
  }
  return out;
}

// A piece of the reconstruction: the values its word uses, the blocks living
// on it, and which of them plays the sky. The sky block also holds one value
// outside `values` standing in for n.
struct Piece {
  std::vector<int> values;  // sorted
  std::vector<int> blocks;  // indices into the partition
  int sky = 0;
};

struct Rebuilt {
  std::vector<int> word;
  std::vector<Hook> hooks;
};

class Reconstruction {
 public:
  Reconstruction(const SetPartition& partition, const Orientation& orientation)
      : partition_(partition), reach_(partition.block_count()) {
    const int blocks = partition.block_count();
    std::vector<std::vector<int>> out(blocks);
    for (const auto& [from, to] : orientation.arcs) out[from].push_back(to);
    for (int b = 0; b < blocks; ++b) {
      reach_[b].assign(blocks, 0);
      std::vector<int> stack{b};
      reach_[b][b] = 1;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : out[x]) {
          if (!reach_[b][y]) {
            reach_[b][y] = 1;
            stack.push_back(y);
          }
        }
      }
    }
  }

  Rebuilt run(const Piece& piece) const {
    if (piece.blocks.size() == 1) return {piece.values, {}};

    std::vector<char> in_sky(partition_.ground_size() + 1, 0);
    for (int x : partition_.block(piece.sky)) in_sky[x] = 1;
    const auto top_it = std::find_if(piece.values.rbegin(), piece.values.rend(),
                                     [&](int x) { return !in_sky[x]; });
    if (top_it == piece.values.rend()) throw std::logic_error("piece without a non-sky value");
    const int a = *top_it;
    const int top_block = partition_.block_of(a);

    Piece sheltered{{}, {}, top_block};
    Piece unsheltered{{}, {}, piece.sky};
    std::vector<char> sheltered_value(partition_.ground_size() + 1, 0);
    for (int b : piece.blocks) {
      if (reach_[top_block][b]) {
        sheltered.blocks.push_back(b);
        for (int x : partition_.block(b)) {
          if (x != a) sheltered_value[x] = 1;
        }
      } else {
        unsheltered.blocks.push_back(b);
      }
    }
    std::vector<int> high;
    for (int x : piece.values) {
      if (x == a) continue;
      if (sheltered_value[x]) {
        sheltered.values.push_back(x);
      } else {
        unsheltered.values.push_back(x);
        if (x > a) high.push_back(x);
      }
    }
    // Unsheltered values below a sit left of the top hook; the last of them
    // is its southwest endpoint.
    const int b = static_cast<int>(unsheltered.values.size() - high.size());
    if (b == 0 || sheltered.values.empty()) {
      throw std::logic_error("top hook has no southwest endpoint or shelters nothing");
    }
    const int c = unsheltered.values[b - 1];

    const Rebuilt outer = run(unsheltered);
    const Rebuilt inner = run(sheltered);
    if (outer.word[b - 1] != c ||
        !std::equal(high.begin(), high.end(), outer.word.end() - static_cast<long>(high.size()))) {
      throw std::logic_error("unsheltered piece does not end in the expected tail");
    }

    const int width = static_cast<int>(sheltered.values.size()) + 1;
    Rebuilt result;
    result.word.assign(outer.word.begin(), outer.word.begin() + b);
    result.word.insert(result.word.end(), inner.word.begin(), inner.word.end());
    result.word.push_back(a);
    result.word.insert(result.word.end(), high.begin(), high.end());
    for (const Hook& h : outer.hooks) {
      auto shift = [&](int p) { return p > b ? p + width : p; };
      result.hooks.push_back({shift(h.sw), shift(h.ne)});
    }
    result.hooks.push_back({b, b + width});
    for (const Hook& h : inner.hooks) result.hooks.push_back({h.sw + b, h.ne + b});
    std::sort(result.hooks.begin(), result.hooks.end());
    return result;
  }

 private:
  const SetPartition& partition_;
  std::vector<std::vector<char>> reach_;
};

void require_P_tilde(const SetPartition& partition, const Orientation& orientation) {
  const int n = partition.ground_size();
  if (n < 1) throw std::invalid_argument("phi_inverse needs n >= 1");
  const Graph graph = crossing_graph(partition);
  if (!is_connected(graph)) {
    throw std::invalid_argument("partition " + to_string(partition) + " is not connected");
  }
  if (!orients(graph, orientation)) {
    throw std::invalid_argument("orientation does not match the crossing graph of " +
                                to_string(partition));
  }
  if (!is_acyclic(graph, orientation)) throw std::invalid_argument("orientation has a cycle");
  const auto heads = sources(graph, orientation);
  if (heads.size() != 1 || heads.front() != partition.block_of(n)) {
    throw std::invalid_argument("the block holding n must be the only source");
  }
}

}  // namespace

PhiImage phi(const ValidHookConfiguration& config) {
  if (!config.host.is_normalized()) {
    throw std::invalid_argument("phi needs a normalized host, got " + to_string(config.host));
  }
  const int n = config.host.size() + 1;
  Colored classes = color_classes(config);
  classes.values[kSky].push_back(n);

  PhiImage image;
  image.partition = SetPartition(n, classes.values);
  const int blocks = image.partition.block_count();
  image.hatted_blocks.resize(blocks);
  std::vector<int> first_position(blocks, 0);
  for (std::size_t c = 0; c < classes.values.size(); ++c) {
    const int index = image.partition.block_of(classes.values[c].front());
    image.hatted_blocks[index] = classes.positions[c];
    first_position[index] = classes.positions[c].empty() ? 0 : classes.positions[c].front();
  }
  const Graph graph = crossing_graph(image.partition);
  for (const auto& [u, v] : graph.edges()) {
    if (first_position[u] < first_position[v]) {
      image.orientation.arcs.emplace_back(u, v);
    } else {
      image.orientation.arcs.emplace_back(v, u);
    }
  }
  return image;
}

ValidHookConfiguration phi_inverse(const SetPartition& partition, const Orientation& orientation) {
  require_P_tilde(partition, orientation);
  const int n = partition.ground_size();
  Piece whole;
  for (int x = 1; x < n; ++x) whole.values.push_back(x);
  for (int b = 0; b < partition.block_count(); ++b) whole.blocks.push_back(b);
  whole.sky = partition.block_of(n);
  Rebuilt rebuilt = Reconstruction(partition, orientation).run(whole);
  return make_configuration(Permutation(std::move(rebuilt.word)), std::move(rebuilt.hooks));
}

ValidHookConfiguration phi_inverse(const OrientedPartition& pair) {
  return phi_inverse(pair.partition, pair.orientation);
}

ValidHookConfiguration phi_inverse(const PhiImage& image) {
  return phi_inverse(image.partition, image.orientation);
}

PhiImage phi_restricted(const ValidHookConfiguration& config) {
  if (config.host.size() != 2 * config.hook_count() + 1) {
    throw std::invalid_argument("phi_restricted needs k hooks on 2k+1 points, got " +
                                to_string(config));
  }
  PhiImage image = phi(config);
  if (!is_matching(image.partition)) {
    throw std::logic_error("image of " + to_string(config) + " is not a matching");
  }
  return image;
}

bool first_entry_block_property(const Permutation& pi) {
  const PhiImage image = phi_restricted(unique_configuration(pi));
  const int top = pi.size() + 1;
  return image.partition.block(image.partition.block_of(top)) == std::vector<int>{pi.entry(1), top};
}

SetPartition eta(const ValidHookConfiguration& config) {
  Colored classes = color_classes(config);
  std::erase_if(classes.positions, [](const auto& block) { return block.empty(); });
  SetPartition result(config.host.size(), std::move(classes.positions));
  if (!is_noncrossing(result)) {
    throw std::logic_error("eta of " + to_string(config) + " crosses: " + to_string(result));
  }
  return result;
}

}  // namespace stacksort
