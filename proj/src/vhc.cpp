#include "stacksort/vhc.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "stacksort/errors.hpp"
#include "stacksort/sequences.hpp"

namespace stacksort {

namespace {

// Closed axis-aligned segment; degenerate boxes make intersection a box test.
struct Segment {
  int x0, y0, x1, y1;
};

struct Point {
  int x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

std::array<Segment, 2> segments_of(std::span<const int> word, const Hook& h) {
  const int low = word[h.sw - 1];
  const int high = word[h.ne - 1];
  return {Segment{h.sw, low, h.sw, high}, Segment{h.sw, high, h.ne, high}};
}

// Hooks may touch only where the northeast endpoint of one is the southwest
// endpoint of the other.
bool hooks_collide(std::span<const int> word, const Hook& a, const Hook& b) {
  std::optional<Point> allowed;
  if (a.ne == b.sw) allowed = Point{a.ne, word[a.ne - 1]};
  if (b.ne == a.sw) allowed = Point{b.ne, word[b.ne - 1]};
  for (const Segment& s : segments_of(word, a)) {
    for (const Segment& t : segments_of(word, b)) {
      const int xlo = std::max(s.x0, t.x0);
      const int xhi = std::min(s.x1, t.x1);
      const int ylo = std::max(s.y0, t.y0);
      const int yhi = std::min(s.y1, t.y1);
      if (xlo > xhi || ylo > yhi) continue;
      if (xlo == xhi && ylo == yhi && allowed && *allowed == Point{xlo, ylo}) continue;
      return true;
    }
  }
  return false;
}

bool nothing_above(std::span<const int> word, const Hook& h) {
  const int height = word[h.ne - 1];
  for (int a = h.sw + 1; a < h.ne; ++a) {
    if (word[a - 1] > height) return false;
  }
  return true;
}

ColorAssignment coloring_of(std::span<const int> word, std::span<const Hook> hooks,
                            ColoringVariant variant) {
  const int n = static_cast<int>(word.size());
  ColorAssignment coloring;
  coloring.color_of.assign(n, kSky);
  coloring.color_count = static_cast<int>(hooks.size()) + 1;

  std::vector<int> hook_ending_at(n + 1, 0);
  for (std::size_t t = 0; t < hooks.size(); ++t) hook_ending_at[hooks[t].ne] = static_cast<int>(t) + 1;

  for (int a = 1; a <= n; ++a) {
    if (hook_ending_at[a] != 0) {
      coloring.color_of[a - 1] =
          variant == ColoringVariant::extended ? hook_ending_at[a] : kUncolored;
      continue;
    }
    int best = kSky;
    int best_height = std::numeric_limits<int>::max();
    for (std::size_t t = 0; t < hooks.size(); ++t) {
      const int height = word[hooks[t].ne - 1];
      if (hooks[t].sw < a && a <= hooks[t].ne && height > word[a - 1] && height < best_height) {
        best = static_cast<int>(t) + 1;
        best_height = height;
      }
    }
    coloring.color_of[a - 1] = best;
  }
  return coloring;
}

Composition composition_of(std::span<const int> word, std::span<const Hook> hooks) {
  const auto coloring = coloring_of(word, hooks, ColoringVariant::base);
  Composition parts(coloring.color_count, 0);
  for (int c : coloring.color_of) {
    if (c != kUncolored) ++parts[c];
  }
  return parts;
}

const std::vector<std::uint64_t>& small_catalans() {
  // C_35 is the last Catalan number below 2^63.
  static const std::vector<std::uint64_t> table = [] {
    std::vector<std::uint64_t> c(36);
    for (int i = 0; i < 36; ++i) c[i] = catalan(i).get_ui();
    return c;
  }();
  return table;
}

std::uint64_t small_fertility(std::span<const int> word, std::span<const Hook> hooks) {
  const auto& cat = small_catalans();
  std::uint64_t product = 1;
  for (int q : composition_of(word, hooks)) product *= cat.at(q);
  return product;
}

std::vector<Permutation> relabel_all(const std::vector<Permutation>& shapes,
                                     std::span<const int> values) {
  std::vector<Permutation> out;
  out.reserve(shapes.size());
  for (const auto& shape : shapes) {
    std::vector<int> word;
    word.reserve(shape.size());
    for (int e : shape.entries()) word.push_back(values[e - 1]);
    out.emplace_back(std::move(word));
  }
  return out;
}

int parse_int(std::string_view text, std::size_t& pos) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
  if (ec != std::errc{} || end == text.data() + pos) {
    throw std::invalid_argument("malformed hook configuration text: '" + std::string(text) + "'");
  }
  pos = static_cast<std::size_t>(end - text.data());
  return value;
}

}  // namespace

bool is_valid(const Permutation& pi, std::span<const Hook> hooks) {
  const int n = pi.size();
  for (const Hook& h : hooks) {
    if (h.sw < 1 || h.sw > n || h.ne < 1 || h.ne > n) {
      throw std::invalid_argument("hook endpoint outside 1.." + std::to_string(n));
    }
  }
  const auto word = pi.entries();
  const DescentSet tops = descents(pi);
  if (hooks.size() != tops.size()) return false;
  for (std::size_t t = 0; t < hooks.size(); ++t) {
    const Hook& h = hooks[t];
    if (h.sw != tops[t]) return false;
    if (h.sw >= h.ne || word[h.sw - 1] >= word[h.ne - 1]) return false;
    if (!nothing_above(word, h)) return false;
  }
  for (std::size_t s = 0; s < hooks.size(); ++s) {
    for (std::size_t t = s + 1; t < hooks.size(); ++t) {
      if (hooks_collide(word, hooks[s], hooks[t])) return false;
    }
  }
  return true;
}

ValidHookConfiguration make_configuration(Permutation pi, std::vector<Hook> hooks) {
  if (!is_valid(pi, hooks)) {
    throw std::invalid_argument("not a valid hook configuration: " +
                                to_string(ValidHookConfiguration{pi, hooks}));
  }
  return {std::move(pi), std::move(hooks)};
}

void for_each_vhc(const Permutation& pi, const std::function<void(std::span<const Hook>)>& visit) {
  const auto word = pi.entries();
  const int n = pi.size();
  const DescentSet tops = descents(pi);
  std::vector<Hook> chosen;
  chosen.reserve(tops.size());

  auto place = [&](auto&& self, std::size_t t) -> void {
    if (t == tops.size()) {
      visit(chosen);
      return;
    }
    const int d = tops[t];
    // Northeast candidates are the left-to-right maxima after d that rise above pi_d.
    int running_max = 0;
    for (int j = d + 1; j <= n; ++j) {
      const int height = word[j - 1];
      if (height < running_max) continue;
      running_max = height;
      if (height < word[d - 1]) continue;
      const Hook h{d, j};
      const bool clear = std::none_of(chosen.begin(), chosen.end(),
                                      [&](const Hook& g) { return hooks_collide(word, g, h); });
      if (!clear) continue;
      chosen.push_back(h);
      self(self, t + 1);
      chosen.pop_back();
    }
  };
  place(place, 0);
}

std::vector<ValidHookConfiguration> enumerate_vhcs(const Permutation& pi) {
  std::vector<ValidHookConfiguration> result;
  for_each_vhc(pi, [&](std::span<const Hook> hooks) {
    result.push_back({pi, std::vector<Hook>(hooks.begin(), hooks.end())});
  });
  return result;
}

std::uint64_t count_vhcs(const Permutation& pi) {
  std::uint64_t count = 0;
  for_each_vhc(pi, [&](std::span<const Hook>) { ++count; });
  return count;
}

ColorAssignment induced_coloring(const ValidHookConfiguration& config, ColoringVariant variant) {
  return coloring_of(config.host.entries(), config.hooks, variant);
}

Composition valid_composition(const ValidHookConfiguration& config) {
  return composition_of(config.host.entries(), config.hooks);
}

mpz_class fertility(const Permutation& pi) {
  const auto word = pi.entries();
  mpz_class total = 0;
  for_each_vhc(pi, [&](std::span<const Hook> hooks) {
    mpz_class product = 1;
    for (int q : composition_of(word, hooks)) product *= catalan(q);
    total += product;
  });
  return total;
}

bool is_sorted(const Permutation& pi) { return count_vhcs(pi) > 0; }

bool is_uniquely_sorted(const Permutation& pi) {
  return pi.size() == 2 * static_cast<int>(descents(pi).size()) + 1 && is_sorted(pi);
}

TopHookDecomposition top_hook_decomposition(const ValidHookConfiguration& config) {
  if (config.hooks.empty()) {
    throw std::domain_error("top hook decomposition undefined: configuration has no hooks");
  }
  const auto word = config.host.entries();
  const Hook top = *std::max_element(
      config.hooks.begin(), config.hooks.end(),
      [&](const Hook& a, const Hook& b) { return word[a.ne - 1] < word[b.ne - 1]; });
  const int width = top.ne - top.sw;

  std::vector<int> inside(word.begin() + top.sw, word.begin() + top.ne - 1);
  std::vector<int> outside(word.begin(), word.begin() + top.sw);
  outside.insert(outside.end(), word.begin() + top.ne, word.end());

  std::vector<Hook> inside_hooks;
  std::vector<Hook> outside_hooks;
  for (const Hook& h : config.hooks) {
    if (h == top) continue;
    if (h.sw > top.sw && h.sw < top.ne) {
      inside_hooks.push_back({h.sw - top.sw, h.ne - top.sw});
    } else {
      auto shift = [&](int p) { return p > top.ne ? p - width : p; };
      outside_hooks.push_back({shift(h.sw), shift(h.ne)});
    }
  }

  TopHookDecomposition result{
      top,
      make_configuration(Permutation(inside), std::move(inside_hooks)),
      make_configuration(Permutation(outside), std::move(outside_hooks)),
      inside,
      outside,
  };
  std::sort(result.sheltered_values.begin(), result.sheltered_values.end());
  std::sort(result.unsheltered_values.begin(), result.unsheltered_values.end());
  return result;
}

UniquelySortedConstruction construct_uniquely_sorted(int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  // levels[j] holds the normalized uniquely sorted permutations of S_{2j+1}.
  std::vector<std::vector<Permutation>> levels{{Permutation{1}}};
  std::size_t emitted = 1;
  for (int size = 1; size <= k; ++size) {
    const int span = 2 * size;
    std::set<Permutation> found;
    emitted = 0;
    for (int a = 0; a < size; ++a) {
      const int b = size - 1 - a;
      const int left_length = 2 * a + 1;
      for (std::uint32_t mask = 0; mask < (1u << span); ++mask) {
        if (std::popcount(mask) != left_length) continue;
        std::vector<int> left_values;
        std::vector<int> right_values;
        for (int v = 1; v <= span; ++v) {
          ((mask >> (v - 1)) & 1u ? left_values : right_values).push_back(v);
        }
        const auto taus = relabel_all(levels[a], left_values);
        const auto mus = relabel_all(levels[b], right_values);
        for (const auto& tau : taus) {
          for (const auto& mu : mus) {
            if (left_values.back() < mu.entry(1)) continue;
            std::vector<int> word(tau.entries().begin(), tau.entries().end());
            word.insert(word.end(), mu.entries().begin(), mu.entries().end());
            word.push_back(span + 1);
            found.emplace(std::move(word));
            ++emitted;
          }
        }
      }
    }
    levels.emplace_back(found.begin(), found.end());
  }
  return {std::move(levels[k]), emitted};
}

std::vector<Permutation> enumerate_uniquely_sorted(int k) {
  return construct_uniquely_sorted(k).permutations;
}

ValidHookConfiguration unique_configuration(const Permutation& pi) {
  auto configs = enumerate_vhcs(pi);
  if (configs.size() != 1 || pi.size() != 2 * configs.front().hook_count() + 1) {
    throw std::domain_error(to_string(pi) + " is not uniquely sorted");
  }
  return std::move(configs.front());
}

DecreasingBinaryTree tree_from_vhc(const ValidHookConfiguration& config) {
  if (!is_uniquely_sorted(config.host)) {
    throw std::domain_error("tree_from_vhc needs a uniquely sorted host, got " +
                            to_string(config.host));
  }
  const int n = config.host.size();
  std::vector<int> left(n + 1, 0);
  std::vector<int> right(n + 1, 0);
  std::vector<int> parents(n + 1, 0);
  for (const Hook& h : config.hooks) {
    left[h.ne] = h.sw;
    right[h.ne] = h.ne - 1;
    ++parents[h.sw];
    ++parents[h.ne - 1];
  }
  const auto root = std::find(parents.begin() + 1, parents.end(), 0);
  if (std::count(parents.begin() + 1, parents.end(), 0) != 1 ||
      std::any_of(parents.begin() + 1, parents.end(), [](int p) { return p > 1; })) {
    throw std::logic_error("hooks of " + to_string(config) + " do not form a tree");
  }
  auto build = [&](auto&& self, int position) -> DecreasingBinaryTree {
    if (position == 0) return {};
    return DecreasingBinaryTree::join(config.host.entry(position), self(self, left[position]),
                                      self(self, right[position]));
  };
  return build(build, static_cast<int>(root - parents.begin()));
}

int eye(const Permutation& pi) {
  if (pi.size() < 3) throw std::domain_error("eye undefined for length below 3");
  const auto pieces = top_hook_decomposition(unique_configuration(pi));
  return pieces.sheltered.host.entry(1);
}

int eye_via_tree(const Permutation& pi) {
  if (pi.size() < 3) throw std::domain_error("eye undefined for length below 3");
  const auto tree = tree_from_vhc(unique_configuration(pi));
  return leftmost_cousin(tree, tree.node(tree.node(0).left).label);
}

VhcCensus vhc_census(int n, const SweepOptions& options, int bound) {
  if (n > bound) throw BoundExceeded("vhc_census", n, bound);
  auto slice = [n](int first) {
    VhcCensus part;
    part.n = n;
    part.by_hook_count.assign(n / 2 + 1, 0);
    part.by_tail_length.assign(n + 1, 0);
    part.uniquely_sorted_by_tail_length.assign(n + 1, 0);
    for_each_permutation_starting_with(n, first, [&](const Permutation& pi) {
      const auto word = pi.entries();
      std::uint64_t configs = 0;
      std::uint64_t fert = 0;
      for_each_vhc(pi, [&](std::span<const Hook> hooks) {
        ++configs;
        ++part.by_hook_count.at(hooks.size());
        fert += small_fertility(word, hooks);
      });
      if (configs == 0) return;
      const int tail = tail_length(pi);
      part.configurations += configs;
      part.sorted_permutations += 1;
      part.by_tail_length[tail] += configs;
      if (fert == 1 && n % 2 == 1) part.uniquely_sorted_by_tail_length[tail] += 1;
    });
    return part;
  };
  const auto parts = sweep_by_first_entry<VhcCensus>(n, options, slice);
  VhcCensus total = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    total.configurations += parts[i].configurations;
    total.sorted_permutations += parts[i].sorted_permutations;
    for (std::size_t h = 0; h < total.by_hook_count.size(); ++h) {
      total.by_hook_count[h] += parts[i].by_hook_count[h];
    }
    for (int m = 0; m <= n; ++m) {
      total.by_tail_length[m] += parts[i].by_tail_length[m];
      total.uniquely_sorted_by_tail_length[m] += parts[i].uniquely_sorted_by_tail_length[m];
    }
  }
  return total;
}

std::vector<ValidHookConfiguration> all_vhcs(int n, int bound) {
  if (n > bound) throw BoundExceeded("all_vhcs", n, bound);
  std::vector<ValidHookConfiguration> result;
  for_each_permutation(n, [&](const Permutation& pi) {
    auto configs = enumerate_vhcs(pi);
    result.insert(result.end(), std::make_move_iterator(configs.begin()),
                  std::make_move_iterator(configs.end()));
  });
  std::sort(result.begin(), result.end());
  return result;
}

std::string to_string(const ValidHookConfiguration& config) {
  std::string out = to_string(config.host);
  out += out.empty() ? ";" : " ;";
  for (const Hook& h : config.hooks) {
    out += ' ';
    out += std::to_string(h.sw) + '>' + std::to_string(h.ne);
  }
  return out;
}

ValidHookConfiguration parse_configuration(std::string_view text) {
  const auto semicolon = text.find(';');
  if (semicolon == std::string_view::npos) {
    throw std::invalid_argument("hook configuration text needs a ';' after the permutation");
  }
  Permutation host = parse_permutation(text.substr(0, semicolon));
  const std::string_view rest = text.substr(semicolon + 1);
  std::vector<Hook> hooks;
  std::size_t pos = 0;
  while (pos < rest.size()) {
    if (rest[pos] == ' ' || rest[pos] == '\t') {
      ++pos;
      continue;
    }
    Hook h;
    h.sw = parse_int(rest, pos);
    if (pos >= rest.size() || rest[pos] != '>') {
      throw std::invalid_argument("hooks are written sw>ne");
    }
    ++pos;
    h.ne = parse_int(rest, pos);
    hooks.push_back(h);
  }
  return make_configuration(std::move(host), std::move(hooks));
}

}  // namespace stacksort
