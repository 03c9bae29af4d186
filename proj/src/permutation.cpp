#include "stacksort/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "stacksort/errors.hpp"
#include "stacksort/sweep.hpp"

namespace stacksort {

namespace {

bool has_distinct_entries(const std::vector<int>& entries) {
  if (entries.size() <= 32) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      for (std::size_t j = i + 1; j < entries.size(); ++j) {
        if (entries[i] == entries[j]) return false;
      }
    }
    return true;
  }
  std::vector<int> sorted = entries;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 1) throw std::invalid_argument("permutation entries must be positive");
  }
  if (!has_distinct_entries(entries_)) {
    throw std::invalid_argument("permutation entries must be distinct");
  }
}

Permutation::Permutation(std::initializer_list<int> entries)
    : Permutation(std::vector<int>(entries)) {}

Permutation Permutation::identity(int n) {
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

int Permutation::entry(int position) const {
  if (position < 1 || position > size()) {
    throw std::out_of_range("position " + std::to_string(position) + " outside 1.." +
                            std::to_string(size()));
  }
  return entries_[position - 1];
}

bool Permutation::is_normalized() const noexcept {
  return max_entry() == size();
}

int Permutation::max_entry() const noexcept {
  return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

Permutation normalize(const Permutation& pi) {
  const auto entries = pi.entries();
  std::vector<int> order(entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return entries[a] < entries[b]; });
  std::vector<int> word(entries.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    word[order[rank]] = static_cast<int>(rank) + 1;
  }
  return Permutation(std::move(word));
}

DescentSet descents(const Permutation& pi) {
  const auto entries = pi.entries();
  DescentSet result;
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    if (entries[i] > entries[i + 1]) result.push_back(static_cast<int>(i) + 1);
  }
  return result;
}

Permutation stack_sort(const Permutation& pi) {
  std::vector<int> stack;
  std::vector<int> output;
  output.reserve(pi.size());
  for (int next : pi.entries()) {
    while (!stack.empty() && stack.back() < next) {
      output.push_back(stack.back());
      stack.pop_back();
    }
    stack.push_back(next);
  }
  while (!stack.empty()) {
    output.push_back(stack.back());
    stack.pop_back();
  }
  return Permutation(std::move(output));
}

Permutation iterate_sort(const Permutation& pi, int iterations) {
  if (iterations < 0) throw std::invalid_argument("iteration count must be nonnegative");
  Permutation current = pi;
  for (int t = 0; t < iterations; ++t) current = stack_sort(current);
  return current;
}

std::vector<Permutation> preimages_bruteforce(const Permutation& pi, int bound) {
  if (!pi.is_normalized()) {
    throw std::invalid_argument("preimages_bruteforce expects a normalized permutation");
  }
  if (pi.size() > bound) throw BoundExceeded("preimages_bruteforce", pi.size(), bound);
  std::vector<Permutation> result;
  for_each_permutation(pi.size(), [&](const Permutation& sigma) {
    if (stack_sort(sigma) == pi) result.push_back(sigma);
  });
  return result;
}

std::map<Permutation, std::uint64_t> preimage_counts(int n, int bound) {
  if (n > bound) throw BoundExceeded("preimage_counts", n, bound);
  std::map<Permutation, std::uint64_t> counts;
  for_each_permutation(n, [&](const Permutation& sigma) { ++counts[stack_sort(sigma)]; });
  return counts;
}

int tail_length(const Permutation& pi) {
  const Permutation normal = normalize(pi);
  const int n = normal.size();
  int length = 0;
  while (length < n && normal.entry(n - length) == n - length) ++length;
  return length;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> entries;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t' || text[i] == ',') {
      ++i;
      continue;
    }
    int value = 0;
    const auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{} || end == text.data() + i) {
      throw std::invalid_argument("malformed permutation text: '" + std::string(text) + "'");
    }
    entries.push_back(value);
    i = static_cast<std::size_t>(end - text.data());
  }
  return Permutation(std::move(entries));
}

std::string to_string(const Permutation& pi) {
  std::string out;
  for (int e : pi.entries()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e);
  }
  return out;
}

}  // namespace stacksort
