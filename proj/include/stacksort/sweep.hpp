#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <thread>
#include <vector>

#include "stacksort/permutation.hpp"

namespace stacksort {

struct SweepOptions {
  // 0 means one worker per hardware thread.
  unsigned jobs = 1;
  // Called after each first-entry slice finishes; serialized by the sweep.
  std::function<void(int completed, int total)> progress;
};

inline unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Visits the permutations of {1,...,n} that start with `first`, in
/// lexicographic order. For n == 0 the empty permutation is visited once.
template <class Visit>
void for_each_permutation_starting_with(int n, int first, Visit&& visit) {
  if (n == 0) {
    visit(Permutation{});
    return;
  }
  std::vector<int> rest;
  rest.reserve(n - 1);
  for (int v = 1; v <= n; ++v) {
    if (v != first) rest.push_back(v);
  }
  std::vector<int> word(n);
  word[0] = first;
  do {
    std::copy(rest.begin(), rest.end(), word.begin() + 1);
    visit(Permutation(word));
  } while (std::next_permutation(rest.begin(), rest.end()));
}

template <class Visit>
void for_each_permutation(int n, Visit&& visit) {
  if (n == 0) {
    visit(Permutation{});
    return;
  }
  for (int first = 1; first <= n; ++first) for_each_permutation_starting_with(n, first, visit);
}

/// Partitions S_n by first entry and runs `work(first)` for each slice on up to
/// `options.jobs` threads. Results come back indexed by first - 1, so callers
/// that fold them in order get the same answer for every job count. For n == 0
/// there is a single slice, `work(0)`.
template <class Result, class Work>
std::vector<Result> sweep_by_first_entry(int n, const SweepOptions& options, Work&& work) {
  const int slices = std::max(n, 1);
  std::vector<Result> results(slices);
  std::atomic<int> next{0};
  std::mutex progress_mutex;
  int completed = 0;

  std::exception_ptr failure;

  auto worker = [&] {
    for (int slice = next++; slice < slices; slice = next++) {
      try {
        results[slice] = work(n == 0 ? 0 : slice + 1);
      } catch (...) {
        std::lock_guard lock(progress_mutex);
        if (!failure) failure = std::current_exception();
        next = slices;
        return;
      }
      if (options.progress) {
        std::lock_guard lock(progress_mutex);
        options.progress(++completed, slices);
      }
    }
  };

  const unsigned jobs = std::min<unsigned>(resolve_jobs(options.jobs), slices);
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace stacksort
