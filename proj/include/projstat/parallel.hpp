#pragma once

// Map-reduce over the elements of a group. Work is split by permutation
// rank into contiguous chunks; partial results are merged in chunk order,
// so the result does not depend on the thread count.

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

#include "projstat/group.hpp"

namespace projstat {

/// 0 means "one per hardware thread".
inline int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Folds visit(acc, lift) over every canonical lift of `group`, starting
/// each chunk from a copy of `init`, then merges chunks left to right with
/// merge(into, from).
template <class Acc, class Visit, class Merge>
Acc parallel_fold(const GroupDescriptor& group, const Acc& init, Visit visit, Merge merge,
                  int threads = 0, std::uint64_t budget = default_budget()) {
  check_budget(group, budget);
  const std::uint64_t total = factorial(group.n);
  const auto chunks = static_cast<std::uint64_t>(
      std::clamp<std::uint64_t>(static_cast<std::uint64_t>(resolve_threads(threads)), 1, total));

  std::vector<Acc> partial(chunks, init);
  std::vector<std::exception_ptr> errors(chunks);
  auto run = [&](std::uint64_t c) {
    try {
      const std::uint64_t first = total * c / chunks;
      const std::uint64_t last = total * (c + 1) / chunks;
      for_each_lift_in_ranks(group, first, last,
                             [&](const ColoredPermutation& w) { visit(partial[c], w); });
    } catch (...) {
      errors[c] = std::current_exception();
    }
  };

  if (chunks == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) pool.emplace_back(run, c);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Acc out = std::move(partial.front());
  for (std::uint64_t c = 1; c < chunks; ++c) merge(out, std::move(partial[c]));
  return out;
}

}  // namespace projstat
