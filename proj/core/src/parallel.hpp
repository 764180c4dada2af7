// SPDX-FileCopyrightText: 2026 R2S Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace r2s::detail {

/// Runs fn(i) for every i in [begin, end), statically chunked across the
/// hardware threads. Falls back to a plain loop when the machine reports
/// one core or the range is trivial. The first worker exception (lowest
/// chunk) is rethrown on the calling thread.
template <typename Fn>
void parallel_for(int begin, int end, Fn&& fn) {
  const int range = end - begin;
  if (range <= 0) return;

  const unsigned hw = std::thread::hardware_concurrency();
  const int workers = std::min<int>(hw > 1 ? static_cast<int>(hw) : 1, range);
  if (workers <= 1 || range < 2) {
    for (int i = begin; i < end; ++i) fn(i);
    return;
  }

  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  const int chunk = (range + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int lo = begin + w * chunk;
    const int hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([&, w, lo, hi] {
      try {
        for (int i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (std::thread& t : threads) t.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace r2s::detail
