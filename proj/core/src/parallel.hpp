// Copyright 2026 The fairalloc Authors.
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

#ifndef FAIRALLOC_SRC_PARALLEL_HPP_
#define FAIRALLOC_SRC_PARALLEL_HPP_

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace fairalloc::internal {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Splits [0, count) into contiguous chunks, runs `work(first, last)` on each,
// and folds the partial results left to right in index order with
// `merge(left, right)`. The result depends only on `work` and `merge`, not
// on the number of workers, as long as `merge` is associative.
template <typename Work, typename Merge>
auto partitioned_reduce(std::uint64_t count, unsigned threads, Work work, Merge merge) {
  using Acc = decltype(work(std::uint64_t{0}, std::uint64_t{0}));
  constexpr std::uint64_t kMinChunk = 4096;
  const std::uint64_t workers = std::clamp<std::uint64_t>(
      std::min<std::uint64_t>(resolve_threads(threads), count / kMinChunk), 1, 256);
  if (workers == 1) return work(0, count);

  std::vector<std::optional<Acc>> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t first = count * w / workers;
      const std::uint64_t last = count * (w + 1) / workers;
      pool.emplace_back([&, w, first, last] {
        try {
          partial[w].emplace(work(first, last));
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Acc acc = std::move(*partial[0]);
  for (std::uint64_t w = 1; w < workers; ++w) acc = merge(std::move(acc), std::move(*partial[w]));
  return acc;
}

}  // namespace fairalloc::internal

#endif  // FAIRALLOC_SRC_PARALLEL_HPP_
