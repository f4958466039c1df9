#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace dist3 {

/// DIST3_JOBS if set to a positive integer, else the hardware thread count.
unsigned default_jobs();

/// Splits [0, total) into chunks of at most `chunk` units, runs `work(first,
/// last)` on up to `jobs` chunks at a time, and hands each result to
/// `consume` in chunk order. The output therefore does not depend on `jobs`.
/// An exception from any chunk is rethrown after its wave finishes.
template <class Work, class Consume>
void ordered_chunks(std::uint64_t total, std::uint64_t chunk, unsigned jobs, Work work, Consume consume) {
  using Result = decltype(work(std::uint64_t{}, std::uint64_t{}));
  jobs = std::max(1u, jobs);
  chunk = std::max<std::uint64_t>(1, chunk);
  for (std::uint64_t wave = 0; wave < total; wave += chunk * jobs) {
    std::uint64_t wave_end = std::min(total, wave + chunk * jobs);
    std::size_t slots = static_cast<std::size_t>((wave_end - wave + chunk - 1) / chunk);
    std::vector<std::optional<Result>> results(slots);
    std::vector<std::exception_ptr> errors(slots);
    auto run = [&](std::size_t s) {
      std::uint64_t first = wave + s * chunk;
      try {
        results[s].emplace(work(first, std::min(wave_end, first + chunk)));
      } catch (...) {
        errors[s] = std::current_exception();
      }
    };
    if (slots == 1) {
      run(0);
    } else {
      std::vector<std::thread> threads;
      for (std::size_t s = 1; s < slots; ++s) threads.emplace_back(run, s);
      run(0);
      for (auto& t : threads) t.join();
    }
    for (std::size_t s = 0; s < slots; ++s) {
      if (errors[s]) std::rethrow_exception(errors[s]);
      consume(std::move(*results[s]));
    }
  }
}

}  // namespace dist3
