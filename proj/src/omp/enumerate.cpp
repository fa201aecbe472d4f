#include <omp.h>

#include <algorithm>
#include <exception>
#include <vector>

#include "obtuse/enumerate.hpp"
#include "obtuse/errors.hpp"

namespace obtuse {

void enumerate(const EnumerateOptions& opts, const TripleSink& sink) {
  if (opts.workers < 1) throw DomainError("enumerate: workers must be at least 1");
  if (opts.workers == 1) return reference::enumerate(opts, sink);

  // Blocks of consecutive n are computed in parallel, then drained in order.
  const std::uint64_t block = 4 * static_cast<std::uint64_t>(opts.workers);
  std::vector<std::vector<EnumeratedTriple>> results(block);
  std::vector<std::exception_ptr> errors(block);
  for (std::uint64_t lo = opts.n_min; lo <= opts.n_max; lo += block) {
    const std::uint64_t count = std::min(block, opts.n_max - lo + 1);
    const auto span = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(opts.workers)
    for (std::int64_t i = 0; i < span; ++i) {
      // Largest n first so the slowest items start early.
      const auto slot = static_cast<std::size_t>(span - 1 - i);
      try {
        results[slot] = enumerate_n(lo + slot, opts);
      } catch (...) {
        errors[slot] = std::current_exception();
      }
    }
    for (std::uint64_t i = 0; i < count; ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      for (const auto& e : results[i]) sink(e);
      results[i].clear();
    }
  }
}

}  // namespace obtuse
