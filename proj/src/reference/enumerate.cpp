#include "obtuse/enumerate.hpp"

namespace obtuse::reference {

void enumerate(const EnumerateOptions& opts, const TripleSink& sink) {
  for (std::uint64_t n = opts.n_min; n <= opts.n_max; ++n) {
    for (const auto& e : enumerate_n(n, opts)) sink(e);
  }
}

}  // namespace obtuse::reference
