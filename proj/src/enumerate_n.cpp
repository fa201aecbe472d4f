#include <algorithm>

#include "obtuse/enumerate.hpp"
#include "obtuse/errors.hpp"

namespace obtuse {

namespace {

Verdict from_hints(const Triple& t, const WitnessScanner& scanner) {
  const auto hints = witness_hints(t);
  if (hints.empty()) return scanner.scan(t);
  const Residue a = hints.front();
  return Verdict{true, a, check_witness(a.value(), t)};
}

}  // namespace

std::vector<EnumeratedTriple> enumerate_n(std::uint64_t n, const EnumerateOptions& opts) {
  std::vector<EnumeratedTriple> out;
  if (n < 4) return out;
  const WitnessScanner scanner(n);
  for (std::uint64_t p = 1; 3 * p <= n; ++p) {
    for (std::uint64_t q = p; p + 2 * q <= n; ++q) {
      const std::uint64_t r = n - p - q;
      if (gcd(gcd(p, q), r) != 1) continue;
      const Triple t = Triple::make(p, q, r);
      // r only shrinks as q grows.
      if (!region_at_least(region(t), opts.min_region)) break;

      EnumeratedTriple e{t, {}, classify_family(t), std::nullopt, std::nullopt};
      switch (opts.hints) {
        case HintMode::off: e.verdict = scanner.scan(t); break;
        case HintMode::on: e.verdict = from_hints(t, scanner); break;
        case HintMode::validate: {
          e.verdict = scanner.scan(t);
          const Verdict hinted = from_hints(t, scanner);
          e.hints_agree = hinted.satisfied == e.verdict.satisfied;
          break;
        }
      }
      if (opts.unsatisfied_only && e.verdict.satisfied) continue;
      if (opts.validate_oracle) {
        // A hinted witness need not be the smallest one, so only the flag is comparable.
        const Verdict o = scanner.oracle(t);
        e.oracle_agrees = opts.hints == HintMode::on ? o.satisfied == e.verdict.satisfied : o == e.verdict;
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<EnumeratedTriple> enumerate(const EnumerateOptions& opts) {
  std::vector<EnumeratedTriple> out;
  enumerate(opts, [&](const EnumeratedTriple& e) { out.push_back(e); });
  return out;
}

}  // namespace obtuse
