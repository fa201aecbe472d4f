#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "obtuse/classifier.hpp"

namespace obtuse {

enum class HintMode {
  off,       // smallest-unit scan only
  on,        // report the smallest verified hint, scan only if no hint holds
  validate,  // run both; record whether the satisfied flags agree
};

struct EnumerateOptions {
  std::uint64_t n_min = 6;
  std::uint64_t n_max = 6;
  Region min_region = Region::strongly_obtuse;
  bool unsatisfied_only = false;
  bool validate_oracle = false;
  HintMode hints = HintMode::off;
  int workers = 1;
};

struct EnumeratedTriple {
  Triple triple;
  Verdict verdict;
  FamilyLabel families;
  /// Set when validate_oracle is on.
  std::optional<bool> oracle_agrees;
  /// Set when hints == validate.
  std::optional<bool> hints_agree;
};

using TripleSink = std::function<void(const EnumeratedTriple&)>;

/// Every triple of one n passing the options' filters, ascending (p, q).
std::vector<EnumeratedTriple> enumerate_n(std::uint64_t n, const EnumerateOptions& opts);

/// Ascending n, then p, then q. Uses `opts.workers` OpenMP threads; the
/// sink sees the same sequence for any worker count.
void enumerate(const EnumerateOptions& opts, const TripleSink& sink);

std::vector<EnumeratedTriple> enumerate(const EnumerateOptions& opts);

namespace reference {
/// Single-threaded enumeration; the ordering contract matches obtuse::enumerate.
void enumerate(const EnumerateOptions& opts, const TripleSink& sink);
}  // namespace reference

}  // namespace obtuse
