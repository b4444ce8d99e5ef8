#pragma once

// Exhaustive and sampled enumeration of nonunital complements to M6, M5a, M5b over
// F_p, each find classified by the canonicalizer.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "matdecomp/labels.hpp"
#include "matdecomp/field.hpp"

namespace matdecomp {

struct SearchOptions {
  /// Cap on candidate vectors examined; exceeding it raises BudgetExceeded.
  std::uint64_t budget = 100'000'000;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct SearchReport {
  Field field;
  StandardM m = StandardM::M6;
  std::uint64_t candidates_scanned = 0;
  std::uint64_t valid_decompositions = 0;
  std::map<CanonLabel, std::uint64_t> label_histogram;
  /// Finds needing sqrt outside F_p; each is re-run over F_{p^2}.
  std::uint64_t extension_required = 0;
  /// Labels those re-runs produced.
  std::map<CanonLabel, std::uint64_t> extension_histogram;
  std::vector<std::string> failures;

  bool ok() const;
};

SearchReport search63(std::int64_t p, const SearchOptions& opts = {});
/// m must be M5a or M5b; p must be an odd prime.
SearchReport search54(std::int64_t p, StandardM m, const SearchOptions& opts = {});
SearchReport search(std::int64_t p, StandardM m, const SearchOptions& opts = {});

/// Uniformly random normalized complements; only closed, nonunital ones are classified.
SearchReport sample_search(std::int64_t p, StandardM m, std::uint64_t n_samples, std::uint64_t seed);

}  // namespace matdecomp
