#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "stanley/decomposition.hpp"
#include "stanley/poset.hpp"

namespace stanley {

struct SearchBudget {
  std::optional<double> time_limit_seconds;
  std::optional<std::uint64_t> node_limit;
  int threads = 1;
};

enum class Decision { Yes, No, Unknown };

struct DecisionResult {
  Decision decision = Decision::Unknown;
  /// Witness partition when the decision is Yes; ordered for the fdepth search.
  Partition witness;
  std::uint64_t nodes = 0;
};

/// Does a partition with rho(top) >= k on every interval exist? Exact-cover
/// backtracking: the interval covering the first uncovered point of the linear
/// extension must start there, so branching over its tops is complete. Failed
/// covered-sets are memoized (disable with use_memo for differential testing).
DecisionResult sdepth_decision(const CharacteristicPoset& poset, int k,
                               const SearchBudget& budget = {},
                               bool use_memo = true);

/// Same decision restricted to ordered partitions (every prefix union a
/// down-set): states are covered down-sets, transitions add an interval rooted
/// at a minimal uncovered point that keeps the union downward closed. Visited
/// states are memoized.
DecisionResult fdepth_decision(const CharacteristicPoset& poset, int k,
                               const SearchBudget& budget = {},
                               bool use_memo = true);

enum class SearchStatus { Exact, LowerBound, EmptyModule };

struct DepthResult {
  int value = 0;
  SearchStatus status = SearchStatus::Exact;
  /// Poset the witness indices refer to (original coordinates).
  PosetPtr poset;
  /// Valid partition achieving value; ordered for fdepth results.
  Partition witness;
  std::uint64_t nodes = 0;
};

/// Exact Stanley depth of I/J by monotone binary search on the decision
/// between min rho (always reachable with singletons) and max rho (the Krull
/// dimension). Free variables are stripped first and the result re-inflated,
/// unless an explicit g is supplied. On budget exhaustion the best proven
/// lower bound is reported with status LowerBound.
DepthResult sdepth_exact(const QuotientPair& pair, const SearchBudget& budget = {},
                         std::optional<Exponent> g = std::nullopt);

/// Exact fdepth, same scheme over ordered partitions; the witness is ordered.
DepthResult fdepth_exact(const QuotientPair& pair, const SearchBudget& budget = {},
                         std::optional<Exponent> g = std::nullopt);

/// dim I/J = max rho over the poset.
int krull_dim(const CharacteristicPoset& poset);

/// fdepth I/J >= min rho over the poset (singleton chain in linear-extension
/// order).
int lower_bound_minrho(const CharacteristicPoset& poset);

/// sdepth I >= max(1, n - m + 1) for an ideal with m generators. Requires J = 0.
int lower_bound_gencount(const QuotientPair& pair);

/// Slice recursion bound: sdepth I >= min(sdepth I_p, ..., sdepth I_{q-1},
/// sdepth I_q + 1), evaluated recursively with the principal case (sdepth = n)
/// as base. Requires a nonzero ideal.
int lower_bound_recursive(const MonomialIdeal& ideal, const SearchBudget& budget = {});

/// Krull dimension, improved to n - 1 when J = 0 and I is not principal.
int upper_bound(const QuotientPair& pair);

struct StrippedPair {
  QuotientPair pair;
  /// Original indices of the surviving variables, ascending.
  std::vector<int> kept_vars;
  int removed = 0;
};

/// Removes variables occurring in no generator of I or J. Both depths of the
/// original module equal the reduced value plus the number removed.
StrippedPair strip_free_variables(const QuotientPair& pair);

/// One singleton interval per point, in linear-extension order (always a valid
/// ordered partition).
Partition singleton_partition(const CharacteristicPoset& poset);

}  // namespace stanley
