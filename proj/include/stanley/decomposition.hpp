#pragma once

#include <vector>

#include "stanley/poset.hpp"

namespace stanley {

/// Closed interval [bottom, top] of poset points, stored as indices into the
/// linear extension.
struct Interval {
  int bottom = 0;
  int top = 0;
  bool operator==(const Interval&) const = default;
};

/// Ordered list of pairwise disjoint intervals covering the poset.
using Partition = std::vector<Interval>;

/// Stanley space x^u K[Z]: all multiples of x^u by monomials in the variables
/// of Z. Its dimension is |Z|.
struct StanleySpace {
  Exponent generator;
  DynBitset free_vars;  // width nvars
  bool operator==(const StanleySpace&) const = default;
};

struct StanleyDecomposition {
  QuotientPair pair;
  std::vector<StanleySpace> spaces;
};

/// x^e lies in x^u K[Z]: e >= u and e agrees with u outside Z.
bool space_contains(const StanleySpace& space, const Exponent& e);

/// Checks pairwise disjointness and full coverage; throws std::invalid_argument
/// otherwise.
void validate_partition(const CharacteristicPoset& poset, const Partition& part);

/// The Stanley spaces contributed by one interval [c, d]: x^e K[Z_d] for every
/// member e fixed at c on Z_d, i.e. the coordinates outside Z_d range over
/// [c, d] and the ones inside stay at the bottom. Emitted in decreasing total
/// degree of the generator.
std::vector<StanleySpace> interval_spaces(const CharacteristicPoset& poset,
                                          const Interval& interval);

/// Stanley decomposition induced by a partition; its sdepth is
/// min rho(top) over the intervals (see stats()).
StanleyDecomposition decomposition_from_partition(const CharacteristicPoset& poset,
                                                  const Partition& part);

/// Partition induced by a valid decomposition: each poset point b is assigned
/// the interval [c, d] where x^c K[Z] is the unique space containing x^b and
/// d raises c to g on Z. Duplicates are removed by exact endpoint equality.
/// Throws std::invalid_argument when some point is covered 0 or >= 2 times.
Partition partition_from_decomposition(const StanleyDecomposition& decomposition,
                                       const CharacteristicPoset& poset);

struct VerifyResult {
  bool valid = true;
  Exponent counterexample;  // first offending exponent when invalid
  int cover_count = 0;      // number of spaces containing it
  bool in_module = false;   // whether it lies in I \ J
};

/// Complete finite check that the spaces tile I \ J exactly: every exponent in
/// the box [0, g'+1] (g' = join of the canonical g and all space generators)
/// must be covered once if it lies in I \ J and never otherwise. Truncation at
/// g'+1 determines every membership predicate involved, so the box decides.
VerifyResult verify_decomposition(const StanleyDecomposition& decomposition);

/// True iff every prefix union of the intervals, in stored order, is a
/// down-set. Such partitions induce prime filtrations.
bool is_ordered_partition(const CharacteristicPoset& poset, const Partition& part);

/// The explicit partition of the poset of a 3-generator monomial complete
/// intersection that uses every variable, built with the canonical g: three
/// telescoping families of intervals with tops g - e_k, plus [g, g]. Valid
/// with min rho(top) = n - 1. Requires the poset of (I, 0) at canonical g.
Partition mci_partition(const CharacteristicPoset& poset);

struct DecompositionStats {
  int sdepth = 0;             // min |Z| over spaces / min rho(top) over intervals
  int max_bottom_degree = 0;  // max |generator| / max |bottom|
};

DecompositionStats stats(const StanleyDecomposition& decomposition);
DecompositionStats stats(const CharacteristicPoset& poset, const Partition& part);

}  // namespace stanley
