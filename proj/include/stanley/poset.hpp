#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "stanley/bitset.hpp"
#include "stanley/exponent.hpp"
#include "stanley/ideal.hpp"

namespace stanley {

/// Join of all generators of I and J: the admissible bound for which the
/// characteristic poset has the fewest elements.
Exponent canonical_g(const QuotientPair& pair);

/// The characteristic poset of I/J with respect to g: all c <= g with
/// x^c in I \ J, under the componentwise order. Points are listed in a fixed
/// linear extension (total degree, then lex). Each point carries
/// rho(c) = #{j : c(j) = g(j)} and the variable set where it meets g.
///
/// The pairwise order bitsets are built lazily on first use, so large posets
/// that are only enumerated (never searched) stay cheap.
class CharacteristicPoset {
 public:
  explicit CharacteristicPoset(const QuotientPair& pair,
                               std::optional<Exponent> g = std::nullopt);

  CharacteristicPoset(const CharacteristicPoset&) = delete;
  CharacteristicPoset& operator=(const CharacteristicPoset&) = delete;

  int size() const { return static_cast<int>(points_.size()); }
  int nvars() const { return pair_.nvars(); }
  const QuotientPair& pair() const { return pair_; }
  const Exponent& g() const { return g_; }

  const Exponent& point(int i) const { return points_[i]; }
  const std::vector<Exponent>& points() const { return points_; }
  /// Position of c in the linear extension, or -1.
  int index_of(const Exponent& c) const;

  int rho(int i) const { return rho_[i]; }
  const DynBitset& zset(int i) const { return zset_[i]; }
  int min_rho() const { return min_rho_; }
  int max_rho() const { return max_rho_; }

  bool leq_points(int i, int j) const { return leq(points_[i], points_[j]); }

  /// Points above / below i (inclusive), as bitsets over point indices.
  const DynBitset& up_set(int i) const;
  const DynBitset& down_set(int i) const;

  /// Members of [bottom, top] as a bitset; bottom <= top required.
  DynBitset interval_members(int bottom, int top) const;
  /// Same set as indices, computed by walking the coordinate box between the
  /// endpoints (valid because the poset is order-convex); does not touch the
  /// order bitsets.
  std::vector<int> interval_points(int bottom, int top) const;

  bool is_down_set(const DynBitset& s) const;
  /// Minimal elements of the complement of covered.
  std::vector<int> minimal_uncovered(const DynBitset& covered) const;

 private:
  void ensure_relations() const;

  QuotientPair pair_;
  Exponent g_;
  std::vector<Exponent> points_;
  std::vector<int> rho_;
  std::vector<DynBitset> zset_;
  int min_rho_ = 0;
  int max_rho_ = 0;

  mutable std::once_flag relations_once_;
  mutable std::vector<DynBitset> up_, down_;
};

using PosetPtr = std::shared_ptr<const CharacteristicPoset>;

}  // namespace stanley
