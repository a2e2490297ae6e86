#pragma once

#include <stdexcept>
#include <vector>

#include "stanley/exponent.hpp"

namespace stanley {

/// Monomial ideal, held as its minimal generating set. Construction removes
/// divisible generators and sorts, so equal ideals compare equal. The empty
/// set of generators is the zero ideal; the single zero vector is the unit
/// ideal.
class MonomialIdeal {
 public:
  MonomialIdeal(int nvars, std::vector<Exponent> generators);

  static MonomialIdeal zero(int nvars) { return MonomialIdeal(nvars, {}); }
  static MonomialIdeal unit(int nvars) {
    return MonomialIdeal(nvars, {Exponent(nvars, 0)});
  }

  int nvars() const { return nvars_; }
  const std::vector<Exponent>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const {
    return gens_.size() == 1 && total_degree(gens_.front()) == 0;
  }

  /// Divisibility membership: some generator a has a <= e.
  bool contains(const Exponent& e) const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  int nvars_ = 0;
  std::vector<Exponent> gens_;  // minimal, degree-lex sorted
};

/// I : x^u, generated by a - (a /\ u) over the generators of I.
MonomialIdeal colon(const MonomialIdeal& ideal, const Exponent& u);

struct LinearQuotients {
  bool ok = false;
  /// 0-based position of the first generator whose colon by the preceding
  /// ones is not generated by variables; -1 when ok.
  int failed_index = -1;
  /// Per position, the 0-based variables generating the colon ideal (empty
  /// zero ideal at position 0). Filled up to the failure point.
  std::vector<std::vector<int>> variable_sets;
};

/// Tests whether the given generator order has linear quotients, i.e. each
/// (u_1,...,u_{i-1}) : u_i is generated by a subset of the variables.
LinearQuotients linear_quotients_check(int nvars,
                                       const std::vector<Exponent>& ordered_gens);

bool is_principal(const MonomialIdeal& ideal);

/// Monomial complete intersection: minimal generators have pairwise disjoint
/// supports.
bool is_complete_intersection(const MonomialIdeal& ideal);

/// The ideal I_j of K[x_1..x_{n-1}] with I /\ x_n^j K[x_1..x_{n-1}] = x_n^j I_j:
/// generators whose last exponent is <= j, truncated to the first n-1
/// coordinates. Requires p <= j <= q where p/q are the min/max last exponents
/// over the generators.
MonomialIdeal slice(const MonomialIdeal& ideal, int last_var_degree);

/// I : x_var^infinity — zero out the exponent of one variable everywhere.
MonomialIdeal saturate_variable(const MonomialIdeal& ideal, int var);

/// Borel type: for every generator u, every i with s = deg_{x_i} u > 0 and
/// every j < i, some power x_j^t (u / x_i^s) lies in I. Checked on minimal
/// generators only (the standard reduction); membership is monotone in t, so
/// a single test at t = sum of generator degrees decides.
bool is_borel_type(const MonomialIdeal& ideal);

struct BorelDepth {
  int depth_quotient = 0;  // depth S/I
  int depth_ideal = 0;     // depth I
  /// Saturation chain I = chain[0] < chain[1] < ... < unit, each step
  /// saturating at the largest variable occurring in the previous ideal.
  std::vector<MonomialIdeal> chain;
};

/// Depth of a Borel-type ideal and its quotient from the saturation chain:
/// depth S/I = n - m(I), depth I = n - m(I) + 1, where m(I) is the largest
/// variable index occurring in the generators.
BorelDepth borel_depth(const MonomialIdeal& ideal);

/// depth I = n - r + 1 for a monomial complete intersection with r generators.
int ci_depth(const MonomialIdeal& ideal);

/// Thrown when I = J: the quotient is the zero module, which has no depth
/// invariants; callers report it as a distinguished outcome.
class EmptyModuleError : public std::runtime_error {
 public:
  EmptyModuleError() : std::runtime_error("I equals J: the quotient module is zero") {}
};

/// Quotient I/J of monomial ideals over the same ring, with J contained in I
/// and I != J. S/J is represented as (unit ideal, J).
class QuotientPair {
 public:
  QuotientPair(MonomialIdeal numerator, MonomialIdeal denominator);

  int nvars() const { return numerator_.nvars(); }
  const MonomialIdeal& numerator() const { return numerator_; }
  const MonomialIdeal& denominator() const { return denominator_; }

  /// x^e lies in I \ J.
  bool in_module(const Exponent& e) const {
    return numerator_.contains(e) && !denominator_.contains(e);
  }

  bool operator==(const QuotientPair&) const = default;

 private:
  MonomialIdeal numerator_;
  MonomialIdeal denominator_;
};

}  // namespace stanley
