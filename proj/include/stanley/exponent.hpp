#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <numeric>
#include <vector>

namespace stanley {

/// Exponent vector of a monomial in n variables; also serves as a point of N^n.
using Exponent = std::vector<int>;

/// Componentwise a <= b; equivalently x^a divides x^b.
inline bool leq(const Exponent& a, const Exponent& b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponent meet(const Exponent& a, const Exponent& b) {
  assert(a.size() == b.size());
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

inline Exponent join(const Exponent& a, const Exponent& b) {
  assert(a.size() == b.size());
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline int total_degree(const Exponent& a) {
  return std::accumulate(a.begin(), a.end(), 0);
}

/// Total degree first, then lexicographic. This refines the componentwise
/// order, so it is the linear extension used to list poset points.
inline bool degree_lex_less(const Exponent& a, const Exponent& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Visits every e with lo <= e <= hi componentwise, in lexicographic order.
template <typename F>
void for_each_in_box(const Exponent& lo, const Exponent& hi, F&& f) {
  assert(lo.size() == hi.size());
  if (!leq(lo, hi)) return;
  Exponent e = lo;
  for (;;) {
    f(static_cast<const Exponent&>(e));
    int j = static_cast<int>(e.size()) - 1;
    while (j >= 0 && e[j] == hi[j]) {
      e[j] = lo[j];
      --j;
    }
    if (j < 0) return;
    ++e[j];
  }
}

}  // namespace stanley
