#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "stanley/decomposition.hpp"
#include "stanley/poset.hpp"
#include "stanley/search.hpp"

namespace stanley::testing {

inline Exponent random_exponent(std::mt19937& rng, int n, int max_exp) {
  std::uniform_int_distribution<int> d(0, max_exp);
  Exponent e(n);
  for (auto& v : e) v = d(rng);
  return e;
}

/// Random proper nonzero ideal (no unit generator).
inline MonomialIdeal random_ideal(std::mt19937& rng, int n, int max_gens, int max_exp) {
  std::uniform_int_distribution<int> count(1, max_gens);
  int m = count(rng);
  std::vector<Exponent> gens;
  for (int i = 0; i < m; ++i) {
    Exponent e = random_exponent(rng, n, max_exp);
    if (total_degree(e) == 0) e[rng() % n] = 1;
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(n, std::move(gens));
}

/// Random pair with J = 0 or J a random proper subideal of I.
inline QuotientPair random_pair(std::mt19937& rng, int max_n, int max_exp,
                                int max_gens, bool allow_j) {
  std::uniform_int_distribution<int> nd(1, max_n);
  for (;;) {
    int n = nd(rng);
    MonomialIdeal ideal = random_ideal(rng, n, max_gens, max_exp);
    MonomialIdeal sub = MonomialIdeal::zero(n);
    if (allow_j && rng() % 2) {
      std::vector<Exponent> jg;
      for (const auto& a : ideal.gens()) {
        if (rng() % 2) continue;
        Exponent b = a;
        for (int t = 0; t < n; ++t) b[t] += static_cast<int>(rng() % 2);
        jg.push_back(std::move(b));
      }
      sub = MonomialIdeal(n, std::move(jg));
    }
    try {
      return QuotientPair(std::move(ideal), std::move(sub));
    } catch (const EmptyModuleError&) {
      continue;
    }
  }
}

inline std::vector<int> interval_candidates(const CharacteristicPoset& poset, int c,
                                            const DynBitset& unc) {
  std::vector<int> tops;
  DynBitset cand = poset.up_set(c);
  cand &= unc;
  for (int d = cand.find_first(); d != -1; d = cand.find_next(d))
    if (DynBitset::and_subset_of(poset.up_set(c), poset.down_set(d), unc))
      tops.push_back(d);
  return tops;
}

/// Greedy random partition: repeatedly cover the first uncovered point with a
/// random admissible interval ([c, c] is always available, so this terminates).
inline Partition random_partition(std::mt19937& rng, const CharacteristicPoset& poset) {
  DynBitset covered(poset.size());
  Partition part;
  int count = 0;
  while (count < poset.size()) {
    DynBitset unc = covered.complement();
    int c = unc.find_first();
    auto tops = interval_candidates(poset, c, unc);
    int d = tops[rng() % tops.size()];
    part.push_back({c, d});
    DynBitset members = poset.up_set(c);
    members &= poset.down_set(d);
    covered |= members;
    count += members.count();
  }
  return part;
}

/// Random ordered partition: random minimal uncovered bottom, random top that
/// keeps the covered set downward closed (the singleton always does).
inline Partition random_ordered_partition(std::mt19937& rng,
                                          const CharacteristicPoset& poset) {
  DynBitset covered(poset.size());
  Partition part;
  int count = 0;
  while (count < poset.size()) {
    auto mins = poset.minimal_uncovered(covered);
    int c = mins[rng() % mins.size()];
    DynBitset unc = covered.complement();
    std::vector<int> tops;
    for (int d : interval_candidates(poset, c, unc)) {
      DynBitset members = poset.up_set(c);
      members &= poset.down_set(d);
      DynBitset next = covered;
      next |= members;
      bool closed = true;
      for (int q = members.find_first(); q != -1 && closed; q = members.find_next(q))
        closed = poset.down_set(q).is_subset_of(next);
      if (closed) tops.push_back(d);
    }
    int d = tops[rng() % tops.size()];
    part.push_back({c, d});
    DynBitset members = poset.up_set(c);
    members &= poset.down_set(d);
    covered |= members;
    count += members.count();
  }
  return part;
}

inline DynBitset varset(int n, std::initializer_list<int> vars_1based) {
  DynBitset z(n);
  for (int v : vars_1based) z.set(v - 1);
  return z;
}

inline StanleySpace space(Exponent u, std::initializer_list<int> vars_1based) {
  int n = static_cast<int>(u.size());
  return {std::move(u), varset(n, vars_1based)};
}

template <typename T>
bool same_set(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    auto cnt = [&](const std::vector<T>& v) {
      return std::count(v.begin(), v.end(), x);
    };
    if (cnt(a) != cnt(b)) return false;
  }
  return true;
}

}  // namespace stanley::testing
