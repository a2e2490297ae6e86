#include "stanley/decomposition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stanley {

bool space_contains(const StanleySpace& space, const Exponent& e) {
  const Exponent& u = space.generator;
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (e[j] < u[j]) return false;
    if (e[j] != u[j] && !space.free_vars.test(static_cast<int>(j))) return false;
  }
  return true;
}

void validate_partition(const CharacteristicPoset& poset, const Partition& part) {
  DynBitset covered(poset.size());
  for (const auto& iv : part) {
    if (iv.bottom < 0 || iv.bottom >= poset.size() || iv.top < 0 ||
        iv.top >= poset.size())
      throw std::invalid_argument("interval endpoint out of range");
    if (!poset.leq_points(iv.bottom, iv.top))
      throw std::invalid_argument("interval endpoints are not comparable");
    for (int idx : poset.interval_points(iv.bottom, iv.top)) {
      if (covered.test(idx))
        throw std::invalid_argument("intervals are not pairwise disjoint");
      covered.set(idx);
    }
  }
  if (covered.count() != poset.size())
    throw std::invalid_argument("intervals do not cover the poset");
}

std::vector<StanleySpace> interval_spaces(const CharacteristicPoset& poset,
                                          const Interval& interval) {
  const Exponent& c = poset.point(interval.bottom);
  const Exponent& d = poset.point(interval.top);
  const DynBitset& z = poset.zset(interval.top);
  Exponent hi(c.size());
  for (std::size_t j = 0; j < c.size(); ++j)
    hi[j] = z.test(static_cast<int>(j)) ? c[j] : d[j];
  std::vector<StanleySpace> spaces;
  for_each_in_box(c, hi, [&](const Exponent& e) {
    spaces.push_back({e, z});
  });
  std::sort(spaces.begin(), spaces.end(),
            [](const StanleySpace& a, const StanleySpace& b) {
              return degree_lex_less(b.generator, a.generator);
            });
  return spaces;
}

StanleyDecomposition decomposition_from_partition(const CharacteristicPoset& poset,
                                                  const Partition& part) {
  validate_partition(poset, part);
  StanleyDecomposition d{poset.pair(), {}};
  for (const auto& iv : part) {
    auto spaces = interval_spaces(poset, iv);
    d.spaces.insert(d.spaces.end(), spaces.begin(), spaces.end());
  }
  return d;
}

Partition partition_from_decomposition(const StanleyDecomposition& decomposition,
                                       const CharacteristicPoset& poset) {
  if (decomposition.pair.nvars() != poset.nvars())
    throw std::invalid_argument("decomposition and poset live in different rings");
  Partition part;
  for (int b = 0; b < poset.size(); ++b) {
    const Exponent& pb = poset.point(b);
    int found = -1, count = 0;
    for (std::size_t s = 0; s < decomposition.spaces.size(); ++s) {
      if (space_contains(decomposition.spaces[s], pb)) {
        ++count;
        if (found < 0) found = static_cast<int>(s);
      }
    }
    if (count != 1)
      throw std::invalid_argument("not a decomposition: point covered " +
                                  std::to_string(count) + " times");
    const StanleySpace& space = decomposition.spaces[found];
    Exponent d = space.generator;
    for (std::size_t j = 0; j < d.size(); ++j)
      if (space.free_vars.test(static_cast<int>(j))) d[j] = poset.g()[j];
    int bi = poset.index_of(space.generator);
    int ti = poset.index_of(d);
    if (bi < 0 || ti < 0)
      throw std::invalid_argument("not a decomposition of this module");
    Interval iv{bi, ti};
    if (std::find(part.begin(), part.end(), iv) == part.end()) part.push_back(iv);
  }
  return part;
}

VerifyResult verify_decomposition(const StanleyDecomposition& decomposition) {
  const QuotientPair& pair = decomposition.pair;
  Exponent gprime = canonical_g(pair);
  for (const auto& s : decomposition.spaces) {
    if (static_cast<int>(s.generator.size()) != pair.nvars())
      throw std::invalid_argument("space generator length mismatch");
    gprime = join(gprime, s.generator);
  }
  Exponent hi = gprime;
  for (int& v : hi) ++v;

  VerifyResult result;
  Exponent e(pair.nvars(), 0);
  for (;;) {
    int count = 0;
    for (const auto& s : decomposition.spaces)
      if (space_contains(s, e)) ++count;
    bool inside = pair.in_module(e);
    if (count != (inside ? 1 : 0)) {
      result.valid = false;
      result.counterexample = e;
      result.cover_count = count;
      result.in_module = inside;
      return result;
    }
    int j = static_cast<int>(e.size()) - 1;
    while (j >= 0 && e[j] == hi[j]) {
      e[j] = 0;
      --j;
    }
    if (j < 0) break;
    ++e[j];
  }
  return result;
}

bool is_ordered_partition(const CharacteristicPoset& poset, const Partition& part) {
  validate_partition(poset, part);
  DynBitset covered(poset.size());
  for (const auto& iv : part) {
    covered |= poset.interval_members(iv.bottom, iv.top);
    if (!poset.is_down_set(covered)) return false;
  }
  return true;
}

Partition mci_partition(const CharacteristicPoset& poset) {
  const QuotientPair& pair = poset.pair();
  const MonomialIdeal& ideal = pair.numerator();
  if (!pair.denominator().is_zero())
    throw std::invalid_argument("mci_partition needs a plain ideal (J = 0)");
  if (ideal.gens().size() != 3 || !is_complete_intersection(ideal))
    throw std::invalid_argument(
        "mci_partition needs a complete intersection with exactly 3 generators");
  int n = ideal.nvars();
  std::vector<std::vector<int>> support(3);
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < n; ++j)
      if (ideal.gens()[k][j] > 0) support[k].push_back(j);
  if (static_cast<int>(support[0].size() + support[1].size() +
                       support[2].size()) != n)
    throw std::invalid_argument(
        "mci_partition needs every variable to occur in a generator; strip free "
        "variables first");
  Exponent a = join(join(ideal.gens()[0], ideal.gens()[1]), ideal.gens()[2]);
  if (poset.g() != a)
    throw std::invalid_argument("mci_partition needs the canonical g");

  Partition part;
  auto add_index = [&](const Exponent& bottom, const Exponent& top) {
    int bi = poset.index_of(bottom);
    int ti = poset.index_of(top);
    if (bi < 0 || ti < 0) throw std::logic_error("mci interval endpoint not in poset");
    part.push_back({bi, ti});
  };
  // Telescoping family for generator k: bottoms raise the next generator's
  // support coordinates to a one at a time, tops drop one coordinate below a.
  auto add_family = [&](int gen, int next_gen) {
    Exponent bottom = ideal.gens()[gen];
    for (int coord : support[next_gen]) {
      Exponent top = a;
      top[coord] -= 1;
      add_index(bottom, top);
      bottom[coord] = a[coord];
    }
  };
  add_family(0, 1);
  add_family(1, 2);
  add_family(2, 0);
  add_index(a, a);
  return part;
}

DecompositionStats stats(const StanleyDecomposition& decomposition) {
  if (decomposition.spaces.empty())
    throw std::invalid_argument("empty decomposition has no statistics");
  DecompositionStats st;
  st.sdepth = decomposition.spaces.front().free_vars.count();
  st.max_bottom_degree = total_degree(decomposition.spaces.front().generator);
  for (const auto& s : decomposition.spaces) {
    st.sdepth = std::min(st.sdepth, s.free_vars.count());
    st.max_bottom_degree = std::max(st.max_bottom_degree, total_degree(s.generator));
  }
  return st;
}

DecompositionStats stats(const CharacteristicPoset& poset, const Partition& part) {
  if (part.empty()) throw std::invalid_argument("empty partition has no statistics");
  DecompositionStats st;
  st.sdepth = poset.rho(part.front().top);
  st.max_bottom_degree = total_degree(poset.point(part.front().bottom));
  for (const auto& iv : part) {
    st.sdepth = std::min(st.sdepth, poset.rho(iv.top));
    st.max_bottom_degree =
        std::max(st.max_bottom_degree, total_degree(poset.point(iv.bottom)));
  }
  return st;
}

}  // namespace stanley
