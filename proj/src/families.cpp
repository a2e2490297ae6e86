#include "stanley/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace stanley {

namespace {

std::vector<Exponent> squarefree_of_degree(int n, int d) {
  std::vector<Exponent> out;
  std::vector<int> pick(d);
  for (int i = 0; i < d; ++i) pick[i] = i;
  for (;;) {
    Exponent e(n, 0);
    for (int v : pick) e[v] = 1;
    out.push_back(std::move(e));
    int i = d - 1;
    while (i >= 0 && pick[i] == n - d + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

Exponent squarefree(int n, std::initializer_list<int> vars_1based) {
  Exponent e(n, 0);
  for (int v : vars_1based) e[v - 1] = 1;
  return e;
}

void expect_params(const FamilySpec& spec, std::size_t count) {
  if (spec.params.size() != count)
    throw std::invalid_argument("family '" + spec.name + "' takes " +
                                std::to_string(count) + " parameter(s)");
}

}  // namespace

QuotientPair instantiate(const FamilySpec& spec) {
  if (spec.name == "maximal") {
    expect_params(spec, 1);
    int n = spec.params[0];
    if (n < 1 || n > 1024) throw std::invalid_argument("maximal needs 1 <= n <= 1024");
    return QuotientPair(MonomialIdeal(n, squarefree_of_degree(n, 1)),
                        MonomialIdeal::zero(n));
  }
  if (spec.name == "skeleton") {
    expect_params(spec, 2);
    int n = spec.params[0], d = spec.params[1];
    if (n < 1 || d < 1 || d > n || n > 1024)
      throw std::invalid_argument("skeleton needs 1 <= d <= n <= 1024");
    double count = 1;
    for (int i = 1; i <= d; ++i) count = count * (n - d + i) / i;
    if (count > 2'000'000)
      throw std::invalid_argument("skeleton would have too many generators");
    return QuotientPair(MonomialIdeal(n, squarefree_of_degree(n, d)),
                        MonomialIdeal::zero(n));
  }
  if (spec.name == "figure1") {
    expect_params(spec, 0);
    return QuotientPair(MonomialIdeal(2, {{1, 3}, {3, 1}}), MonomialIdeal::zero(2));
  }
  if (spec.name == "figure4") {
    expect_params(spec, 0);
    return QuotientPair(MonomialIdeal(2, {{2, 4}, {3, 3}, {5, 1}}),
                        MonomialIdeal(2, {{4, 5}, {6, 2}}));
  }
  if (spec.name == "rp2") {
    expect_params(spec, 0);
    // Fixed generator list (not regenerated) so tests pin the exact data.
    std::vector<Exponent> gens = {
        squarefree(6, {1, 2, 3}), squarefree(6, {1, 2, 4}), squarefree(6, {1, 3, 5}),
        squarefree(6, {1, 4, 6}), squarefree(6, {1, 5, 6}), squarefree(6, {2, 3, 6}),
        squarefree(6, {2, 4, 5}), squarefree(6, {2, 5, 6}), squarefree(6, {3, 4, 5}),
        squarefree(6, {3, 4, 6}),
    };
    return QuotientPair(MonomialIdeal(6, std::move(gens)), MonomialIdeal::zero(6));
  }
  if (spec.name == "delta-12-34") {
    expect_params(spec, 0);
    std::vector<Exponent> gens = {
        squarefree(4, {1, 3}), squarefree(4, {1, 4}),
        squarefree(4, {2, 3}), squarefree(4, {2, 4}),
    };
    return QuotientPair(MonomialIdeal::unit(4), MonomialIdeal(4, std::move(gens)));
  }
  throw std::invalid_argument("unknown family '" + spec.name + "'");
}

MonomialIdeal stanley_reisner(int nvars, const std::vector<std::vector<int>>& facets) {
  if (nvars < 1 || nvars > 24)
    throw std::invalid_argument("stanley_reisner supports 1 <= n <= 24");
  std::vector<unsigned> facet_masks;
  for (const auto& f : facets) {
    unsigned mask = 0;
    for (int v : f) {
      if (v < 0 || v >= nvars) throw std::invalid_argument("facet vertex out of range");
      mask |= 1u << v;
    }
    facet_masks.push_back(mask);
  }
  for (std::size_t i = 0; i < facet_masks.size(); ++i)
    for (std::size_t j = 0; j < facet_masks.size(); ++j)
      if (i != j && (facet_masks[i] & facet_masks[j]) == facet_masks[i])
        throw std::invalid_argument("facets must not be nested");

  std::vector<Exponent> nonfaces;
  for (unsigned s = 0; s < (1u << nvars); ++s) {
    bool face = false;
    for (unsigned f : facet_masks)
      if ((s & f) == s) {
        face = true;
        break;
      }
    if (face) continue;
    Exponent e(nvars, 0);
    for (int v = 0; v < nvars; ++v)
      if (s & (1u << v)) e[v] = 1;
    nonfaces.push_back(std::move(e));
  }
  return MonomialIdeal(nvars, std::move(nonfaces));
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "maximal", "skeleton", "figure1", "figure4", "rp2", "delta-12-34"};
  return names;
}

}  // namespace stanley
