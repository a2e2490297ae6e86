#include "stanley/poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace stanley {

Exponent canonical_g(const QuotientPair& pair) {
  Exponent g(pair.nvars(), 0);
  for (const auto& a : pair.numerator().gens()) g = join(g, a);
  for (const auto& b : pair.denominator().gens()) g = join(g, b);
  return g;
}

CharacteristicPoset::CharacteristicPoset(const QuotientPair& pair,
                                         std::optional<Exponent> g)
    : pair_(pair) {
  g_ = g ? std::move(*g) : canonical_g(pair);
  if (static_cast<int>(g_.size()) != pair.nvars())
    throw std::invalid_argument("g length does not match variable count");
  for (int v : g_)
    if (v < 0) throw std::invalid_argument("g must be nonnegative");
  for (const auto& a : pair.numerator().gens())
    if (!leq(a, g_)) throw std::invalid_argument("g is not admissible: a generator of I exceeds it");
  for (const auto& b : pair.denominator().gens())
    if (!leq(b, g_)) throw std::invalid_argument("g is not admissible: a generator of J exceeds it");

  constexpr long long kMaxCells = 200'000'000;
  long long cells = 1;
  for (int v : g_) {
    if (cells > kMaxCells / (v + 1LL))
      throw std::invalid_argument("the coordinate box for g is too large to enumerate");
    cells *= v + 1LL;
  }

  Exponent lo(pair.nvars(), 0);
  for_each_in_box(lo, g_, [&](const Exponent& e) {
    if (pair_.in_module(e)) points_.push_back(e);
  });
  std::sort(points_.begin(), points_.end(), degree_lex_less);

  int n = pair.nvars();
  rho_.reserve(points_.size());
  zset_.reserve(points_.size());
  for (const auto& c : points_) {
    DynBitset z(n);
    for (int j = 0; j < n; ++j)
      if (c[j] == g_[j]) z.set(j);
    rho_.push_back(z.count());
    zset_.push_back(std::move(z));
  }
  min_rho_ = max_rho_ = points_.empty() ? 0 : rho_[0];
  for (int r : rho_) {
    min_rho_ = std::min(min_rho_, r);
    max_rho_ = std::max(max_rho_, r);
  }
}

int CharacteristicPoset::index_of(const Exponent& c) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), c, degree_lex_less);
  if (it == points_.end() || *it != c) return -1;
  return static_cast<int>(it - points_.begin());
}

void CharacteristicPoset::ensure_relations() const {
  std::call_once(relations_once_, [this] {
    int n = size();
    up_.assign(n, DynBitset(n));
    down_.assign(n, DynBitset(n));
    for (int i = 0; i < n; ++i) {
      up_[i].set(i);
      down_[i].set(i);
      // c < d forces |c| < |d|, so comparable pairs respect the list order.
      for (int j = i + 1; j < n; ++j) {
        if (leq(points_[i], points_[j])) {
          up_[i].set(j);
          down_[j].set(i);
        }
      }
    }
  });
}

const DynBitset& CharacteristicPoset::up_set(int i) const {
  ensure_relations();
  return up_[i];
}

const DynBitset& CharacteristicPoset::down_set(int i) const {
  ensure_relations();
  return down_[i];
}

DynBitset CharacteristicPoset::interval_members(int bottom, int top) const {
  if (!leq_points(bottom, top))
    throw std::invalid_argument("interval endpoints are not comparable");
  DynBitset r = up_set(bottom);
  r &= down_set(top);
  return r;
}

std::vector<int> CharacteristicPoset::interval_points(int bottom, int top) const {
  if (!leq_points(bottom, top))
    throw std::invalid_argument("interval endpoints are not comparable");
  std::vector<int> out;
  for_each_in_box(points_[bottom], points_[top], [&](const Exponent& e) {
    int idx = index_of(e);
    // Order-convexity: everything between two poset points is a poset point.
    if (idx < 0) throw std::logic_error("interval left the poset");
    out.push_back(idx);
  });
  return out;
}

bool CharacteristicPoset::is_down_set(const DynBitset& s) const {
  ensure_relations();
  for (int i = s.find_first(); i != -1; i = s.find_next(i))
    if (!down_[i].is_subset_of(s)) return false;
  return true;
}

std::vector<int> CharacteristicPoset::minimal_uncovered(const DynBitset& covered) const {
  ensure_relations();
  DynBitset unc = covered.complement();
  std::vector<int> out;
  for (int i = unc.find_first(); i != -1; i = unc.find_next(i))
    if (DynBitset::count_and(down_[i], unc) == 1) out.push_back(i);
  return out;
}

}  // namespace stanley
