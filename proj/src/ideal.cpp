#include "stanley/ideal.hpp"

#include <algorithm>
#include <climits>
#include <string>

namespace stanley {

namespace {

// Degree first, then descending lex, so generators list the way they are
// conventionally written (x1 before x2, x1^2 before x1*x2).
bool generator_order(const Exponent& a, const Exponent& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Exponent> generators)
    : nvars_(nvars) {
  if (nvars < 0) throw std::invalid_argument("variable count must be nonnegative");
  for (const auto& e : generators) {
    if (static_cast<int>(e.size()) != nvars)
      throw std::invalid_argument("generator length does not match variable count");
    for (int v : e)
      if (v < 0) throw std::invalid_argument("exponents must be nonnegative");
  }
  std::sort(generators.begin(), generators.end(), generator_order);
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  // A divisor has smaller or equal degree, so scanning in degree order and
  // testing only the kept ones is enough.
  for (const auto& e : generators) {
    bool dominated = false;
    for (const auto& kept : gens_) {
      if (leq(kept, e)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) gens_.push_back(e);
  }
}

bool MonomialIdeal::contains(const Exponent& e) const {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("exponent length does not match variable count");
  for (const auto& a : gens_)
    if (leq(a, e)) return true;
  return false;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Exponent& u) {
  if (static_cast<int>(u.size()) != ideal.nvars())
    throw std::invalid_argument("exponent length does not match variable count");
  std::vector<Exponent> gens;
  gens.reserve(ideal.gens().size());
  for (const auto& a : ideal.gens()) {
    Exponent c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i] - u[i], 0);
    gens.push_back(std::move(c));
  }
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

LinearQuotients linear_quotients_check(int nvars,
                                       const std::vector<Exponent>& ordered_gens) {
  if (ordered_gens.empty())
    throw std::invalid_argument("linear quotients check needs a nonempty sequence");
  LinearQuotients result;
  result.variable_sets.push_back({});  // (0) : u_1 is the zero ideal
  for (std::size_t i = 1; i < ordered_gens.size(); ++i) {
    MonomialIdeal prefix(nvars, std::vector<Exponent>(ordered_gens.begin(),
                                                      ordered_gens.begin() + i));
    MonomialIdeal quot = colon(prefix, ordered_gens[i]);
    std::vector<int> vars;
    for (const auto& g : quot.gens()) {
      if (total_degree(g) != 1) {
        result.ok = false;
        result.failed_index = static_cast<int>(i);
        return result;
      }
      vars.push_back(static_cast<int>(
          std::find(g.begin(), g.end(), 1) - g.begin()));
    }
    std::sort(vars.begin(), vars.end());
    result.variable_sets.push_back(std::move(vars));
  }
  result.ok = true;
  return result;
}

namespace {

void require_nonzero(const MonomialIdeal& ideal, const char* op) {
  if (ideal.is_zero())
    throw std::invalid_argument(std::string(op) + " is undefined for the zero ideal");
}

}  // namespace

bool is_principal(const MonomialIdeal& ideal) {
  require_nonzero(ideal, "is_principal");
  return ideal.gens().size() == 1;
}

bool is_complete_intersection(const MonomialIdeal& ideal) {
  require_nonzero(ideal, "is_complete_intersection");
  std::vector<int> used(ideal.nvars(), 0);
  for (const auto& g : ideal.gens())
    for (int j = 0; j < ideal.nvars(); ++j)
      if (g[j] > 0 && ++used[j] > 1) return false;
  return true;
}

MonomialIdeal slice(const MonomialIdeal& ideal, int last_var_degree) {
  require_nonzero(ideal, "slice");
  if (ideal.nvars() < 1)
    throw std::invalid_argument("slice needs at least one variable");
  int p = INT_MAX, q = 0;
  for (const auto& a : ideal.gens()) {
    p = std::min(p, a.back());
    q = std::max(q, a.back());
  }
  if (last_var_degree < p || last_var_degree > q)
    throw std::invalid_argument("slice degree out of range");
  std::vector<Exponent> gens;
  for (const auto& a : ideal.gens())
    if (a.back() <= last_var_degree)
      gens.emplace_back(a.begin(), a.end() - 1);
  return MonomialIdeal(ideal.nvars() - 1, std::move(gens));
}

MonomialIdeal saturate_variable(const MonomialIdeal& ideal, int var) {
  if (var < 0 || var >= ideal.nvars())
    throw std::invalid_argument("variable index out of range");
  std::vector<Exponent> gens = ideal.gens();
  for (auto& a : gens) a[var] = 0;
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

bool is_borel_type(const MonomialIdeal& ideal) {
  require_nonzero(ideal, "is_borel_type");
  int bound = 0;
  for (const auto& a : ideal.gens()) bound += total_degree(a);
  for (const auto& u : ideal.gens()) {
    for (int i = 0; i < ideal.nvars(); ++i) {
      if (u[i] == 0) continue;
      Exponent v = u;
      v[i] = 0;  // u / x_i^s with s the full x_i-degree
      for (int j = 0; j < i; ++j) {
        Exponent w = v;
        w[j] += bound;
        if (!ideal.contains(w)) return false;
      }
    }
  }
  return true;
}

namespace {

/// Largest variable index (1-based) occurring in the generators; 0 for the
/// unit ideal.
int max_used_var(const MonomialIdeal& ideal) {
  int m = 0;
  for (const auto& a : ideal.gens())
    for (int j = ideal.nvars() - 1; j >= 0; --j)
      if (a[j] > 0) {
        m = std::max(m, j + 1);
        break;
      }
  return m;
}

}  // namespace

BorelDepth borel_depth(const MonomialIdeal& ideal) {
  if (ideal.is_unit())
    throw std::invalid_argument("borel_depth is undefined for the unit ideal");
  if (!is_borel_type(ideal))
    throw std::invalid_argument("borel_depth requires a Borel-type ideal");
  int n = ideal.nvars();
  int m = max_used_var(ideal);
  BorelDepth result;
  result.depth_quotient = n - m;
  result.depth_ideal = n - m + 1;
  MonomialIdeal cur = ideal;
  result.chain.push_back(cur);
  while (!cur.is_unit()) {
    cur = saturate_variable(cur, max_used_var(cur) - 1);
    result.chain.push_back(cur);
  }
  return result;
}

int ci_depth(const MonomialIdeal& ideal) {
  if (!is_complete_intersection(ideal))
    throw std::invalid_argument("ci_depth requires a monomial complete intersection");
  return ideal.nvars() - static_cast<int>(ideal.gens().size()) + 1;
}

QuotientPair::QuotientPair(MonomialIdeal numerator, MonomialIdeal denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (numerator_.nvars() != denominator_.nvars())
    throw std::invalid_argument("I and J must live in the same ring");
  for (const auto& b : denominator_.gens())
    if (!numerator_.contains(b))
      throw std::invalid_argument("J is not contained in I");
  if (numerator_.gens() == denominator_.gens()) throw EmptyModuleError();
}

}  // namespace stanley
