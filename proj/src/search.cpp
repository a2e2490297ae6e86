#include "stanley/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>
#include <vector>

namespace stanley {

namespace {

using Clock = std::chrono::steady_clock;

struct SearchCtx {
  std::optional<Clock::time_point> deadline;
  std::uint64_t node_limit = UINT64_MAX;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> exhausted{false};

  /// False when the search must abort (budget gone or another worker stopped).
  bool tick() {
    std::uint64_t n = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (stop.load(std::memory_order_relaxed)) return false;
    if (n > node_limit) {
      exhausted.store(true);
      stop.store(true);
      return false;
    }
    if (deadline && (n & 255) == 0 && Clock::now() > *deadline) {
      exhausted.store(true);
      stop.store(true);
      return false;
    }
    return true;
  }
};

/// Sharded set of covered-state bitsets. Inserts are idempotent, so worker
/// interleaving cannot affect results.
class MemoTable {
 public:
  explicit MemoTable(std::size_t max_entries) : max_entries_(max_entries) {}

  bool contains(const DynBitset& s) const {
    const Shard& sh = shard(s);
    std::lock_guard<std::mutex> lock(sh.mu);
    return sh.set.contains(s);
  }
  void insert(const DynBitset& s) {
    if (size_.load(std::memory_order_relaxed) >= max_entries_) return;
    Shard& sh = shard(s);
    std::lock_guard<std::mutex> lock(sh.mu);
    if (sh.set.insert(s).second) size_.fetch_add(1, std::memory_order_relaxed);
  }

 private:
  static constexpr std::size_t kShards = 16;
  struct Shard {
    mutable std::mutex mu;
    std::unordered_set<DynBitset, DynBitset::Hash> set;
  };
  Shard& shard(const DynBitset& s) { return shards_[DynBitset::Hash{}(s) % kShards]; }
  const Shard& shard(const DynBitset& s) const {
    return shards_[DynBitset::Hash{}(s) % kShards];
  }

  std::size_t max_entries_;
  std::atomic<std::size_t> size_{0};
  Shard shards_[kShards];
};

struct Move {
  int bottom = 0;
  int top = 0;
  int covers = 0;  // |[bottom, top]|
};

struct SearcherBase {
  const CharacteristicPoset& P;
  int N;
  DynBitset rho_ok;  // usable tops: rho >= k
  SearchCtx& ctx;
  MemoTable* memo;
  std::vector<Interval> path;
  Partition found;

  SearcherBase(const CharacteristicPoset& p, int k, SearchCtx& c, MemoTable* m)
      : P(p), N(p.size()), rho_ok(p.size()), ctx(c), memo(m) {
    for (int i = 0; i < N; ++i)
      if (p.rho(i) >= k) rho_ok.set(i);
  }

  /// Every uncovered point must still see an eligible top among the uncovered
  /// (its own interval in any completion consists of uncovered points).
  bool tops_available(const DynBitset& unc) const {
    for (int q = unc.find_first(); q != -1; q = unc.find_next(q))
      if (!DynBitset::intersects3(P.up_set(q), rho_ok, unc)) return false;
    return true;
  }

  static void sort_moves(std::vector<Move>& moves) {
    // Largest interval first; endpoints break ties deterministically.
    std::sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) {
      if (a.covers != b.covers) return a.covers > b.covers;
      if (a.bottom != b.bottom) return a.bottom < b.bottom;
      return a.top < b.top;
    });
  }
};

/// Exact-cover branching: the interval covering the first uncovered point in
/// the linear extension must have that point as its bottom (a smaller bottom
/// would precede it and still be uncovered), so its tops enumerate the branch.
struct SdepthSearch : SearcherBase {
  using SearcherBase::SearcherBase;

  std::vector<Move> moves_at(const DynBitset& /*covered*/, const DynBitset& unc) const {
    std::vector<Move> moves;
    int c = unc.find_first();
    DynBitset cand = P.up_set(c);
    cand &= rho_ok;
    cand &= unc;
    for (int d = cand.find_first(); d != -1; d = cand.find_next(d)) {
      if (!DynBitset::and_subset_of(P.up_set(c), P.down_set(d), unc)) continue;
      moves.push_back({c, d, DynBitset::count_and(P.up_set(c), P.down_set(d))});
    }
    sort_moves(moves);
    return moves;
  }
};

/// Ordered-partition branching: the next interval must start at a minimal
/// uncovered point and keep the covered set downward closed.
struct FdepthSearch : SearcherBase {
  using SearcherBase::SearcherBase;

  std::vector<Move> moves_at(const DynBitset& covered, const DynBitset& unc) const {
    std::vector<Move> moves;
    for (int c = unc.find_first(); c != -1; c = unc.find_next(c)) {
      if (DynBitset::count_and(P.down_set(c), unc) != 1) continue;  // not minimal
      DynBitset cand = P.up_set(c);
      cand &= rho_ok;
      cand &= unc;
      for (int d = cand.find_first(); d != -1; d = cand.find_next(d)) {
        if (!DynBitset::and_subset_of(P.up_set(c), P.down_set(d), unc)) continue;
        DynBitset members = P.up_set(c);
        members &= P.down_set(d);
        DynBitset next = covered;
        next |= members;
        bool closed = true;
        for (int q = members.find_first(); q != -1 && closed; q = members.find_next(q))
          closed = P.down_set(q).is_subset_of(next);
        if (!closed) continue;
        moves.push_back({c, d, members.count()});
      }
    }
    sort_moves(moves);
    return moves;
  }
};

enum class Out { Found, Fail, Abort };

template <typename Searcher>
Out run_search(Searcher& s, const DynBitset& covered, int count) {
  if (count == s.N) {
    s.found = s.path;
    return Out::Found;
  }
  if (!s.ctx.tick()) return Out::Abort;
  if (s.memo && s.memo->contains(covered)) return Out::Fail;
  DynBitset unc = covered.complement();
  if (!s.tops_available(unc)) return Out::Fail;
  auto moves = s.moves_at(covered, unc);
  for (const Move& m : moves) {
    DynBitset next = covered;
    next.or_and(s.P.up_set(m.bottom), s.P.down_set(m.top));
    s.path.push_back({m.bottom, m.top});
    Out o = run_search(s, next, count + m.covers);
    s.path.pop_back();
    if (o != Out::Fail) return o;
  }
  if (s.memo) s.memo->insert(covered);
  return Out::Fail;
}

template <typename Searcher>
DecisionResult decide(const CharacteristicPoset& P, int k, const SearchBudget& budget,
                      bool use_memo) {
  if (k < 0 || k > P.nvars())
    throw std::invalid_argument("decision level must be between 0 and n");
  DecisionResult result;
  if (k <= P.min_rho()) {
    result.decision = Decision::Yes;
    result.witness = singleton_partition(P);
    return result;
  }
  if (k > P.max_rho()) {
    result.decision = Decision::No;
    return result;
  }

  SearchCtx ctx;
  if (budget.time_limit_seconds)
    ctx.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(
                                          *budget.time_limit_seconds));
  if (budget.node_limit) ctx.node_limit = *budget.node_limit;

  std::unique_ptr<MemoTable> memo;
  if (use_memo) memo = std::make_unique<MemoTable>(std::size_t{1} << 21);

  DynBitset root(P.size());
  Searcher probe(P, k, ctx, memo.get());
  int threads = std::max(1, budget.threads);

  auto finish = [&](bool found_flag, Partition witness) {
    result.nodes = ctx.nodes.load();
    if (found_flag) {
      result.decision = Decision::Yes;
      result.witness = std::move(witness);
    } else if (ctx.exhausted.load()) {
      result.decision = Decision::Unknown;
    } else {
      result.decision = Decision::No;
    }
    return result;
  };

  if (threads <= 1) {
    Out o = run_search(probe, root, 0);
    return finish(o == Out::Found, std::move(probe.found));
  }

  DynBitset unc = root.complement();
  if (!probe.tops_available(unc)) return finish(false, {});
  auto root_moves = probe.moves_at(root, unc);
  if (root_moves.size() <= 1) {
    Out o = run_search(probe, root, 0);
    return finish(o == Out::Found, std::move(probe.found));
  }

  std::atomic<std::size_t> next_move{0};
  std::atomic<bool> found{false};
  std::mutex witness_mu;
  Partition witness;
  auto worker = [&] {
    Searcher s(P, k, ctx, memo.get());
    for (;;) {
      std::size_t i = next_move.fetch_add(1);
      if (i >= root_moves.size() || ctx.stop.load(std::memory_order_relaxed)) return;
      const Move& m = root_moves[i];
      DynBitset cov(P.size());
      cov.or_and(P.up_set(m.bottom), P.down_set(m.top));
      s.path.assign(1, Interval{m.bottom, m.top});
      Out o = run_search(s, cov, m.covers);
      if (o == Out::Found) {
        bool expected = false;
        if (found.compare_exchange_strong(expected, true)) {
          std::lock_guard<std::mutex> lock(witness_mu);
          witness = std::move(s.found);
        }
        ctx.stop.store(true);
        return;
      }
      if (o == Out::Abort) return;
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return finish(found.load(), std::move(witness));
}

DepthResult binary_search_exact(PosetPtr P, const SearchBudget& budget, bool fdepth_mode) {
  DepthResult r;
  r.poset = P;
  r.witness = singleton_partition(*P);
  int lo = P->min_rho();  // always reachable with singletons
  int hi = P->max_rho();  // the Krull dimension
  std::optional<Clock::time_point> deadline;
  if (budget.time_limit_seconds)
    deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(
                                      *budget.time_limit_seconds));
  while (lo < hi) {
    int mid = lo + (hi - lo + 1) / 2;
    SearchBudget sub = budget;
    if (deadline) {
      double remaining = std::chrono::duration<double>(*deadline - Clock::now()).count();
      sub.time_limit_seconds = std::max(remaining, 0.0);
    }
    if (budget.node_limit)
      sub.node_limit = *budget.node_limit > r.nodes ? *budget.node_limit - r.nodes
                                                    : std::uint64_t{0};
    DecisionResult d = fdepth_mode ? fdepth_decision(*P, mid, sub)
                                   : sdepth_decision(*P, mid, sub);
    r.nodes += d.nodes;
    if (d.decision == Decision::Yes) {
      lo = mid;
      r.witness = std::move(d.witness);
    } else if (d.decision == Decision::No) {
      hi = mid - 1;
    } else {
      r.status = SearchStatus::LowerBound;
      break;
    }
  }
  r.value = lo;
  return r;
}

DepthResult exact_impl(const QuotientPair& pair, const SearchBudget& budget,
                       std::optional<Exponent> g, bool fdepth_mode) {
  if (g) {
    auto P = std::make_shared<const CharacteristicPoset>(pair, std::move(g));
    return binary_search_exact(P, budget, fdepth_mode);
  }
  StrippedPair sp = strip_free_variables(pair);
  auto P = std::make_shared<const CharacteristicPoset>(sp.pair);
  DepthResult r = binary_search_exact(P, budget, fdepth_mode);
  r.value += sp.removed;
  if (sp.removed > 0) {
    // With canonical g the stripped poset is the original one with zeros
    // inserted at the free coordinates; transport the witness back.
    auto full = std::make_shared<const CharacteristicPoset>(pair);
    Partition mapped;
    mapped.reserve(r.witness.size());
    for (const auto& iv : r.witness) {
      Exponent b(pair.nvars(), 0), t(pair.nvars(), 0);
      for (std::size_t i = 0; i < sp.kept_vars.size(); ++i) {
        b[sp.kept_vars[i]] = P->point(iv.bottom)[i];
        t[sp.kept_vars[i]] = P->point(iv.top)[i];
      }
      int bi = full->index_of(b), ti = full->index_of(t);
      if (bi < 0 || ti < 0) throw std::logic_error("witness re-inflation failed");
      mapped.push_back({bi, ti});
    }
    r.poset = full;
    r.witness = std::move(mapped);
  }
  return r;
}

int recursive_bound_impl(const MonomialIdeal& ideal, std::uint64_t& fuel) {
  if (is_principal(ideal)) return ideal.nvars();
  if (fuel == 0) return 1;  // conservative fallback, still a valid bound
  --fuel;
  int p = INT_MAX, q = 0;
  for (const auto& a : ideal.gens()) {
    p = std::min(p, a.back());
    q = std::max(q, a.back());
  }
  int best = INT_MAX;
  for (int j = p; j <= q; ++j) {
    int v = recursive_bound_impl(slice(ideal, j), fuel);
    if (j == q) ++v;
    best = std::min(best, v);
  }
  return best;
}

}  // namespace

DecisionResult sdepth_decision(const CharacteristicPoset& poset, int k,
                               const SearchBudget& budget, bool use_memo) {
  return decide<SdepthSearch>(poset, k, budget, use_memo);
}

DecisionResult fdepth_decision(const CharacteristicPoset& poset, int k,
                               const SearchBudget& budget, bool use_memo) {
  return decide<FdepthSearch>(poset, k, budget, use_memo);
}

DepthResult sdepth_exact(const QuotientPair& pair, const SearchBudget& budget,
                         std::optional<Exponent> g) {
  return exact_impl(pair, budget, std::move(g), false);
}

DepthResult fdepth_exact(const QuotientPair& pair, const SearchBudget& budget,
                         std::optional<Exponent> g) {
  return exact_impl(pair, budget, std::move(g), true);
}

int krull_dim(const CharacteristicPoset& poset) {
  if (poset.size() == 0) throw std::invalid_argument("empty poset has no dimension");
  return poset.max_rho();
}

int lower_bound_minrho(const CharacteristicPoset& poset) {
  if (poset.size() == 0) throw std::invalid_argument("empty poset has no bounds");
  return poset.min_rho();
}

int lower_bound_gencount(const QuotientPair& pair) {
  if (!pair.denominator().is_zero())
    throw std::invalid_argument("generator-count bound requires J = 0");
  return std::max(1, pair.nvars() -
                         static_cast<int>(pair.numerator().gens().size()) + 1);
}

int lower_bound_recursive(const MonomialIdeal& ideal, const SearchBudget& budget) {
  if (ideal.is_zero())
    throw std::invalid_argument("recursive bound requires a nonzero ideal");
  std::uint64_t fuel = budget.node_limit.value_or(1'000'000);
  return recursive_bound_impl(ideal, fuel);
}

int upper_bound(const QuotientPair& pair) {
  if (pair.denominator().is_zero() && !is_principal(pair.numerator()))
    return pair.nvars() - 1;
  CharacteristicPoset poset(pair);
  return krull_dim(poset);
}

StrippedPair strip_free_variables(const QuotientPair& pair) {
  int n = pair.nvars();
  std::vector<char> used(n, 0);
  for (const auto& a : pair.numerator().gens())
    for (int j = 0; j < n; ++j)
      if (a[j] > 0) used[j] = 1;
  for (const auto& b : pair.denominator().gens())
    for (int j = 0; j < n; ++j)
      if (b[j] > 0) used[j] = 1;
  std::vector<int> kept;
  for (int j = 0; j < n; ++j)
    if (used[j]) kept.push_back(j);
  if (static_cast<int>(kept.size()) == n) return {pair, std::move(kept), 0};

  auto project = [&](const MonomialIdeal& ideal) {
    std::vector<Exponent> gens;
    gens.reserve(ideal.gens().size());
    for (const auto& a : ideal.gens()) {
      Exponent e(kept.size());
      for (std::size_t i = 0; i < kept.size(); ++i) e[i] = a[kept[i]];
      gens.push_back(std::move(e));
    }
    return MonomialIdeal(static_cast<int>(kept.size()), std::move(gens));
  };
  QuotientPair reduced(project(pair.numerator()), project(pair.denominator()));
  int removed = n - static_cast<int>(kept.size());
  return {std::move(reduced), std::move(kept), removed};
}

Partition singleton_partition(const CharacteristicPoset& poset) {
  Partition part;
  part.reserve(poset.size());
  for (int i = 0; i < poset.size(); ++i) part.push_back({i, i});
  return part;
}

}  // namespace stanley
