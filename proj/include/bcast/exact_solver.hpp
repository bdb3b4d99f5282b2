#pragma once

// Exact (t,r) broadcast domination number on small graphs.
//
// solve(): iterative deepening on the tower count k, starting from the
// supply/demand bound ceil(n*r / S_max). For each k a depth-first search
// branches on the most deficient vertex (lowest reception, ties by
// row-major index) over the towers that can reach it, ordered by descending
// marginal signal; a candidate that has been fully explored is excluded from
// its later siblings. A node is cut when remaining * S_max cannot cover the
// residual demand sum_v max(0, r - f(v)).
//
// naive_enumerate(): checks every subset in cardinality order; kept
// deliberately simple as the second, independent oracle.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <optional>
#include <thread>
#include <vector>

#include "bcast/closed_forms.hpp"
#include "bcast/graph.hpp"
#include "bcast/reception.hpp"

namespace bcast {

struct SolverConfig {
  std::optional<int> max_cardinality;
  /// Return the lexicographically least minimum set under row-major order.
  bool canonical_witness = false;
  std::optional<std::uint64_t> node_budget;
  /// Worker threads for the top-level branches; results do not depend on it.
  int threads = 1;
};

enum class SolveStatus { Optimal, BudgetExhausted, CardinalityCapReached };

constexpr std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::BudgetExhausted: return "budget-exhausted";
    case SolveStatus::CardinalityCapReached: return "cardinality-cap-reached";
  }
  return "?";
}

struct OracleResult {
  int gamma = 0;
  TowerSet witness;
  std::uint64_t explored_nodes = 0;
  bool proven_minimal = false;
  SolveStatus status = SolveStatus::Optimal;
  int lower_bound = 0;
};

namespace detail {

/// Signal table sig[w][v] = max(0, t - d(w,v)) and the zones it implies.
class SignalTable {
 public:
  SignalTable(const GraphInstance& g, int t, int r) : n_(g.vertex_count()), t_(t), r_(r) {
    require(t >= 1, ErrorCode::HypothesisViolated, "t must be >= 1");
    require(r >= 1, ErrorCode::HypothesisViolated, "r must be >= 1");
    sig_.assign(static_cast<std::size_t>(n_) * n_, 0);
    zone_.resize(n_);
    for (int w = 0; w < n_; ++w)
      for (int v = 0; v < n_; ++v) {
        const int s = std::max(0, t - g.distance(w, v));
        sig_[static_cast<std::size_t>(w) * n_ + v] = s;
        if (s > 0) zone_[w].push_back(v);
      }
    for (int w = 0; w < n_; ++w) {
      int total = 0;
      for (int v : zone_[w]) total += signal(w, v);
      supply_max_ = std::max(supply_max_, total);
    }
  }

  int n() const { return n_; }
  int t() const { return t_; }
  int r() const { return r_; }
  int signal(int w, int v) const { return sig_[static_cast<std::size_t>(w) * n_ + v]; }
  /// Vertices within distance t-1 of `w` (symmetric, so also the towers reaching `w`).
  const std::vector<int>& zone(int w) const { return zone_[w]; }
  int supply_max() const { return supply_max_; }

  bool dominates_with_all() const {
    for (int v = 0; v < n_; ++v) {
      int f = 0;
      for (int w : zone_[v]) f += signal(w, v);
      if (f < r_) return false;
    }
    return true;
  }

 private:
  int n_, t_, r_;
  std::vector<int> sig_;
  std::vector<std::vector<int>> zone_;
  int supply_max_ = 0;
};

struct SearchState {
  std::vector<int> reception;
  std::vector<int> chosen;
  std::vector<char> excluded;
  long residual = 0;
};

class DominationSearch {
 public:
  explicit DominationSearch(const SignalTable& table) : tab_(table) {}

  SearchState initial(const std::vector<int>& fixed, int min_allowed) const {
    SearchState s;
    s.reception.assign(tab_.n(), 0);
    s.excluded.assign(tab_.n(), 0);
    s.residual = static_cast<long>(tab_.n()) * tab_.r();
    for (int v = 0; v < std::min(min_allowed, tab_.n()); ++v) s.excluded[v] = 1;
    for (int w : fixed) add(s, w);
    return s;
  }

  void add(SearchState& s, int w) const {
    for (int v : tab_.zone(w)) {
      const int before = std::max(0, tab_.r() - s.reception[v]);
      s.reception[v] += tab_.signal(w, v);
      s.residual -= before - std::max(0, tab_.r() - s.reception[v]);
    }
    s.chosen.push_back(w);
    s.excluded[w] = 1;
  }

  void remove(SearchState& s, int w) const {
    for (int v : tab_.zone(w)) {
      const int before = std::max(0, tab_.r() - s.reception[v]);
      s.reception[v] -= tab_.signal(w, v);
      s.residual += std::max(0, tab_.r() - s.reception[v]) - before;
    }
    s.chosen.pop_back();
    s.excluded[w] = 0;
  }

  /// Most deficient vertex, or -1 when everything is dominated.
  int branch_vertex(const SearchState& s) const {
    int best = -1;
    for (int v = 0; v < tab_.n(); ++v)
      if (s.reception[v] < tab_.r() && (best < 0 || s.reception[v] < s.reception[best])) best = v;
    return best;
  }

  std::vector<int> candidates(const SearchState& s, int v) const {
    std::vector<std::pair<long, int>> scored;
    for (int w : tab_.zone(v)) {
      if (s.excluded[w]) continue;
      long gain = 0;
      for (int u : tab_.zone(w)) gain += std::min(std::max(0, tab_.r() - s.reception[u]), tab_.signal(w, u));
      scored.push_back({-gain, w});
    }
    std::sort(scored.begin(), scored.end());
    std::vector<int> out;
    out.reserve(scored.size());
    for (auto [g, w] : scored) out.push_back(w);
    return out;
  }

  struct Limits {
    std::atomic<std::uint64_t>* shared_nodes = nullptr;
    std::optional<std::uint64_t> budget;
    std::atomic<int>* best_branch = nullptr;
    int branch = 0;
  };

  /// Depth-first search for a completion using at most `remaining` more towers.
  bool dfs(SearchState& s, int remaining, std::uint64_t& nodes, const Limits& lim, bool& aborted) const {
    ++nodes;
    if (lim.shared_nodes) {
      const auto total = lim.shared_nodes->fetch_add(1) + 1;
      if (lim.budget && total > *lim.budget) {
        aborted = true;
        return false;
      }
    }
    if (lim.best_branch && (nodes & 255u) == 0 && lim.best_branch->load() < lim.branch) {
      aborted = true;
      return false;
    }
    if (s.residual == 0) return true;
    if (remaining == 0 || static_cast<long>(remaining) * tab_.supply_max() < s.residual) return false;
    const int v = branch_vertex(s);
    const auto cands = candidates(s, v);
    std::vector<int> excluded_here;
    bool found = false;
    for (int w : cands) {
      add(s, w);
      if (dfs(s, remaining - 1, nodes, lim, aborted)) {
        found = true;
        break;
      }
      remove(s, w);
      if (aborted) break;
      s.excluded[w] = 1;
      excluded_here.push_back(w);
    }
    for (int w : excluded_here) s.excluded[w] = 0;
    return found;
  }

 private:
  const SignalTable& tab_;
};

struct FeasibilityOutcome {
  std::optional<std::vector<int>> witness;
  std::uint64_t nodes = 0;
  bool budget_hit = false;
};

/// Is there a dominating set of exactly k towers that contains `fixed` and
/// otherwise only uses vertices with index >= min_allowed? The root's
/// branches are distributed over `threads` workers; the reported witness and
/// node count are those of the sequential search.
inline FeasibilityOutcome feasible(const SignalTable& tab, int k, const std::vector<int>& fixed, int min_allowed,
                                   int threads, std::atomic<std::uint64_t>& shared_nodes,
                                   std::optional<std::uint64_t> budget) {
  DominationSearch search(tab);
  FeasibilityOutcome out;
  auto root = search.initial(fixed, min_allowed);
  out.nodes = 1;
  shared_nodes.fetch_add(1);
  const int remaining = k - static_cast<int>(fixed.size());
  if (root.residual == 0) {
    out.witness = root.chosen;
    return out;
  }
  if (remaining <= 0 || static_cast<long>(remaining) * tab.supply_max() < root.residual) return out;

  const int v = search.branch_vertex(root);
  const auto cands = search.candidates(root, v);
  const int branches = static_cast<int>(cands.size());

  struct BranchResult {
    bool found = false;
    bool aborted = false;
    std::uint64_t nodes = 0;
    std::vector<int> witness;
  };
  std::vector<BranchResult> results(branches);
  std::atomic<int> next{0};
  std::atomic<int> best{branches};

  auto worker = [&] {
    while (true) {
      const int i = next.fetch_add(1);
      if (i >= branches) return;
      if (best.load() < i) {
        results[i].aborted = true;
        continue;
      }
      SearchState s = root;
      for (int j = 0; j < i; ++j) s.excluded[cands[j]] = 1;
      search.add(s, cands[i]);
      DominationSearch::Limits lim{&shared_nodes, budget, &best, i};
      bool aborted = false;
      auto& res = results[i];
      res.found = search.dfs(s, remaining - 1, res.nodes, lim, aborted);
      res.aborted = aborted;
      if (res.found) {
        res.witness = s.chosen;
        int cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };

  const int workers = std::max(1, std::min(threads, branches));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (int i = 0; i < branches; ++i) {
    const auto& res = results[i];
    if (res.aborted && !res.found) {
      // Aborted branches past the winner are not part of the sequential run;
      // an abort before any winner can only come from the node budget.
      if (best.load() < i) break;
      out.nodes += res.nodes;
      out.budget_hit = true;
      return out;
    }
    out.nodes += res.nodes;
    if (res.found) {
      out.witness = res.witness;
      return out;
    }
  }
  return out;
}

inline std::vector<int> greedy_cover(const SignalTable& tab) {
  DominationSearch search(tab);
  auto s = search.initial({}, 0);
  while (s.residual > 0) {
    int best = -1;
    long best_gain = -1;
    for (int w = 0; w < tab.n(); ++w) {
      if (s.excluded[w]) continue;
      long gain = 0;
      for (int u : tab.zone(w)) gain += std::min(std::max(0, tab.r() - s.reception[u]), tab.signal(w, u));
      if (gain > best_gain) {
        best_gain = gain;
        best = w;
      }
    }
    search.add(s, best);
  }
  auto out = s.chosen;
  std::sort(out.begin(), out.end());
  return out;
}

inline TowerSet to_tower_set(const GraphInstance& g, std::vector<int> idx, int t) {
  std::sort(idx.begin(), idx.end());
  TowerSet ts{{}, t};
  for (int i : idx) ts.towers.push_back(g.vertex(i));
  return ts;
}

}  // namespace detail

inline OracleResult solve(const GraphInstance& g, int t, int r, const SolverConfig& cfg = {}) {
  require(!cfg.max_cardinality || *cfg.max_cardinality >= 1, ErrorCode::HypothesisViolated,
          "max_cardinality must be positive");
  require(!cfg.node_budget || *cfg.node_budget >= 1, ErrorCode::HypothesisViolated, "node_budget must be positive");
  const detail::SignalTable tab(g, t, r);
  require(tab.dominates_with_all(), ErrorCode::Infeasible,
          "no tower set reaches r=" + std::to_string(r) + " everywhere on " + describe(g.family()));

  OracleResult res;
  const int n = g.vertex_count();
  res.lower_bound = std::max<int>(1, static_cast<int>(detail::ceil_div(static_cast<long>(n) * r, tab.supply_max())));
  const int cap = cfg.max_cardinality ? std::min(*cfg.max_cardinality, n) : n;
  const int threads = std::max(1, cfg.threads);
  std::atomic<std::uint64_t> shared{0};

  auto give_up = [&](SolveStatus status) {
    const auto greedy = detail::greedy_cover(tab);
    res.gamma = static_cast<int>(greedy.size());
    res.witness = detail::to_tower_set(g, greedy, t);
    res.proven_minimal = false;
    res.status = status;
    return res;
  };

  std::optional<std::vector<int>> found;
  int k = res.lower_bound;
  for (; k <= cap; ++k) {
    auto outcome = detail::feasible(tab, k, {}, 0, threads, shared, cfg.node_budget);
    res.explored_nodes += outcome.nodes;
    if (outcome.budget_hit) return give_up(SolveStatus::BudgetExhausted);
    if (outcome.witness) {
      found = std::move(outcome.witness);
      break;
    }
  }
  if (!found) return give_up(SolveStatus::CardinalityCapReached);

  res.gamma = k;
  if (cfg.canonical_witness) {
    std::vector<int> prefix;
    for (int pos = 0; pos < k; ++pos) {
      const int start = prefix.empty() ? 0 : prefix.back() + 1;
      for (int v = start; v < n; ++v) {
        auto trial = prefix;
        trial.push_back(v);
        auto outcome = detail::feasible(tab, k, trial, v + 1, threads, shared, cfg.node_budget);
        res.explored_nodes += outcome.nodes;
        if (outcome.budget_hit) return give_up(SolveStatus::BudgetExhausted);
        if (outcome.witness) {
          prefix = std::move(trial);
          break;
        }
      }
    }
    found = prefix;
  }
  res.witness = detail::to_tower_set(g, *found, t);
  res.proven_minimal = true;
  res.status = SolveStatus::Optimal;
  return res;
}

/// Exhaustive search over all subsets in cardinality order, each cardinality
/// in lexicographic order; the first hit is the lexicographically least
/// minimum set.
inline OracleResult naive_enumerate(const GraphInstance& g, int t, int r) {
  const int n = g.vertex_count();
  require(n <= 16, ErrorCode::TooLarge, std::to_string(n) + " vertices; naive enumeration handles at most 16");
  require(t >= 1 && r >= 1, ErrorCode::HypothesisViolated, "t and r must be >= 1");
  std::vector<std::vector<int>> sig(n, std::vector<int>(n));
  for (int w = 0; w < n; ++w)
    for (int v = 0; v < n; ++v) sig[w][v] = std::max(0, t - g.distance(w, v));

  OracleResult res;
  std::vector<int> f(n);
  for (int k = 1; k <= n; ++k) {
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      ++res.explored_nodes;
      std::fill(f.begin(), f.end(), 0);
      for (int w : pick)
        for (int v = 0; v < n; ++v) f[v] += sig[w][v];
      if (std::all_of(f.begin(), f.end(), [&](int x) { return x >= r; })) {
        res.gamma = k;
        res.witness = detail::to_tower_set(g, pick, t);
        res.proven_minimal = true;
        return res;
      }
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw Error(ErrorCode::Infeasible, "no tower set reaches r=" + std::to_string(r) + " everywhere");
}

}  // namespace bcast
