#pragma once

// Formula-versus-oracle sweeps. Each row pairs a closed-form value with the
// tower count of the matching construction and, when the instance is small
// enough, the exact value from solve().

#include <atomic>
#include <functional>
#include <optional>
#include <thread>
#include <tuple>

#include "bcast/closed_forms.hpp"
#include "bcast/constructors.hpp"
#include "bcast/exact_solver.hpp"

namespace bcast {

enum class RowStatus { Match, BoundGap, Mismatch, OracleSkipped };

struct ComparisonRow {
  GraphFamily graph;
  int t = 1;
  int r = 1;
  GammaResult formula;
  std::optional<int> constructed;
  std::optional<bool> constructed_dominates;
  std::optional<int> oracle;
  RowStatus status = RowStatus::OracleSkipped;
  long delta = 0;  ///< formula value minus oracle value

  std::string status_string() const {
    switch (status) {
      case RowStatus::Match: return "match";
      case RowStatus::BoundGap: return "bound-gap(" + std::to_string(delta) + ")";
      case RowStatus::Mismatch: return "MISMATCH";
      case RowStatus::OracleSkipped: return "oracle-skipped";
    }
    return "?";
  }
};

/// An exact claim must equal the oracle; a bound must not undercut it.
inline void classify(ComparisonRow& row) {
  if (!row.oracle) {
    row.status = RowStatus::OracleSkipped;
    return;
  }
  row.delta = row.formula.value - *row.oracle;
  if (row.formula.kind == GammaKind::ExactFormula)
    row.status = row.delta == 0 ? RowStatus::Match : RowStatus::Mismatch;
  else
    row.status = row.delta < 0 ? RowStatus::Mismatch : row.delta == 0 ? RowStatus::Match : RowStatus::BoundGap;
}

struct AuditCase {
  GraphFamily graph;
  int t = 1;
  int r = 1;
  std::function<GammaResult()> formula;
  std::function<PlacementPlan()> construct;  ///< may be empty
};

struct AuditOptions {
  std::string suite = "all";
  std::optional<int> n_max;
  std::optional<int> t_max;
  int max_vertices = 30;
  bool allow_large = false;
  int threads = 1;
  std::uint64_t node_budget = 20'000'000;
};

inline const std::vector<std::string>& audit_suites() {
  static const std::vector<std::string> names{"paths", "cycles", "grids", "grid3d", "king", "slant", "all"};
  return names;
}

namespace detail {

inline std::array<int, 3> dims_key(const GraphFamily& f) {
  return std::visit(
      [](const auto& fam) -> std::array<int, 3> {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, family::Path> || std::is_same_v<T, family::Cycle>) return {fam.n, 0, 0};
        else if constexpr (std::is_same_v<T, family::Grid3D>) return {fam.m, fam.n, fam.k};
        else if constexpr (std::is_same_v<T, family::Tree>) return {static_cast<int>(fam.edges.size()) + 1, 0, 0};
        else return {fam.m, fam.n, 0};
      },
      f);
}

inline void paths_cases(std::vector<AuditCase>& out, const AuditOptions& o) {
  const int n_max = o.n_max.value_or(14), t_max = o.t_max.value_or(4);
  for (int n = 1; n <= n_max; ++n)
    for (int t = 1; t <= t_max; ++t)
      for (int r = 1; r <= t; ++r)
        out.push_back({family::Path{n}, t, r, [=] { return path_gamma(n, t, r); }, [=] { return path_towers(n, t, r); }});
}

inline void cycles_cases(std::vector<AuditCase>& out, const AuditOptions& o) {
  const int n_max = o.n_max.value_or(12), t_max = o.t_max.value_or(3);
  for (int n = 3; n <= n_max; ++n)
    for (int t = 1; t <= t_max; ++t)
      for (int r = 1; r <= t; ++r)
        out.push_back({family::Cycle{n}, t, r, [=] { return cycle_upper_bound(n, t, r); },
                       [=] { return cycle_towers(n, t, r); }});
}

inline void grids_cases(std::vector<AuditCase>& out, const AuditOptions& o) {
  const int t_max = o.t_max.value_or(3);
  for (int t = 1; t <= t_max; ++t)
    for (int r = 1; r <= t; ++r)
      for (int m = 2; m <= 2 * t - r; ++m) {
        const int n0 = 2 * t - r - (m - 2);
        const int n_cap = o.n_max.value_or(o.max_vertices / m);
        for (int n = n0; n <= n_cap; ++n)
          out.push_back({family::Grid{m, n}, t, r, [=] { return grid_gamma(m, n, t, r); },
                         [=] { return grid_towers(m, n, t, r); }});
      }
}

inline void grid3d_cases(std::vector<AuditCase>& out, const AuditOptions& o) {
  const int k_max = o.n_max.value_or(o.max_vertices / 4);
  for (int k = 1; k <= k_max; ++k)
    out.push_back({family::Grid3D{2, 2, k}, 2, 1, [=] { return grid3d_2_2_k_gamma(k); }, {}});
  const int t_max = o.t_max.value_or(3);
  for (int t = 1; t <= t_max; ++t)
    for (int r = 1; r <= t; ++r) {
      if (2 * t - r - 1 < 1) continue;
      const auto block = block3d_dims(BlockShape::TwoByTwo, t, r);
      for (int q = 3; q <= block3d_max_sum(t, r); ++q)
        for (const auto& dims : block3d_family(q, t, r)) {
          const int m = dims.dims[0], n = dims.dims[1], k = dims.dims[2];
          if (m * n * k > o.max_vertices && !o.allow_large) continue;
          out.push_back({family::Grid3D{m, n, k}, t, r,
                         [=] {
                           return GammaResult{2, GammaKind::UpperBound, "grid3d-block-sum", true, ""};
                         },
                         [=] { return block3d_towers(dims, t, r); }});
        }
      for (int m = 1; m <= 4; ++m)
        for (int n = m; n <= 4; ++n)
          for (int k = n; k <= 6; ++k) {
            if (m * n * k > o.max_vertices || m * n * k < 8) continue;
            out.push_back({family::Grid3D{m, n, k}, t, r, [=] { return grid3d_upper_bound(m, n, k, t, r, block); },
                           [=] { return grid3d_cover(m, n, k, t, r, block); }});
          }
    }
}

inline void king_cases(std::vector<AuditCase>& out, const AuditOptions& o) {
  const int t_max = o.t_max.value_or(3);
  for (int t = 2; t <= t_max; ++t)
    for (int r = 1; r < t; ++r)
      for (int m = 1; m <= 2 * (t - r) + 1; ++m) {
        const int n_cap = o.n_max.value_or(o.max_vertices / m);
        for (int n = 1; n <= n_cap; ++n)
          out.push_back({family::King{m, n}, t, r, [=] { return king_gamma(m, n, t, r); },
                         [=] { return king_towers(m, n, t, r); }});
      }
}

inline void slant_cases(std::vector<AuditCase>& out, const AuditOptions& o) {
  const int t_max = o.t_max.value_or(3);
  const int n_max = o.n_max.value_or(14);
  for (int t = 2; t <= t_max; ++t)
    for (int r = 1; r < t; ++r)
      for (int n = 1; n <= n_max; ++n)
        out.push_back({family::Slant{2, n}, t, r, [=] { return slant_gamma_2xn(n, t, r); },
                       [=] { return slant_towers_2xn(n, t, r); }});
  for (const auto& row : kSlantTable) {
    if (row.t > t_max) continue;
    const int t = row.t, r = row.r;
    for (int m = 3; m <= 6; ++m)
      for (int n = 2; n * m <= o.max_vertices; ++n)
        out.push_back({family::Slant{m, n}, t, r, [=] { return slant_upper_bound(m, n, t, r); },
                       [=] { return slant_tile_cover(m, n, t, r); }});
  }
}

}  // namespace detail

inline std::vector<AuditCase> audit_cases(const AuditOptions& o) {
  std::vector<AuditCase> cases;
  const auto& s = o.suite;
  const bool all = s == "all";
  require(std::find(audit_suites().begin(), audit_suites().end(), s) != audit_suites().end(),
          ErrorCode::ParseError, "unknown audit suite \"" + s + "\"");
  if (all || s == "paths") detail::paths_cases(cases, o);
  if (all || s == "cycles") detail::cycles_cases(cases, o);
  if (all || s == "grids") detail::grids_cases(cases, o);
  if (all || s == "grid3d") detail::grid3d_cases(cases, o);
  if (all || s == "king") detail::king_cases(cases, o);
  if (all || s == "slant") detail::slant_cases(cases, o);
  return cases;
}

inline ComparisonRow evaluate_case(const AuditCase& c, const AuditOptions& o) {
  ComparisonRow row{c.graph, c.t, c.r, c.formula(), {}, {}, {}, RowStatus::OracleSkipped, 0};
  const auto g = build(c.graph);
  if (c.construct) {
    const auto plan = c.construct();
    row.constructed = plan.size();
    row.constructed_dominates = verify(g, plan.towers, c.r).dominated;
  }
  if (g.vertex_count() <= o.max_vertices || o.allow_large) {
    SolverConfig cfg;
    cfg.node_budget = o.node_budget;
    const auto res = solve(g, c.t, c.r, cfg);
    if (res.proven_minimal) row.oracle = res.gamma;
  }
  classify(row);
  return row;
}

/// Runs a suite; rows come back sorted by (family, dims, t, r, tag)
/// whatever the thread count.
inline std::vector<ComparisonRow> run_audit(const AuditOptions& o) {
  const auto cases = audit_cases(o);
  std::vector<std::optional<ComparisonRow>> rows(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cases.size();) rows[i] = evaluate_case(cases[i], o);
  };
  const int workers = std::max(1, std::min<int>(o.threads, static_cast<int>(cases.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::vector<ComparisonRow> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.push_back(std::move(*r));
  std::stable_sort(out.begin(), out.end(), [](const ComparisonRow& a, const ComparisonRow& b) {
    return std::tuple(a.graph.index(), detail::dims_key(a.graph), a.t, a.r, a.formula.theorem_tag) <
           std::tuple(b.graph.index(), detail::dims_key(b.graph), b.t, b.r, b.formula.theorem_tag);
  });
  return out;
}

inline bool has_mismatch(const std::vector<ComparisonRow>& rows) {
  return std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.status == RowStatus::Mismatch; });
}

}  // namespace bcast
