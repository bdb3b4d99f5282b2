#pragma once

// Explicit tower placements that witness the closed forms and bounds, plus
// the periodic tower patterns on the infinite king's and slant lattices.
//
// Coordinates are (row, col[, layer]), 1-indexed. For slant grids, row r and
// column c sit at lattice point (x, y) = (c-1, r-1), so row 1 is the row
// through the origin and the diagonal (r,c)-(r+1,c+1) is the lattice edge
// (x,y)-(x+1,y+1).

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "bcast/closed_forms.hpp"
#include "bcast/graph.hpp"
#include "bcast/reception.hpp"

namespace bcast {

struct PlacementPlan {
  GraphFamily graph;
  TowerSet towers;
  int r = 1;
  std::string theorem_tag;
  bool claims_efficient = false;
  std::string note;

  int size() const { return static_cast<int>(towers.towers.size()); }
};

namespace detail {

/// Tower columns 1-indexed along a line: first at t-r+1, then every 2t-r,
/// last one pulled back onto column n. Returns whether clamping happened.
inline std::vector<int> line_positions(int n, int t, int r, long count, bool& clamped) {
  std::vector<int> cols;
  clamped = false;
  for (long i = 0; i < count; ++i) {
    long p = (t - r + 1) + i * (2L * t - r);
    if (p > n) {
      p = n;
      clamped = true;
    }
    if (cols.empty() || cols.back() != p) cols.push_back(static_cast<int>(p));
  }
  return cols;
}

inline void dedupe_in_order(std::vector<VertexId>& towers) {
  std::set<VertexId> seen;
  std::vector<VertexId> out;
  for (const auto& v : towers)
    if (seen.insert(v).second) out.push_back(v);
  towers = std::move(out);
}

}  // namespace detail

inline PlacementPlan path_towers(int n, int t, int r) {
  const auto gamma = path_gamma(n, t, r);
  bool clamped = false;
  PlacementPlan plan{family::Path{n}, {{}, t}, r, gamma.theorem_tag, false, ""};
  for (int p : detail::line_positions(n, t, r, gamma.value, clamped)) plan.towers.towers.push_back(VertexId::of(p));
  plan.claims_efficient = !clamped;
  return plan;
}

/// Path placement reused on a cycle; witnesses the cycle bound.
inline PlacementPlan cycle_towers(int n, int t, int r) {
  const auto bound = cycle_upper_bound(n, t, r);
  auto plan = path_towers(n, t, r);
  plan.graph = family::Cycle{n};
  plan.theorem_tag = bound.theorem_tag;
  plan.claims_efficient = false;
  return plan;
}

inline PlacementPlan grid_starting_block(int m, int t, int r) {
  const auto block = grid_starting_block_dims(m, t, r);
  const int width = block.dims[1];
  return {family::Grid{m, width},
          {{VertexId::of(1, 1), VertexId::of(m, width)}, t},
          r,
          "grid-starting-block",
          true,
          ""};
}

/// Starting block, then one tower every (block width - 1) columns,
/// alternating between the top and bottom rows (top first).
inline PlacementPlan grid_towers(int m, int n, int t, int r) {
  const auto gamma = grid_gamma(m, n, t, r);
  const int width = grid_starting_block_dims(m, t, r).dims[1];
  PlacementPlan plan{family::Grid{m, n}, {{}, t}, r, gamma.theorem_tag, false, ""};
  bool clamped = false;
  for (long j = 0; j < gamma.value; ++j) {
    long col = (j == 0) ? 1 : width + (j - 1) * (width - 1L);
    if (col > n) {
      col = n;
      clamped = true;
    }
    plan.towers.towers.push_back(VertexId::of(j % 2 == 0 ? 1 : m, static_cast<int>(col)));
  }
  detail::dedupe_in_order(plan.towers.towers);
  // Chained blocks double-cover their shared column, so only a lone starting block is efficient.
  plan.claims_efficient = !clamped && plan.towers.towers.size() <= 2;
  return plan;
}

/// Two towers at opposite corners of a block: (1,1,k) and (m,n,1) in 3D,
/// (1,1) and (m,n) in 2D.
inline PlacementPlan block3d_towers(const BlockDims& block, int t, int r) {
  detail::require_tr(t, r);
  for (int d : block.dims) require(d >= 1, ErrorCode::InvalidDimensions, "block dims must be positive");
  PlacementPlan plan;
  plan.r = r;
  plan.towers.t = t;
  if (block.dims.size() == 2) {
    const int m = block.dims[0], n = block.dims[1];
    require(m + n - 2 <= 2 * t - r, ErrorCode::HypothesisViolated, "2D block too large for two towers");
    plan.graph = family::Grid{m, n};
    plan.towers.towers = {VertexId::of(1, 1), VertexId::of(m, n)};
    plan.claims_efficient = m + n - 2 == 2 * t - r;
  } else {
    require(block.dims.size() == 3, ErrorCode::InvalidDimensions, "block needs two or three dims");
    const int m = block.dims[0], n = block.dims[1], k = block.dims[2];
    require(block.sum() <= block3d_max_sum(t, r), ErrorCode::HypothesisViolated,
            "dimension sum exceeds 2t - r + 3; two towers cannot reach");
    plan.graph = family::Grid3D{m, n, k};
    plan.towers.towers = {VertexId::of(1, 1, k), VertexId::of(m, n, 1)};
    plan.claims_efficient = block.sum() == block3d_max_sum(t, r);
  }
  detail::dedupe_in_order(plan.towers.towers);
  plan.theorem_tag = "grid3d-block-sum";
  return plan;
}

/// Covers G_{m,n,k} with translated copies of `block` (best orientation),
/// two corner towers per copy; copies cut by the boundary keep their towers
/// at the corners of the clipped box.
inline PlacementPlan grid3d_cover(int m, int n, int k, int t, int r, const BlockDims& block) {
  const auto bound = grid3d_upper_bound(m, n, k, t, r, block);
  const auto cover = best_block_cover(m, n, k, block);
  const std::array<int, 3> size{m, n, k};
  PlacementPlan plan{family::Grid3D{m, n, k}, {{}, t}, r, bound.theorem_tag, false, ""};
  const auto& o = cover.orientation;
  for (int i = 0; i < cover.counts[0]; ++i)
    for (int j = 0; j < cover.counts[1]; ++j)
      for (int l = 0; l < cover.counts[2]; ++l) {
        const std::array<int, 3> origin{i * o[0], j * o[1], l * o[2]};
        std::array<int, 3> extent{};
        for (int a = 0; a < 3; ++a) extent[a] = std::min(o[a], size[a] - origin[a]);
        plan.towers.towers.push_back(VertexId::of(origin[0] + 1, origin[1] + 1, origin[2] + extent[2]));
        plan.towers.towers.push_back(
            VertexId::of(origin[0] + extent[0], origin[1] + extent[1], origin[2] + 1));
      }
  const auto before = plan.towers.towers.size();
  detail::dedupe_in_order(plan.towers.towers);
  plan.note = "orientation " + std::to_string(o[0]) + "x" + std::to_string(o[1]) + "x" + std::to_string(o[2]) +
              ", B=" + std::to_string(cover.blocks);
  if (plan.towers.towers.size() != before) plan.note += ", single-vertex clipped blocks share one tower";
  return plan;
}

/// All towers on row ceil(m/2), spaced like the path placement.
inline PlacementPlan king_towers(int m, int n, int t, int r) {
  const auto gamma = king_gamma(m, n, t, r);
  const int row = (m + 1) / 2;
  bool clamped = false;
  PlacementPlan plan{family::King{m, n}, {{}, t}, r, gamma.theorem_tag, false, ""};
  for (int c : detail::line_positions(n, t, r, gamma.value, clamped))
    plan.towers.towers.push_back(VertexId::of(row, c));
  plan.claims_efficient = !clamped;
  return plan;
}

/// Two-row slant grid. One tower when n <= 2(t-r): row 1, column t-r.
/// Otherwise blocks of 4t-2r-1 columns, each with a row-2 tower at block
/// column t-r+1 and a row-1 tower at block column 3t-2r.
inline PlacementPlan slant_towers_2xn(int n, int t, int r) {
  const auto gamma = slant_gamma_2xn(n, t, r);
  PlacementPlan plan{family::Slant{2, n}, {{}, t}, r, gamma.theorem_tag, false, ""};
  if (gamma.value == 1) {
    plan.towers.towers.push_back(VertexId::of(1, std::max(1, std::min(t - r, n))));
    plan.claims_efficient = true;
    plan.note = "single-tower case n <= 2(t-r)";
    return plan;
  }
  const long period = 4L * t - 2 * r - 1;
  bool clamped = false;
  for (long i = 0; i < gamma.value; ++i) {
    const long block = i / 2;
    long col = (i % 2 == 0) ? (t - r + 1) + block * period : (3L * t - 2 * r) + block * period;
    if (col > n) {
      col = n;
      clamped = true;
    }
    plan.towers.towers.push_back(VertexId::of(i % 2 == 0 ? 2 : 1, static_cast<int>(col)));
  }
  detail::dedupe_in_order(plan.towers.towers);
  std::sort(plan.towers.towers.begin(), plan.towers.towers.end());
  plan.claims_efficient = !clamped;
  return plan;
}

enum class LatticeKind { KingT1, KingT2, Triangular };

constexpr std::string_view to_string(LatticeKind k) {
  switch (k) {
    case LatticeKind::KingT1: return "king-t1";
    case LatticeKind::KingT2: return "king-t2";
    case LatticeKind::Triangular: return "triangular";
  }
  return "?";
}

/// Periodic tower set {x*g1 + y*g2 : x, y integers} on an infinite lattice.
struct LatticePattern {
  LatticeKind kind = LatticeKind::KingT1;
  int t = 2;
  int r = 1;
  LatticePoint g1;  ///< image of index (1,0)
  LatticePoint g2;  ///< image of index (0,1)

  LatticePoint at(long x, long y) const { return {x * g1.x + y * g2.x, x * g1.y + y * g2.y}; }

  long determinant() const { return g1.x * g2.y - g2.x * g1.y; }

  bool contains(LatticePoint p) const {
    const long det = determinant();
    const long xn = p.x * g2.y - g2.x * p.y;
    const long yn = g1.x * p.y - p.x * g1.y;
    return xn % det == 0 && yn % det == 0;
  }

  /// Pattern points with lo.x <= x <= hi.x and lo.y <= y <= hi.y, row-major by y then x.
  std::vector<LatticePoint> points_in_box(LatticePoint lo, LatticePoint hi) const {
    std::vector<LatticePoint> out;
    for (long y = lo.y; y <= hi.y; ++y)
      for (long x = lo.x; x <= hi.x; ++x)
        if (contains({x, y})) out.push_back({x, y});
    return out;
  }

  long distance(LatticePoint a, LatticePoint b) const {
    return kind == LatticeKind::Triangular ? slant_lattice_distance(a, b) : king_distance(a, b);
  }

  /// Smallest positive x with (x, 0) in the pattern.
  long row_period() const {
    for (long x = 1;; ++x)
      if (contains({x, 0})) return x;
  }
};

/// r = 1: towers at (x(2t-1), y(2t-1)). r = 2: towers at ((2t-r)x - y, x + (2t-r)y).
inline LatticePattern king_lattice_pattern(int t, int r) {
  require(t > 1, ErrorCode::HypothesisViolated, "king lattice patterns need t > 1");
  require(r == 1 || r == 2, ErrorCode::UnsupportedR, "king lattice patterns exist for r in {1,2}");
  if (r == 1) return {LatticeKind::KingT1, t, r, {2L * t - 1, 0}, {0, 2L * t - 1}};
  return {LatticeKind::KingT2, t, r, {2L * t - r, 1}, {-1, 2L * t - r}};
}

/// Towers at [(2t-r)x + (t-r)y](-1,0) + [tx + (2t-r)y](1,1) on the slant lattice.
inline LatticePattern triangular_lattice_pattern(int t, int r) {
  detail::require_tr(t, r);
  return {LatticeKind::Triangular, t, r, {static_cast<long>(r) - t, t}, {t, 2L * t - r}};
}

using LatticeReport = BasicVerificationReport<LatticePoint>;

/// Checks reception on the interior square |x|,|y| <= halfwidth - t of a
/// window, counting every pattern tower whose zone reaches the window.
inline LatticeReport verify_lattice_window(const LatticePattern& pattern, int t, int r, int halfwidth) {
  detail::require_tr(t, r);
  require(halfwidth >= 3 * t, ErrorCode::WindowTooSmall,
          "halfwidth " + std::to_string(halfwidth) + " < 3t = " + std::to_string(3 * t));
  const long reach = halfwidth + t - 1;
  const auto towers = pattern.points_in_box({-reach, -reach}, {reach, reach});
  const long inner = halfwidth - t;
  std::vector<LatticePoint> checked;
  std::vector<int> reception, hits;
  for (long y = -inner; y <= inner; ++y)
    for (long x = -inner; x <= inner; ++x) {
      int f = 0, h = 0;
      for (const auto& w : towers) {
        const long d = pattern.distance({x, y}, w);
        if (d <= t - 1) {
          f += static_cast<int>(t - d);
          ++h;
        }
      }
      checked.push_back({x, y});
      reception.push_back(f);
      hits.push_back(h);
    }
  return detail::summarize(checked, reception, hits, t, r, static_cast<int>(towers.size()));
}

/// Slant-grid starting tile: `height` rows by `width` columns cut from the
/// slant lattice pattern with a tower at the origin. `towers` lists every
/// pattern tower whose zone reaches the tile, with y pulled into the tile's
/// rows (lattice coordinates, x unclamped).
struct SlantTile {
  int height = 0;
  int width = 0;
  long period = 0;
  std::vector<LatticePoint> towers;
  bool width_matches_table = false;
  bool dominated = false;
  PlacementPlan standalone;  ///< the tile as its own S_{height,width}, fully clamped
};

inline SlantTile slant_starting_tile(int t, int r) {
  const auto& row = slant_table_row(t, r);
  const auto pattern = triangular_lattice_pattern(t, r);
  SlantTile tile;
  tile.height = row.row_modulus;
  tile.period = pattern.row_period();
  tile.width = static_cast<int>(tile.period + 1);
  tile.width_matches_table = tile.width == row.col_modulus;

  const long reach = t - 1;
  const auto candidates =
      pattern.points_in_box({-reach, -reach}, {tile.width - 1 + reach, tile.height - 1 + reach});
  std::set<LatticePoint> kept;
  for (const auto& w : candidates) {
    bool reaches = false;
    for (long y = 0; y < tile.height && !reaches; ++y)
      for (long x = 0; x < tile.width && !reaches; ++x) reaches = pattern.distance({x, y}, w) <= reach;
    if (reaches) kept.insert({w.x, std::clamp<long>(w.y, 0, tile.height - 1)});
  }
  tile.towers.assign(kept.begin(), kept.end());

  auto& plan = tile.standalone;
  plan.graph = family::Slant{tile.height, tile.width};
  plan.towers.t = t;
  plan.r = r;
  plan.theorem_tag = slant_table_tag(t, r);
  for (const auto& w : tile.towers) {
    const long x = std::clamp<long>(w.x, 0, tile.width - 1);
    plan.towers.towers.push_back(VertexId::of(static_cast<int>(w.y + 1), static_cast<int>(x + 1)));
  }
  detail::dedupe_in_order(plan.towers.towers);
  std::sort(plan.towers.towers.begin(), plan.towers.towers.end());
  tile.dominated = verify(build(plan.graph), plan.towers, r).dominated;
  return tile;
}

/// Tiles S_{m,n} with the starting tile: horizontally adjacent tiles share
/// their corner column (translation by the pattern's row period), vertical
/// strips of tile height are independent. Towers are pulled inward onto the
/// grid and merged when they coincide.
namespace detail {

/// Drops towers, in row-major order, whose removal keeps every vertex at
/// reception >= r. Sets that do not dominate are returned unchanged.
inline TowerSet prune_redundant(const GraphInstance& g, TowerSet ts, int r) {
  const auto idx = tower_indices(g, ts);
  auto f = compute_reception(g, ts).values;
  if (std::any_of(f.begin(), f.end(), [&](int x) { return x < r; })) return ts;
  std::vector<char> keep(idx.size(), 1);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const auto dist = g.bfs_from(idx[i]);
    bool needed = false;
    for (int v = 0; v < g.vertex_count() && !needed; ++v)
      needed = f[v] - std::max(0, ts.t - dist[v]) < r;
    if (needed) continue;
    keep[i] = 0;
    for (int v = 0; v < g.vertex_count(); ++v) f[v] -= std::max(0, ts.t - dist[v]);
  }
  TowerSet out{{}, ts.t};
  for (std::size_t i = 0; i < idx.size(); ++i)
    if (keep[i]) out.towers.push_back(ts.towers[i]);
  return out;
}

}  // namespace detail

inline PlacementPlan slant_tile_cover(int m, int n, int t, int r) {
  require(m >= 1 && n >= 1, ErrorCode::InvalidDimensions, "slant grid needs m, n >= 1");
  const auto bound = slant_upper_bound(m, n, t, r);
  const auto tile = slant_starting_tile(t, r);
  const long across = std::max<long>(1, detail::ceil_div(n - 1, tile.period));
  const long strips = detail::ceil_div(m, tile.height);

  PlacementPlan plan{family::Slant{m, n}, {{}, t}, r, bound.theorem_tag, false, ""};
  std::set<VertexId> placed;
  for (long s = 0; s < strips; ++s)
    for (long j = 0; j < across; ++j)
      for (const auto& w : tile.towers) {
        const long x = std::clamp<long>(w.x + j * tile.period, 0, n - 1);
        const long y = std::clamp<long>(w.y + s * tile.height, 0, m - 1);
        const auto v = VertexId::of(static_cast<int>(y + 1), static_cast<int>(x + 1));
        if (placed.insert(v).second) plan.towers.towers.push_back(v);
      }
  std::sort(plan.towers.towers.begin(), plan.towers.towers.end());
  const auto before = plan.towers.towers.size();
  plan.towers = detail::prune_redundant(build(plan.graph), plan.towers, r);
  plan.note = "tile " + std::to_string(tile.height) + "x" + std::to_string(tile.width) + " with " +
              std::to_string(tile.towers.size()) + " towers";
  if (!tile.width_matches_table) plan.note += "; tile width differs from the table modulus";
  if (!tile.dominated) plan.note += "; starting tile fails verification";
  if (plan.towers.towers.size() < before)
    plan.note += "; " + std::to_string(before - plan.towers.towers.size()) + " redundant towers pruned";
  return plan;
}

/// Union of the path placements on each part of a path decomposition.
/// Shared endpoints are kept once, so the count can undercut the bound.
inline PlacementPlan tree_towers(const family::Tree& tree, const PathDecomposition& parts, int t, int r) {
  const auto g = build(tree);
  const auto bound = tree_decomposition_bound(g, parts, t, r);
  PlacementPlan plan{tree, {{}, t}, r, bound.theorem_tag, false, ""};
  for (const auto& part : parts) {
    const auto local = path_towers(static_cast<int>(part.size()), t, r);
    for (const auto& w : local.towers.towers) plan.towers.towers.push_back(VertexId::of(part[w[0] - 1]));
  }
  detail::dedupe_in_order(plan.towers.towers);
  std::sort(plan.towers.towers.begin(), plan.towers.towers.end());
  plan.note = bound.note;
  return plan;
}

}  // namespace bcast
