#pragma once

// Closed-form (t,r) broadcast domination numbers, starting-block dimensions
// and upper bounds. Every value carries a tag naming the claim it evaluates,
// so a disagreement with the exact solver can be attributed.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bcast/graph.hpp"

namespace bcast {

enum class GammaKind { ExactFormula, UpperBound };

constexpr std::string_view to_string(GammaKind k) {
  return k == GammaKind::ExactFormula ? "exact-formula" : "upper-bound";
}

struct GammaResult {
  long value = 0;
  GammaKind kind = GammaKind::ExactFormula;
  std::string theorem_tag;
  bool hypothesis_ok = true;
  std::string note;
};

/// Dimensions of a grid (2D or 3D) claimed to be dominated by two towers.
struct BlockDims {
  std::vector<int> dims;
  int towers_required = 2;

  int sum() const {
    int s = 0;
    for (int d : dims) s += d;
    return s;
  }
  friend bool operator==(const BlockDims&, const BlockDims&) = default;
};

namespace detail {

constexpr long ceil_div(long num, long den) { return num <= 0 ? 0 : (num + den - 1) / den; }

inline void require_tr(int t, int r) {
  require(r >= 1 && t >= r, ErrorCode::HypothesisViolated,
          "need t >= r >= 1 (got t=" + std::to_string(t) + ", r=" + std::to_string(r) + ")");
}

}  // namespace detail

inline GammaResult path_gamma(int n, int t, int r) {
  detail::require_tr(t, r);
  require(n >= 1, ErrorCode::HypothesisViolated, "path needs n >= 1");
  return {detail::ceil_div(n + r - 1, 2L * t - r), GammaKind::ExactFormula, "path-formula", true, ""};
}

/// Width of the m-row grid block that two corner towers dominate efficiently.
inline BlockDims grid_starting_block_dims(int m, int t, int r) {
  detail::require_tr(t, r);
  require(m >= 2, ErrorCode::HypothesisViolated, "grid starting block needs m >= 2");
  const int width = 2 * t - r - (m - 2);
  require(width > 0, ErrorCode::HypothesisViolated,
          "2t - r - (m - 2) = " + std::to_string(width) + " is not positive");
  return {{m, width}, 2};
}

inline GammaResult grid_gamma(int m, int n, int t, int r) {
  detail::require_tr(t, r);
  require(m >= 2, ErrorCode::HypothesisViolated, "grid formula needs m >= 2");
  require(2 * t - r > m - 1, ErrorCode::HypothesisViolated, "grid formula needs 2t - r > m - 1");
  const int block = 2 * t - r - (m - 2);
  require(n >= block, ErrorCode::HypothesisViolated,
          "grid formula needs n >= 2t - r - (m - 2) = " + std::to_string(block));
  return {2 + detail::ceil_div(n - block, block - 1), GammaKind::ExactFormula, "grid-formula", true, ""};
}

enum class BlockShape { TwoByTwo, ThreeByN, ThreeByThree };

constexpr std::string_view to_string(BlockShape s) {
  switch (s) {
    case BlockShape::TwoByTwo: return "2x2";
    case BlockShape::ThreeByN: return "3xN";
    case BlockShape::ThreeByThree: return "3x3";
  }
  return "?";
}

/// 3D starting blocks: 2x2x(2t-r-1), 3x(2t-r-2)x2, and 3x3x(2t-4) / 3x3x(2t-5)
/// for r = 1 / r = 2.
inline BlockDims block3d_dims(BlockShape shape, int t, int r) {
  detail::require_tr(t, r);
  switch (shape) {
    case BlockShape::TwoByTwo: {
      const int k = 2 * t - r - 1;
      require(k >= 1, ErrorCode::HypothesisViolated, "2x2 block needs 2t - r - 1 >= 1");
      return {{2, 2, k}, 2};
    }
    case BlockShape::ThreeByN: {
      require(t > 2, ErrorCode::HypothesisViolated, "3xN block needs t > 2");
      return {{3, 2 * t - r - 2, 2}, 2};
    }
    case BlockShape::ThreeByThree: {
      require(r <= 2, ErrorCode::UnsupportedShapeForR, "3x3 block is only known for r in {1,2}");
      require(t > 2, ErrorCode::HypothesisViolated, "3x3 block needs t > 2");
      return {{3, 3, r == 1 ? 2 * t - 4 : 2 * t - 5}, 2};
    }
  }
  throw Error(ErrorCode::HypothesisViolated, "unknown block shape");
}

/// Largest dimension sum m+n+k a box may have and still be dominated by towers
/// at opposite corners (1,1,k) and (m,n,1): every vertex has
/// d(v,w1) + d(v,w2) = m+n+k-3.
constexpr int block3d_max_sum(int t, int r) { return 2 * t - r + 3; }

/// All dimension triples (sorted ascending, one per permutation class) with
/// the given sum.
inline std::vector<BlockDims> block3d_family(int q, int t, int r) {
  detail::require_tr(t, r);
  require(q >= 3, ErrorCode::HypothesisViolated, "dimension sum must be at least 3");
  require(q <= block3d_max_sum(t, r), ErrorCode::HypothesisViolated,
          "no (t,r) starting block has dimension sum " + std::to_string(q));
  std::vector<BlockDims> out;
  for (int a = 1; 3 * a <= q; ++a)
    for (int b = a; a + 2 * b <= q; ++b) out.push_back({{a, b, q - a - b}, 2});
  return out;
}

/// Orientation of `block` that minimises the number of translated copies
/// needed to cover an m x n x k grid.
struct BlockCover {
  std::array<int, 3> orientation{};
  std::array<int, 3> counts{};
  long blocks = 0;
};

inline BlockCover best_block_cover(int m, int n, int k, const BlockDims& block) {
  require(block.dims.size() == 3, ErrorCode::InvalidDimensions, "3D block needs three dimensions");
  std::array<int, 3> p{block.dims[0], block.dims[1], block.dims[2]};
  std::sort(p.begin(), p.end());
  const std::array<int, 3> target{m, n, k};
  BlockCover best;
  best.blocks = -1;
  do {
    BlockCover c{p, {}, 1};
    for (int a = 0; a < 3; ++a) {
      c.counts[a] = static_cast<int>(detail::ceil_div(target[a], p[a]));
      c.blocks *= c.counts[a];
    }
    if (best.blocks < 0 || c.blocks < best.blocks) best = c;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline GammaResult grid3d_upper_bound(int m, int n, int k, int t, int r, const BlockDims& block) {
  detail::require_tr(t, r);
  require(m >= 1 && n >= 1 && k >= 1, ErrorCode::InvalidDimensions, "grid3d needs positive dims");
  require(block.dims.size() == 3 && std::all_of(block.dims.begin(), block.dims.end(), [](int d) { return d >= 1; }),
          ErrorCode::InvalidDimensions, "3D block needs three positive dimensions");
  require(block.sum() <= block3d_max_sum(t, r), ErrorCode::HypothesisViolated,
          "block is not a (t,r) starting block");
  const auto cover = best_block_cover(m, n, k, block);
  return {2 * cover.blocks, GammaKind::UpperBound, "grid3d-block-bound", true,
          "B=" + std::to_string(cover.blocks)};
}

inline GammaResult grid3d_2_2_k_gamma(int k, int t = 2, int r = 1) {
  require(t == 2 && r == 1, ErrorCode::HypothesisViolated, "2x2xk formula is only claimed for (t,r)=(2,1)");
  require(k >= 1, ErrorCode::HypothesisViolated, "k must be >= 1");
  return {k, GammaKind::ExactFormula, "grid3d-2x2xk", true, ""};
}

inline GammaResult king_gamma(int m, int n, int t, int r) {
  detail::require_tr(t, r);
  require(t > r, ErrorCode::HypothesisViolated, "king formula needs t > r");
  require(m >= 1 && m <= 2 * (t - r) + 1, ErrorCode::HypothesisViolated, "king formula needs m <= 2(t - r) + 1");
  require(n >= 1, ErrorCode::HypothesisViolated, "king formula needs n >= 1");
  return {detail::ceil_div(n + r - 1, 2L * t - r), GammaKind::ExactFormula, "king-formula", true, ""};
}

inline GammaResult slant_gamma_2xn(int n, int t, int r) {
  detail::require_tr(t, r);
  require(t > r, ErrorCode::HypothesisViolated, "2xn slant formula needs t > r");
  require(n >= 1, ErrorCode::HypothesisViolated, "2xn slant formula needs n >= 1");
  return {detail::ceil_div(2L * (n + r - 1), 4L * t - 2 * r - 1), GammaKind::ExactFormula,
          "slant-2xn-formula", true, ""};
}

/// One row of the slant-grid bound table: m = row_modulus*p + l,
/// n = col_modulus*q + k, bound (coef*q + 1)p when k = l = 0 and
/// (coef*(q+1) + 1)(p+1) otherwise.
struct SlantTableRow {
  int t;
  int r;
  int row_modulus;
  int col_modulus;
  int coef;
};

inline constexpr std::array<SlantTableRow, 6> kSlantTable{{
    {2, 1, 2, 8, 4},
    {3, 1, 3, 20, 7},
    {3, 2, 2, 14, 6},
    {4, 2, 3, 15, 14},
    {4, 3, 2, 22, 8},
    {5, 4, 2, 32, 10},
}};

inline const SlantTableRow& slant_table_row(int t, int r) {
  for (const auto& row : kSlantTable)
    if (row.t == t && row.r == r) return row;
  throw Error(ErrorCode::UnsupportedTRPair,
              "no slant bound for (t,r)=(" + std::to_string(t) + "," + std::to_string(r) + ")");
}

inline std::string slant_table_tag(int t, int r) {
  return "slant-table-(" + std::to_string(t) + "," + std::to_string(r) + ")";
}

/// Table value for explicit (p, q, l, k).
inline long slant_table_value(const SlantTableRow& row, long p, long q, long l, long k) {
  if (l == 0 && k == 0) return (row.coef * q + 1) * p;
  return (row.coef * (q + 1) + 1) * (p + 1);
}

inline GammaResult slant_upper_bound(int m, int n, int t, int r) {
  const auto& row = slant_table_row(t, r);
  require(m >= 1 && n >= 1, ErrorCode::InvalidDimensions, "slant grid needs m, n >= 1");
  const long p = m / row.row_modulus, l = m % row.row_modulus;
  const long q = n / row.col_modulus, k = n % row.col_modulus;
  GammaResult res{slant_table_value(row, p, q, l, k), GammaKind::UpperBound, slant_table_tag(t, r), true, ""};
  res.note = "p=" + std::to_string(p) + " q=" + std::to_string(q) + " l=" + std::to_string(l) +
             " k=" + std::to_string(k);
  if ((l == 0) != (k == 0)) res.note += "; one remainder is zero, remainder column applied";
  else if (l != 0) res.note += "; remainder column";
  return res;
}

inline GammaResult cycle_upper_bound(int n, int t, int r) {
  detail::require_tr(t, r);
  require(n >= 3, ErrorCode::HypothesisViolated, "cycle needs n >= 3");
  return {detail::ceil_div(n + r - 1, 2L * t - r), GammaKind::UpperBound, "cycle-bound", true, ""};
}

/// A path decomposition lists each part as its vertex labels in path order.
using PathDecomposition = std::vector<std::vector<int>>;

namespace detail {

inline std::pair<int, int> edge_key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

inline void require_tree(const GraphInstance& tree) {
  require(tree.vertices().empty() || tree.vertex(0).arity == 1, ErrorCode::NotAPathDecomposition,
          "path decompositions need a tree with integer labels");
  require(tree.edge_count() == tree.vertex_count() - 1, ErrorCode::NotAPathDecomposition,
          describe(tree.family()) + " is not a tree");
}

}  // namespace detail

/// Checks that `parts` are paths of `tree` that partition its edge set.
inline void validate_path_decomposition(const GraphInstance& tree, const PathDecomposition& parts) {
  detail::require_tree(tree);
  const int n = tree.vertex_count();
  std::map<std::pair<int, int>, int> used;
  for (const auto& part : parts) {
    require(!part.empty(), ErrorCode::NotAPathDecomposition, "empty part");
    require(part.size() >= 2 || n == 1, ErrorCode::NotAPathDecomposition, "part without an edge");
    std::vector<int> sorted(part);
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), ErrorCode::NotAPathDecomposition,
            "part repeats a vertex");
    for (int v : part)
      require(v >= 1 && v <= n, ErrorCode::NotAPathDecomposition, "label " + std::to_string(v) + " not in tree");
    for (std::size_t i = 0; i + 1 < part.size(); ++i) {
      const auto nb = tree.neighbors(part[i] - 1);
      require(std::binary_search(nb.begin(), nb.end(), part[i + 1] - 1), ErrorCode::NotAPathDecomposition,
              "consecutive labels " + std::to_string(part[i]) + "," + std::to_string(part[i + 1]) +
                  " are not adjacent");
      require(++used[detail::edge_key(part[i], part[i + 1])] == 1, ErrorCode::NotAPathDecomposition,
              "edge used by two parts");
    }
  }
  require(static_cast<int>(used.size()) == tree.edge_count(), ErrorCode::NotAPathDecomposition,
          "decomposition misses an edge");
}

inline GammaResult tree_decomposition_bound(const GraphInstance& tree, const PathDecomposition& parts, int t,
                                            int r) {
  detail::require_tr(t, r);
  validate_path_decomposition(tree, parts);
  long total = 0;
  for (const auto& part : parts) total += path_gamma(static_cast<int>(part.size()), t, r).value;
  return {total, GammaKind::UpperBound, "tree-path-decomposition-bound", true,
          std::to_string(parts.size()) + " parts"};
}

/// Builds a path decomposition by pairing up the edges at every vertex and
/// following the resulting trails (a trail in a tree is a path). With a null
/// generator the pairing is by ascending neighbour label, giving the minimum
/// number of parts, (#odd-degree vertices)/2.
template <class Rng = std::mt19937>
PathDecomposition pair_path_decomposition(const GraphInstance& tree, Rng* rng = nullptr) {
  detail::require_tree(tree);
  const int n = tree.vertex_count();
  if (n == 1) return {{1}};
  // partner[v][w]: the neighbour paired with w at v, or -1.
  std::vector<std::map<int, int>> partner(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> inc(tree.neighbors(v).begin(), tree.neighbors(v).end());
    if (rng) std::shuffle(inc.begin(), inc.end(), *rng);
    for (std::size_t i = 0; i < inc.size(); ++i) partner[v][inc[i]] = -1;
    for (std::size_t i = 0; i + 1 < inc.size(); i += 2) {
      partner[v][inc[i]] = inc[i + 1];
      partner[v][inc[i + 1]] = inc[i];
    }
  }
  std::map<std::pair<int, int>, bool> done;
  PathDecomposition parts;
  for (int v = 0; v < n; ++v)
    for (int w : tree.neighbors(v)) {
      if (partner[v][w] != -1 || done[detail::edge_key(v, w)]) continue;
      std::vector<int> part{v + 1};
      int prev = v, cur = w;
      while (true) {
        done[detail::edge_key(prev, cur)] = true;
        part.push_back(cur + 1);
        const int next = partner[cur][prev];
        if (next == -1) break;
        prev = cur;
        cur = next;
      }
      parts.push_back(std::move(part));
    }
  return parts;
}

}  // namespace bcast
