#pragma once

// Family-driven entry points: pick the closed form and the construction that
// apply to a graph family, as the CLI and the audit do.

#include "bcast/closed_forms.hpp"
#include "bcast/constructors.hpp"

namespace bcast {

struct DispatchOptions {
  BlockShape block = BlockShape::TwoByTwo;  ///< 3D starting block
  std::optional<PathDecomposition> decomposition;  ///< trees; default pairs edges
};

inline BlockShape parse_block_shape(const std::string& s) {
  if (s == "2x2") return BlockShape::TwoByTwo;
  if (s == "3xN" || s == "3xn") return BlockShape::ThreeByN;
  if (s == "3x3") return BlockShape::ThreeByThree;
  throw Error(ErrorCode::ParseError, "block must be 2x2, 3xN or 3x3, got \"" + s + "\"");
}

namespace detail {
inline PathDecomposition decomposition_for(const family::Tree& tree, const DispatchOptions& opt) {
  return opt.decomposition ? *opt.decomposition : pair_path_decomposition(build(tree));
}
}  // namespace detail

/// Exact value where a formula is claimed for these parameters, else the best stated bound.
inline GammaResult gamma_for(const GraphFamily& f, int t, int r, const DispatchOptions& opt = {}) {
  struct V {
    int t, r;
    const DispatchOptions& opt;
    GammaResult operator()(const family::Path& p) const { return path_gamma(p.n, t, r); }
    GammaResult operator()(const family::Cycle& c) const { return cycle_upper_bound(c.n, t, r); }
    GammaResult operator()(const family::Grid& g) const { return grid_gamma(g.m, g.n, t, r); }
    GammaResult operator()(const family::Grid3D& g) const {
      if (g.m == 2 && g.n == 2 && t == 2 && r == 1) return grid3d_2_2_k_gamma(g.k, t, r);
      return grid3d_upper_bound(g.m, g.n, g.k, t, r, block3d_dims(opt.block, t, r));
    }
    GammaResult operator()(const family::Slant& s) const {
      if (s.m == 2 && t > r) return slant_gamma_2xn(s.n, t, r);
      return slant_upper_bound(s.m, s.n, t, r);
    }
    GammaResult operator()(const family::King& k) const { return king_gamma(k.m, k.n, t, r); }
    GammaResult operator()(const family::Tree& tr) const {
      return tree_decomposition_bound(build(tr), detail::decomposition_for(tr, opt), t, r);
    }
  };
  return std::visit(V{t, r, opt}, f);
}

inline PlacementPlan construct_for(const GraphFamily& f, int t, int r, const DispatchOptions& opt = {}) {
  struct V {
    int t, r;
    const DispatchOptions& opt;
    PlacementPlan operator()(const family::Path& p) const { return path_towers(p.n, t, r); }
    PlacementPlan operator()(const family::Cycle& c) const { return cycle_towers(c.n, t, r); }
    PlacementPlan operator()(const family::Grid& g) const { return grid_towers(g.m, g.n, t, r); }
    PlacementPlan operator()(const family::Grid3D& g) const {
      return grid3d_cover(g.m, g.n, g.k, t, r, block3d_dims(opt.block, t, r));
    }
    PlacementPlan operator()(const family::Slant& s) const {
      if (s.m == 2 && t > r) return slant_towers_2xn(s.n, t, r);
      return slant_tile_cover(s.m, s.n, t, r);
    }
    PlacementPlan operator()(const family::King& k) const { return king_towers(k.m, k.n, t, r); }
    PlacementPlan operator()(const family::Tree& tr) const {
      return tree_towers(tr, detail::decomposition_for(tr, opt), t, r);
    }
  };
  return std::visit(V{t, r, opt}, f);
}

}  // namespace bcast
