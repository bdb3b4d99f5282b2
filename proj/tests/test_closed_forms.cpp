#include <gtest/gtest.h>

#include <random>

#include "bcast/closed_forms.hpp"
#include "support/oracle.hpp"

using namespace bcast;

namespace {
template <class F>
ErrorCode code_of(F fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

int oracle_gamma(const oracle::Graph& g, int t, int r) { return oracle::gamma(g, t, r)->gamma; }
}  // namespace

TEST(PathGamma, Examples) {
  EXPECT_EQ(path_gamma(5, 2, 1).value, 2);
  EXPECT_EQ(path_gamma(9, 1, 1).value, 9);
  EXPECT_EQ(path_gamma(7, 3, 2).value, 2);
  EXPECT_EQ(path_gamma(9, 3, 1).value, 2);
  const auto g = path_gamma(5, 2, 1);
  EXPECT_EQ(g.kind, GammaKind::ExactFormula);
  EXPECT_TRUE(g.hypothesis_ok);
  EXPECT_FALSE(g.theorem_tag.empty());
}

TEST(PathGamma, DerivedValuesAgreeWithReference) {
  EXPECT_EQ(oracle_gamma(oracle::path(5), 2, 1), 2);
  EXPECT_EQ(oracle_gamma(oracle::path(7), 3, 2), 2);
  EXPECT_EQ(oracle_gamma(oracle::path(9), 3, 1), 2);
}

TEST(PathGamma, Errors) {
  EXPECT_EQ(code_of([] { path_gamma(5, 2, 3); }), ErrorCode::HypothesisViolated);
  EXPECT_EQ(code_of([] { path_gamma(0, 2, 1); }), ErrorCode::HypothesisViolated);
  EXPECT_EQ(code_of([] { path_gamma(3, 0, 0); }), ErrorCode::HypothesisViolated);
}

TEST(PathGamma, Monotonicity) {
  for (int t = 1; t <= 5; ++t)
    for (int r = 1; r <= t; ++r)
      for (int n = 1; n <= 40; ++n) {
        const long v = path_gamma(n, t, r).value;
        if (n < 40) { EXPECT_LE(v, path_gamma(n + 1, t, r).value); }
        if (r < t) { EXPECT_LE(v, path_gamma(n, t, r + 1).value); }
        if (t < 5) { EXPECT_GE(v, path_gamma(n, t + 1, r).value); }
      }
}

TEST(GridStartingBlock, Examples) {
  EXPECT_EQ(grid_starting_block_dims(2, 2, 1).dims, (std::vector<int>{2, 3}));
  EXPECT_EQ(grid_starting_block_dims(3, 3, 1).dims, (std::vector<int>{3, 4}));
  EXPECT_EQ(grid_starting_block_dims(3, 3, 1).towers_required, 2);
  EXPECT_EQ(code_of([] { grid_starting_block_dims(5, 2, 1); }), ErrorCode::HypothesisViolated);
  EXPECT_EQ(oracle_gamma(oracle::grid(3, 4), 3, 1), 2);
}

TEST(GridGamma, Examples) {
  EXPECT_EQ(grid_gamma(2, 3, 2, 1).value, 2);
  EXPECT_EQ(grid_gamma(2, 5, 2, 1).value, 3);
  EXPECT_EQ(grid_gamma(3, 7, 3, 1).value, 3);
  EXPECT_EQ(oracle_gamma(oracle::grid(2, 3), 2, 1), 2);
  EXPECT_EQ(oracle_gamma(oracle::grid(2, 5), 2, 1), 3);
  EXPECT_EQ(oracle_gamma(oracle::grid(3, 7), 3, 1), 3);
  EXPECT_EQ(code_of([] { grid_gamma(2, 2, 2, 1); }), ErrorCode::HypothesisViolated);  // n below block width
  EXPECT_EQ(code_of([] { grid_gamma(4, 9, 2, 1); }), ErrorCode::HypothesisViolated);  // 2t-r <= m-1
}

TEST(Block3D, Dims) {
  EXPECT_EQ(block3d_dims(BlockShape::TwoByTwo, 2, 1).dims, (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(block3d_dims(BlockShape::TwoByTwo, 3, 2).dims, (std::vector<int>{2, 2, 3}));
  EXPECT_EQ(block3d_dims(BlockShape::ThreeByThree, 3, 2).dims, (std::vector<int>{3, 3, 1}));
  EXPECT_EQ(block3d_dims(BlockShape::ThreeByThree, 4, 1).dims, (std::vector<int>{3, 3, 4}));
  EXPECT_EQ(block3d_dims(BlockShape::ThreeByN, 4, 1).dims, (std::vector<int>{3, 5, 2}));
  EXPECT_EQ(code_of([] { block3d_dims(BlockShape::ThreeByThree, 4, 3); }), ErrorCode::UnsupportedShapeForR);
  EXPECT_EQ(code_of([] { block3d_dims(BlockShape::ThreeByN, 2, 1); }), ErrorCode::HypothesisViolated);
  EXPECT_EQ(code_of([] { block3d_dims(BlockShape::TwoByTwo, 1, 1); }), ErrorCode::HypothesisViolated);
}

TEST(Block3D, AllShapesShareTheDimensionSum) {
  for (int t = 3; t <= 6; ++t)
    for (int r = 1; r <= 2; ++r) {
      const int q = block3d_max_sum(t, r);
      EXPECT_EQ(block3d_dims(BlockShape::TwoByTwo, t, r).sum(), q);
      EXPECT_EQ(block3d_dims(BlockShape::ThreeByN, t, r).sum(), q);
      EXPECT_EQ(block3d_dims(BlockShape::ThreeByThree, t, r).sum(), q);
    }
}

TEST(Block3D, Family) {
  const auto six = block3d_family(6, 2, 1);
  auto has = [&](const std::vector<BlockDims>& fam, std::vector<int> d) {
    return std::any_of(fam.begin(), fam.end(), [&](const BlockDims& b) { return b.dims == d; });
  };
  EXPECT_TRUE(has(six, {1, 2, 3}));
  EXPECT_TRUE(has(six, {2, 2, 2}));
  EXPECT_TRUE(has(six, {1, 1, 4}));
  EXPECT_EQ(six.size(), 3u);
  for (const auto& b : six) EXPECT_EQ(b.sum(), 6);
  const auto three = block3d_family(3, 2, 1);
  ASSERT_EQ(three.size(), 1u);
  EXPECT_EQ(three[0].dims, (std::vector<int>{1, 1, 1}));
  EXPECT_TRUE(has(block3d_family(7, 3, 2), {1, 3, 3}));
  EXPECT_EQ(oracle_gamma(oracle::grid3d(3, 3, 1), 3, 2), 2);
  EXPECT_EQ(code_of([] { block3d_family(2, 2, 1); }), ErrorCode::HypothesisViolated);
}

TEST(Grid3DBound, Examples) {
  const auto block = block3d_dims(BlockShape::TwoByTwo, 2, 1);
  const auto b = grid3d_upper_bound(2, 2, 5, 2, 1, block);
  EXPECT_EQ(b.value, 6);
  EXPECT_EQ(b.kind, GammaKind::UpperBound);
  EXPECT_EQ(grid3d_upper_bound(2, 2, 2, 2, 1, block).value, 2);
  EXPECT_EQ(grid3d_upper_bound(4, 4, 4, 2, 1, block).value, 16);
  EXPECT_EQ(oracle_gamma(oracle::grid3d(2, 2, 5), 2, 1), 5);
}

TEST(Grid3DBound, PicksBestOrientation) {
  const auto block = block3d_dims(BlockShape::ThreeByN, 4, 1);  // 3x5x2
  // 5x2x3 box fits one rotated block.
  EXPECT_EQ(grid3d_upper_bound(5, 2, 3, 4, 1, block).value, 2);
}

TEST(Grid3D22k, Examples) {
  EXPECT_EQ(grid3d_2_2_k_gamma(5).value, 5);
  EXPECT_EQ(grid3d_2_2_k_gamma(3).value, 3);
  EXPECT_EQ(grid3d_2_2_k_gamma(1).value, 1);  // claimed value; the oracle disagrees (see acceptance)
  EXPECT_EQ(oracle_gamma(oracle::grid3d(2, 2, 3), 2, 1), 3);
  EXPECT_EQ(code_of([] { grid3d_2_2_k_gamma(3, 3, 1); }), ErrorCode::HypothesisViolated);
}

TEST(KingGamma, Examples) {
  EXPECT_EQ(king_gamma(3, 6, 2, 1).value, 2);
  EXPECT_EQ(king_gamma(3, 10, 2, 1).value, 4);
  EXPECT_EQ(king_gamma(1, 5, 2, 1).value, 2);
  EXPECT_EQ(king_gamma(3, 8, 2, 1).value, 3);
  EXPECT_EQ(oracle_gamma(oracle::king(3, 8), 2, 1), 3);
  EXPECT_EQ(oracle_gamma(oracle::king(1, 5), 2, 1), 2);
  EXPECT_EQ(code_of([] { king_gamma(5, 4, 2, 1); }), ErrorCode::HypothesisViolated);
  EXPECT_EQ(code_of([] { king_gamma(1, 4, 2, 2); }), ErrorCode::HypothesisViolated);
}

TEST(KingGamma, EqualsPathFormulaWhereBothApply) {
  for (int t = 2; t <= 5; ++t)
    for (int r = 1; r < t; ++r)
      for (int m = 1; m <= 2 * (t - r) + 1; ++m)
        for (int n = 1; n <= 30; ++n) EXPECT_EQ(king_gamma(m, n, t, r).value, path_gamma(n, t, r).value);
}

TEST(SlantGamma2xn, Examples) {
  EXPECT_EQ(slant_gamma_2xn(5, 2, 1).value, 2);
  EXPECT_EQ(slant_gamma_2xn(8, 2, 1).value, 4);
  EXPECT_EQ(slant_gamma_2xn(1, 3, 1).value, 1);
  EXPECT_EQ(oracle_gamma(oracle::slant(2, 8), 2, 1), 4);
  EXPECT_EQ(code_of([] { slant_gamma_2xn(5, 2, 2); }), ErrorCode::HypothesisViolated);
}

TEST(SlantUpperBound, Examples) {
  EXPECT_EQ(slant_upper_bound(2, 8, 2, 1).value, 5);
  EXPECT_EQ(slant_upper_bound(2, 14, 3, 2).value, 7);
  EXPECT_EQ(slant_upper_bound(3, 9, 2, 1).value, 18);
  EXPECT_EQ(slant_upper_bound(2, 8, 2, 1).theorem_tag, slant_table_tag(2, 1));
  EXPECT_EQ(code_of([] { slant_upper_bound(4, 4, 5, 1); }), ErrorCode::UnsupportedTRPair);
}

TEST(SlantUpperBound, OneSidedRemainderUsesRemainderColumnAndSaysSo) {
  const auto b = slant_upper_bound(2, 9, 2, 1);  // l = 0, k = 1
  EXPECT_EQ(b.value, (4 * 2 + 1) * 2);
  EXPECT_NE(b.note.find("remainder"), std::string::npos);
}

TEST(SlantUpperBound, TableRowsAsData) {
  ASSERT_EQ(kSlantTable.size(), 6u);
  for (const auto& row : kSlantTable) {
    EXPECT_EQ(row.row_modulus, row.t - row.r + 1);
    EXPECT_EQ(slant_table_value(row, 1, 1, 0, 0), row.coef + 1);
    EXPECT_EQ(slant_table_value(row, 2, 3, 1, 0), (row.coef * 4 + 1) * 3);
  }
}

TEST(CycleBound, Examples) {
  EXPECT_EQ(cycle_upper_bound(6, 2, 1).value, 2);
  EXPECT_EQ(cycle_upper_bound(3, 2, 1).value, 1);
  EXPECT_EQ(cycle_upper_bound(4, 1, 1).value, 4);
  EXPECT_EQ(cycle_upper_bound(6, 2, 1).kind, GammaKind::UpperBound);
  EXPECT_EQ(oracle_gamma(oracle::cycle(6), 2, 1), 2);
  EXPECT_EQ(oracle_gamma(oracle::cycle(3), 2, 1), 1);
  EXPECT_EQ(code_of([] { cycle_upper_bound(2, 1, 1); }), ErrorCode::HypothesisViolated);
}

TEST(TreeBound, Examples) {
  auto p7 = build(family::Tree{{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}}});
  EXPECT_EQ(tree_decomposition_bound(p7, {{1, 2, 3, 4, 5, 6, 7}}, 2, 1).value, 3);
  EXPECT_EQ(oracle_gamma(oracle::path(7), 2, 1), 3);

  // Spider: centre 1, legs 1-2-3, 1-4-5, 1-6-7.
  family::Tree spider{{{1, 2}, {2, 3}, {1, 4}, {4, 5}, {1, 6}, {6, 7}}};
  auto sp = build(spider);
  EXPECT_EQ(tree_decomposition_bound(sp, {{3, 2, 1, 4, 5}, {1, 6, 7}}, 2, 1).value, 3);
  EXPECT_LE(oracle_gamma(oracle::tree(7, spider.edges), 2, 1), 3);

  auto edge = build(family::Tree{{{1, 2}}});
  EXPECT_EQ(tree_decomposition_bound(edge, {{1, 2}}, 2, 1).value, 1);
}

TEST(TreeBound, RejectsBadDecompositions) {
  family::Tree spider{{{1, 2}, {2, 3}, {1, 4}, {4, 5}, {1, 6}, {6, 7}}};
  auto sp = build(spider);
  EXPECT_EQ(code_of([&] { tree_decomposition_bound(sp, {{3, 2, 1, 4, 5}}, 2, 1); }),
            ErrorCode::NotAPathDecomposition);  // missing edges
  EXPECT_EQ(code_of([&] { tree_decomposition_bound(sp, {{3, 2, 1, 4, 5}, {1, 6, 7}, {2, 1}}, 2, 1); }),
            ErrorCode::NotAPathDecomposition);  // edge twice
  EXPECT_EQ(code_of([&] { tree_decomposition_bound(sp, {{3, 2, 1, 4, 5}, {1, 7}}, 2, 1); }),
            ErrorCode::NotAPathDecomposition);  // not adjacent
  EXPECT_EQ(code_of([&] { tree_decomposition_bound(build(family::Grid{2, 2}), {{1, 2}}, 2, 1); }),
            ErrorCode::NotAPathDecomposition);
}

TEST(TreeBound, PairedDecompositionsAreValid) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    family::Tree tree;
    for (int v = 2; v <= n; ++v) tree.edges.emplace_back(1 + static_cast<int>(rng() % (v - 1)), v);
    auto g = build(tree);
    EXPECT_NO_THROW(validate_path_decomposition(g, pair_path_decomposition(g)));
    EXPECT_NO_THROW(validate_path_decomposition(g, pair_path_decomposition(g, &rng)));
    int odd = 0;
    for (int v = 0; v < g.vertex_count(); ++v) odd += g.neighbors(v).size() % 2;
    if (n > 1) { EXPECT_EQ(static_cast<int>(pair_path_decomposition(g).size()), odd / 2); }
  }
}
