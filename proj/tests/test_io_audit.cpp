#include <gtest/gtest.h>

#include "bcast/bcast.hpp"

using namespace bcast;

TEST(Json, FamilyRoundTrip) {
  const std::vector<GraphFamily> fams{family::Path{4},  family::Cycle{5},         family::Grid{3, 5},
                                      family::Grid3D{2, 2, 5}, family::Slant{2, 8}, family::King{3, 6},
                                      family::Tree{{{1, 2}, {2, 3}}}};
  for (const auto& f : fams) {
    const auto back = family_from_json(family_to_json(f));
    EXPECT_EQ(describe(back), describe(f));
    EXPECT_EQ(family_to_json(back), family_to_json(f));
  }
  EXPECT_EQ(family_to_json(family::Grid{3, 5}), json::parse(R"({"family":"grid","m":3,"n":5})"));
  EXPECT_EQ(family_to_json(family::Tree{{{1, 2}, {2, 3}}}),
            json::parse(R"({"family":"tree","edges":[[1,2],[2,3]]})"));
}

TEST(Json, ParseErrors) {
  for (const char* bad : {R"({"m":3})", R"({"family":"hex","n":3})", R"({"family":"grid","m":3})",
                          R"({"family":"tree","edges":[[1]]})", R"({"family":"path","n":"4"})"}) {
    try {
      family_from_json(json::parse(bad));
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
  EXPECT_THROW(towers_from_json(json::parse(R"({"towers":[[1,2]]})")), Error);
  EXPECT_THROW(towers_from_json(json::parse(R"({"t":2,"towers":[[1,2,3,4]]})")), Error);
}

TEST(Json, TowerSetRoundTrip) {
  const auto ts = towers_from_json(json::parse(R"({"t":3,"towers":[[1,2],[2,5]]})"));
  EXPECT_EQ(ts.t, 3);
  EXPECT_EQ(ts.towers, (std::vector<VertexId>{VertexId::of(1, 2), VertexId::of(2, 5)}));
  EXPECT_EQ(towers_to_json(ts), json::parse(R"({"t":3,"towers":[[1,2],[2,5]]})"));
  const auto path = towers_from_json(json::parse(R"({"t":2,"towers":[2,[5]]})"));
  EXPECT_EQ(path.towers, (std::vector<VertexId>{VertexId::of(2), VertexId::of(5)}));
}

TEST(Json, PlanFeedsVerifyUnchanged) {
  const auto plan = king_towers(3, 6, 2, 1);
  const auto doc = json::parse(plan_to_json(plan).dump());
  EXPECT_EQ(doc["towers"], json::parse("[[2,2],[2,5]]"));
  EXPECT_EQ(doc["version"], kVersion);
  const auto rep = verify(build(family_from_json(doc["graph"])), towers_from_json(doc), doc["r"].get<int>());
  EXPECT_TRUE(rep.dominated);
  const auto j = report_to_json(rep);
  for (const char* key : {"dominated", "min_reception", "deficient", "overlap_vertices", "efficient",
                          "wasted_signal", "total_excess", "r_exceeds_t"})
    EXPECT_TRUE(j.contains(key)) << key;
}

TEST(Json, OracleAndGamma) {
  const auto res = solve(build(family::Grid{2, 3}), 2, 1);
  const auto j = oracle_to_json(res);
  EXPECT_EQ(j["gamma"], 2);
  EXPECT_EQ(j["status"], "optimal");
  EXPECT_TRUE(j["proven_minimal"].get<bool>());
  const auto gj = gamma_to_json(grid_gamma(2, 3, 2, 1));
  EXPECT_EQ(gj["value"], 2);
  EXPECT_EQ(gj["kind"], "exact-formula");
  EXPECT_TRUE(gj["hypothesis_ok"].get<bool>());
  EXPECT_EQ(gj["theorem_tag"], "grid-formula");
}

TEST(Render, TwoByThreeGrid) {
  const auto g = build(family::Grid{2, 3});
  const auto out = render_reception(g, {{VertexId::of(1, 1), VertexId::of(2, 3)}, 2});
  EXPECT_EQ(out, "2T 1  1\n1  1  2T\n");
}

TEST(Render, PlusForLargeValuesAndLayers) {
  const auto g = build(family::Path{3});
  EXPECT_EQ(render_reception(g, {{VertexId::of(1), VertexId::of(2), VertexId::of(3)}, 6}), "+T +T +T\n");
  const auto cube = build(family::Grid3D{2, 2, 2});
  const auto out = render_reception(cube, {{VertexId::of(1, 1, 2), VertexId::of(2, 2, 1)}, 2});
  EXPECT_NE(out.find("layer 1"), std::string::npos);
  EXPECT_NE(out.find("layer 2"), std::string::npos);
}

TEST(Render, WindowsWideGraphs) {
  const auto g = build(family::Path{100});
  const auto plan = path_towers(100, 3, 1);
  const auto out = render_reception(g, plan.towers);
  EXPECT_EQ(out.rfind("columns 1-60 of 100", 0), 0u);
  const auto tail = render_reception(g, plan.towers, {80, 60});
  EXPECT_EQ(tail.rfind("columns 81-100 of 100", 0), 0u);
}

TEST(Dispatch, PicksFormulaAndConstruction) {
  EXPECT_EQ(gamma_for(family::Slant{2, 8}, 2, 1).theorem_tag, slant_gamma_2xn(8, 2, 1).theorem_tag);
  EXPECT_EQ(gamma_for(family::Slant{3, 8}, 2, 1).kind, GammaKind::UpperBound);
  EXPECT_EQ(gamma_for(family::Grid3D{2, 2, 4}, 2, 1).kind, GammaKind::ExactFormula);
  EXPECT_EQ(gamma_for(family::Grid3D{2, 2, 4}, 3, 1).kind, GammaKind::UpperBound);
  EXPECT_EQ(gamma_for(family::Tree{{{1, 2}, {2, 3}}}, 2, 1).value, 1);
  for (const GraphFamily& f : std::vector<GraphFamily>{family::Path{9}, family::Cycle{9}, family::Grid{2, 9},
                                                       family::Grid3D{3, 3, 3}, family::Slant{2, 9},
                                                       family::Slant{5, 9}, family::King{3, 9},
                                                       family::Tree{{{1, 2}, {2, 3}, {2, 4}}}}) {
    const auto plan = construct_for(f, 2, 1);
    EXPECT_TRUE(verify(build(plan.graph), plan.towers, 1).dominated) << describe(f);
  }
  EXPECT_THROW(parse_block_shape("4x4"), Error);
}

TEST(Audit, ClassifyRules) {
  ComparisonRow row{family::Path{3}, 2, 1, {3, GammaKind::ExactFormula, "x", true, ""}, {}, {}, 3,
                    RowStatus::OracleSkipped, 0};
  classify(row);
  EXPECT_EQ(row.status, RowStatus::Match);
  row.oracle = 2;
  classify(row);
  EXPECT_EQ(row.status, RowStatus::Mismatch);
  row.formula.kind = GammaKind::UpperBound;
  classify(row);
  EXPECT_EQ(row.status, RowStatus::BoundGap);
  EXPECT_EQ(row.status_string(), "bound-gap(1)");
  row.oracle = 4;
  classify(row);
  EXPECT_EQ(row.status, RowStatus::Mismatch);
  row.oracle.reset();
  classify(row);
  EXPECT_EQ(row.status, RowStatus::OracleSkipped);
}

TEST(Audit, PathsAllMatch) {
  AuditOptions o;
  o.suite = "paths";
  o.n_max = 14;
  o.t_max = 4;
  const auto rows = run_audit(o);
  EXPECT_EQ(rows.size(), 14u * 10u);
  EXPECT_FALSE(has_mismatch(rows));
  for (const auto& row : rows) {
    EXPECT_EQ(row.status, RowStatus::Match) << describe(row.graph);
    EXPECT_TRUE(row.constructed_dominates.value_or(false));
  }
}

TEST(Audit, KingAllMatch) {
  AuditOptions o;
  o.suite = "king";
  o.t_max = 3;
  const auto rows = run_audit(o);
  EXPECT_FALSE(rows.empty());
  EXPECT_FALSE(has_mismatch(rows));
}

TEST(Audit, Grid3DShowsBoundGaps) {
  AuditOptions o;
  o.suite = "grid3d";
  const auto rows = run_audit(o);
  bool gap = false;
  for (const auto& row : rows) {
    gap = gap || row.status == RowStatus::BoundGap;
    if (row.formula.theorem_tag == "grid3d-2x2xk" && std::get<family::Grid3D>(row.graph).k >= 2) {
      EXPECT_EQ(row.status, RowStatus::Match) << describe(row.graph);
    }
  }
  EXPECT_TRUE(gap);
}

TEST(Audit, RowsSortedAndThreadIndependent) {
  AuditOptions o;
  o.suite = "all";
  o.t_max = 2;
  o.n_max = 8;
  const auto a = run_audit(o);
  o.threads = 4;
  const auto b = run_audit(o);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(describe(a[i].graph), describe(b[i].graph));
    EXPECT_EQ(a[i].t, b[i].t);
    EXPECT_EQ(a[i].r, b[i].r);
    EXPECT_EQ(a[i].status_string(), b[i].status_string());
    if (i > 0) { EXPECT_LE(a[i - 1].graph.index(), a[i].graph.index()); }
  }
}

TEST(Audit, OracleSkippedBeyondCap) {
  AuditOptions o;
  o.suite = "paths";
  o.n_max = 6;
  o.t_max = 1;
  o.max_vertices = 4;
  for (const auto& row : run_audit(o)) {
    const int n = std::get<family::Path>(row.graph).n;
    EXPECT_EQ(row.status == RowStatus::OracleSkipped, n > 4);
  }
}

TEST(Audit, UnknownSuite) {
  AuditOptions o;
  o.suite = "hexagons";
  EXPECT_THROW(run_audit(o), Error);
}
