// bcast: command-line front end for the (t,r) broadcast domination library.
//
// Exit codes: 0 ok, 1 usage or input error, 2 verification failure,
// 3 formula/oracle mismatch.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bcast/bcast.hpp"

namespace {

using namespace bcast;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;
constexpr int kExitMismatch = 3;

struct FamilyArgs {
  std::string family;
  int m = 0, n = 0, k = 0;
  std::string edges;
  std::string graph_json;

  void attach(CLI::App* app) {
    app->add_option("--family", family, "path|cycle|grid|grid3d|slant|king|tree");
    app->add_option("--m", m, "rows");
    app->add_option("--n", n, "columns (vertex count for path/cycle)");
    app->add_option("--k", k, "layers (grid3d)");
    app->add_option("--edges", edges, "tree edges as JSON, e.g. [[1,2],[2,3]]");
    app->add_option("--graph", graph_json, "graph spec as JSON text");
  }

  GraphFamily resolve() const {
    if (!graph_json.empty()) return family_from_json(json::parse(graph_json));
    require(!family.empty(), ErrorCode::ParseError, "--family or --graph is required");
    json j{{"family", family}};
    if (family == "tree") {
      j["edges"] = json::parse(edges.empty() ? "[]" : edges);
    } else {
      if (family != "path" && family != "cycle") j["m"] = m;
      j["n"] = n;
      if (family == "grid3d") j["k"] = k;
    }
    return family_from_json(j);
  }
};

struct TrArgs {
  int t = 0, r = 0;
  void attach(CLI::App* app, bool need_r = true) {
    app->add_option("--t", t, "tower strength")->required();
    auto* opt = app->add_option("--r", r, "required reception");
    if (need_r) opt->required();
  }
};

json read_json_source(const std::string& path) {
  if (path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::ParseError, "cannot open " + path);
  return json::parse(in);
}

DispatchOptions dispatch_options(const std::string& block, const std::string& decomposition) {
  DispatchOptions opt;
  opt.block = parse_block_shape(block);
  if (!decomposition.empty()) opt.decomposition = json::parse(decomposition).get<PathDecomposition>();
  return opt;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_report(const VerificationReport& rep) {
  std::cout << "dominated: " << yes_no(rep.dominated) << "\n"
            << "efficient: " << yes_no(rep.efficient) << "\n"
            << "min_reception: " << rep.min_reception << "\n"
            << "towers: " << rep.tower_count << "\n"
            << "deficient: " << vertices_to_json(rep.deficient).dump() << "\n"
            << "overlap_vertices: " << rep.overlap_vertices.size() << "\n"
            << "wasted_signal: " << rep.wasted_signal << "\n"
            << "total_excess: " << rep.total_excess << "\n";
  if (rep.r_exceeds_t) std::cout << "warning: r exceeds t\n";
}

json row_to_json(const ComparisonRow& row) {
  json j{{"instance", describe(row.graph)},
         {"graph", family_to_json(row.graph)},
         {"t", row.t},
         {"r", row.r},
         {"formula", gamma_to_json(row.formula)},
         {"status", row.status_string()},
         {"version", kVersion}};
  j["constructed"] = row.constructed ? json(*row.constructed) : json(nullptr);
  j["constructed_dominates"] = row.constructed_dominates ? json(*row.constructed_dominates) : json(nullptr);
  j["oracle"] = row.oracle ? json(*row.oracle) : json(nullptr);
  return j;
}

std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

void print_rows(const std::vector<ComparisonRow>& rows) {
  std::printf("%-18s %2s %2s  %-26s %8s %6s %6s  %s\n", "instance", "t", "r", "theorem", "formula", "built",
              "oracle", "status");
  for (const auto& row : rows) {
    const std::string formula =
        (row.formula.kind == GammaKind::UpperBound ? "<=" : "=") + std::to_string(row.formula.value);
    std::string built = opt_str(row.constructed);
    if (row.constructed_dominates && !*row.constructed_dominates) built += "!";
    std::printf("%-18s %2d %2d  %-26s %8s %6s %6s  %s\n", describe(row.graph).c_str(), row.t, row.r,
                row.formula.theorem_tag.c_str(), formula.c_str(), built.c_str(), opt_str(row.oracle).c_str(),
                row.status_string().c_str());
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Broadcast domination: closed forms, constructions, verification and exact search"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  bool as_json = false;

  // gamma
  auto* gamma = app.add_subcommand("gamma", "closed-form value or bound for a family");
  FamilyArgs gamma_fam;
  TrArgs gamma_tr;
  bool gamma_exact = false;
  std::string block = "2x2", decomposition;
  gamma_fam.attach(gamma);
  gamma_tr.attach(gamma);
  gamma->add_flag("--exact", gamma_exact, "also run the exact solver and compare");
  gamma->add_option("--block", block, "3D starting block: 2x2|3xN|3x3");
  gamma->add_option("--decomposition", decomposition, "tree path decomposition as JSON");
  gamma->add_flag("--json", as_json);

  // construct
  auto* construct = app.add_subcommand("construct", "explicit tower placement");
  FamilyArgs con_fam;
  TrArgs con_tr;
  bool con_require = false;
  con_fam.attach(construct);
  con_tr.attach(construct);
  construct->add_option("--block", block, "3D starting block: 2x2|3xN|3x3");
  construct->add_option("--decomposition", decomposition, "tree path decomposition as JSON");
  construct->add_flag("--require-dominated", con_require, "exit 2 unless the placement dominates");
  construct->add_flag("--json", as_json);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "reception report for a tower set");
  FamilyArgs ver_fam;
  std::string ver_input, ver_towers;
  int ver_t = 0, ver_r = 0;
  bool ver_require = false;
  ver_fam.attach(verify_cmd);
  verify_cmd->add_option("--input", ver_input, "JSON file with graph, t, towers[, r]; '-' for stdin");
  verify_cmd->add_option("--towers", ver_towers, "towers as JSON, e.g. [[1,1],[2,3]]");
  verify_cmd->add_option("--t", ver_t, "tower strength (overrides input)");
  verify_cmd->add_option("--r", ver_r, "required reception (overrides input)");
  verify_cmd->add_flag("--require-dominated", ver_require, "exit 2 unless dominated");
  verify_cmd->add_flag("--json", as_json);

  // exact
  auto* exact = app.add_subcommand("exact", "exact domination number by search");
  FamilyArgs ex_fam;
  TrArgs ex_tr;
  bool ex_canonical = false, ex_naive = false;
  std::optional<std::uint64_t> ex_budget;
  std::optional<int> ex_cap;
  int threads = 1;
  ex_fam.attach(exact);
  ex_tr.attach(exact);
  exact->add_flag("--canonical", ex_canonical, "lexicographically least witness");
  exact->add_flag("--naive", ex_naive, "plain subset enumeration (at most 16 vertices)");
  exact->add_option("--budget", ex_budget, "node budget");
  exact->add_option("--max-k", ex_cap, "largest tower count to try");
  exact->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  exact->add_flag("--json", as_json);

  // lattice
  auto* lattice = app.add_subcommand("lattice", "infinite-lattice pattern and window check");
  std::string lat_kind = "king";
  TrArgs lat_tr;
  std::optional<int> halfwidth;
  int index_range = 1;
  bool lat_require = false;
  lattice->add_option("--kind", lat_kind, "king|triangular")->check(CLI::IsMember({"king", "triangular"}));
  lat_tr.attach(lattice);
  lattice->add_option("--halfwidth", halfwidth, "window halfwidth (default 4t)");
  lattice->add_option("--index-range", index_range, "export pattern points for |x|,|y| <= this index");
  lattice->add_flag("--require-dominated", lat_require, "exit 2 unless the interior is dominated");
  lattice->add_flag("--json", as_json);

  // table
  auto* table = app.add_subcommand("table", "slant-grid bound table");
  std::string preset = "slant";
  std::optional<int> tab_t, tab_r, tab_p, tab_q;
  int tab_l = 0, tab_k = 0, p_max = 2, q_max = 2;
  table->add_option("--preset", preset, "table to print")->check(CLI::IsMember({"slant"}));
  table->add_option("--t", tab_t, "restrict to one row");
  table->add_option("--r", tab_r, "restrict to one row");
  table->add_option("--p", tab_p, "single p");
  table->add_option("--q", tab_q, "single q");
  table->add_option("--p-max", p_max, "p range 1..p-max");
  table->add_option("--q-max", q_max, "q range 1..q-max");
  table->add_option("--l", tab_l, "row remainder");
  table->add_option("--k", tab_k, "column remainder");
  table->add_flag("--json", as_json);

  // render
  auto* render = app.add_subcommand("render", "ASCII reception map");
  FamilyArgs ren_fam;
  std::string ren_input, ren_towers;
  int ren_t = 0;
  RenderOptions ren_opt;
  ren_fam.attach(render);
  render->add_option("--input", ren_input, "JSON file with graph, t, towers; '-' for stdin");
  render->add_option("--towers", ren_towers, "towers as JSON");
  render->add_option("--t", ren_t, "tower strength (overrides input)");
  render->add_option("--offset", ren_opt.col_offset, "first column shown (0-based)");
  render->add_option("--width", ren_opt.max_cols, "columns shown")->check(CLI::Range(1, 60));

  // audit
  auto* audit = app.add_subcommand("audit", "formula versus oracle sweep");
  AuditOptions aud;
  bool csv = false;
  audit->add_option("--suite", aud.suite, "paths|cycles|grids|grid3d|king|slant|all")
      ->check(CLI::IsMember(audit_suites()));
  audit->add_option("--n-max", aud.n_max, "largest n (k for 2x2xk grids)");
  audit->add_option("--t-max", aud.t_max, "largest t");
  audit->add_option("--max-vertices", aud.max_vertices, "oracle size cap");
  audit->add_flag("--allow-large", aud.allow_large, "run the oracle past the size cap");
  audit->add_option("--threads", aud.threads, "worker threads")->check(CLI::PositiveNumber);
  audit->add_flag("--csv", csv, "CSV output");
  audit->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  auto load_doc = [](const std::string& input, const FamilyArgs& fam, const std::string& towers_text, int t) {
    json doc = input.empty() ? json::object() : read_json_source(input);
    if (!input.empty() && !doc.contains("graph")) throw Error(ErrorCode::ParseError, "input lacks \"graph\"");
    if (input.empty()) doc["graph"] = family_to_json(fam.resolve());
    if (!towers_text.empty()) doc["towers"] = json::parse(towers_text);
    if (t > 0) doc["t"] = t;
    return doc;
  };

  if (*gamma) {
    const auto fam = gamma_fam.resolve();
    const auto res = gamma_for(fam, gamma_tr.t, gamma_tr.r, dispatch_options(block, decomposition));
    if (!gamma_exact) {
      if (as_json) std::cout << gamma_to_json(res).dump(2) << "\n";
      else std::cout << res.value << " (" << to_string(res.kind) << ", " << res.theorem_tag << ")"
                     << (res.note.empty() ? "" : "  " + res.note) << "\n";
      return kExitOk;
    }
    ComparisonRow row{fam, gamma_tr.t, gamma_tr.r, res, {}, {}, {}, RowStatus::OracleSkipped, 0};
    const auto oracle = solve(build(fam), gamma_tr.t, gamma_tr.r);
    if (oracle.proven_minimal) row.oracle = oracle.gamma;
    classify(row);
    if (as_json) std::cout << row_to_json(row).dump(2) << "\n";
    else std::cout << res.value << " (" << to_string(res.kind) << ", " << res.theorem_tag << ")  oracle "
                   << opt_str(row.oracle) << "  status " << row.status_string() << "\n";
    return row.status == RowStatus::Mismatch ? kExitMismatch : kExitOk;
  }

  if (*construct) {
    const auto plan = construct_for(con_fam.resolve(), con_tr.t, con_tr.r, dispatch_options(block, decomposition));
    const auto rep = verify(build(plan.graph), plan.towers, plan.r);
    if (as_json) {
      std::cout << plan_to_json(plan).dump(2) << "\n";
    } else {
      std::cout << "theorem: " << plan.theorem_tag << "\n"
                << "graph: " << describe(plan.graph) << "  t=" << plan.towers.t << " r=" << plan.r << "\n"
                << "towers (" << plan.size() << "): " << vertices_to_json(plan.towers.towers).dump() << "\n"
                << "claims_efficient: " << yes_no(plan.claims_efficient) << "\n"
                << "verified: dominated=" << yes_no(rep.dominated) << " efficient=" << yes_no(rep.efficient)
                << "\n";
      if (!plan.note.empty()) std::cout << "note: " << plan.note << "\n";
    }
    return con_require && !rep.dominated ? kExitVerify : kExitOk;
  }

  if (*verify_cmd) {
    const auto doc = load_doc(ver_input, ver_fam, ver_towers, ver_t);
    const auto g = build(family_from_json(doc["graph"]));
    const auto ts = towers_from_json(doc);
    int r = ver_r;
    if (r <= 0) {
      require(doc.contains("r"), ErrorCode::ParseError, "required reception: pass --r or include \"r\"");
      r = doc["r"].get<int>();
    }
    const auto rep = verify(g, ts, r);
    const bool claim_broken = doc.value("claims_efficient", false) && !rep.efficient;
    if (as_json) {
      auto j = report_to_json(rep);
      j["graph"] = doc["graph"];
      j["version"] = kVersion;
      if (doc.contains("claims_efficient")) j["claims_efficient_holds"] = !claim_broken;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "graph: " << describe(g.family()) << "  t=" << ts.t << " r=" << r << "\n";
      print_report(rep);
      if (claim_broken) std::cout << "warning: placement claims efficiency but is not efficient\n";
    }
    return ver_require && !rep.dominated ? kExitVerify : kExitOk;
  }

  if (*exact) {
    const auto g = build(ex_fam.resolve());
    OracleResult res;
    if (ex_naive) {
      res = naive_enumerate(g, ex_tr.t, ex_tr.r);
    } else {
      SolverConfig cfg{ex_cap, ex_canonical, ex_budget, threads};
      res = solve(g, ex_tr.t, ex_tr.r, cfg);
    }
    if (as_json) {
      auto j = oracle_to_json(res);
      j["graph"] = family_to_json(g.family());
      j["r"] = ex_tr.r;
      j["version"] = kVersion;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "gamma: " << res.gamma << (res.proven_minimal ? "" : " (upper bound only)") << "\n"
                << "witness: " << vertices_to_json(res.witness.towers).dump() << "\n"
                << "status: " << to_string(res.status) << "\n"
                << "explored_nodes: " << res.explored_nodes << "\n";
    }
    return kExitOk;
  }

  if (*lattice) {
    const int t = lat_tr.t, r = lat_tr.r;
    const auto pattern = lat_kind == "king" ? king_lattice_pattern(t, r) : triangular_lattice_pattern(t, r);
    const int hw = halfwidth.value_or(4 * t);
    const auto rep = verify_lattice_window(pattern, t, r, hw);
    json points = json::array();
    for (int x = -index_range; x <= index_range; ++x)
      for (int y = -index_range; y <= index_range; ++y) {
        const auto p = pattern.at(x, y);
        points.push_back({{"index", {x, y}}, {"point", lattice_point_to_json(p)}});
      }
    if (as_json) {
      auto j = report_to_json(rep);
      j["kind"] = std::string(to_string(pattern.kind));
      j["generators"] = {lattice_point_to_json(pattern.g1), lattice_point_to_json(pattern.g2)};
      j["halfwidth"] = hw;
      j["points"] = points;
      j["version"] = kVersion;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "pattern: " << to_string(pattern.kind) << "  t=" << t << " r=" << r << "  generators "
                << pattern.g1.str() << " " << pattern.g2.str() << "\n"
                << "window halfwidth " << hw << ", interior halfwidth " << hw - t << "\n"
                << "interior dominated: " << yes_no(rep.dominated) << "\n"
                << "efficient: " << yes_no(rep.efficient) << "\n"
                << "min_reception: " << rep.min_reception << "\n";
      for (const auto& pt : points) std::cout << "  " << pt["index"].dump() << " -> " << pt["point"].dump() << "\n";
    }
    return lat_require && !rep.dominated ? kExitVerify : kExitOk;
  }

  if (*table) {
    json rows = json::array();
    for (const auto& row : kSlantTable) {
      if ((tab_t && row.t != *tab_t) || (tab_r && row.r != *tab_r)) continue;
      const int p_lo = tab_p.value_or(1), p_hi = tab_p.value_or(p_max);
      const int q_lo = tab_q.value_or(1), q_hi = tab_q.value_or(q_max);
      for (int p = p_lo; p <= p_hi; ++p)
        for (int q = q_lo; q <= q_hi; ++q) {
          const int m = row.row_modulus * p + tab_l, n = row.col_modulus * q + tab_k;
          rows.push_back({{"t", row.t}, {"r", row.r}, {"p", p}, {"q", q}, {"l", tab_l}, {"k", tab_k}, {"m", m},
                          {"n", n}, {"bound", slant_table_value(row, p, q, tab_l, tab_k)},
                          {"theorem_tag", slant_table_tag(row.t, row.r)}});
        }
    }
    if (rows.empty()) throw Error(ErrorCode::UnsupportedTRPair, "no table row matches the requested (t,r)");
    if (as_json) {
      std::cout << rows.dump(2) << "\n";
    } else {
      std::printf("%2s %2s %3s %3s %2s %2s %4s %4s %6s\n", "t", "r", "p", "q", "l", "k", "m", "n", "bound");
      for (const auto& j : rows)
        std::printf("%2d %2d %3d %3d %2d %2d %4d %4d %6ld\n", j["t"].get<int>(), j["r"].get<int>(),
                    j["p"].get<int>(), j["q"].get<int>(), j["l"].get<int>(), j["k"].get<int>(), j["m"].get<int>(),
                    j["n"].get<int>(), j["bound"].get<long>());
    }
    return kExitOk;
  }

  if (*render) {
    const auto doc = load_doc(ren_input, ren_fam, ren_towers, ren_t);
    const auto g = build(family_from_json(doc["graph"]));
    std::cout << render_reception(g, towers_from_json(doc), ren_opt);
    return kExitOk;
  }

  if (*audit) {
    const auto rows = run_audit(aud);
    std::map<std::string, int> tally;
    for (const auto& row : rows)
      ++tally[row.status == RowStatus::BoundGap ? "bound-gap" : row.status_string()];
    if (as_json) {
      json j = json::array();
      for (const auto& row : rows) j.push_back(row_to_json(row));
      std::cout << json{{"suite", aud.suite}, {"rows", j}, {"version", kVersion}}.dump(2) << "\n";
    } else if (csv) {
      std::cout << "instance,t,r,theorem,kind,formula,constructed,constructed_dominates,oracle,status\n";
      for (const auto& row : rows)
        std::cout << '"' << describe(row.graph) << "\"," << row.t << ',' << row.r << ',' << row.formula.theorem_tag
                  << ',' << to_string(row.formula.kind) << ',' << row.formula.value << ','
                  << opt_str(row.constructed) << ','
                  << (row.constructed_dominates ? yes_no(*row.constructed_dominates) : "-") << ','
                  << opt_str(row.oracle) << ',' << row.status_string() << "\n";
    } else {
      print_rows(rows);
    }
    std::cerr << "rows " << rows.size();
    for (const auto& [k, v] : tally) std::cerr << "  " << k << " " << v;
    std::cerr << "\n";
    return has_mismatch(rows) ? kExitMismatch : kExitOk;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const bcast::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad JSON: " << e.what() << "\n";
  }
  return kExitUsage;
}
