#pragma once

// Signal accounting for a set of broadcast towers: every tower of strength t
// sends max(0, t - d) to each vertex at distance d. A tower's broadcast zone
// is the set of vertices within distance t-1; vertices in two or more zones
// are overlap vertices.

#include <algorithm>
#include <limits>
#include <set>
#include <vector>

#include "bcast/graph.hpp"

namespace bcast {

struct TowerSet {
  std::vector<VertexId> towers;
  int t = 1;
};

struct ReceptionMap {
  int t = 1;
  std::vector<int> values;  ///< indexed by dense vertex index
};

/// Verdict for one (graph or lattice window, towers, t, r) combination.
template <class Vertex>
struct BasicVerificationReport {
  int t = 1;
  int r = 1;
  int tower_count = 0;
  bool dominated = false;
  int min_reception = 0;
  std::vector<Vertex> deficient;
  std::vector<Vertex> overlap_vertices;
  bool efficient = false;
  /// Excess signal over r, summed over overlap vertices only.
  long wasted_signal = 0;
  /// Excess signal over r, summed over every checked vertex.
  long total_excess = 0;
  /// r > t is permitted but flagged: no vertex can be r-dominated by one tower.
  bool r_exceeds_t = false;
};

using VerificationReport = BasicVerificationReport<VertexId>;

/// Resolves tower coordinates to vertex indices, rejecting unknown and repeated towers.
inline std::vector<int> tower_indices(const GraphInstance& g, const TowerSet& ts) {
  require(ts.t >= 1, ErrorCode::HypothesisViolated, "tower strength t must be >= 1");
  std::vector<int> out;
  out.reserve(ts.towers.size());
  std::set<int> seen;
  for (const auto& w : ts.towers) {
    auto idx = g.find(w);
    if (!idx) throw Error(ErrorCode::TowerOutsideGraph, w.str() + " lies outside " + describe(g.family()));
    require(seen.insert(*idx).second, ErrorCode::DuplicateTower, w.str() + " listed twice");
    out.push_back(*idx);
  }
  return out;
}

inline ReceptionMap compute_reception(const GraphInstance& g, const TowerSet& ts) {
  const auto towers = tower_indices(g, ts);
  ReceptionMap map{ts.t, std::vector<int>(g.vertex_count(), 0)};
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int w : towers) map.values[v] += std::max(0, ts.t - g.distance(v, w));
  return map;
}

namespace detail {

/// Shared core of graph and lattice-window verification. `zone_hits[i]` is
/// how many broadcast zones contain checked vertex i.
template <class Vertex>
BasicVerificationReport<Vertex> summarize(const std::vector<Vertex>& checked,
                                          const std::vector<int>& reception,
                                          const std::vector<int>& zone_hits, int t, int r,
                                          int tower_count) {
  BasicVerificationReport<Vertex> rep;
  rep.t = t;
  rep.r = r;
  rep.tower_count = tower_count;
  rep.r_exceeds_t = r > t;
  rep.min_reception = checked.empty() ? 0 : std::numeric_limits<int>::max();
  bool overlap_exact = true;
  for (std::size_t i = 0; i < checked.size(); ++i) {
    const int f = reception[i];
    rep.min_reception = std::min(rep.min_reception, f);
    if (f < r) rep.deficient.push_back(checked[i]);
    rep.total_excess += std::max(0, f - r);
    if (zone_hits[i] >= 2) {
      rep.overlap_vertices.push_back(checked[i]);
      rep.wasted_signal += std::max(0, f - r);
      overlap_exact = overlap_exact && f == r;
    }
  }
  rep.dominated = rep.deficient.empty();
  rep.efficient = rep.dominated && overlap_exact;
  return rep;
}

}  // namespace detail

inline VerificationReport verify(const GraphInstance& g, const TowerSet& ts, int r) {
  require(r >= 1, ErrorCode::HypothesisViolated, "required reception r must be >= 1");
  const auto towers = tower_indices(g, ts);
  const int n = g.vertex_count();
  std::vector<int> reception(n, 0), hits(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : towers) {
      const int d = g.distance(v, w);
      if (d <= ts.t - 1) {
        reception[v] += ts.t - d;
        ++hits[v];
      }
    }
  std::vector<VertexId> all(g.vertices().begin(), g.vertices().end());
  return detail::summarize(all, reception, hits, ts.t, r, static_cast<int>(towers.size()));
}

}  // namespace bcast
