#pragma once

// Graph families used throughout the library (paths, cycles, 2D/3D grids,
// slant grids, king's grids, explicit trees) with adjacency and distance
// queries. Coordinates are 1-indexed; vertices are densely numbered in
// row-major order (layer fastest for 3D grids).

#include <algorithm>
#include <array>
#include <compare>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bcast/error.hpp"

namespace bcast {

/// Coordinate tuple of a finite-graph vertex: (i) for paths, cycles and
/// trees, (row, col) for 2D families, (row, col, layer) for 3D grids.
struct VertexId {
  std::array<int, 3> coords{};
  int arity = 0;

  static constexpr VertexId of(int i) { return {{i, 0, 0}, 1}; }
  static constexpr VertexId of(int row, int col) { return {{row, col, 0}, 2}; }
  static constexpr VertexId of(int row, int col, int layer) { return {{row, col, layer}, 3}; }

  constexpr int operator[](std::size_t axis) const { return coords[axis]; }

  friend constexpr auto operator<=>(const VertexId&, const VertexId&) = default;

  std::string str() const {
    std::string out = "(";
    for (int a = 0; a < arity; ++a) {
      if (a) out += ',';
      out += std::to_string(coords[a]);
    }
    return out + ")";
  }
};

/// Point of an infinite lattice (king's or slant/triangular), origin-anchored.
struct LatticePoint {
  long x = 0;
  long y = 0;

  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend constexpr LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.x - b.x, a.y - b.y}; }

  std::string str() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }
};

/// Chebyshev distance on the infinite king's lattice.
constexpr long king_distance(LatticePoint p, LatticePoint q) {
  const long dx = p.x > q.x ? p.x - q.x : q.x - p.x;
  const long dy = p.y > q.y ? p.y - q.y : q.y - p.y;
  return std::max(dx, dy);
}

/// Distance on the infinite slant lattice whose diagonal edges join (x,y)
/// and (x+1,y+1). A displacement with both components of the same sign can
/// ride the diagonal; otherwise only axis moves help.
constexpr long slant_lattice_distance(LatticePoint p, LatticePoint q) {
  const long dx = q.x - p.x;
  const long dy = q.y - p.y;
  const long ax = dx < 0 ? -dx : dx;
  const long ay = dy < 0 ? -dy : dy;
  if ((dx > 0 && dy > 0) || (dx < 0 && dy < 0)) return std::max(ax, ay);
  return ax + ay;
}

namespace family {
struct Path { int n = 1; };
struct Cycle { int n = 3; };
struct Grid { int m = 1, n = 1; };
struct Grid3D { int m = 1, n = 1, k = 1; };
struct Slant { int m = 1, n = 1; };
struct King { int m = 1, n = 1; };
/// Explicit tree on labels 1..|E|+1.
struct Tree { std::vector<std::pair<int, int>> edges; };
}  // namespace family

using GraphFamily = std::variant<family::Path, family::Cycle, family::Grid, family::Grid3D,
                                 family::Slant, family::King, family::Tree>;

inline std::string family_name(const GraphFamily& f) {
  static constexpr std::array<const char*, 7> names = {"path", "cycle", "grid", "grid3d",
                                                       "slant", "king", "tree"};
  return names[f.index()];
}

/// Short human key such as "grid(2,3)"; used for sorting and report rows.
inline std::string describe(const GraphFamily& f) {
  struct Visitor {
    std::string operator()(const family::Path& p) const { return "path(" + std::to_string(p.n) + ")"; }
    std::string operator()(const family::Cycle& c) const { return "cycle(" + std::to_string(c.n) + ")"; }
    std::string operator()(const family::Grid& g) const { return two("grid", g.m, g.n); }
    std::string operator()(const family::Grid3D& g) const {
      return "grid3d(" + std::to_string(g.m) + "," + std::to_string(g.n) + "," + std::to_string(g.k) + ")";
    }
    std::string operator()(const family::Slant& s) const { return two("slant", s.m, s.n); }
    std::string operator()(const family::King& k) const { return two("king", k.m, k.n); }
    std::string operator()(const family::Tree& t) const {
      return "tree(" + std::to_string(t.edges.size() + 1) + ")";
    }
    static std::string two(const char* name, int a, int b) {
      return std::string(name) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
  };
  return std::visit(Visitor{}, f);
}

/// Immutable finite graph. Copies share storage; all queries are const and
/// safe to call concurrently (per-source BFS results are filled once).
class GraphInstance {
 public:
  const GraphFamily& family() const { return impl_->family; }
  int vertex_count() const { return static_cast<int>(impl_->vertices.size()); }
  int edge_count() const { return impl_->edges; }

  std::span<const int> neighbors(int index) const { return impl_->adjacency.at(index); }
  const VertexId& vertex(int index) const { return impl_->vertices.at(index); }
  std::span<const VertexId> vertices() const { return impl_->vertices; }

  std::optional<int> find(const VertexId& v) const { return impl_->locate(v); }

  int index_of(const VertexId& v) const {
    auto idx = impl_->locate(v);
    if (!idx) throw Error(ErrorCode::UnknownVertex, v.str() + " is not a vertex of " + describe(impl_->family));
    return *idx;
  }

  bool contains(const VertexId& v) const { return impl_->locate(v).has_value(); }

  /// Shortest-path distances from `source` to every vertex, computed by BFS on
  /// first request and cached.
  std::span<const int> bfs_from(int source) const {
    auto& cache = *impl_->cache;
    std::call_once(cache.once[source], [&] { cache.rows[source] = impl_->bfs(source); });
    return cache.rows[source];
  }

  int bfs_distance(int a, int b) const { return bfs_from(a)[b]; }

  /// Family-specific closed form where one exists: |i-j| (path),
  /// min(|i-j|, n-|i-j|) (cycle), Manhattan (grid, grid3d), Chebyshev (king),
  /// the sign-split rule (slant). Trees have none.
  std::optional<int> closed_form_distance(int a, int b) const {
    const VertexId& u = vertex(a);
    const VertexId& v = vertex(b);
    const int d0 = std::abs(u[0] - v[0]);
    const int d1 = std::abs(u[1] - v[1]);
    const int d2 = std::abs(u[2] - v[2]);
    switch (impl_->family.index()) {
      case 0: return d0;
      case 1: return std::min(d0, std::get<family::Cycle>(impl_->family).n - d0);
      case 2: return d0 + d1;
      case 3: return d0 + d1 + d2;
      case 4:
        return static_cast<int>(slant_lattice_distance({u[1], u[0]}, {v[1], v[0]}));
      case 5: return std::max(d0, d1);
      default: return std::nullopt;
    }
  }

  /// Distance used by the rest of the library: closed form for path, cycle,
  /// grid, grid3d and slant; BFS for king boards and trees.
  int distance(int a, int b) const {
    const auto idx = impl_->family.index();
    if (idx == 5 || idx == 6) return bfs_distance(a, b);
    return *closed_form_distance(a, b);
  }

  friend GraphInstance build(const GraphFamily& family);

 private:
  struct BfsCache {
    explicit BfsCache(std::size_t n) : once(new std::once_flag[n]), rows(n) {}
    std::unique_ptr<std::once_flag[]> once;
    std::vector<std::vector<int>> rows;
  };

  struct Impl {
    GraphFamily family;
    std::array<int, 3> dims{1, 1, 1};
    int arity = 1;
    std::vector<VertexId> vertices;
    std::vector<std::vector<int>> adjacency;
    int edges = 0;
    std::unique_ptr<BfsCache> cache;

    std::optional<int> locate(const VertexId& v) const {
      if (v.arity != arity) return std::nullopt;
      int index = 0;
      for (int a = 0; a < arity; ++a) {
        if (v[a] < 1 || v[a] > dims[a]) return std::nullopt;
        index = index * dims[a] + (v[a] - 1);
      }
      return index;
    }

    std::vector<int> bfs(int source) const {
      std::vector<int> dist(vertices.size(), -1);
      std::queue<int> frontier;
      dist[source] = 0;
      frontier.push(source);
      while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (int w : adjacency[u]) {
          if (dist[w] < 0) {
            dist[w] = dist[u] + 1;
            frontier.push(w);
          }
        }
      }
      return dist;
    }

    void connect(int a, int b) {
      adjacency[a].push_back(b);
      adjacency[b].push_back(a);
      ++edges;
    }
  };

  explicit GraphInstance(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

namespace detail {

inline void require_positive(std::initializer_list<int> dims, const std::string& what) {
  for (int d : dims) require(d >= 1, ErrorCode::InvalidDimensions, what + " needs every dimension >= 1");
}

inline std::array<int, 3> dims_of(const GraphFamily& f) {
  struct Visitor {
    std::array<int, 3> operator()(const family::Path& p) const { return {p.n, 1, 1}; }
    std::array<int, 3> operator()(const family::Cycle& c) const { return {c.n, 1, 1}; }
    std::array<int, 3> operator()(const family::Grid& g) const { return {g.m, g.n, 1}; }
    std::array<int, 3> operator()(const family::Grid3D& g) const { return {g.m, g.n, g.k}; }
    std::array<int, 3> operator()(const family::Slant& s) const { return {s.m, s.n, 1}; }
    std::array<int, 3> operator()(const family::King& k) const { return {k.m, k.n, 1}; }
    std::array<int, 3> operator()(const family::Tree& t) const {
      return {static_cast<int>(t.edges.size()) + 1, 1, 1};
    }
  };
  return std::visit(Visitor{}, f);
}

inline void validate_tree(const family::Tree& tree) {
  const int n = static_cast<int>(tree.edges.size()) + 1;
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [a, b] : tree.edges) {
    require(a >= 1 && a <= n && b >= 1 && b <= n, ErrorCode::DisconnectedTree,
            "tree labels must be exactly 1.." + std::to_string(n));
    require(a != b, ErrorCode::DisconnectedTree, "self-loop on " + std::to_string(a));
    const int ra = root(a), rb = root(b);
    require(ra != rb, ErrorCode::DisconnectedTree, "edge list contains a cycle or repeated edge");
    parent[ra] = rb;
  }
  // |E| = |V|-1 with no cycle implies connected.
}

}  // namespace detail

inline GraphInstance build(const GraphFamily& fam) {
  auto impl = std::make_shared<GraphInstance::Impl>();
  impl->family = fam;
  const auto dims = detail::dims_of(fam);
  const auto kind = fam.index();

  switch (kind) {
    case 0: detail::require_positive({dims[0]}, "path"); break;
    case 1:
      require(dims[0] >= 3, ErrorCode::InvalidDimensions, "cycle needs n >= 3");
      break;
    case 3: detail::require_positive({dims[0], dims[1], dims[2]}, "grid3d"); break;
    case 6: detail::validate_tree(std::get<family::Tree>(fam)); break;
    default: detail::require_positive({dims[0], dims[1]}, family_name(fam)); break;
  }

  impl->dims = dims;
  impl->arity = (kind == 3) ? 3 : (kind == 2 || kind == 4 || kind == 5) ? 2 : 1;
  const int count = dims[0] * dims[1] * dims[2];
  impl->vertices.reserve(count);
  for (int a = 1; a <= dims[0]; ++a)
    for (int b = 1; b <= dims[1]; ++b)
      for (int c = 1; c <= dims[2]; ++c) {
        if (impl->arity == 1) impl->vertices.push_back(VertexId::of(a));
        else if (impl->arity == 2) impl->vertices.push_back(VertexId::of(a, b));
        else impl->vertices.push_back(VertexId::of(a, b, c));
      }
  impl->adjacency.assign(count, {});

  auto& g = *impl;
  auto link = [&](VertexId u, VertexId v) {
    auto iu = g.locate(u), iv = g.locate(v);
    if (iu && iv) g.connect(*iu, *iv);
  };

  switch (kind) {
    case 0:
    case 1:
      for (int i = 1; i < dims[0]; ++i) link(VertexId::of(i), VertexId::of(i + 1));
      if (kind == 1) link(VertexId::of(dims[0]), VertexId::of(1));
      break;
    case 2:
    case 4:
    case 5:
      for (int r = 1; r <= dims[0]; ++r)
        for (int c = 1; c <= dims[1]; ++c) {
          link(VertexId::of(r, c), VertexId::of(r, c + 1));
          link(VertexId::of(r, c), VertexId::of(r + 1, c));
          if (kind != 2) link(VertexId::of(r, c), VertexId::of(r + 1, c + 1));
          if (kind == 5) link(VertexId::of(r, c + 1), VertexId::of(r + 1, c));
        }
      break;
    case 3:
      for (int r = 1; r <= dims[0]; ++r)
        for (int c = 1; c <= dims[1]; ++c)
          for (int l = 1; l <= dims[2]; ++l) {
            link(VertexId::of(r, c, l), VertexId::of(r + 1, c, l));
            link(VertexId::of(r, c, l), VertexId::of(r, c + 1, l));
            link(VertexId::of(r, c, l), VertexId::of(r, c, l + 1));
          }
      break;
    case 6:
      for (auto [a, b] : std::get<family::Tree>(fam).edges) g.connect(a - 1, b - 1);
      break;
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  impl->cache = std::make_unique<GraphInstance::BfsCache>(count);
  return GraphInstance(std::move(impl));
}

inline int distance(const GraphInstance& g, const VertexId& u, const VertexId& v) {
  return g.distance(g.index_of(u), g.index_of(v));
}

}  // namespace bcast
