#pragma once

// ASCII reception maps. Each cell is the reception digit ('+' above 9)
// followed by 'T' on tower vertices, so the digit under a tower stays
// visible. Wide graphs are windowed horizontally.

#include <sstream>
#include <string>

#include "bcast/reception.hpp"

namespace bcast {

struct RenderOptions {
  int col_offset = 0;  ///< first column shown, 0-based
  int max_cols = 60;
};

inline std::string render_reception(const GraphInstance& g, const TowerSet& ts, const RenderOptions& opt = {}) {
  require(opt.max_cols >= 1 && opt.col_offset >= 0, ErrorCode::ParseError, "bad render window");
  const auto rec = compute_reception(g, ts);
  std::vector<char> is_tower(g.vertex_count(), 0);
  for (int i : tower_indices(g, ts)) is_tower[i] = 1;

  // Layout as layers x rows x cols; one-dimensional families become a single row.
  const int arity = g.vertex(0).arity;
  int rows = 1, cols = g.vertex_count(), layers = 1;
  if (arity >= 2) {
    const auto& last_vertex = g.vertex(g.vertex_count() - 1);
    rows = last_vertex[0];
    cols = last_vertex[1];
    if (arity == 3) layers = last_vertex[2];
  }
  require(opt.col_offset < cols, ErrorCode::ParseError,
          "column offset " + std::to_string(opt.col_offset) + " beyond " + std::to_string(cols) + " columns");
  const int first = opt.col_offset, last = std::min(cols, first + opt.max_cols);

  std::ostringstream out;
  if (first > 0 || last < cols)
    out << "columns " << first + 1 << "-" << last << " of " << cols << "\n";
  for (int l = 1; l <= layers; ++l) {
    if (layers > 1) out << "layer " << l << "\n";
    for (int row = 1; row <= rows; ++row) {
      std::string line;
      for (int c = first; c < last; ++c) {
        int idx = c;
        if (arity == 2) idx = *g.find(VertexId::of(row, c + 1));
        if (arity == 3) idx = *g.find(VertexId::of(row, c + 1, l));
        const int f = rec.values[idx];
        if (c > first) line += ' ';
        line += f > 9 ? '+' : static_cast<char>('0' + f);
        line += is_tower[idx] ? 'T' : ' ';
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << "\n";
    }
  }
  return out.str();
}

}  // namespace bcast
