#include "core/cell.hpp"

#include <map>

#include "core/errors.hpp"

namespace qdm::cell {

Complex2 torus_grid(int rows, int cols) {
  require(rows >= 1 && cols >= 1, errc::config, "torus_grid needs rows,cols >= 1");
  Complex2 cx;
  cx.vertex_count = rows * cols;
  auto vid = [&](int i, int j) { return ((i % rows + rows) % rows) * cols + (j % cols + cols) % cols; };
  auto h = [&](int i, int j) { return ((i % rows + rows) % rows) * cols + (j % cols + cols) % cols; };
  auto v = [&](int i, int j) { return rows * cols + h(i, j); };

  cx.edges.resize(2 * rows * cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      cx.edges[h(i, j)] = {vid(i, j), vid(i, j + 1)};
      cx.edges[v(i, j)] = {vid(i, j), vid(i + 1, j)};
    }
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      // Closed walk (i,j) -> (i,j+1) -> (i+1,j+1) -> (i+1,j) -> (i,j).
      cx.faces.push_back({{h(i, j), +1}, {v(i, j + 1), +1}, {h(i + 1, j), -1}, {v(i, j), -1}});
    }
  return cx;
}

Complex2 disjoint_union(const Complex2& a, const Complex2& b) {
  Complex2 cx = a;
  cx.vertex_count += b.vertex_count;
  int eoff = (int)a.edges.size();
  for (const auto& e : b.edges)
    cx.edges.push_back({e.tail + a.vertex_count, e.head + a.vertex_count});
  for (const auto& f : b.faces) {
    Face g;
    for (const auto& s : f) g.push_back({s.edge + eoff, s.sign});
    cx.faces.push_back(std::move(g));
  }
  return cx;
}

Complex2 wedge_at_vertex(const Complex2& a, const Complex2& b, int va, int vb) {
  require(va >= 0 && va < a.vertex_count, errc::config, "wedge vertex out of range in first part");
  require(vb >= 0 && vb < b.vertex_count, errc::config, "wedge vertex out of range in second part");
  Complex2 cx = a;
  // b-vertex w maps to va if w == vb, else to a-block offset with vb skipped.
  auto remap = [&](int w) {
    if (w == vb) return va;
    return a.vertex_count + (w < vb ? w : w - 1);
  };
  cx.vertex_count = a.vertex_count + b.vertex_count - 1;
  int eoff = (int)a.edges.size();
  for (const auto& e : b.edges) cx.edges.push_back({remap(e.tail), remap(e.head)});
  for (const auto& f : b.faces) {
    Face g;
    for (const auto& s : f) g.push_back({s.edge + eoff, s.sign});
    cx.faces.push_back(std::move(g));
  }
  return cx;
}

std::vector<Violation> validate(const Complex2& c) {
  std::vector<Violation> out;
  for (int e = 0; e < (int)c.edges.size(); ++e) {
    const auto& ed = c.edges[e];
    if (ed.tail < 0 || ed.tail >= c.vertex_count || ed.head < 0 || ed.head >= c.vertex_count)
      out.push_back({"IndexRange", "edge " + std::to_string(e) + " endpoint out of range"});
  }
  for (int f = 0; f < (int)c.faces.size(); ++f) {
    const auto& walk = c.faces[f];
    if (walk.empty()) {
      out.push_back({"OpenFaceWalk", "face " + std::to_string(f) + " is empty"});
      continue;
    }
    bool bad_index = false;
    for (const auto& s : walk)
      if (s.edge < 0 || s.edge >= (int)c.edges.size() || (s.sign != 1 && s.sign != -1)) {
        out.push_back({"IndexRange", "face " + std::to_string(f) + " references a missing edge"});
        bad_index = true;
        break;
      }
    if (bad_index) continue;
    // Directed steps must chain head-to-tail and close up.
    auto tail_of = [&](const FaceStep& s) {
      return s.sign > 0 ? c.edges[s.edge].tail : c.edges[s.edge].head;
    };
    auto head_of = [&](const FaceStep& s) {
      return s.sign > 0 ? c.edges[s.edge].head : c.edges[s.edge].tail;
    };
    bool open = false;
    for (size_t i = 0; i < walk.size(); ++i)
      if (head_of(walk[i]) != tail_of(walk[(i + 1) % walk.size()])) open = true;
    if (open)
      out.push_back({"OpenFaceWalk", "face " + std::to_string(f) + " walk does not close"});
  }
  // Closed-surface bookkeeping: each edge twice, signs cancelling.
  std::map<int, std::pair<int, int>> count;  // edge -> (uses, sign sum)
  for (const auto& walk : c.faces)
    for (const auto& s : walk)
      if (s.edge >= 0 && s.edge < (int)c.edges.size()) {
        count[s.edge].first++;
        count[s.edge].second += s.sign;
      }
  for (int e = 0; e < (int)c.edges.size(); ++e) {
    auto it = count.find(e);
    int uses = it == count.end() ? 0 : it->second.first;
    int ssum = it == count.end() ? 0 : it->second.second;
    if (uses != 2 || ssum != 0)
      out.push_back({"EdgeFaceCount",
                     "edge " + std::to_string(e) + " appears " + std::to_string(uses) +
                         " time(s), sign sum " + std::to_string(ssum)});
  }
  return out;
}

std::vector<StarEntry> vertex_star(const Complex2& c, int v) {
  std::vector<StarEntry> star;
  for (int e = 0; e < (int)c.edges.size(); ++e) {
    bool t = c.edges[e].tail == v, h = c.edges[e].head == v;
    if (t && h)
      star.push_back({e, Incidence::Loop});
    else if (t)
      star.push_back({e, Incidence::Out});
    else if (h)
      star.push_back({e, Incidence::In});
  }
  return star;
}

}  // namespace qdm::cell
