#include "doctest.h"

#include "core/cell.hpp"

using namespace qdm::cell;

TEST_CASE("torus grid counts and Euler characteristic") {
  for (auto [r, c] : {std::pair{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}}) {
    auto t = torus_grid(r, c);
    CHECK(t.vertex_count == r * c);
    CHECK((int)t.edges.size() == 2 * r * c);
    CHECK((int)t.faces.size() == r * c);
    CHECK(t.euler_characteristic() == 0);
    CHECK(validate(t).empty());
  }
}

TEST_CASE("torus grid edge layout: horizontal first, then vertical") {
  auto t = torus_grid(2, 3);
  // horizontal edge (i,j): (i,j) -> (i, j+1 mod c)
  CHECK(t.edges[0].tail == 0);
  CHECK(t.edges[0].head == 1);
  CHECK(t.edges[2].tail == 2);
  CHECK(t.edges[2].head == 0);
  // vertical edge (i,j): (i,j) -> (i+1 mod r, j)
  CHECK(t.edges[6].tail == 0);
  CHECK(t.edges[6].head == 3);
  CHECK(t.edges[11].tail == 5);
  CHECK(t.edges[11].head == 2);
}

TEST_CASE("1x1 torus is one vertex, two self-loops and one face") {
  auto t = torus_grid(1, 1);
  CHECK(t.vertex_count == 1);
  REQUIRE(t.edges.size() == 2);
  CHECK(t.edges[0].tail == t.edges[0].head);
  CHECK(t.edges[1].tail == t.edges[1].head);
  REQUIRE(t.faces.size() == 1);
  CHECK(t.faces[0].size() == 4);
  CHECK(validate(t).empty());
}

TEST_CASE("face walks are closed with balanced signs") {
  auto t = torus_grid(2, 2);
  for (const auto& f : t.faces) {
    REQUIRE(f.size() == 4);
    int plus = 0;
    for (const auto& st : f) plus += st.sign > 0;
    CHECK(plus == 2);
  }
}

TEST_CASE("vertex star lists incidences in ascending edge order") {
  auto t = torus_grid(2, 2);
  auto st = vertex_star(t, 0);
  REQUIRE(st.size() == 4);
  for (size_t i = 1; i < st.size(); ++i) CHECK(st[i - 1].edge < st[i].edge);
  int in = 0, out = 0;
  for (const auto& e : st) {
    if (e.inc == Incidence::In) ++in;
    if (e.inc == Incidence::Out) ++out;
  }
  CHECK(in == 2);
  CHECK(out == 2);
}

TEST_CASE("self-loop reports once as Loop") {
  auto t = torus_grid(1, 2);
  // vertical edges are self-loops on a single-row torus
  auto st = vertex_star(t, 0);
  int loops = 0;
  for (const auto& e : st) loops += e.inc == Incidence::Loop;
  CHECK(loops == 1);
}

TEST_CASE("disjoint union shifts indices and keeps parts apart") {
  auto a = torus_grid(1, 1), b = torus_grid(1, 2);
  auto u = disjoint_union(a, b);
  CHECK(u.vertex_count == 3);
  CHECK(u.edges.size() == 6);
  CHECK(u.faces.size() == 3);
  CHECK(u.euler_characteristic() == 0);
  CHECK(validate(u).empty());
  // part-b edges reference only part-b vertices
  for (size_t e = a.edges.size(); e < u.edges.size(); ++e) {
    CHECK(u.edges[e].tail >= a.vertex_count);
    CHECK(u.edges[e].head >= a.vertex_count);
  }
}

TEST_CASE("wedge identifies one vertex across the parts") {
  auto a = torus_grid(1, 2), b = torus_grid(1, 2);
  auto w = wedge_at_vertex(a, b, 0, 1);
  CHECK(w.vertex_count == 3);  // 2 + 2 - 1
  CHECK(w.edges.size() == 8);
  CHECK(w.faces.size() == 4);
  CHECK(w.euler_characteristic() == -1);
  CHECK(validate(w).empty());
  // some b-edge now touches the merged vertex 0
  bool touches = false;
  for (size_t e = a.edges.size(); e < w.edges.size(); ++e)
    touches |= w.edges[e].tail == 0 || w.edges[e].head == 0;
  CHECK(touches);
}

TEST_CASE("validate flags broken complexes") {
  Complex2 c;
  c.vertex_count = 2;
  c.edges = {{0, 1}, {1, 5}};
  auto v = validate(c);
  REQUIRE_FALSE(v.empty());
  CHECK(v[0].code == "IndexRange");

  Complex2 open;
  open.vertex_count = 3;
  open.edges = {{0, 1}, {1, 2}, {2, 0}};
  open.faces = {{{0, 1}, {2, 1}}};  // not a closed connected walk
  bool has_open = false;
  for (const auto& viol : validate(open)) has_open |= viol.code == "OpenFaceWalk";
  CHECK(has_open);

  Complex2 count;
  count.vertex_count = 2;
  count.edges = {{0, 1}};
  count.faces = {};
  bool has_count = false;
  for (const auto& viol : validate(count)) has_count |= viol.code == "EdgeFaceCount";
  CHECK(has_count);
}
