#include "doctest.h"

#include "core/algebra.hpp"
#include "fixtures.hpp"

using namespace qdm;

TEST_CASE("shift centrality per fixture action") {
  auto central = [](const char* name) {
    auto m = fixtures::model(name);
    return alg::shift_central(act::Action(m.N, m.perm));
  };
  CHECK(central("d2z2"));       // Sym(2) is abelian
  CHECK(central("d3z3"));       // the action is the shift itself
  CHECK(central("m1"));
  CHECK_FALSE(central("d3z2"));
  CHECK_FALSE(central("d4i"));  // commutes with shift^2 but not shift^1
  CHECK_FALSE(central("d4ii"));
}

TEST_CASE("literal suite passes on every small fixture") {
  struct Run {
    const char* name;
    int rows, cols;
    int noncommuting;
  };
  // Non-commuting counts: N per out-of-scope (vertex, C(j,R)) pair. Heads
  // exclude the shifts that fail to commute with the action; on a 1-row
  // torus the vertical edges are self-loops with their own (weaker) rule.
  const Run runs[] = {
      {"d2z2", 1, 2, 0},  {"d3z2", 1, 2, 16}, {"d4i", 1, 2, 16},
      {"d4ii", 1, 2, 20}, {"d3z3", 1, 2, 0},  {"m1", 1, 2, 0},
      {"d3z2", 1, 1, 8},  {"d4ii", 1, 1, 8},
  };
  for (const auto& r : runs) {
    CAPTURE(r.name);
    CAPTURE(r.rows);
    CAPTURE(r.cols);
    auto s = fixtures::torus_space(fixtures::model(r.name), r.rows, r.cols);
    auto rep = alg::algebra_suite(s, 11);
    CHECK(rep.literal);
    CHECK(rep.pass);
    CHECK(rep.detail.empty());
    CHECK(rep.max_residual <= 1e-9);
    CHECK(rep.pairs_noncommuting == r.noncommuting);
    CHECK(rep.vectors == 20);
  }
}

TEST_CASE("structural tier agrees with the literal one") {
  for (const char* name : {"d3z2", "d4i", "d4ii"}) {
    CAPTURE(name);
    auto s = fixtures::torus_space(fixtures::model(name), 1, 2);
    auto lit = alg::algebra_suite(s, 3);
    auto str = alg::algebra_suite(s, 3, 20, 1e-9, /*literal_limit=*/1);
    CHECK(lit.literal);
    CHECK_FALSE(str.literal);
    CHECK(lit.pass);
    CHECK(str.pass);
    CHECK(lit.pairs_commuting == str.pairs_commuting);
    CHECK(lit.pairs_noncommuting == str.pairs_noncommuting);
  }
}

TEST_CASE("two-row grids have no self-loops and scale the pair counts") {
  auto s = fixtures::torus_space(fixtures::model("d4ii"), 2, 2);
  auto rep = alg::algebra_suite(s, 5);
  CHECK_FALSE(rep.literal);  // dim 65536 runs the structural tier
  CHECK(rep.pass);
  // 8 edges, heads exclude shifts 1..3, N = 2
  CHECK(rep.pairs_noncommuting == 48);
}

TEST_CASE("seeds only change the sampled vectors, not the verdict") {
  auto s = fixtures::torus_space(fixtures::model("d3z2"), 1, 2);
  for (uint64_t seed : {1ull, 2ull, 99ull}) {
    auto rep = alg::algebra_suite(s, seed);
    CHECK(rep.pass);
  }
}
