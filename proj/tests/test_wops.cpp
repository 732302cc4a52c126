#include "doctest.h"

#include <map>
#include <set>

#include "core/errors.hpp"
#include "core/wops.hpp"
#include "fixtures.hpp"

using namespace qdm;
using ex::Mat;

namespace {

hs::Space fixture_space(const char* name) {
  const auto& m = fixtures::model(name);
  return hs::Space(act::Action(m.N, m.perm), ex::solver_fixture());
}

Mat int_matrix(std::initializer_list<std::initializer_list<int>> rows) {
  Mat m(rows.size(), rows.begin()->size());
  int r = 0;
  for (const auto& row : rows) {
    int c = 0;
    for (int v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

// product map as "a*b" -> {label -> coeff}, for terse table comparisons
std::map<std::string, std::map<std::string, long long>> product_map(
    const ex::FusionTable& t) {
  std::map<std::string, std::map<std::string, long long>> out;
  for (size_t a = 0; a < t.labels.size(); ++a)
    for (size_t b = 0; b < t.labels.size(); ++b) {
      auto& cell = out[t.labels[a].str() + "*" + t.labels[b].str()];
      for (size_t c = 0; c < t.labels.size(); ++c)
        if (t.coeff[a][b][c]) cell[t.labels[c].str()] = t.coeff[a][b][c];
    }
  return out;
}

}  // namespace

TEST_CASE("block structure groups fixed points into one composite block") {
  auto mk = [](const char* name) {
    const auto& m = fixtures::model(name);
    return ex::make_blocks(act::Action(m.N, m.perm));
  };
  auto b3 = mk("d3z2");
  REQUIRE(b3.blocks.size() == 2);
  CHECK(b3.blocks[0] == std::vector<int>{0, 1});
  CHECK(b3.blocks[1] == std::vector<int>{2});
  CHECK(b3.has_fixed);
  CHECK(b3.L == 2);

  auto b4 = mk("d4ii");
  REQUIRE(b4.blocks.size() == 2);
  CHECK(b4.blocks[0] == std::vector<int>{0, 1});
  CHECK(b4.blocks[1] == std::vector<int>{2, 3});  // both fixed points
  CHECK(b4.has_fixed);

  auto bi = mk("d4i");
  REQUIRE(bi.blocks.size() == 2);
  CHECK_FALSE(bi.has_fixed);
  CHECK(bi.L == 2);
}

TEST_CASE("solver spans the intertwiners; the family carries the canonical forms") {
  auto s = fixture_space("d3z2");

  // uniform-shift mask: the two blocks scale independently
  auto w12 = ex::solve_w(s, 1, 2);
  REQUIRE(w12.size() == 2);
  for (const auto& w : w12) CHECK(ex::verify_w(s, w) < 1e-9);
  CHECK((w12[0].m - int_matrix({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}})).norm() < 1e-9);
  CHECK((w12[1].m - int_matrix({{0, 0, 0}, {0, 0, 0}, {0, 0, 1}})).norm() < 1e-9);

  // exchange mask: in-arrows, out-arrows and the corner
  auto w13 = ex::solve_w(s, 1, 3);
  REQUIRE(w13.size() == 3);
  for (const auto& w : w13) CHECK(ex::verify_w(s, w) < 1e-9);

  // the family combines each basis into the canonical integer operator
  auto fam = ex::derive_family(s).ws;
  REQUIRE(fam.size() == 3);
  CHECK((fam[1].m - int_matrix({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})).norm() < 1e-9);
  CHECK((fam[2].m - int_matrix({{0, 0, 1}, {0, 0, 1}, {1, 1, 1}})).norm() < 1e-9);
  CHECK(ex::verify_w(s, fam[1]) < 1e-9);
  CHECK(ex::verify_w(s, fam[2]) < 1e-9);
}

TEST_CASE("verification flags perturbed operators") {
  auto s = fixture_space("d3z2");
  ex::WOperator w = ex::derive_family(s).ws[1];
  CHECK(ex::verify_w(s, w) < 1e-9);
  w.m(0, 0) += 0.5;  // off the support pattern, breaks the exchange symmetry
  CHECK(ex::verify_w(s, w) > 0.1);
}

TEST_CASE("derived family: full grid without fixed points, chain plus exchange with them") {
  auto labels_of = [](const char* name) {
    auto s = fixture_space(name);
    auto fam = ex::derive_family(s);
    std::vector<std::string> out;
    for (const auto& w : fam.ws)
      out.push_back(w.label.str() + (w.alias.empty() ? "" : "=" + w.alias));
    return out;
  };
  CHECK(labels_of("d2z2") ==
        std::vector<std::string>{"(1,1)", "(1,2)", "(2,1)", "(2,2)"});
  CHECK(labels_of("d4i") ==
        std::vector<std::string>{"(1,1)", "(1,2)", "(1,3)", "(1,4)", "(2,1)",
                                 "(2,2)", "(2,3)", "(2,4)"});
  CHECK(labels_of("d3z2") ==
        std::vector<std::string>{"(1,1)=(1;1,1)", "(1,2)=(1;2,1)",
                                 "(1,3)=(1;3,2)"});
  CHECK(labels_of("d4ii") ==
        std::vector<std::string>{"(1,1)=(1;1,1)", "(1,2)=(1;2,2)",
                                 "(1,3)=(1;3,3)"});
}

TEST_CASE("two-element fusion table is the group algebra of Z2 x Z2") {
  auto s = fixture_space("d2z2");
  auto t = ex::fusion_table(ex::derive_family(s).ws);
  CHECK(t.abelian);
  CHECK_FALSE(ex::detect_nonabelian(t));
  auto pm = product_map(t);
  // (J,K) compose componentwise, each product a single term
  for (int j1 = 1; j1 <= 2; ++j1)
    for (int k1 = 1; k1 <= 2; ++k1)
      for (int j2 = 1; j2 <= 2; ++j2)
        for (int k2 = 1; k2 <= 2; ++k2) {
          std::string key = "(" + std::to_string(j1) + "," + std::to_string(k1) +
                            ")*(" + std::to_string(j2) + "," +
                            std::to_string(k2) + ")";
          std::string want = "(" + std::to_string(1 + (j1 + j2) % 2) + "," +
                             std::to_string(1 + (k1 + k2) % 2) + ")";
          REQUIRE(pm.count(key));
          CHECK(pm[key] == std::map<std::string, long long>{{want, 1}});
        }
}

TEST_CASE("three-element fusion table closes on a Fibonacci-like exchange") {
  auto s = fixture_space("d3z2");
  auto t = ex::fusion_table(ex::derive_family(s).ws);
  CHECK_FALSE(t.abelian);
  CHECK(ex::detect_nonabelian(t));
  auto pm = product_map(t);
  CHECK(pm["(1,2)*(1,2)"] == std::map<std::string, long long>{{"(1,1)", 1}});
  CHECK(pm["(1,2)*(1,3)"] == std::map<std::string, long long>{{"(1,3)", 1}});
  CHECK(pm["(1,3)*(1,2)"] == std::map<std::string, long long>{{"(1,3)", 1}});
  CHECK(pm["(1,3)*(1,3)"] ==
        std::map<std::string, long long>{{"(1,1)", 1}, {"(1,2)", 1}, {"(1,3)", 1}});
}

TEST_CASE("composite exchange squares to twice the two vacua") {
  auto s = fixture_space("d4ii");
  auto fam = ex::derive_family(s);
  auto t = ex::fusion_table(fam.ws);
  CHECK(ex::detect_nonabelian(t));
  auto pm = product_map(t);
  CHECK(pm["(1,3)*(1,3)"] ==
        std::map<std::string, long long>{{"(1,1)", 2}, {"(1,2)", 2}});
  // aliases carry the per-block refinement
  CHECK(fam.ws[2].alias == "(1;3,3)");
}

TEST_CASE("dropping a needed member reports the offending pair") {
  auto s = fixture_space("d3z2");
  auto fam = ex::derive_family(s).ws;
  REQUIRE(fam.size() == 3);
  std::vector<ex::WOperator> partial = {fam[0], fam[2]};  // no (1,2)
  CHECK_THROWS_AS(ex::fusion_table(partial), qdm::error);
  try {
    ex::fusion_table(partial);
  } catch (const qdm::error& e) {
    CHECK(e.code() == qdm::errc::fusion);
    std::string msg = e.what();
    CHECK(msg.find("NotClosed") != std::string::npos);
    CHECK(msg.find("(1,3)") != std::string::npos);
  }
}

TEST_CASE("non-integer expansions are rejected with the pair named") {
  ex::WOperator id{{1, 1}, int_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), ""};
  ex::WOperator d{{1, 2}, int_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}), ""};
  // d*d = diag(1,1,4) = -2*id + 3*d: inside the span, but not nonnegative
  CHECK_THROWS_AS(ex::fusion_table({id, d}), qdm::error);
  try {
    ex::fusion_table({id, d});
  } catch (const qdm::error& e) {
    CHECK(e.code() == qdm::errc::fusion);
    CHECK(std::string(e.what()).find("NonIntegerCoefficients") != std::string::npos);
  }
}

TEST_CASE("non-Abelian detection matches the special form across Z2 actions") {
  // every permutation of order dividing two, for small matter sets
  for (int M = 2; M <= 4; ++M) {
    std::vector<int> perm(M);
    std::vector<int> idx(M);
    for (int i = 0; i < M; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end());
    do {
      for (int i = 0; i < M; ++i) perm[i] = idx[i];
      bool involution = true;
      for (int i = 0; i < M; ++i) involution &= perm[perm[i]] == i;
      if (!involution) continue;
      act::Action a(2, perm);
      hs::Space s(a, ex::solver_fixture());
      auto t = ex::fusion_table(ex::derive_family(s).ws);
      CAPTURE(M);
      CAPTURE(perm);
      CHECK(ex::detect_nonabelian(t) == a.special_form().flag);
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
}

TEST_CASE("condensation maps the orbit vacuum onto the fixed-point one") {
  auto sp = fixtures::torus_space(fixtures::model("d3z2"), 1, 2);
  auto t = ops::make_terms(sp);
  auto s = fixture_space("d3z2");
  auto fam = ex::derive_family(s).ws;
  REQUIRE(fam.size() == 3);
  auto res = ex::condense(sp, t, 0, fam[2].m);
  CHECK_FALSE(res.zero);
  REQUIRE(res.representatives == std::vector<int>{0, 2});
  CHECK(res.overlap_sq[0] == doctest::Approx(0).epsilon(1e-9));
  CHECK(res.overlap_sq[1] == doctest::Approx(1).epsilon(1e-9));
}

TEST_CASE("condensation reports annihilation") {
  auto sp = fixtures::torus_space(fixtures::model("d3z2"), 1, 2);
  auto t = ops::make_terms(sp);
  // this matrix only feeds off the fixed point, absent from the orbit vacuum
  Mat w = int_matrix({{0, 0, 1}, {0, 0, 0}, {0, 0, 0}});
  auto res = ex::condense(sp, t, 0, w);
  CHECK(res.zero);
}

TEST_CASE("shift operators connect the paired-orbit vacua") {
  auto sp = fixtures::torus_space(fixtures::model("d4i"), 1, 2);
  auto t = ops::make_terms(sp);
  // matter shift by two: alpha -> alpha + 2 mod 4, applied at every vertex
  Mat x2 = int_matrix(
      {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  auto res = ex::condense(sp, t, 0, x2);
  CHECK_FALSE(res.zero);
  REQUIRE(res.representatives == std::vector<int>{0, 2});
  CHECK(res.overlap_sq[0] == doctest::Approx(0).epsilon(1e-9));
  CHECK(res.overlap_sq[1] == doctest::Approx(1).epsilon(1e-9));
}

TEST_CASE("derived tables match the recorded references where they exist") {
  for (const char* name : {"d2z2", "d3z2", "d4ii"}) {
    CAPTURE(name);
    auto s = fixture_space(name);
    const auto& m = fixtures::model(name);
    auto t = ex::fusion_table(ex::derive_family(s).ws);
    CHECK(ex::reference_diffs(act::Action(m.N, m.perm), t).empty());
  }
  // the recorded reference for the paired-orbit action contains five entries
  // that disagree with the derivation; they are reported, not silently fixed
  auto s = fixture_space("d4i");
  const auto& m = fixtures::model("d4i");
  auto t = ex::fusion_table(ex::derive_family(s).ws);
  auto diffs = ex::reference_diffs(act::Action(m.N, m.perm), t);
  REQUIRE(diffs.size() == 5);
  CHECK(diffs[0] ==
        "product (1,1)*(2,1): derived 1x(2,1), reference 1x(1,5)");
  CHECK(diffs[4] ==
        "product (1,2)*(2,4): derived 1x(2,3), reference 1x(1,3)");
}
