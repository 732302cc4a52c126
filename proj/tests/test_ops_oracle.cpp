#include "doctest.h"

#include <random>

#include "core/ops.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace qdm;
using oracle::Mat;

namespace {

constexpr double kTol = 1e-12;

// Library operator as a dense matrix, column by column.
template <class F>
Mat lib_matrix(const hs::Space& s, F&& f) {
  return oracle::materialize(
      s, [&](const hs::Vec& in, hs::Vec& out) { f(in, out); });
}

void compare_all(const hs::Space& s) {
  const int N = s.N(), M = s.M(), V = s.vertex_count(), E = s.edge_count();
  const int F = (int)s.complex().faces.size();

  for (int v = 0; v < V; ++v) {
    for (int g = 0; g < N; ++g) {
      Mat lib = lib_matrix(s, [&](const hs::Vec& in, hs::Vec& out) {
        ops::apply_vertex_component(s, v, g, in, out);
      });
      CHECK(oracle::max_abs_diff(lib, oracle::abar(s, v, g)) < kTol);
    }
    for (int J = 1; J <= N; ++J) {
      Mat lib = lib_matrix(s, [&](const hs::Vec& in, hs::Vec& out) {
        ops::apply_vertex_projector(s, v, J, in, out);
      });
      CHECK(oracle::max_abs_diff(lib, oracle::vertex_projector(s, v, J)) < kTol);
    }
  }

  for (int f = 0; f < F; ++f)
    for (int h = 0; h < N; ++h) {
      Mat lib = lib_matrix(s, [&](const hs::Vec& in, hs::Vec& out) {
        ops::apply_face_projector(s, f, h, in, out);
      });
      Mat ref = oracle::face_projector(s, f, h);
      CHECK(oracle::max_abs_diff(lib, ref) < kTol);
      for (uint64_t i = 0; i < s.dim(); ++i)
        CHECK(std::abs(ref(i, i).real() - ops::face_eigenvalue(s, f, h, i)) < kTol);
    }

  for (int j = 0; j < E; ++j)
    for (int R = 1; R <= M; ++R) {
      Mat lib = lib_matrix(s, [&](const hs::Vec& in, hs::Vec& out) {
        ops::apply_edge_projector(s, j, R, in, out);
      });
      Mat ref = oracle::edge_projector(s, j, R);
      CHECK(oracle::max_abs_diff(lib, ref) < kTol);
      for (uint64_t i = 0; i < s.dim(); ++i)
        CHECK(std::abs(ref(i, i).real() - ops::edge_eigenvalue(s, j, R, i)) < kTol);
    }

  for (int e = 0; e < E; ++e)
    for (int p = 0; p < N; ++p) {
      Mat lx = lib_matrix(s, [&](const hs::Vec& in, hs::Vec& out) {
        ops::apply_edge_x(s, e, p, in, out);
      });
      CHECK(oracle::max_abs_diff(lx, oracle::edge_x(s, e, p)) < kTol);
      Mat lz = lib_matrix(s, [&](const hs::Vec& in, hs::Vec& out) {
        ops::apply_edge_z(s, e, p, in, out);
      });
      CHECK(oracle::max_abs_diff(lz, oracle::edge_z(s, e, p)) < kTol);
    }

  auto t = ops::make_terms(s);
  Mat lh = lib_matrix(s, [&](const hs::Vec& in, hs::Vec& out) {
    ops::apply_hamiltonian(s, t, in, out);
  });
  CHECK(oracle::max_abs_diff(lh, oracle::hamiltonian(s, t)) < kTol);
  Mat lp = lib_matrix(s, [&](const hs::Vec& in, hs::Vec& out) {
    ops::apply_global_projector(s, t, in, out);
  });
  CHECK(oracle::max_abs_diff(lp, oracle::global_projector(s, t)) < kTol);
}

}  // namespace

TEST_CASE("matrix-free operators agree entrywise with the dense Kronecker route") {
  for (const auto& m : fixtures::models()) {
    for (auto [r, c] : {std::pair{1, 1}, {1, 2}}) {
      auto s = fixtures::torus_space(m, r, c);
      if (s.dim() > 1024) continue;
      CAPTURE(m.name);
      CAPTURE(r);
      CAPTURE(c);
      compare_all(s);
    }
  }
}

TEST_CASE("matter matrix applier matches a Kronecker factor") {
  auto s = fixtures::torus_space(fixtures::model("d3z2"), 1, 2);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1, 1);
  int M = s.M();
  std::vector<hs::cd> w(M * M);
  Mat wm(M, M);
  for (int r = 0; r < M; ++r)
    for (int c = 0; c < M; ++c) {
      w[r * M + c] = hs::cd(u(rng), u(rng));
      wm(r, c) = w[r * M + c];
    }
  for (int v = 0; v < s.vertex_count(); ++v) {
    Mat lib = lib_matrix(s, [&](const hs::Vec& in, hs::Vec& out) {
      ops::apply_matter_matrix(s, v, w, in, out);
    });
    Mat ref = oracle::assemble(s, {}, {{v, wm}});
    CHECK(oracle::max_abs_diff(lib, ref) < kTol);
  }
}

TEST_CASE("excluded vertices drop their terms") {
  auto s = fixtures::torus_space(fixtures::model("d3z2"), 1, 2);
  auto t_all = ops::make_terms(s);
  CHECK(t_all.vertices.size() == 2);
  CHECK(t_all.faces.size() == 2);
  CHECK(t_all.edges.size() == 4);
  CHECK(t_all.e0 == -8);

  auto t_cut = ops::make_terms(s, {0});
  CHECK(t_cut.vertices == std::vector<int>{1});
  CHECK(t_cut.faces.size() == 2);
  // every edge incident to vertex 0 is dropped with it
  for (int e : t_cut.edges) {
    CHECK(s.complex().edges[e].tail != 0);
    CHECK(s.complex().edges[e].head != 0);
  }
  auto t_keep = ops::make_terms(s, {0}, true);
  CHECK(t_keep.vertices == std::vector<int>{1});
  CHECK(t_keep.edges.size() == 4);

  Mat lh = lib_matrix(s, [&](const hs::Vec& in, hs::Vec& out) {
    ops::apply_hamiltonian(s, t_cut, in, out);
  });
  CHECK(oracle::max_abs_diff(lh, oracle::hamiltonian(s, t_cut)) < kTol);
}

TEST_CASE("sparse appliers agree with dense ones") {
  auto s = fixtures::torus_space(fixtures::model("d4ii"), 1, 1);
  auto t = ops::make_terms(s);
  ops::SVec sv;
  sv[s.encode({0, 0}, {0})] = hs::cd(0.6, 0);
  sv[s.encode({1, 0}, {2})] = hs::cd(0, 0.8);
  hs::Vec dv = s.zeros();
  for (const auto& [i, a] : sv) dv[i] = a;

  auto sp = ops::apply_global_projector(s, t, sv);
  hs::Vec dp;
  ops::apply_global_projector(s, t, dv, dp);
  for (uint64_t i = 0; i < s.dim(); ++i) {
    auto it = sp.find(i);
    hs::cd have = it == sp.end() ? hs::cd(0, 0) : it->second;
    CHECK(std::abs(have - dp[i]) < kTol);
  }

  auto sh = ops::apply_hamiltonian(s, t, sv);
  hs::Vec dh;
  ops::apply_hamiltonian(s, t, dv, dh);
  for (uint64_t i = 0; i < s.dim(); ++i) {
    auto it = sh.find(i);
    hs::cd have = it == sh.end() ? hs::cd(0, 0) : it->second;
    CHECK(std::abs(have - dh[i]) < kTol);
  }

  CHECK(std::abs(ops::sparse_norm(sv) - hs::norm(dv)) < kTol);
}
