#include "core/ground.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "core/errors.hpp"

namespace qdm::gs {

namespace {

bool diag_pass(const hs::Space& s, const ops::Terms& t, uint64_t i) {
  for (int j : t.edges)
    if (!ops::edge_eigenvalue(s, j, 1, i)) return false;
  for (int f : t.faces)
    if (!ops::face_eigenvalue(s, f, 0, i)) return false;
  return true;
}

}  // namespace

TraceResult ground_degeneracy(const hs::Space& s, const ops::Terms& t, uint64_t seed,
                              int threads) {
  TraceResult r;
  if (s.dim() <= kExactTraceLimit) {
    auto range_trace = [&](uint64_t lo, uint64_t hi) {
      double acc = 0;
      for (uint64_t i = lo; i < hi; ++i) {
        if (!diag_pass(s, t, i)) continue;
        SVec col{{i, hs::cd(1, 0)}};
        for (int v : t.vertices) col = ops::apply_vertex_projector(s, v, 1, col);
        auto it = col.find(i);
        if (it != col.end()) acc += it->second.real();
      }
      return acc;
    };
    double tr = 0;
    int T = std::max(1, threads);
    if (T == 1 || s.dim() < 2 * uint64_t(T)) {
      tr = range_trace(0, s.dim());
    } else {
      std::vector<double> part(T, 0);
      std::vector<std::thread> pool;
      uint64_t chunk = (s.dim() + T - 1) / T;
      for (int k = 0; k < T; ++k) {
        uint64_t lo = uint64_t(k) * chunk, hi = std::min(s.dim(), lo + chunk);
        pool.emplace_back([&, k, lo, hi] { part[k] = lo < hi ? range_trace(lo, hi) : 0; });
      }
      for (auto& th : pool) th.join();
      for (double p : part) tr += p;  // ordered reduction
    }
    r.trace = tr;
    r.degeneracy = (long long)std::llround(tr);
    r.residual = std::abs(tr - double(r.degeneracy));
    require(r.residual < 1e-6, errc::internal,
            "NonIntegerTrace: tr(P) = " + std::to_string(tr));
    return r;
  }
  // Hutchinson estimate with Rademacher probes; needs dense vectors.
  s.require_dense("stochastic trace");
  r.stochastic = true;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 1);
  const int samples = 64;
  double acc = 0;
  Vec z(s.dim()), pz;
  for (int k = 0; k < samples; ++k) {
    for (auto& x : z) x = coin(rng) ? hs::cd(1, 0) : hs::cd(-1, 0);
    ops::apply_global_projector(s, t, z, pz);
    acc += hs::inner(z, pz).real();
  }
  r.trace = acc / samples;
  r.degeneracy = (long long)std::llround(r.trace);
  r.residual = std::abs(r.trace - double(r.degeneracy));
  require(r.residual < 0.1, errc::internal,
          "NonIntegerTrace: stochastic tr(P) = " + std::to_string(r.trace) +
              " is not near an integer; rerun exact");
  return r;
}

Vec vacuum_state(const hs::Space& s, const ops::Terms& t,
                 const std::vector<int>& matter_digits) {
  s.require_dense("vacuum state");
  uint64_t seed_idx = s.encode(std::vector<int>(s.edge_count(), 0), matter_digits);
  SVec cur{{seed_idx, hs::cd(1, 0)}};
  cur = ops::apply_global_projector(s, t, cur);
  double n = ops::sparse_norm(cur);
  require(n > 1e-12, errc::config, "AnnihilatedSeed: projector kills the product seed");
  Vec out(s.dim(), hs::cd(0, 0));
  for (const auto& [i, a] : cur) out[i] = a / n;
  return out;
}

Vec vacuum_state(const hs::Space& s, const ops::Terms& t, int matter_rep) {
  require(matter_rep >= 0 && matter_rep < s.M(), errc::config,
          "matter representative out of range");
  return vacuum_state(s, t, std::vector<int>(s.vertex_count(), matter_rep));
}

SVec vacuum_sparse(const hs::Space& s, const ops::Terms& t, int matter_rep) {
  require(matter_rep >= 0 && matter_rep < s.M(), errc::config,
          "matter representative out of range");
  uint64_t seed_idx = s.encode(std::vector<int>(s.edge_count(), 0),
                               std::vector<int>(s.vertex_count(), matter_rep));
  SVec cur{{seed_idx, hs::cd(1, 0)}};
  cur = ops::apply_global_projector(s, t, cur);
  double n = ops::sparse_norm(cur);
  require(n > 1e-12, errc::config, "AnnihilatedSeed: projector kills the product seed");
  for (auto& [i, a] : cur) a /= n;
  return cur;
}

std::vector<int> vacuum_representatives(const act::Action& a) {
  std::vector<int> reps;
  for (const auto& orb : a.orbits().orbits) reps.push_back(orb.front());
  std::sort(reps.begin(), reps.end());
  return reps;
}

std::vector<std::pair<double, int>> low_spectrum(const hs::Space& s,
                                                 const ops::Terms& t, int count,
                                                 uint64_t seed) {
  const double cluster_tol = 1e-7;
  std::vector<double> evs;

  if (s.dim() <= kDenseDiagCap) {
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero((long)s.dim(), (long)s.dim());
    for (uint64_t i = 0; i < s.dim(); ++i) {
      SVec col = ops::apply_hamiltonian(s, t, SVec{{i, hs::cd(1, 0)}});
      for (const auto& [j, a] : col) {
        require(std::abs(a.imag()) < 1e-12, errc::internal,
                "Hamiltonian column has an imaginary part");
        H((long)j, (long)i) = a.real();
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
    evs.assign(es.eigenvalues().data(), es.eigenvalues().data() + s.dim());
  } else {
    // Lanczos with full reorthogonalization; adequate for low clusters.
    s.require_dense("iterative spectrum");
    int want = count > 0 ? count : 16;
    int m = (int)std::min<uint64_t>(s.dim(), (uint64_t)std::max(2 * want + 30, 60));
    std::mt19937_64 rng(seed + 1);
    std::vector<Vec> basis;
    Vec v = hs::random_state(s.dim(), rng), w;
    std::vector<double> alpha, beta;
    for (int it = 0; it < m; ++it) {
      basis.push_back(v);
      ops::apply_hamiltonian(s, t, v, w);
      alpha.push_back(hs::inner(v, w).real());
      for (const auto& b : basis) {
        hs::cd c = hs::inner(b, w);
        for (uint64_t i = 0; i < s.dim(); ++i) w[i] -= c * b[i];
      }
      double nb = hs::norm(w);
      if (nb < 1e-10) break;
      beta.push_back(nb);
      for (auto& x : w) x /= nb;
      v = w;
    }
    int k = (int)alpha.size();
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i) {
      T(i, i) = alpha[i];
      if (i + 1 < k) T(i, i + 1) = T(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
    evs.assign(es.eigenvalues().data(), es.eigenvalues().data() + k);
  }

  std::vector<std::pair<double, int>> clusters;
  int covered = 0;
  for (double e : evs) {
    if (!clusters.empty() && std::abs(e - clusters.back().first) < cluster_tol) {
      clusters.back().second++;
    } else {
      if (count > 0 && covered >= count) break;
      clusters.push_back({e, 1});
    }
    ++covered;
  }
  return clusters;
}

ViolationProfile violation_profile(const hs::Space& s, const ops::Terms& t,
                                   const Vec& state) {
  ViolationProfile p;
  Vec tmp;
  for (int v : t.vertices) {
    ops::apply_vertex_projector(s, v, 1, state, tmp);
    p.vertex += 1.0 - hs::inner(state, tmp).real();
  }
  double bsum = 0, csum = 0;
  for (uint64_t i = 0; i < state.size(); ++i) {
    double w = std::norm(state[i]);
    if (w == 0) continue;
    for (int f : t.faces) bsum += w * ops::face_eigenvalue(s, f, 0, i);
    for (int j : t.edges) csum += w * ops::edge_eigenvalue(s, j, 1, i);
  }
  p.face = double(t.faces.size()) - bsum;
  p.edge = double(t.edges.size()) - csum;
  return p;
}

ViolationProfile violation_profile(const hs::Space& s, const ops::Terms& t,
                                   const SVec& state) {
  ViolationProfile p;
  for (int v : t.vertices) {
    SVec tmp = ops::apply_vertex_projector(s, v, 1, state);
    p.vertex += 1.0 - ops::sparse_inner(state, tmp).real();
  }
  double bsum = 0, csum = 0;
  for (const auto& [i, a] : state) {
    double w = std::norm(a);
    for (int f : t.faces) bsum += w * ops::face_eigenvalue(s, f, 0, i);
    for (int j : t.edges) csum += w * ops::edge_eigenvalue(s, j, 1, i);
  }
  p.face = double(t.faces.size()) - bsum;
  p.edge = double(t.edges.size()) - csum;
  return p;
}

double energy(const hs::Space& s, const ops::Terms& t, const Vec& state) {
  Vec h;
  ops::apply_hamiltonian(s, t, state, h);
  return hs::inner(state, h).real();
}

double energy(const hs::Space& s, const ops::Terms& t, const SVec& state) {
  SVec h = ops::apply_hamiltonian(s, t, state);
  return ops::sparse_inner(state, h).real();
}

}  // namespace qdm::gs
