// Ground-space analysis: degeneracy as tr(P) of the global projector,
// vacuum construction by projecting product seeds, low spectrum, and
// per-family violation profiles.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "core/ops.hpp"

namespace qdm::gs {

using hs::Vec;
using ops::SVec;

// Dimension at or below which tr(P) is evaluated column-by-column (exact);
// above it a seeded Hutchinson estimate over dense vectors is used. The
// exact scan prefilters columns on the diagonal projectors, so its cost is
// one diagonal pass plus vertex products on the few surviving columns, and
// it stays affordable well past the dense-vector regime.
constexpr uint64_t kExactTraceLimit = uint64_t(1) << 24;
constexpr uint64_t kDenseDiagCap = 1024;

struct TraceResult {
  long long degeneracy = 0;
  double trace = 0;
  double residual = 0;  // |trace - degeneracy|
  bool stochastic = false;
};

// Throws errc::internal ("NonIntegerTrace") if the residual exceeds 1e-6 on
// the exact path (0.1 on the stochastic path), errc::dim_cap if a dense
// vector would be needed and does not fit. The exact path splits the column
// range over `threads` workers with an ordered reduction (deterministic).
TraceResult ground_degeneracy(const hs::Space& s, const ops::Terms& t,
                              uint64_t seed = 0, int threads = 1);

// Normalized P * (edges all 0, matter digits as given). Throws errc::config
// ("AnnihilatedSeed") if the projection vanishes.
Vec vacuum_state(const hs::Space& s, const ops::Terms& t,
                 const std::vector<int>& matter_digits);
Vec vacuum_state(const hs::Space& s, const ops::Terms& t, int matter_rep);
SVec vacuum_sparse(const hs::Space& s, const ops::Terms& t, int matter_rep);

// Minimal matter digit of each theta-orbit, ascending: one seed per vacuum.
std::vector<int> vacuum_representatives(const act::Action& a);

// Eigenvalue clusters (value, multiplicity) ascending, covering at least
// `count` states (count = 0: everything available). Dense and exact up to
// kDenseDiagCap; Lanczos beyond (low clusters only, approximate).
std::vector<std::pair<double, int>> low_spectrum(const hs::Space& s,
                                                 const ops::Terms& t,
                                                 int count = 0,
                                                 uint64_t seed = 0);

struct ViolationProfile {
  double vertex = 0, face = 0, edge = 0;
};
ViolationProfile violation_profile(const hs::Space& s, const ops::Terms& t,
                                   const Vec& state);
ViolationProfile violation_profile(const hs::Space& s, const ops::Terms& t,
                                   const SVec& state);

double energy(const hs::Space& s, const ops::Terms& t, const Vec& state);
double energy(const hs::Space& s, const ops::Terms& t, const SVec& state);

}  // namespace qdm::gs
