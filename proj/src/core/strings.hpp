// Quasiparticle string operators. Electric strings multiply edge clocks along
// a walk (Z^{+g} along the edge orientation, Z^{-g} against it); magnetic
// strings shift the edges crossed by a dual walk given as a face sequence.
#pragma once

#include <vector>

#include "core/ops.hpp"

namespace qdm::ex {

enum class StringKind { Electric, Magnetic };

struct StringOp {
  StringKind kind = StringKind::Electric;
  int charge = 1;
  std::vector<std::pair<int, int>> edges;  // (edge index, sign)
};

// Signs are derived from the walk; throws errc::path ("InvalidPath") if the
// edges do not chain into a connected walk.
StringOp electric_walk(const cell::Complex2& cx, const std::vector<int>& edge_path,
                       int g);

// Faces must be consecutively adjacent (adjacency through a shared edge); the
// crossed edge of each step is the lowest-index shared edge not crossed by
// the immediately preceding step. closed = true adds the wrap-around step.
StringOp magnetic_walk(const cell::Complex2& cx, const std::vector<int>& face_path,
                       int h, bool closed = false);

void apply_string(const hs::Space& s, const StringOp& op, const hs::Vec& in,
                  hs::Vec& out);
ops::SVec apply_string(const hs::Space& s, const StringOp& op, const ops::SVec& in);

struct ConfinementRow {
  int L = 0;
  double dE_magnetic = 0;
  double dE_electric = 0;
};

// Straight-walk scan on a torus grid: open walks of the requested lengths, or
// (closed = true) the non-contractible horizontal loop, for which every
// requested length must equal `cols`. Throws errc::path ("PathUnavailable")
// when a length does not fit the lattice.
std::vector<ConfinementRow> confinement_scan(const hs::Space& s, int rows, int cols,
                                             int matter_rep,
                                             const std::vector<int>& lengths,
                                             bool closed = false);

}  // namespace qdm::ex
