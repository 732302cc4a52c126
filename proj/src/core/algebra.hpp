// Model-structure verification: gauge-component relations, pairwise
// commutators among the three projector families, and per-family
// idempotence / orthogonality / resolution of identity.
//
// Two tiers. Spaces up to `literal_limit` evaluate every operator pair
// literally on random vectors. Larger spaces verify the permutation layer
// exhaustively at the basis-index level (component power law, cross-vertex
// commutation, invariance of the diagonal eigenvalues), which is strictly
// stronger per relation, plus a thin random-vector smoke layer for the
// weighted-sum appliers.
//
// Commutator scope: all Hamiltonian pairs commute, as do all family pairs
// except [A_{v,J}, C_{j,R}] with R > 1 when v is the head of edge j and the
// matter action does not commute with the cyclic shift that generates the
// C family. Those pairs fail to commute by construction; the suite confirms
// the violation (pairs_noncommuting) instead of asserting zero.
#pragma once

#include <cstdint>
#include <string>

#include "core/space.hpp"

namespace qdm::alg {

struct AlgebraReport {
  bool pass = false;
  bool literal = false;        // every pair evaluated on vectors
  int pairs_commuting = 0;     // commutator pairs verified to vanish
  int pairs_noncommuting = 0;  // out-of-scope pairs confirmed nonzero
  int vectors = 0;             // random vectors per relation
  double max_residual = 0;     // worst residual among vanishing relations
  std::string detail;          // first failure; empty when clean
};

// Whether theta(g, .) commutes with the matter cyclic shift; decides the
// commutator scope described above.
bool shift_central(const act::Action& a);

AlgebraReport algebra_suite(const hs::Space& s, uint64_t seed, int nvec = 20,
                            double tol = 1e-9, uint64_t literal_limit = 25000);

}  // namespace qdm::alg
