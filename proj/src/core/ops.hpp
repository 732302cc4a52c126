// Commuting-projector model operators, applied matrix-free. Conventions:
//  - gauge component at vertex v with group element g shifts In-edge digits by
//    +g, Out-edge digits by -g, leaves self-loops alone and acts on the matter
//    site by theta(g, .);
//  - vertex projector family A(v,J) = (1/N) sum_g w^{-(J-1)g} Abar(v,g);
//  - face projector B(f,h): eigenvalue 1 iff the signed boundary sum is h;
//  - edge comparator C(j,R): eigenvalue 1 on (alpha, g, beta) iff
//    theta(g, alpha) = beta + (R-1) mod M (R = 1 enters the Hamiltonian).
#pragma once

#include <complex>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "core/space.hpp"

namespace qdm::ops {

using cd = hs::cd;
using Vec = hs::Vec;
using SVec = std::unordered_map<uint64_t, cd>;

// Index image of basis state i under the gauge component Abar(v,g).
uint64_t vertex_component_index(const hs::Space& s, int v, int g, uint64_t i);

// Diagonal 0/1 eigenvalues.
int face_eigenvalue(const hs::Space& s, int f, int h, uint64_t i);
int edge_eigenvalue(const hs::Space& s, int j, int R, uint64_t i);

// Dense appliers; `out` is overwritten (and may not alias `in`).
void apply_vertex_component(const hs::Space& s, int v, int g, const Vec& in, Vec& out);
void apply_vertex_projector(const hs::Space& s, int v, int J, const Vec& in, Vec& out);
void apply_face_projector(const hs::Space& s, int f, int h, const Vec& in, Vec& out);
void apply_edge_projector(const hs::Space& s, int j, int R, const Vec& in, Vec& out);

// Single-edge clock/shift operators: X^p shifts the digit by +p,
// Z^p multiplies by w^(p * digit).
void apply_edge_x(const hs::Space& s, int edge, int p, const Vec& in, Vec& out);
void apply_edge_z(const hs::Space& s, int edge, int p, const Vec& in, Vec& out);

// Matter-site operator given by an M x M matrix (row, col) = (to, from).
void apply_matter_matrix(const hs::Space& s, int v, const std::vector<cd>& m,
                         const Vec& in, Vec& out);

// Active term lists after excluding vertices. Excluding v removes A(v,.) and,
// unless keep_edge_terms, every C(j,.) on an edge incident to v. e0 is the
// ground energy -(#vertices + #faces + #edges) over the active lists.
struct Terms {
  std::vector<int> vertices;
  std::vector<int> faces;
  std::vector<int> edges;
  double e0 = 0;
};

Terms make_terms(const hs::Space& s, const std::vector<int>& excluded = {},
                 bool keep_edge_terms = false);

// H = -sum A(v,1) - sum B(f,1) - sum C(j,1) over the active lists.
void apply_hamiltonian(const hs::Space& s, const Terms& t, const Vec& in, Vec& out);

// P = prod A(v,1) * prod B(f,1) * prod C(j,1); the diagonal factors are
// applied first. Dense and sparse forms.
void apply_global_projector(const hs::Space& s, const Terms& t, const Vec& in, Vec& out);
SVec apply_global_projector(const hs::Space& s, const Terms& t, const SVec& in);
SVec apply_hamiltonian(const hs::Space& s, const Terms& t, const SVec& in);

// Sparse primitives (used by trace/vacuum/confinement paths).
SVec apply_vertex_projector(const hs::Space& s, int v, int J, const SVec& in);
void prune(SVec& v, double eps = 1e-14);

cd sparse_inner(const SVec& a, const SVec& b);  // conjugate-linear in a
double sparse_norm(const SVec& a);

}  // namespace qdm::ops
