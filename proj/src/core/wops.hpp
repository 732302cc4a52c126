// Matter quasiparticle W operators, their label scheme, fusion tables and
// condensation. Labels (J,K): J = 1..N picks the vertex-projector character
// the operator intertwines (A(v,J) W = W A(v,1)); K picks an admissible
// support pattern over the matter sectors (theta-orbits, with all fixed
// points grouped into one composite cyclic block F):
//   K = 1..L         uniform within-block cyclic shift s = K-1 on every block
//                    (L = lcm of the block sizes),
//   K = L+1          orbit<->F exchange pattern (only when both a nontrivial
//                    orbit and a fixed point exist); the fixed-block diagonal
//                    corner is included or not according to which variant has
//                    an integer Frobenius-Perron dimension,
//   afterwards       rotations between same-size nontrivial orbits
//                    (rotation amount x twist), enumerated deterministically.
// solve_w returns a canonical basis of the intertwiner space restricted to
// the pattern; refined per-block labels (J; K_1, ..., K_B) are carried as
// alias metadata.
#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "core/ground.hpp"

namespace qdm::ex {

using Mat = Eigen::MatrixXcd;

struct WLabel {
  int J = 1;
  int K = 1;
  std::string str() const {
    return "(" + std::to_string(J) + "," + std::to_string(K) + ")";
  }
  bool operator==(const WLabel& o) const { return J == o.J && K == o.K; }
};

struct WOperator {
  WLabel label;
  Mat m;
  std::string alias;  // refined label, e.g. "(1;3,3)"; empty if none
};

struct Blocks {
  std::vector<std::vector<int>> blocks;  // cycle-ordered element lists
  bool has_fixed = false;                // last block collects the fixed points
  int L = 1;                             // lcm of block sizes
};

Blocks make_blocks(const act::Action& a);

// Entries (row, col) admitted by flat label K; empty if K is out of range.
std::vector<std::pair<int, int>> label_mask(const act::Action& a, int K);

// The two-vertex / one-edge faceless complex used as the solver fixture.
cell::Complex2 solver_fixture();

// Canonical basis (column-pivoted elimination, integer-cleared entries) of
// the A-relation intertwiner space supported on label_mask(K). An empty
// result means the solution space is empty (not an error).
std::vector<WOperator> solve_w(const hs::Space& fixture, int J, int K);

// Per-block shifts variant for refined labels; shifts.size() must equal the
// number of blocks.
std::vector<WOperator> solve_w_refined(const hs::Space& fixture, int J,
                                       const std::vector<int>& shifts);

// Max of the operator residual of A(v,J) W = W A(v,1) over the vertices of
// the fixture and the support-pattern residual, for W scaled to unit
// Frobenius norm.
double verify_w(const hs::Space& fixture, const WOperator& w);

struct Family {
  std::vector<WOperator> ws;
};

// Canonical quasiparticle family used for fusion: the full (J,K) grid when
// the action has no fixed points (or is trivial), and the J = 1 cyclic chain
// plus the exchange operator when it is special-form.
Family derive_family(const hs::Space& fixture);

struct FusionTable {
  std::vector<WLabel> labels;
  std::vector<std::string> aliases;
  // coeff[a][b][c] = multiplicity of labels[c] in labels[a] x labels[b]
  std::vector<std::vector<std::vector<long long>>> coeff;
  bool abelian = false;
};

// Throws errc::fusion ("NotClosed: ... pair (a,b)" or
// "NonIntegerCoefficients: ... pair (a,b)") when a product leaves the span or
// needs non-(nonnegative-integer) coefficients after phase removal.
FusionTable fusion_table(const std::vector<WOperator>& ws);

bool detect_nonabelian(const FusionTable& t);

struct CondenseResult {
  bool zero = false;                // W applied at every vertex annihilated
  std::vector<int> representatives; // matter digit labelling each vacuum
  std::vector<double> overlap_sq;   // squared overlap with each vacuum ray
};

// Applies W at every vertex of the state space to the vacuum grown from
// matter seed `src_rep`, then reports squared overlaps with every vacuum.
CondenseResult condense(const hs::Space& s, const ops::Terms& t, int src_rep,
                        const Mat& w);

// Diffs of a derived table against the bundled reference table for this
// action (empty when they agree or no reference is recorded).
std::vector<std::string> reference_diffs(const act::Action& a, const FusionTable& t);

}  // namespace qdm::ex
