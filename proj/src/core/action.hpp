// Cyclic group Z_N acting on a finite matter set by powers of one permutation.
#pragma once

#include <cstdint>
#include <vector>

namespace qdm::act {

// Orbit structure of the generator permutation. Orbits are stored in cycle
// order starting from their minimal element and listed by minimal element.
struct OrbitDecomposition {
  std::vector<std::vector<int>> orbits;
  int nontrivial = 0;       // orbits of size >= 2
  int fixed_count = 0;      // singleton orbits
  int d_alg = 0;            // nontrivial + fixed_count
};

struct SpecialForm {
  bool flag = false;        // at least one nontrivial orbit AND one fixed point
  int k = 0;                // number of nontrivial orbits
  int identity_dim = 0;     // number of fixed points
};

// Immutable; all queries are const and thread-safe.
class Action {
public:
  // Builds theta(g, .) = perm^g. Throws errc::config if `perm` is not a
  // permutation of 0..M-1 or if perm^N != id (order violation).
  Action(int N, const std::vector<int>& perm);

  int group_order() const { return N_; }
  int matter_dim() const { return M_; }

  // theta(g, alpha); g is taken mod N (negative g allowed).
  int theta(int g, int alpha) const;

  // M x M 0/1 matrix, row-major; entry (gamma, alpha) = [theta(g,alpha)==gamma].
  std::vector<int> theta_matrix(int g) const;

  const OrbitDecomposition& orbits() const { return orbits_; }
  SpecialForm special_form() const;

  bool trivial() const;                    // generator == identity
  const std::vector<int>& generator() const { return table_[1 % N_]; }

private:
  int N_, M_;
  std::vector<std::vector<int>> table_;    // table_[g][alpha], g = 0..N-1
  OrbitDecomposition orbits_;
};

}  // namespace qdm::act
