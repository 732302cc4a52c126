#include "core/action.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace qdm::act {

Action::Action(int N, const std::vector<int>& perm) : N_(N), M_((int)perm.size()) {
  require(N >= 1, errc::config, "group order must be >= 1");
  require(M_ >= 1, errc::config, "matter dimension must be >= 1");

  std::vector<char> seen(M_, 0);
  for (int v : perm) {
    require(v >= 0 && v < M_ && !seen[v], errc::config, "action is not a permutation");
    seen[v] = 1;
  }

  table_.resize(N_);
  table_[0].resize(M_);
  for (int a = 0; a < M_; ++a) table_[0][a] = a;
  for (int g = 1; g < N_; ++g) {
    table_[g].resize(M_);
    for (int a = 0; a < M_; ++a) table_[g][a] = perm[table_[g - 1][a]];
  }
  // perm^N must close back to the identity.
  for (int a = 0; a < M_; ++a)
    require(perm[table_[N_ - 1][a]] == a, errc::config,
            "order violation: perm^N != identity");

  std::vector<char> done(M_, 0);
  for (int a = 0; a < M_; ++a) {
    if (done[a]) continue;
    std::vector<int> orb;
    for (int b = a; !done[b]; b = perm[b]) {
      done[b] = 1;
      orb.push_back(b);
    }
    if (orb.size() >= 2)
      ++orbits_.nontrivial;
    else
      ++orbits_.fixed_count;
    orbits_.orbits.push_back(std::move(orb));
  }
  orbits_.d_alg = orbits_.nontrivial + orbits_.fixed_count;
}

int Action::theta(int g, int alpha) const {
  int r = g % N_;
  if (r < 0) r += N_;
  return table_[r][alpha];
}

std::vector<int> Action::theta_matrix(int g) const {
  std::vector<int> m(M_ * M_, 0);
  for (int a = 0; a < M_; ++a) m[theta(g, a) * M_ + a] = 1;
  return m;
}

SpecialForm Action::special_form() const {
  SpecialForm s;
  s.k = orbits_.nontrivial;
  s.identity_dim = orbits_.fixed_count;
  s.flag = s.k >= 1 && s.identity_dim >= 1;
  return s;
}

bool Action::trivial() const {
  const auto& gen = table_[1 % N_];
  for (int a = 0; a < M_; ++a)
    if (gen[a] != a) return false;
  return true;
}

}  // namespace qdm::act
