#include "core/space.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace qdm::hs {

namespace {
// a*b, saturating at UINT64_MAX (which is far above any usable cap).
uint64_t mul_sat(uint64_t a, uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > UINT64_MAX / b) return UINT64_MAX;
  return a * b;
}
}  // namespace

Space::Space(act::Action action, cell::Complex2 complex, uint64_t dense_cap)
    : action_(std::move(action)), complex_(std::move(complex)) {
  N_ = action_.group_order();
  M_ = action_.matter_dim();
  E_ = (int)complex_.edges.size();
  V_ = complex_.vertex_count;
  cap_ = dense_cap;

  uint64_t d = 1;
  estride_.resize(E_);
  for (int e = 0; e < E_; ++e) {
    estride_[e] = d;
    d = mul_sat(d, (uint64_t)N_);
  }
  vstride_.resize(V_);
  for (int v = 0; v < V_; ++v) {
    vstride_[v] = d;
    d = mul_sat(d, (uint64_t)M_);
  }
  dim_ = d;
  require(dim_ != UINT64_MAX, errc::dim_cap,
          "state space dimension overflows 64-bit indexing");

  stars_.reserve(V_);
  for (int v = 0; v < V_; ++v) stars_.push_back(cell::vertex_star(complex_, v));
}

uint64_t Space::encode(const std::vector<int>& edge_digits,
                       const std::vector<int>& vertex_digits) const {
  require((int)edge_digits.size() == E_ && (int)vertex_digits.size() == V_,
          errc::config, "encode: digit vector lengths do not match the complex");
  uint64_t i = 0;
  for (int e = 0; e < E_; ++e) {
    require(edge_digits[e] >= 0 && edge_digits[e] < N_, errc::config,
            "encode: edge digit out of range");
    i += uint64_t(edge_digits[e]) * estride_[e];
  }
  for (int v = 0; v < V_; ++v) {
    require(vertex_digits[v] >= 0 && vertex_digits[v] < M_, errc::config,
            "encode: vertex digit out of range");
    i += uint64_t(vertex_digits[v]) * vstride_[v];
  }
  return i;
}

void Space::require_dense(const char* what) const {
  if (dim_ > cap_)
    fail(errc::dim_cap, std::string("DimensionCap: ") + what + " needs a dense vector of size " +
                            std::to_string(dim_) + " > cap " + std::to_string(cap_));
}

Vec Space::zeros() const {
  require_dense("state allocation");
  return Vec(dim_, cd(0, 0));
}

Vec Space::basis_state(uint64_t i) const {
  Vec v = zeros();
  v[i] = cd(1, 0);
  return v;
}

Vec Space::product_state(const std::vector<int>& edge_digits,
                         const std::vector<int>& vertex_digits) const {
  return basis_state(encode(edge_digits, vertex_digits));
}

cd inner(const Vec& a, const Vec& b) {
  cd s(0, 0);
  for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(const Vec& a) { return std::sqrt(std::abs(inner(a, a))); }

void normalize(Vec& a) {
  double n = norm(a);
  require(n > 0, errc::internal, "cannot normalize the zero vector");
  for (auto& x : a) x /= n;
}

Vec random_state(uint64_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(dim);
  for (auto& x : v) x = cd(g(rng), g(rng));
  normalize(v);
  return v;
}

}  // namespace qdm::hs
