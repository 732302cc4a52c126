// Product Hilbert space of one model instance: one Z_N clock per edge and one
// M-level matter site per vertex. Basis indices are mixed-radix integers,
// little-endian, edge digits first (edge e has stride N^e, vertex v has
// stride N^E * M^v).
#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "core/action.hpp"
#include "core/cell.hpp"

namespace qdm::hs {

using cd = std::complex<double>;
using Vec = std::vector<cd>;

constexpr uint64_t kDefaultDenseCap = uint64_t(1) << 27;

class Space {
public:
  Space(act::Action action, cell::Complex2 complex,
        uint64_t dense_cap = kDefaultDenseCap);

  const act::Action& action() const { return action_; }
  const cell::Complex2& complex() const { return complex_; }

  int N() const { return N_; }
  int M() const { return M_; }
  int edge_count() const { return E_; }
  int vertex_count() const { return V_; }
  uint64_t dim() const { return dim_; }
  uint64_t dense_cap() const { return cap_; }

  int edge_digit(uint64_t i, int e) const {
    return int((i / estride_[e]) % uint64_t(N_));
  }
  int vertex_digit(uint64_t i, int v) const {
    return int((i / vstride_[v]) % uint64_t(M_));
  }
  uint64_t edge_stride(int e) const { return estride_[e]; }
  uint64_t vertex_stride(int v) const { return vstride_[v]; }

  // Replace the digit at a site; delta arithmetic is done mod N (edges) or
  // given explicitly (vertices).
  uint64_t with_edge_digit(uint64_t i, int e, int digit) const {
    return i + (uint64_t(digit) - uint64_t(edge_digit(i, e))) * estride_[e];
  }
  uint64_t shift_edge_digit(uint64_t i, int e, int delta) const {
    int d = (edge_digit(i, e) + delta) % N_;
    if (d < 0) d += N_;
    return with_edge_digit(i, e, d);
  }
  uint64_t with_vertex_digit(uint64_t i, int v, int digit) const {
    return i + (uint64_t(digit) - uint64_t(vertex_digit(i, v))) * vstride_[v];
  }

  uint64_t encode(const std::vector<int>& edge_digits,
                  const std::vector<int>& vertex_digits) const;

  // Cached vertex star (ascending edge index).
  const std::vector<cell::StarEntry>& star(int v) const { return stars_[v]; }

  // Throws errc::dim_cap unless dim <= dense_cap.
  void require_dense(const char* what) const;
  Vec zeros() const;
  Vec basis_state(uint64_t i) const;
  Vec product_state(const std::vector<int>& edge_digits,
                    const std::vector<int>& vertex_digits) const;

private:
  act::Action action_;
  cell::Complex2 complex_;
  int N_, M_, E_, V_;
  uint64_t cap_, dim_;
  std::vector<uint64_t> estride_, vstride_;
  std::vector<std::vector<cell::StarEntry>> stars_;
};

// Conjugate-linear in the first argument.
cd inner(const Vec& a, const Vec& b);
double norm(const Vec& a);
void normalize(Vec& a);

// Independent standard complex Gaussians, deterministic in (seed, dim).
Vec random_state(uint64_t dim, std::mt19937_64& rng);

}  // namespace qdm::hs
