#include "core/ops.hpp"

#include <cmath>
#include <numbers>

#include "core/errors.hpp"

namespace qdm::ops {

namespace {

cd omega_pow(int N, long long k) {
  if (N == 1) return cd(1, 0);
  if (N == 2) return (k % 2 == 0) ? cd(1, 0) : cd(-1, 0);
  double a = 2.0 * std::numbers::pi * double(((k % N) + N) % N) / double(N);
  return cd(std::cos(a), std::sin(a));
}

int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

uint64_t vertex_component_index(const hs::Space& s, int v, int g, uint64_t i) {
  uint64_t j = i;
  for (const auto& st : s.star(v)) {
    switch (st.inc) {
      case cell::Incidence::Loop:
        break;  // shift and unshift cancel
      case cell::Incidence::In:
        j = s.shift_edge_digit(j, st.edge, g);
        break;
      case cell::Incidence::Out:
        j = s.shift_edge_digit(j, st.edge, -g);
        break;
    }
  }
  int a = s.vertex_digit(j, v);
  return s.with_vertex_digit(j, v, s.action().theta(g, a));
}

int face_eigenvalue(const hs::Space& s, int f, int h, uint64_t i) {
  const auto& walk = s.complex().faces[f];
  int acc = 0;
  for (const auto& st : walk) acc += st.sign * s.edge_digit(i, st.edge);
  return mod(acc, s.N()) == mod(h, s.N()) ? 1 : 0;
}

int edge_eigenvalue(const hs::Space& s, int j, int R, uint64_t i) {
  const auto& e = s.complex().edges[j];
  int g = s.edge_digit(i, j);
  int alpha = s.vertex_digit(i, e.tail);
  int beta = s.vertex_digit(i, e.head);  // == alpha for a self-loop
  return s.action().theta(g, alpha) == mod(beta + (R - 1), s.M()) ? 1 : 0;
}

void apply_vertex_component(const hs::Space& s, int v, int g, const Vec& in, Vec& out) {
  out.assign(in.size(), cd(0, 0));
  for (uint64_t i = 0; i < in.size(); ++i)
    if (in[i] != cd(0, 0)) out[vertex_component_index(s, v, g, i)] += in[i];
}

void apply_vertex_projector(const hs::Space& s, int v, int J, const Vec& in, Vec& out) {
  int N = s.N();
  out.assign(in.size(), cd(0, 0));
  for (int g = 0; g < N; ++g) {
    cd c = omega_pow(N, -(long long)(J - 1) * g) / double(N);
    for (uint64_t i = 0; i < in.size(); ++i)
      if (in[i] != cd(0, 0)) out[vertex_component_index(s, v, g, i)] += c * in[i];
  }
}

void apply_face_projector(const hs::Space& s, int f, int h, const Vec& in, Vec& out) {
  out.resize(in.size());
  for (uint64_t i = 0; i < in.size(); ++i)
    out[i] = face_eigenvalue(s, f, h, i) ? in[i] : cd(0, 0);
}

void apply_edge_projector(const hs::Space& s, int j, int R, const Vec& in, Vec& out) {
  out.resize(in.size());
  for (uint64_t i = 0; i < in.size(); ++i)
    out[i] = edge_eigenvalue(s, j, R, i) ? in[i] : cd(0, 0);
}

void apply_edge_x(const hs::Space& s, int edge, int p, const Vec& in, Vec& out) {
  out.assign(in.size(), cd(0, 0));
  for (uint64_t i = 0; i < in.size(); ++i)
    if (in[i] != cd(0, 0)) out[s.shift_edge_digit(i, edge, p)] += in[i];
}

void apply_edge_z(const hs::Space& s, int edge, int p, const Vec& in, Vec& out) {
  out.resize(in.size());
  for (uint64_t i = 0; i < in.size(); ++i)
    out[i] = omega_pow(s.N(), (long long)p * s.edge_digit(i, edge)) * in[i];
}

void apply_matter_matrix(const hs::Space& s, int v, const std::vector<cd>& m,
                         const Vec& in, Vec& out) {
  int M = s.M();
  require((int)m.size() == M * M, errc::config, "matter matrix has wrong size");
  out.assign(in.size(), cd(0, 0));
  for (uint64_t i = 0; i < in.size(); ++i) {
    if (in[i] == cd(0, 0)) continue;
    int a = s.vertex_digit(i, v);
    for (int b = 0; b < M; ++b) {
      cd c = m[b * M + a];
      if (c != cd(0, 0)) out[s.with_vertex_digit(i, v, b)] += c * in[i];
    }
  }
}

Terms make_terms(const hs::Space& s, const std::vector<int>& excluded,
                 bool keep_edge_terms) {
  std::vector<char> ex(s.vertex_count(), 0);
  for (int v : excluded) {
    require(v >= 0 && v < s.vertex_count(), errc::config, "excluded vertex out of range");
    ex[v] = 1;
  }
  Terms t;
  for (int v = 0; v < s.vertex_count(); ++v)
    if (!ex[v]) t.vertices.push_back(v);
  for (int f = 0; f < (int)s.complex().faces.size(); ++f) t.faces.push_back(f);
  for (int j = 0; j < s.edge_count(); ++j) {
    const auto& e = s.complex().edges[j];
    bool touches = ex[e.tail] || ex[e.head];
    if (keep_edge_terms || !touches) t.edges.push_back(j);
  }
  t.e0 = -double(t.vertices.size() + t.faces.size() + t.edges.size());
  return t;
}

void apply_hamiltonian(const hs::Space& s, const Terms& t, const Vec& in, Vec& out) {
  out.assign(in.size(), cd(0, 0));
  Vec tmp;
  for (int v : t.vertices) {
    apply_vertex_projector(s, v, 1, in, tmp);
    for (uint64_t i = 0; i < in.size(); ++i) out[i] -= tmp[i];
  }
  for (uint64_t i = 0; i < in.size(); ++i) {
    if (in[i] == cd(0, 0)) continue;
    double d = 0;
    for (int f : t.faces) d += face_eigenvalue(s, f, 0, i);
    for (int j : t.edges) d += edge_eigenvalue(s, j, 1, i);
    out[i] -= d * in[i];
  }
}

void apply_global_projector(const hs::Space& s, const Terms& t, const Vec& in, Vec& out) {
  out = in;
  for (uint64_t i = 0; i < out.size(); ++i) {
    if (out[i] == cd(0, 0)) continue;
    for (int j : t.edges)
      if (!edge_eigenvalue(s, j, 1, i)) {
        out[i] = cd(0, 0);
        break;
      }
    if (out[i] == cd(0, 0)) continue;
    for (int f : t.faces)
      if (!face_eigenvalue(s, f, 0, i)) {
        out[i] = cd(0, 0);
        break;
      }
  }
  Vec tmp;
  for (int v : t.vertices) {
    apply_vertex_projector(s, v, 1, out, tmp);
    out.swap(tmp);
  }
}

SVec apply_vertex_projector(const hs::Space& s, int v, int J, const SVec& in) {
  int N = s.N();
  SVec out;
  out.reserve(in.size() * N);
  for (const auto& [i, a] : in)
    for (int g = 0; g < N; ++g) {
      cd c = omega_pow(N, -(long long)(J - 1) * g) / double(N);
      out[vertex_component_index(s, v, g, i)] += c * a;
    }
  prune(out);
  return out;
}

SVec apply_global_projector(const hs::Space& s, const Terms& t, const SVec& in) {
  SVec cur;
  cur.reserve(in.size());
  for (const auto& [i, a] : in) {
    bool keep = true;
    for (int j : t.edges)
      if (!edge_eigenvalue(s, j, 1, i)) {
        keep = false;
        break;
      }
    if (keep)
      for (int f : t.faces)
        if (!face_eigenvalue(s, f, 0, i)) {
          keep = false;
          break;
        }
    if (keep) cur[i] += a;
  }
  for (int v : t.vertices) cur = apply_vertex_projector(s, v, 1, cur);
  return cur;
}

SVec apply_hamiltonian(const hs::Space& s, const Terms& t, const SVec& in) {
  SVec out;
  out.reserve(in.size() * (t.vertices.size() + 1));
  for (const auto& [i, a] : in) {
    double d = 0;
    for (int f : t.faces) d += face_eigenvalue(s, f, 0, i);
    for (int j : t.edges) d += edge_eigenvalue(s, j, 1, i);
    if (d != 0) out[i] -= d * a;
    for (int v : t.vertices) {
      int N = s.N();
      for (int g = 0; g < N; ++g)
        out[vertex_component_index(s, v, g, i)] -= a / double(N);
    }
  }
  prune(out);
  return out;
}

void prune(SVec& v, double eps) {
  for (auto it = v.begin(); it != v.end();)
    if (std::abs(it->second) <= eps)
      it = v.erase(it);
    else
      ++it;
}

cd sparse_inner(const SVec& a, const SVec& b) {
  const SVec* small = &a;
  const SVec* big = &b;
  bool flip = false;
  if (small->size() > big->size()) {
    std::swap(small, big);
    flip = true;
  }
  cd s(0, 0);
  for (const auto& [i, x] : *small) {
    auto it = big->find(i);
    if (it == big->end()) continue;
    s += flip ? std::conj(it->second) * x : std::conj(x) * it->second;
  }
  return s;
}

double sparse_norm(const SVec& a) {
  double n = 0;
  for (const auto& [i, x] : a) n += std::norm(x);
  return std::sqrt(n);
}

}  // namespace qdm::ops
