#include "core/strings.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/errors.hpp"
#include "core/ground.hpp"

namespace qdm::ex {

namespace {

hs::cd omega_pow(int N, long long k) {
  if (N == 2) return (k % 2 == 0) ? hs::cd(1, 0) : hs::cd(-1, 0);
  double a = 2.0 * std::numbers::pi * double(((k % N) + N) % N) / double(N);
  return hs::cd(std::cos(a), std::sin(a));
}

}  // namespace

StringOp electric_walk(const cell::Complex2& cx, const std::vector<int>& edge_path,
                       int g) {
  require(!edge_path.empty(), errc::path, "InvalidPath: empty electric walk");
  for (int e : edge_path)
    require(e >= 0 && e < (int)cx.edges.size(), errc::path,
            "InvalidPath: edge index out of range");
  StringOp op{StringKind::Electric, g, {}};

  if (edge_path.size() == 1) {
    op.edges.push_back({edge_path[0], +1});
    return op;
  }
  // Start at the endpoint of the first edge not shared with the second.
  const auto& e0 = cx.edges[edge_path[0]];
  const auto& e1 = cx.edges[edge_path[1]];
  int start;
  if (e0.tail == e1.tail || e0.tail == e1.head)
    start = e0.head;
  else if (e0.head == e1.tail || e0.head == e1.head)
    start = e0.tail;
  else
    fail(errc::path, "InvalidPath: first two edges do not share a vertex");
  int cur = start;
  for (int e : edge_path) {
    const auto& ed = cx.edges[e];
    if (ed.tail == ed.head) {
      require(ed.tail == cur, errc::path, "InvalidPath: loop edge off the walk");
      op.edges.push_back({e, +1});
    } else if (ed.tail == cur) {
      op.edges.push_back({e, +1});
      cur = ed.head;
    } else if (ed.head == cur) {
      op.edges.push_back({e, -1});
      cur = ed.tail;
    } else {
      fail(errc::path, "InvalidPath: edge " + std::to_string(e) + " breaks the walk");
    }
  }
  return op;
}

StringOp magnetic_walk(const cell::Complex2& cx, const std::vector<int>& face_path,
                       int h, bool closed) {
  require(face_path.size() >= 2 || (closed && !face_path.empty()), errc::path,
          "InvalidPath: magnetic walk needs at least two faces");
  for (int f : face_path)
    require(f >= 0 && f < (int)cx.faces.size(), errc::path,
            "InvalidPath: face index out of range");
  StringOp op{StringKind::Magnetic, h, {}};

  size_t steps = face_path.size() - (closed ? 0 : 1);
  int prev_edge = -1;
  for (size_t k = 0; k < steps; ++k) {
    int fa = face_path[k];
    int fb = face_path[(k + 1) % face_path.size()];
    require(fa != fb, errc::path, "InvalidPath: repeated face in the dual walk");
    // Shared edges, ascending; skip the one just crossed.
    std::vector<int> in_b;
    for (const auto& st : cx.faces[fb]) in_b.push_back(st.edge);
    int crossed = -1, sign = +1;
    for (const auto& st : cx.faces[fa]) {
      if (st.edge == prev_edge) continue;
      if (std::find(in_b.begin(), in_b.end(), st.edge) != in_b.end() &&
          (crossed == -1 || st.edge < crossed)) {
        crossed = st.edge;
        sign = st.sign;
      }
    }
    require(crossed >= 0, errc::path,
            "InvalidPath: faces " + std::to_string(fa) + "," + std::to_string(fb) +
                " share no fresh edge");
    op.edges.push_back({crossed, sign});
    prev_edge = crossed;
  }
  return op;
}

void apply_string(const hs::Space& s, const StringOp& op, const hs::Vec& in,
                  hs::Vec& out) {
  if (op.kind == StringKind::Electric) {
    out.resize(in.size());
    for (uint64_t i = 0; i < in.size(); ++i) {
      if (in[i] == hs::cd(0, 0)) {
        out[i] = hs::cd(0, 0);
        continue;
      }
      long long ph = 0;
      for (const auto& [e, sg] : op.edges) ph += (long long)sg * op.charge * s.edge_digit(i, e);
      out[i] = omega_pow(s.N(), ph) * in[i];
    }
  } else {
    out.assign(in.size(), hs::cd(0, 0));
    for (uint64_t i = 0; i < in.size(); ++i) {
      if (in[i] == hs::cd(0, 0)) continue;
      uint64_t j = i;
      for (const auto& [e, sg] : op.edges) j = s.shift_edge_digit(j, e, sg * op.charge);
      out[j] += in[i];
    }
  }
}

ops::SVec apply_string(const hs::Space& s, const StringOp& op, const ops::SVec& in) {
  ops::SVec out;
  out.reserve(in.size());
  for (const auto& [i, a] : in) {
    if (op.kind == StringKind::Electric) {
      long long ph = 0;
      for (const auto& [e, sg] : op.edges) ph += (long long)sg * op.charge * s.edge_digit(i, e);
      out[i] += omega_pow(s.N(), ph) * a;
    } else {
      uint64_t j = i;
      for (const auto& [e, sg] : op.edges) j = s.shift_edge_digit(j, e, sg * op.charge);
      out[j] += a;
    }
  }
  return out;
}

std::vector<ConfinementRow> confinement_scan(const hs::Space& s, int rows, int cols,
                                             int matter_rep,
                                             const std::vector<int>& lengths,
                                             bool closed) {
  require(rows >= 1 && cols >= 1 &&
              s.vertex_count() == rows * cols && s.edge_count() == 2 * rows * cols,
          errc::path, "PathUnavailable: confinement scan needs a torus grid");
  auto hedge = [&](int i, int j) { return i * cols + ((j % cols) + cols) % cols; };
  auto vedge = [&](int i, int j) { return rows * cols + hedge(i, j); };
  auto face = [&](int i, int j) { return hedge(i, j); };

  ops::Terms terms = ops::make_terms(s);
  ops::SVec xi = gs::vacuum_sparse(s, terms, matter_rep);
  double e_vac = gs::energy(s, terms, xi);

  std::vector<ConfinementRow> out;
  for (int L : lengths) {
    require(L >= 1, errc::path, "PathUnavailable: nonpositive length");
    StringOp mag, el;
    if (closed) {
      require(L == cols, errc::path,
              "PathUnavailable: closed straight loop has length " + std::to_string(cols));
      std::vector<int> fpath, epath;
      for (int j = 0; j < cols; ++j) fpath.push_back(face(0, j));
      for (int j = 0; j < cols; ++j) epath.push_back(hedge(0, j));
      if (cols == 1) {
        // Single-column torus: the loop crosses the one vertical edge.
        mag = StringOp{StringKind::Magnetic, 1, {{vedge(0, 0), +1}}};
      } else {
        mag = magnetic_walk(s.complex(), fpath, 1, true);
      }
      el = electric_walk(s.complex(), epath, 1);
    } else {
      require(L + 1 <= cols, errc::path,
              "PathUnavailable: open length " + std::to_string(L) +
                  " exceeds the lattice (needs cols >= " + std::to_string(L + 1) + ")");
      std::vector<int> fpath, epath;
      for (int j = 0; j <= L; ++j) fpath.push_back(face(0, j));
      for (int j = 0; j < L; ++j) epath.push_back(hedge(0, j));
      mag = magnetic_walk(s.complex(), fpath, 1, false);
      el = electric_walk(s.complex(), epath, 1);
    }
    ConfinementRow row;
    row.L = L;
    // String operators are unitary, but divide by the norm anyway so the
    // rows stay meaningful if a future charge convention breaks that.
    ops::SVec psi = apply_string(s, mag, xi);
    double n = ops::sparse_norm(psi);
    row.dE_magnetic = gs::energy(s, terms, psi) / (n * n) - e_vac;
    psi = apply_string(s, el, xi);
    n = ops::sparse_norm(psi);
    row.dE_electric = gs::energy(s, terms, psi) / (n * n) - e_vac;
    out.push_back(row);
  }
  return out;
}

}  // namespace qdm::ex
