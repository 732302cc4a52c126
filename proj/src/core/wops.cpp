#include "core/wops.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include "core/errors.hpp"

namespace qdm::ex {

namespace {

using hs::cd;

cd omega_pow(int N, long long k) {
  if (N == 2) return (k % 2 == 0) ? cd(1, 0) : cd(-1, 0);
  double a = 2.0 * std::numbers::pi * double(((k % N) + N) % N) / double(N);
  return cd(std::cos(a), std::sin(a));
}

Mat theta_mat(const act::Action& a, int g) {
  int M = a.matter_dim();
  Mat t = Mat::Zero(M, M);
  for (int c = 0; c < M; ++c) t(a.theta(g, c), c) = 1;
  return t;
}

Mat phi_project(const act::Action& a, int J, const Mat& w) {
  int N = a.group_order();
  Mat acc = Mat::Zero(w.rows(), w.cols());
  for (int g = 0; g < N; ++g) {
    Mat tg = theta_mat(a, g);
    acc += omega_pow(N, -(long long)(J - 1) * g) * tg * w * tg.transpose();
  }
  return acc / double(N);
}

// Row-major index of the first entry with |.| > eps, or -1.
long first_nonzero(const Mat& m, double eps = 1e-9) {
  for (long r = 0; r < m.rows(); ++r)
    for (long c = 0; c < m.cols(); ++c)
      if (std::abs(m(r, c)) > eps) return r * m.cols() + c;
  return -1;
}

cd entry_at(const Mat& m, long flat) { return m(flat / m.cols(), flat % m.cols()); }

bool near_gauss_int(cd z, double tol) {
  return std::abs(z.real() - std::llround(z.real())) < tol &&
         std::abs(z.imag() - std::llround(z.imag())) < tol;
}

void snap_entries(Mat& m) {
  for (long r = 0; r < m.rows(); ++r)
    for (long c = 0; c < m.cols(); ++c)
      m(r, c) = cd(std::llround(m(r, c).real()), std::llround(m(r, c).imag()));
}

// Scale by the smallest positive integer that makes all entries Gaussian
// integers (when one <= 24 exists), then snap.
void integer_clear(Mat& m) {
  for (int t = 1; t <= 24; ++t) {
    bool ok = true;
    for (long r = 0; r < m.rows() && ok; ++r)
      for (long c = 0; c < m.cols() && ok; ++c)
        ok = near_gauss_int(double(t) * m(r, c), 1e-9);
    if (ok) {
      m *= double(t);
      snap_entries(m);
      return;
    }
  }
}

std::vector<Mat> canonical_basis(const std::vector<Mat>& gens) {
  std::vector<Mat> basis;
  std::vector<long> pivots;
  for (Mat g : gens) {
    for (size_t b = 0; b < basis.size(); ++b) g -= entry_at(g, pivots[b]) * basis[b];
    long p = first_nonzero(g);
    if (p < 0) continue;
    g /= entry_at(g, p);
    // Keep earlier vectors reduced against the new pivot.
    for (size_t b = 0; b < basis.size(); ++b)
      basis[b] -= entry_at(basis[b], p) * g;
    basis.push_back(g);
    pivots.push_back(p);
  }
  std::vector<size_t> order(basis.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](size_t x, size_t y) { return pivots[x] < pivots[y]; });
  std::vector<Mat> out;
  for (size_t k : order) {
    Mat m = basis[k];
    integer_clear(m);
    out.push_back(m);
  }
  return out;
}

struct BlockIndex {
  Blocks blocks;
  std::vector<int> block_of, pos_of;  // per matter digit
};

BlockIndex index_blocks(const act::Action& a) {
  BlockIndex bi;
  bi.blocks = make_blocks(a);
  bi.block_of.assign(a.matter_dim(), -1);
  bi.pos_of.assign(a.matter_dim(), -1);
  for (int b = 0; b < (int)bi.blocks.blocks.size(); ++b)
    for (int p = 0; p < (int)bi.blocks.blocks[b].size(); ++p) {
      bi.block_of[bi.blocks.blocks[b][p]] = b;
      bi.pos_of[bi.blocks.blocks[b][p]] = p;
    }
  return bi;
}

std::vector<std::pair<int, int>> within_mask(const Blocks& bl, int s) {
  std::vector<std::pair<int, int>> mask;
  for (const auto& blk : bl.blocks) {
    int d = (int)blk.size();
    for (int p = 0; p < d; ++p) mask.push_back({blk[(p + s % d + d) % d], blk[p]});
  }
  return mask;
}

std::vector<std::pair<int, int>> refined_mask(const Blocks& bl,
                                              const std::vector<int>& shifts) {
  std::vector<std::pair<int, int>> mask;
  for (size_t b = 0; b < bl.blocks.size(); ++b) {
    const auto& blk = bl.blocks[b];
    int d = (int)blk.size();
    int s = shifts[b];
    for (int p = 0; p < d; ++p) mask.push_back({blk[(p + s % d + d) % d], blk[p]});
  }
  return mask;
}

bool is_special(const Blocks& bl) {
  return bl.has_fixed && bl.blocks.size() >= 2;
}

std::vector<std::pair<int, int>> exchange_mask(const Blocks& bl, bool with_diag) {
  std::vector<std::pair<int, int>> mask;
  const auto& F = bl.blocks.back();
  for (size_t b = 0; b + 1 < bl.blocks.size(); ++b)
    for (int o : bl.blocks[b]) {
      for (int f : F) {
        mask.push_back({f, o});
        mask.push_back({o, f});
      }
    }
  if (with_diag)
    for (int f : F) mask.push_back({f, f});
  std::sort(mask.begin(), mask.end());
  return mask;
}

Mat mask_indicator(int M, const std::vector<std::pair<int, int>>& mask) {
  Mat m = Mat::Zero(M, M);
  for (auto [r, c] : mask) m(r, c) = 1;
  return m;
}

// Least-squares decomposition of p over span; returns false if the residual
// is above tol_span (relative to max(1, ||p||_F)).
bool decompose(const std::vector<Mat>& span, const Mat& p, Eigen::VectorXcd& c,
               double tol_span = 1e-9) {
  int k = (int)span.size();
  Eigen::MatrixXcd G(k, k);
  Eigen::VectorXcd r(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j)
      G(i, j) = (span[i].adjoint() * span[j]).trace();
    r(i) = (span[i].adjoint() * p).trace();
  }
  c = G.fullPivLu().solve(r);
  Mat rec = Mat::Zero(p.rows(), p.cols());
  for (int i = 0; i < k; ++i) rec += c(i) * span[i];
  double resid = (p - rec).norm();
  return resid <= tol_span * std::max(1.0, p.norm());
}

// Nonnegative-integer coefficients after removing one global phase; returns
// false (with reason) otherwise.
bool integerize(const Eigen::VectorXcd& c, std::vector<long long>& out,
                std::string& reason, double tol_int = 1e-6) {
  int k = (int)c.size();
  out.assign(k, 0);
  int lead = -1;
  for (int i = 0; i < k; ++i)
    if (std::abs(c(i)) > 1e-8) {
      lead = i;
      break;
    }
  if (lead < 0) return true;  // zero product: all coefficients 0
  cd lambda = c(lead) / std::abs(c(lead));
  for (int i = 0; i < k; ++i) {
    cd d = c(i) / lambda;
    if (std::abs(d.imag()) > tol_int) {
      reason = "complex coefficient after phase removal";
      return false;
    }
    double re = d.real();
    long long n = std::llround(re);
    if (n < 0 || std::abs(re - double(n)) > tol_int) {
      reason = "coefficient " + std::to_string(re) + " is not a nonnegative integer";
      return false;
    }
    out[i] = n;
  }
  return true;
}

// Frobenius-Perron dimension of the exchange candidate within {g^t} + itself:
// x solves x^2 = lambda_self * x + sum(other coeffs). Returns -1 when the
// family does not close on W^2 with nonnegative integers.
double exchange_fp_dim(const std::vector<Mat>& chain, const Mat& w) {
  std::vector<Mat> span = chain;
  span.push_back(w);
  Eigen::VectorXcd c;
  if (!decompose(span, w * w, c)) return -1;
  std::vector<long long> ints;
  std::string why;
  if (!integerize(c, ints, why)) return -1;
  long long self = ints.back(), rest = 0;
  for (size_t i = 0; i + 1 < ints.size(); ++i) rest += ints[i];
  return (double(self) + std::sqrt(double(self) * self + 4.0 * rest)) / 2.0;
}

bool exchange_with_diag(const act::Action& a) {
  BlockIndex bi = index_blocks(a);
  const Blocks& bl = bi.blocks;
  if (!is_special(bl)) return true;
  int M = a.matter_dim();
  std::vector<Mat> chain;
  for (int t = 0; t < bl.L; ++t)
    chain.push_back(mask_indicator(M, within_mask(bl, t)));
  auto integral = [](double x) {
    return x > 0 && std::abs(x - std::llround(x)) < 1e-6;
  };
  double x1 = exchange_fp_dim(chain, mask_indicator(M, exchange_mask(bl, true)));
  double x0 = exchange_fp_dim(chain, mask_indicator(M, exchange_mask(bl, false)));
  if (integral(x1)) return true;
  if (integral(x0)) return false;
  return true;
}

std::string refined_alias(int J, const std::vector<int>& ks) {
  std::string s = "(" + std::to_string(J) + ";";
  for (size_t b = 0; b < ks.size(); ++b)
    s += (b ? "," : "") + std::to_string(ks[b]);
  return s + ")";
}

}  // namespace

Blocks make_blocks(const act::Action& a) {
  Blocks bl;
  std::vector<int> fixed;
  for (const auto& orb : a.orbits().orbits) {
    if (orb.size() >= 2)
      bl.blocks.push_back(orb);
    else
      fixed.push_back(orb[0]);
  }
  if (!fixed.empty()) {
    std::sort(fixed.begin(), fixed.end());
    bl.blocks.push_back(fixed);
    bl.has_fixed = true;
  }
  bl.L = 1;
  for (const auto& b : bl.blocks) bl.L = (int)std::lcm((long long)bl.L, (long long)b.size());
  return bl;
}

std::vector<std::pair<int, int>> label_mask(const act::Action& a, int K) {
  Blocks bl = make_blocks(a);
  if (K < 1 || bl.blocks.empty()) return {};
  if (K <= bl.L) return within_mask(bl, K - 1);
  int next = bl.L + 1;
  if (is_special(bl)) {
    if (K == next) return exchange_mask(bl, exchange_with_diag(a));
    ++next;
  }
  // Rotations among same-size nontrivial blocks.
  std::map<int, std::vector<int>> by_size;
  size_t ntriv = bl.blocks.size() - (bl.has_fixed ? 1 : 0);
  for (size_t b = 0; b < ntriv; ++b)
    by_size[(int)bl.blocks[b].size()].push_back((int)b);
  for (const auto& [d, group] : by_size) {
    int c = (int)group.size();
    if (c < 2) continue;
    for (int m = 1; m < c; ++m)
      for (int s = 0; s < d; ++s) {
        if (K == next) {
          std::vector<std::pair<int, int>> mask;
          for (int i = 0; i < c; ++i) {
            const auto& src = bl.blocks[group[i]];
            const auto& dst = bl.blocks[group[(i + m) % c]];
            for (int p = 0; p < d; ++p) mask.push_back({dst[(p + s) % d], src[p]});
          }
          std::sort(mask.begin(), mask.end());
          return mask;
        }
        ++next;
      }
  }
  return {};
}

cell::Complex2 solver_fixture() {
  cell::Complex2 cx;
  cx.vertex_count = 2;
  cx.edges = {{0, 1}};
  return cx;
}

static std::vector<WOperator> basis_from_mask(const hs::Space& fixture, int J,
                                              const WLabel& label,
                                              const std::vector<std::pair<int, int>>& mask,
                                              const std::string& alias) {
  const act::Action& a = fixture.action();
  int M = a.matter_dim();
  std::vector<Mat> gens;
  for (auto [r, c] : mask) {
    Mat e = Mat::Zero(M, M);
    e(r, c) = 1;
    Mat g = phi_project(a, J, e);
    if (g.norm() > 1e-12) gens.push_back(g);
  }
  std::vector<WOperator> out;
  for (Mat& m : canonical_basis(gens)) {
    // Keep only solutions supported inside the mask: the projector may leak
    // outside for patterns incompatible with the character J.
    Mat masked = Mat::Zero(M, M);
    for (auto [r, c] : mask) masked(r, c) = m(r, c);
    if ((m - masked).norm() > 1e-9 * std::max(1.0, m.norm())) continue;
    out.push_back({label, m, alias});
  }
  return out;
}

std::vector<WOperator> solve_w(const hs::Space& fixture, int J, int K) {
  const act::Action& a = fixture.action();
  require(J >= 1 && J <= a.group_order(), errc::config, "label J out of range");
  auto mask = label_mask(a, K);
  if (mask.empty()) return {};
  return basis_from_mask(fixture, J, WLabel{J, K}, mask, "");
}

std::vector<WOperator> solve_w_refined(const hs::Space& fixture, int J,
                                       const std::vector<int>& shifts) {
  const act::Action& a = fixture.action();
  Blocks bl = make_blocks(a);
  require(shifts.size() == bl.blocks.size(), errc::config,
          "refined label needs one shift per block");
  std::vector<int> ks;
  for (size_t b = 0; b < shifts.size(); ++b) ks.push_back(shifts[b] + 1);
  // Flat K of a uniform refined label, else synthesized beyond the flat range.
  int K = shifts.empty() ? 1 : shifts[0] + 1;
  return basis_from_mask(fixture, J, WLabel{J, K}, refined_mask(bl, shifts),
                         refined_alias(J, ks));
}

namespace {

// Mask used to score a W's support: the refined-alias mask when the alias
// parses to in-range per-block shifts, else the flat label mask.
std::vector<std::pair<int, int>> scoring_mask(const act::Action& a, const WOperator& w) {
  if (!w.alias.empty()) {
    Blocks bl = make_blocks(a);
    auto semi = w.alias.find(';');
    if (semi != std::string::npos && w.alias.back() == ')') {
      std::vector<int> shifts;
      size_t p = semi + 1;
      bool ok = true;
      for (size_t b = 0; b < bl.blocks.size() && ok; ++b) {
        size_t q = w.alias.find_first_of(",)", p);
        if (q == std::string::npos) {
          ok = false;
          break;
        }
        int k = std::atoi(w.alias.substr(p, q - p).c_str());
        if (k < 1 || k > (int)bl.blocks[b].size()) ok = false;
        shifts.push_back(k - 1);
        p = q + 1;
      }
      if (ok && shifts.size() == bl.blocks.size()) return refined_mask(bl, shifts);
    }
  }
  return label_mask(a, w.label.K);
}

}  // namespace

double verify_w(const hs::Space& fixture, const WOperator& w) {
  const act::Action& a = fixture.action();
  int M = a.matter_dim();
  require(w.m.rows() == M && w.m.cols() == M, errc::config,
          "W matrix does not match the matter dimension");
  double wn = w.m.norm();
  if (wn < 1e-12) return 1.0;
  Mat wm = w.m / wn;

  std::vector<hs::cd> wflat(M * M);
  for (int r = 0; r < M; ++r)
    for (int c = 0; c < M; ++c) wflat[r * M + c] = wm(r, c);

  double resid = 0;
  fixture.require_dense("verify_w");
  hs::Vec col, t1, t2, t3;
  for (int v = 0; v < fixture.vertex_count(); ++v) {
    for (uint64_t i = 0; i < fixture.dim(); ++i) {
      col = fixture.basis_state(i);
      ops::apply_matter_matrix(fixture, v, wflat, col, t1);
      ops::apply_vertex_projector(fixture, v, w.label.J, t1, t2);  // A(v,J) W
      ops::apply_vertex_projector(fixture, v, 1, col, t1);
      ops::apply_matter_matrix(fixture, v, wflat, t1, t3);  // W A(v,1)
      double d = 0;
      for (uint64_t x = 0; x < fixture.dim(); ++x) d += std::norm(t2[x] - t3[x]);
      resid = std::max(resid, std::sqrt(d));
    }
  }

  auto mask = scoring_mask(a, w);
  Mat masked = Mat::Zero(M, M);
  for (auto [r, c] : mask) masked(r, c) = wm(r, c);
  resid = std::max(resid, (wm - masked).norm());
  return resid;
}

Family derive_family(const hs::Space& fixture) {
  const act::Action& a = fixture.action();
  int M = a.matter_dim();
  BlockIndex bi = index_blocks(a);
  const Blocks& bl = bi.blocks;
  Family fam;

  if (is_special(bl)) {
    for (int t = 0; t < bl.L; ++t) {
      std::vector<int> ks;
      for (const auto& blk : bl.blocks) ks.push_back(t % (int)blk.size() + 1);
      fam.ws.push_back({WLabel{1, t + 1}, mask_indicator(M, within_mask(bl, t)),
                        refined_alias(1, ks)});
    }
    std::vector<int> ks;
    for (const auto& blk : bl.blocks) ks.push_back((int)blk.size() + 1);
    fam.ws.push_back({WLabel{1, bl.L + 1},
                      mask_indicator(M, exchange_mask(bl, exchange_with_diag(a))),
                      refined_alias(1, ks)});
    return fam;
  }

  int kmax = bl.L;
  {  // count rotation labels
    std::map<int, int> size_count;
    size_t ntriv = bl.blocks.size() - (bl.has_fixed ? 1 : 0);
    for (size_t b = 0; b < ntriv; ++b) size_count[(int)bl.blocks[b].size()]++;
    for (const auto& [d, c] : size_count)
      if (c >= 2) kmax += (c - 1) * d;
  }
  for (int J = 1; J <= a.group_order(); ++J)
    for (int K = 1; K <= kmax; ++K) {
      auto mask = label_mask(a, K);
      if (mask.empty()) continue;
      Mat rep = Mat::Zero(M, M);
      for (auto [r, c] : mask) rep(r, c) += omega_pow(a.group_order(), -(long long)(J - 1) * bi.pos_of[c]);
      if (rep.norm() < 1e-12) continue;
      if ((phi_project(a, J, rep) - rep).norm() > 1e-9) continue;  // no intertwiner here
      fam.ws.push_back({WLabel{J, K}, rep, ""});
    }
  return fam;
}

FusionTable fusion_table(const std::vector<WOperator>& ws) {
  require(!ws.empty(), errc::config, "fusion_table: empty W set");
  int M = (int)ws[0].m.rows();
  for (const auto& w : ws)
    require(w.m.rows() == M && w.m.cols() == M, errc::config,
            "fusion_table: mixed matrix sizes");
  int k = (int)ws.size();
  std::vector<Mat> span;
  for (const auto& w : ws) span.push_back(w.m);

  FusionTable t;
  for (const auto& w : ws) {
    t.labels.push_back(w.label);
    t.aliases.push_back(w.alias);
  }
  t.coeff.assign(k, std::vector<std::vector<long long>>(k, std::vector<long long>(k, 0)));

  bool single_unit = true;
  std::vector<std::vector<Mat>> prods(k, std::vector<Mat>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      Mat p = ws[a].m * ws[b].m;
      prods[a][b] = p;
      Eigen::VectorXcd c;
      std::string pair = "pair (" + ws[a].label.str() + "," + ws[b].label.str() + ")";
      require(decompose(span, p, c), errc::fusion,
              "NotClosed: product leaves the span; " + pair);
      std::vector<long long> ints;
      std::string why;
      require(integerize(c, ints, why), errc::fusion,
              "NonIntegerCoefficients: " + why + "; " + pair);
      t.coeff[a][b] = ints;
      long long total = 0;
      for (long long x : ints) total += x;
      if (total != 1) single_unit = false;
    }

  bool commute = true;
  for (int a = 0; a < k && commute; ++a)
    for (int b = a + 1; b < k && commute; ++b) {
      const Mat &ab = prods[a][b], &ba = prods[b][a];
      double nab = ab.norm(), nba = ba.norm();
      if (nab < 1e-12 && nba < 1e-12) continue;
      if (nab < 1e-12 || nba < 1e-12) {
        commute = false;
        break;
      }
      cd mu = (ba.adjoint() * ab).trace() / cd(nba * nba, 0);
      if (std::abs(std::abs(mu) - 1.0) > 1e-6 || (ab - mu * ba).norm() > 1e-9 * nab)
        commute = false;
    }
  t.abelian = single_unit && commute;
  return t;
}

bool detect_nonabelian(const FusionTable& t) {
  for (const auto& row : t.coeff)
    for (const auto& cell : row) {
      long long total = 0;
      for (long long x : cell) {
        if (x > 1) return true;
        total += x;
      }
      if (total > 1) return true;
    }
  return false;
}

CondenseResult condense(const hs::Space& s, const ops::Terms& t, int src_rep,
                        const Mat& w) {
  CondenseResult res;
  res.representatives = gs::vacuum_representatives(s.action());
  int M = s.M();
  std::vector<hs::cd> wflat(M * M);
  for (int r = 0; r < M; ++r)
    for (int c = 0; c < M; ++c) wflat[r * M + c] = w(r, c);

  hs::Vec psi = gs::vacuum_state(s, t, src_rep), tmp;
  for (int v = 0; v < s.vertex_count(); ++v) {
    ops::apply_matter_matrix(s, v, wflat, psi, tmp);
    psi.swap(tmp);
  }
  double n = hs::norm(psi);
  if (n < 1e-12) {
    res.zero = true;
    res.overlap_sq.assign(res.representatives.size(), 0.0);
    return res;
  }
  for (auto& x : psi) x /= n;
  for (int rep : res.representatives) {
    hs::Vec xi = gs::vacuum_state(s, t, rep);
    res.overlap_sq.push_back(std::norm(hs::inner(xi, psi)));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Bundled reference tables.

namespace {

struct RefTable {
  std::vector<std::string> labels;
  // cell -> list of (label string, coeff)
  std::vector<std::vector<std::vector<std::pair<std::string, long long>>>> cells;
};

int klein(int k1, int k2) {
  static const int t[4][4] = {{1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}};
  return t[k1 - 1][k2 - 1];
}

std::string lab(int J, int K) {
  return "(" + std::to_string(J) + "," + std::to_string(K) + ")";
}

// J-major group table over J in {1,2} and K in a K-group of given order
// (order 2: Z2, order 4: Klein group).
RefTable group_table(int korder) {
  RefTable r;
  for (int J = 1; J <= 2; ++J)
    for (int K = 1; K <= korder; ++K) r.labels.push_back(lab(J, K));
  int n = (int)r.labels.size();
  r.cells.assign(n, std::vector<std::vector<std::pair<std::string, long long>>>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int Ja = a / korder + 1, Ka = a % korder + 1;
      int Jb = b / korder + 1, Kb = b % korder + 1;
      int J = ((Ja - 1) + (Jb - 1)) % 2 + 1;
      int K = korder == 2 ? ((Ka - 1) + (Kb - 1)) % 2 + 1 : klein(Ka, Kb);
      r.cells[a][b] = {{lab(J, K), 1}};
    }
  return r;
}

RefTable table_d2() { return group_table(2); }

RefTable table_d3() {
  RefTable r;
  r.labels = {lab(1, 1), lab(1, 2), lab(1, 3)};
  r.cells.assign(3, std::vector<std::vector<std::pair<std::string, long long>>>(3));
  auto one = [&](int a, int b, int c) { r.cells[a][b] = {{r.labels[c], 1}}; };
  for (int b = 0; b < 3; ++b) {
    one(0, b, b);
    one(b, 0, b);
  }
  one(1, 1, 0);
  one(1, 2, 2);
  one(2, 1, 2);
  r.cells[2][2] = {{r.labels[0], 1}, {r.labels[1], 1}, {r.labels[2], 1}};
  return r;
}

RefTable table_d4_choice1() {
  RefTable r = group_table(4);
  // Known misprints in the published variant of this table: the vacuum row
  // against the J = 2 column block shows out-of-range labels, and one cell
  // carries the wrong J.
  for (int c = 0; c < 4; ++c) r.cells[0][4 + c] = {{lab(1, 5 + c), 1}};
  r.cells[1][7] = {{lab(1, 3), 1}};
  return r;
}

RefTable table_d4_choice2() {
  RefTable r;
  r.labels = {lab(1, 1), lab(1, 2), lab(1, 3)};
  r.cells.assign(3, std::vector<std::vector<std::pair<std::string, long long>>>(3));
  auto one = [&](int a, int b, int c) { r.cells[a][b] = {{r.labels[c], 1}}; };
  for (int b = 0; b < 3; ++b) {
    one(0, b, b);
    one(b, 0, b);
  }
  one(1, 1, 0);
  one(1, 2, 2);
  one(2, 1, 2);
  r.cells[2][2] = {{r.labels[0], 2}, {r.labels[1], 2}};
  return r;
}

const RefTable* lookup_reference(const act::Action& a) {
  static const RefTable d2 = table_d2();
  static const RefTable d3 = table_d3();
  static const RefTable c1 = table_d4_choice1();
  static const RefTable c2 = table_d4_choice2();
  if (a.group_order() != 2) return nullptr;
  const auto& g = a.generator();
  if (g == std::vector<int>{1, 0}) return &d2;
  if (g == std::vector<int>{1, 0, 2}) return &d3;
  if (g == std::vector<int>{1, 0, 3, 2}) return &c1;
  if (g == std::vector<int>{1, 0, 2, 3}) return &c2;
  return nullptr;
}

std::string fmt_outcomes(const std::vector<std::pair<std::string, long long>>& v) {
  if (v.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += "+";
    s += std::to_string(v[i].second) + "x" + v[i].first;
  }
  return s;
}

}  // namespace

std::vector<std::string> reference_diffs(const act::Action& a, const FusionTable& t) {
  const RefTable* ref = lookup_reference(a);
  if (!ref) return {};
  std::vector<std::string> diffs;
  int n = (int)t.labels.size();
  std::vector<std::string> labels;
  for (const auto& l : t.labels) labels.push_back(l.str());
  if (labels != ref->labels) {
    diffs.push_back("label set differs from the reference table");
    return diffs;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::vector<std::pair<std::string, long long>> got;
      for (int c = 0; c < n; ++c)
        if (t.coeff[x][y][c] != 0) got.push_back({labels[c], t.coeff[x][y][c]});
      auto want = ref->cells[x][y];
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      if (got != want)
        diffs.push_back("product " + labels[x] + "*" + labels[y] + ": derived " +
                        fmt_outcomes(got) + ", reference " + fmt_outcomes(want));
    }
  return diffs;
}

}  // namespace qdm::ex
