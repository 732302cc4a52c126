#include "core/session.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "core/algebra.hpp"
#include "core/errors.hpp"
#include "core/ground.hpp"
#include "core/report.hpp"
#include "core/strings.hpp"
#include "core/wops.hpp"

namespace qdm::ses {

namespace {

using rep::ojson;

// Above this dimension analyze() skips the full algebra suite.
constexpr uint64_t kAlgebraLimit = uint64_t(1) << 20;

hs::Space build_space(const cfg::ModelConfig& c) {
  return hs::Space(cfg::make_action(c), cfg::build_complex(c.complex),
                   c.options.dense_cap);
}

ojson model_json(const act::Action& a) {
  ojson m;
  m["group_order"] = a.group_order();
  m["matter_dim"] = a.matter_dim();
  m["action"] = a.generator();
  m["trivial"] = a.trivial();
  m["special_form"] = a.special_form().flag;
  m["shift_central"] = alg::shift_central(a);
  ojson ob;
  ob["count"] = a.orbits().d_alg;
  ob["nontrivial"] = a.orbits().nontrivial;
  ob["fixed_points"] = a.orbits().fixed_count;
  ob["blocks"] = a.orbits().orbits;
  m["orbits"] = std::move(ob);
  return m;
}

ojson complex_json(const cell::Complex2& cx, const std::string& type) {
  ojson c;
  c["type"] = type;
  c["vertices"] = cx.vertex_count;
  c["edges"] = cx.edges.size();
  c["faces"] = cx.faces.size();
  c["euler_characteristic"] = cx.euler_characteristic();
  ojson vj = ojson::array();
  for (const auto& v : cell::validate(cx)) vj.push_back(v.code + ": " + v.detail);
  c["violations"] = std::move(vj);
  return c;
}

ojson options_json(const cfg::Options& o) {
  ojson j;
  j["dense_cap"] = o.dense_cap;
  j["exclusion_keeps_edge_terms"] = o.exclusion_keeps_edge_terms;
  j["seed"] = o.seed;
  j["threads"] = o.threads;
  return j;
}

ojson ground_json(const hs::Space& s, const ops::Terms& t, const cfg::Options& o) {
  auto tr = gs::ground_degeneracy(s, t, o.seed, o.threads);
  int d_alg = s.action().orbits().d_alg;
  ojson g;
  g["degeneracy"] = tr.degeneracy;
  g["d_alg_predicted"] = d_alg;
  g["matches_d_alg"] = tr.degeneracy == d_alg;
  g["trace"] = tr.trace;
  g["residual"] = tr.residual;
  g["stochastic"] = tr.stochastic;
  g["energy_floor"] = t.e0;
  return g;
}

ojson vacua_json(const hs::Space& s, const ops::Terms& t) {
  auto reps = gs::vacuum_representatives(s.action());
  std::vector<ops::SVec> vac;
  vac.reserve(reps.size());
  for (int r : reps) vac.push_back(gs::vacuum_sparse(s, t, r));
  ojson overlap = ojson::array();
  for (size_t i = 0; i < vac.size(); ++i) {
    ojson row = ojson::array();
    for (size_t j = 0; j < vac.size(); ++j)
      row.push_back(std::abs(ops::sparse_inner(vac[i], vac[j])));
    overlap.push_back(std::move(row));
  }
  ojson v;
  v["representatives"] = reps;
  v["overlap_modulus"] = std::move(overlap);
  return v;
}

ojson algebra_json(const hs::Space& s, uint64_t seed) {
  if (s.dim() > kAlgebraLimit) {
    ojson a;
    a["skipped"] = true;
    a["reason"] = "dimension above algebra limit";
    return a;
  }
  auto ar = alg::algebra_suite(s, seed);
  ojson a;
  a["pass"] = ar.pass;
  a["literal"] = ar.literal;
  a["pairs_commuting"] = ar.pairs_commuting;
  a["pairs_noncommuting"] = ar.pairs_noncommuting;
  a["vectors"] = ar.vectors;
  a["max_residual"] = ar.max_residual;
  if (!ar.detail.empty()) a["detail"] = ar.detail;
  return a;
}

}  // namespace

void Session::set_threads(int threads) { cfg_.options.threads = std::max(1, threads); }

std::string Session::analyze() const {
  auto s = build_space(cfg_);
  auto t = ops::make_terms(s, cfg_.excluded, cfg_.options.exclusion_keeps_edge_terms);
  ojson j;
  j["command"] = "analyze";
  j["model"] = model_json(s.action());
  j["complex"] = complex_json(s.complex(), cfg_.complex.type);
  j["dimension"] = s.dim();
  j["excluded_vertices"] = cfg_.excluded;
  j["ground"] = ground_json(s, t, cfg_.options);
  j["algebra"] = algebra_json(s, cfg_.options.seed);
  j["vacua"] = vacua_json(s, t);
  j["options"] = options_json(cfg_.options);
  return rep::dump(j);
}

std::string Session::fuse() const {
  act::Action a = cfg::make_action(cfg_);
  hs::Space fixture(a, ex::solver_fixture(), cfg_.options.dense_cap);
  std::vector<ex::WOperator> ws;
  if (cfg_.fusion.source == "file") {
    require(!cfg_.fusion.file.empty(), errc::config,
            "fusion.file is required when fusion.source is \"file\"");
    ws = cfg::load_w_file(cfg_.fusion.file, a.matter_dim());
  } else {
    require(cfg_.fusion.source == "solve", errc::config,
            "fusion.source must be \"solve\" or \"file\"");
    ws = ex::derive_family(fixture).ws;
  }
  double worst = 0;
  for (const auto& w : ws) {
    double rsd = ex::verify_w(fixture, w);
    worst = std::max(worst, rsd);
    require(rsd < 1e-6, errc::config,
            "WFileInvalid: operator " + w.label.str() +
                " fails the intertwiner check (residual " + std::to_string(rsd) + ")");
  }
  auto table = ex::fusion_table(ws);
  ojson j;
  j["command"] = "fuse";
  j["model"] = model_json(a);
  ojson fam;
  fam["source"] = cfg_.fusion.source;
  ojson labels = ojson::array();
  for (size_t i = 0; i < table.labels.size(); ++i) {
    ojson L;
    L["label"] = table.labels[i].str();
    if (!table.aliases[i].empty()) L["alias"] = table.aliases[i];
    labels.push_back(std::move(L));
  }
  fam["labels"] = std::move(labels);
  fam["verify_max_residual"] = worst;
  j["family"] = std::move(fam);
  ojson prods;
  for (size_t x = 0; x < table.labels.size(); ++x)
    for (size_t y = 0; y < table.labels.size(); ++y) {
      ojson out = ojson::array();
      for (size_t z = 0; z < table.labels.size(); ++z)
        if (table.coeff[x][y][z] != 0) {
          ojson term;
          term["label"] = table.labels[z].str();
          term["coeff"] = table.coeff[x][y][z];
          out.push_back(std::move(term));
        }
      prods[table.labels[x].str() + "*" + table.labels[y].str()] = std::move(out);
    }
  j["products"] = std::move(prods);
  j["abelian"] = table.abelian;
  j["nonabelian_detected"] = ex::detect_nonabelian(table);
  j["special_form"] = a.special_form().flag;
  j["reference_diffs"] = ex::reference_diffs(a, table);
  return rep::dump(j);
}

std::string Session::confine() const {
  require(cfg_.complex.type == "torus", errc::path,
          "PathUnavailable: the confinement scan needs a torus complex");
  auto s = build_space(cfg_);
  std::vector<int> lengths = cfg_.confinement.lengths;
  if (lengths.empty()) lengths = {1, 2, 3};
  auto rows = ex::confinement_scan(s, cfg_.complex.rows, cfg_.complex.cols,
                                   cfg_.confinement.matter_rep, lengths,
                                   cfg_.confinement.closed);
  return rep::csv_confinement(rows);
}

std::string Session::glue() const {
  const auto& spec = cfg_.complex;
  require(spec.type == "union" || spec.type == "wedge", errc::config,
          "glue needs a union or wedge complex");
  act::Action a = cfg::make_action(cfg_);
  const uint64_t seed = cfg_.options.seed;
  const int threads = cfg_.options.threads;
  long long d_alg = a.orbits().d_alg;

  std::vector<long long> part_deg;
  std::vector<int> part_vertices;
  for (const auto& p : spec.parts) {
    hs::Space ps(a, cfg::build_complex(p), cfg_.options.dense_cap);
    part_vertices.push_back(ps.vertex_count());
    auto pt = ops::make_terms(ps);
    part_deg.push_back(gs::ground_degeneracy(ps, pt, seed, threads).degeneracy);
  }

  auto s = build_space(cfg_);
  ojson j;
  j["command"] = "glue";
  j["kind"] = spec.type;
  j["model"] = model_json(a);
  j["complex"] = complex_json(s.complex(), spec.type);
  j["dimension"] = s.dim();
  j["part_degeneracy"] = part_deg;

  if (spec.type == "union") {
    auto t = ops::make_terms(s);
    auto tr = gs::ground_degeneracy(s, t, seed, threads);
    ojson d;
    d["measured"] = tr.degeneracy;
    d["parts_product"] = part_deg[0] * part_deg[1];
    d["multiplicative"] = tr.degeneracy == part_deg[0] * part_deg[1];
    d["claimed_d_alg_squared"] = d_alg * d_alg;
    d["matches_claim"] = tr.degeneracy == d_alg * d_alg;
    j["degeneracy"] = std::move(d);
    j["options"] = options_json(cfg_.options);
    return rep::dump(j);
  }

  // Wedge: the merged vertex keeps the first-part index.
  int shared = spec.at_a;
  auto t_full = ops::make_terms(s);
  auto t_vertex_only = ops::make_terms(s, {shared}, true);
  auto t_vertex_edges = ops::make_terms(s, {shared}, false);
  long long m_full = gs::ground_degeneracy(s, t_full, seed, threads).degeneracy;
  long long m_vertex = gs::ground_degeneracy(s, t_vertex_only, seed, threads).degeneracy;
  long long m_both = gs::ground_degeneracy(s, t_vertex_edges, seed, threads).degeneracy;

  ojson d;
  d["shared_vertex"] = shared;
  d["no_exclusion"] = m_full;
  d["claimed_no_exclusion"] = d_alg;
  d["excluded_vertex_term_only"] = m_vertex;
  d["excluded_vertex_and_edge_terms"] = m_both;
  d["claimed_excluded"] = d_alg * d_alg;
  d["configured_convention"] = cfg_.options.exclusion_keeps_edge_terms
                                   ? "keep_edge_terms"
                                   : "drop_edge_terms";
  j["degeneracy"] = std::move(d);

  auto reps = gs::vacuum_representatives(a);
  if (reps.size() >= 2) {
    std::vector<int> matter(s.vertex_count(), reps[0]);
    for (int v = part_vertices[0]; v < s.vertex_count(); ++v) matter[v] = reps[1];
    uint64_t idx = s.encode(std::vector<int>(s.edge_count(), 0), matter);
    ops::SVec mixed{{idx, hs::cd(1, 0)}};

    ojson w;
    auto prof = gs::violation_profile(s, t_full, mixed);
    ojson pv;
    pv["vertex"] = prof.vertex;
    pv["face"] = prof.face;
    pv["edge"] = prof.edge;
    w["seed_violations"] = std::move(pv);
    w["projected_norm_full_terms"] =
        ops::sparse_norm(ops::apply_global_projector(s, t_full, mixed));

    const ops::Terms& t_ex =
        cfg_.options.exclusion_keeps_edge_terms ? t_vertex_only : t_vertex_edges;
    auto proj = ops::apply_global_projector(s, t_ex, mixed);
    double n = ops::sparse_norm(proj);
    if (n > 1e-12) {
      for (auto& [k, v] : proj) v /= n;
      double E = gs::energy(s, t_full, proj);
      w["energy"] = E;
      w["ground_energy"] = t_full.e0;
      w["excess"] = E - t_full.e0;
    } else {
      w["annihilated_under_exclusion"] = true;
    }
    j["domain_wall"] = std::move(w);
  } else {
    ojson w;
    w["skipped"] = "single orbit action: no second vacuum";
    j["domain_wall"] = std::move(w);
  }
  j["options"] = options_json(cfg_.options);
  return rep::dump(j);
}

}  // namespace qdm::ses
