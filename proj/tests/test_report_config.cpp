#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <limits>

#include "core/config.hpp"
#include "core/errors.hpp"
#include "core/report.hpp"
#include "fixtures.hpp"

using namespace qdm;

namespace {

std::string write_temp(const std::string& text) {
  static int counter = 0;
  std::string path = "qdm_test_tmp_" + std::to_string(counter++) + ".json";
  std::ofstream f(path);
  f << text;
  return path;
}

}  // namespace

TEST_CASE("full configuration round trip") {
  auto cfg = cfg::parse_config(R"({
    "model": {"group_order": 2, "matter_dim": 3, "action": [1, 0, 2]},
    "complex": {"type": "torus", "rows": 2, "cols": 3},
    "excluded_vertices": [1],
    "options": {"dense_cap": 4096, "exclusion_keeps_edge_terms": true,
                "seed": 7, "threads": 2},
    "confinement": {"lengths": [1, 2], "closed": true, "matter_rep": 2},
    "fusion": {"source": "file", "file": "ws.json"}
  })");
  CHECK(cfg.group_order == 2);
  CHECK(cfg.matter_dim == 3);
  CHECK(cfg.action == std::vector<int>{1, 0, 2});
  CHECK(cfg.complex.type == "torus");
  CHECK(cfg.complex.rows == 2);
  CHECK(cfg.complex.cols == 3);
  CHECK(cfg.excluded == std::vector<int>{1});
  CHECK(cfg.options.dense_cap == 4096);
  CHECK(cfg.options.exclusion_keeps_edge_terms);
  CHECK(cfg.options.seed == 7);
  CHECK(cfg.options.threads == 2);
  CHECK(cfg.confinement.lengths == std::vector<int>{1, 2});
  CHECK(cfg.confinement.closed);
  CHECK(cfg.confinement.matter_rep == 2);
  CHECK(cfg.fusion.source == "file");
  CHECK(cfg.fusion.file == "ws.json");
}

TEST_CASE("malformed configurations raise config errors") {
  auto expect_config = [](const std::string& text) {
    try {
      cfg::parse_config(text);
      FAIL_CHECK("expected a config error for: " << text);
    } catch (const qdm::error& e) {
      CHECK(e.code() == qdm::errc::config);
    }
  };
  expect_config("{not json");
  expect_config("{}");  // missing model
  expect_config(R"({"model": {"group_order": 0, "matter_dim": 2, "action": [1,0]},
                    "complex": {"type": "torus", "rows": 1, "cols": 2}})");
  expect_config(R"({"model": {"group_order": 2, "matter_dim": 2, "action": [1]},
                    "complex": {"type": "torus", "rows": 1, "cols": 2}})");
  expect_config(R"({"model": {"group_order": 2, "matter_dim": 2, "action": [1,0]},
                    "complex": {"type": "torus", "rows": 0, "cols": 2}})");
  expect_config(R"({"model": {"group_order": 2, "matter_dim": 2, "action": [1,0]},
                    "complex": {"type": "moebius", "rows": 1, "cols": 2}})");
  expect_config(R"({"model": {"group_order": 2, "matter_dim": 2, "action": [1,0]},
                    "complex": {"type": "union", "parts": [
                      {"type": "torus", "rows": 1, "cols": 1}]}})");
}

TEST_CASE("custom complexes parse edges and faces") {
  auto cfg = cfg::parse_config(R"({
    "model": {"group_order": 2, "matter_dim": 2, "action": [1, 0]},
    "complex": {"type": "custom", "vertices": 2,
                "edges": [[0, 1], [1, 0]],
                "faces": [[[0, 1], [1, 1]]]}
  })");
  auto cx = cfg::build_complex(cfg.complex);
  CHECK(cx.vertex_count == 2);
  REQUIRE(cx.edges.size() == 2);
  CHECK(cx.edges[0].tail == 0);
  CHECK(cx.edges[0].head == 1);
  REQUIRE(cx.faces.size() == 1);
  CHECK(cx.faces[0].size() == 2);
  CHECK(cx.faces[0][1].edge == 1);
  CHECK(cx.faces[0][1].sign == 1);
}

TEST_CASE("union and wedge specs build glued complexes") {
  auto cfg = cfg::parse_config(R"({
    "model": {"group_order": 2, "matter_dim": 3, "action": [1, 0, 2]},
    "complex": {"type": "wedge", "at": [0, 1], "parts": [
      {"type": "torus", "rows": 1, "cols": 2},
      {"type": "torus", "rows": 1, "cols": 2}]}
  })");
  auto cx = cfg::build_complex(cfg.complex);
  CHECK(cx.vertex_count == 3);
  CHECK(cx.edges.size() == 8);

  auto ucfg = cfg::parse_config(R"({
    "model": {"group_order": 2, "matter_dim": 3, "action": [1, 0, 2]},
    "complex": {"type": "union", "parts": [
      {"type": "torus", "rows": 1, "cols": 1},
      {"type": "torus", "rows": 1, "cols": 1}]}
  })");
  auto ux = cfg::build_complex(ucfg.complex);
  CHECK(ux.vertex_count == 2);
  CHECK(ux.edges.size() == 4);
}

TEST_CASE("w files load labelled matrices") {
  auto path = write_temp(R"x({
    "ws": [{"label": [1, 2], "alias": "(1;2,1)",
            "matrix": [[0,0],[1,0],[0,0], [1,0],[0,0],[0,0], [0,0],[0,0],[1,0]]}]
  })x");
  auto ws = cfg::load_w_file(path, 3);
  std::remove(path.c_str());
  REQUIRE(ws.size() == 1);
  CHECK(ws[0].label.J == 1);
  CHECK(ws[0].label.K == 2);
  CHECK(ws[0].alias == "(1;2,1)");
  CHECK(ws[0].m(0, 1).real() == doctest::Approx(1));
  CHECK(ws[0].m(2, 2).real() == doctest::Approx(1));
  CHECK(ws[0].m(0, 0).real() == doctest::Approx(0));

  auto bad = write_temp(R"({"ws": [{"label": [1], "matrix": []}]})");
  CHECK_THROWS_AS(cfg::load_w_file(bad, 3), qdm::error);
  std::remove(bad.c_str());
}

TEST_CASE("report dump is deterministic and insertion ordered") {
  rep::ojson j;
  j["zulu"] = 1;
  j["alpha"] = 0.1;
  j["nested"]["b"] = true;
  j["nested"]["a"] = nullptr;
  j["list"] = {1, 2};
  auto text = rep::dump(j);
  CHECK(text.find("zulu") < text.find("alpha"));
  CHECK(text.find("\"b\"") < text.find("\"a\""));
  CHECK(text.find("0.1") != std::string::npos);
  CHECK(text == rep::dump(j));
  // doubles at 12 significant digits, non-finite as null
  rep::ojson d;
  d["x"] = 1.0 / 3.0;
  d["inf"] = std::numeric_limits<double>::infinity();
  auto dt = rep::dump(d);
  CHECK(dt.find("0.333333333333") != std::string::npos);
  CHECK(dt.find("null") != std::string::npos);
}

TEST_CASE("confinement csv layout") {
  std::vector<ex::ConfinementRow> rows = {{1, 3, 2}, {2, 4, 2}};
  CHECK(rep::csv_confinement(rows) ==
        "L,deltaE_magnetic,deltaE_electric\n1,3,2\n2,4,2\n");
}

TEST_CASE("make_action validates against the declared dimensions") {
  cfg::ModelConfig c;
  c.group_order = 2;
  c.matter_dim = 3;
  c.action = {1, 0, 2};
  CHECK_NOTHROW(cfg::make_action(c));
  c.action = {1, 1, 2};  // not a permutation
  CHECK_THROWS_AS(cfg::make_action(c), qdm::error);
}
