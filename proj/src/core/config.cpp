#include "core/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "core/errors.hpp"

namespace qdm::cfg {

namespace {

using nlohmann::json;

int get_int(const json& j, const char* key, bool required, int fallback = 0) {
  if (!j.contains(key)) {
    require(!required, errc::config, std::string("missing field: ") + key);
    return fallback;
  }
  const auto& v = j.at(key);
  require(v.is_number_integer(), errc::config, std::string("field is not an integer: ") + key);
  return v.get<int>();
}

ComplexSpec parse_complex(const json& j) {
  require(j.is_object(), errc::config, "complex spec must be an object");
  ComplexSpec spec;
  require(j.contains("type") && j.at("type").is_string(), errc::config,
          "complex spec needs a string 'type'");
  spec.type = j.at("type").get<std::string>();
  if (spec.type == "torus") {
    spec.rows = get_int(j, "rows", true);
    spec.cols = get_int(j, "cols", true);
    require(spec.rows >= 1 && spec.cols >= 1, errc::config, "torus dimensions must be >= 1");
  } else if (spec.type == "custom") {
    spec.vertices = get_int(j, "vertices", true);
    require(spec.vertices >= 1, errc::config, "custom complex needs vertices >= 1");
    require(j.contains("edges") && j.at("edges").is_array(), errc::config,
            "custom complex needs an 'edges' array");
    for (const auto& e : j.at("edges")) {
      require(e.is_array() && e.size() == 2, errc::config, "edge entries are [tail, head]");
      spec.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    }
    if (j.contains("faces")) {
      require(j.at("faces").is_array(), errc::config, "'faces' must be an array");
      for (const auto& w : j.at("faces")) {
        require(w.is_array(), errc::config, "face entries are walks of [edge, sign]");
        cell::Face face;
        for (const auto& st : w) {
          require(st.is_array() && st.size() == 2, errc::config,
                  "face steps are [edge, sign]");
          int sign = st.at(1).get<int>();
          require(sign == 1 || sign == -1, errc::config, "face step sign must be +-1");
          face.push_back({st.at(0).get<int>(), sign});
        }
        spec.faces.push_back(std::move(face));
      }
    }
  } else if (spec.type == "union" || spec.type == "wedge") {
    require(j.contains("parts") && j.at("parts").is_array() && j.at("parts").size() == 2,
            errc::config, "'parts' must list exactly two complex specs");
    for (const auto& p : j.at("parts")) spec.parts.push_back(parse_complex(p));
    if (spec.type == "wedge") {
      require(j.contains("at") && j.at("at").is_array() && j.at("at").size() == 2,
              errc::config, "wedge needs 'at': [vertex_in_first, vertex_in_second]");
      spec.at_a = j.at("at").at(0).get<int>();
      spec.at_b = j.at("at").at(1).get<int>();
    }
  } else {
    fail(errc::config, "unknown complex type: " + spec.type);
  }
  return spec;
}

}  // namespace

ModelConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(errc::config, std::string("config is not valid JSON: ") + e.what());
  }
  require(j.is_object(), errc::config, "config root must be an object");

  ModelConfig c;
  require(j.contains("model") && j.at("model").is_object(), errc::config,
          "config needs a 'model' object");
  const auto& m = j.at("model");
  c.group_order = get_int(m, "group_order", true);
  c.matter_dim = get_int(m, "matter_dim", true);
  require(c.group_order >= 1, errc::config, "group_order must be >= 1");
  require(c.matter_dim >= 1, errc::config, "matter_dim must be >= 1");
  require(m.contains("action") && m.at("action").is_array(), errc::config,
          "model needs an 'action' array (image list of theta(1, .))");
  for (const auto& v : m.at("action")) {
    require(v.is_number_integer(), errc::config, "action entries must be integers");
    c.action.push_back(v.get<int>());
  }
  require((int)c.action.size() == c.matter_dim, errc::config,
          "action length must equal matter_dim");

  require(j.contains("complex"), errc::config, "config needs a 'complex' spec");
  c.complex = parse_complex(j.at("complex"));

  if (j.contains("excluded_vertices")) {
    require(j.at("excluded_vertices").is_array(), errc::config,
            "'excluded_vertices' must be an array");
    for (const auto& v : j.at("excluded_vertices")) c.excluded.push_back(v.get<int>());
  }

  if (j.contains("options")) {
    const auto& o = j.at("options");
    require(o.is_object(), errc::config, "'options' must be an object");
    if (o.contains("dense_cap")) c.options.dense_cap = o.at("dense_cap").get<uint64_t>();
    if (o.contains("exclusion_keeps_edge_terms"))
      c.options.exclusion_keeps_edge_terms = o.at("exclusion_keeps_edge_terms").get<bool>();
    if (o.contains("seed")) c.options.seed = o.at("seed").get<uint64_t>();
    if (o.contains("threads")) c.options.threads = o.at("threads").get<int>();
    require(c.options.threads >= 1, errc::config, "threads must be >= 1");
  }

  if (j.contains("confinement")) {
    const auto& o = j.at("confinement");
    require(o.is_object(), errc::config, "'confinement' must be an object");
    require(o.contains("lengths") && o.at("lengths").is_array(), errc::config,
            "confinement needs a 'lengths' array");
    for (const auto& v : o.at("lengths")) c.confinement.lengths.push_back(v.get<int>());
    if (o.contains("closed")) c.confinement.closed = o.at("closed").get<bool>();
    c.confinement.matter_rep = get_int(o, "matter_rep", false, 0);
  }

  if (j.contains("fusion")) {
    const auto& o = j.at("fusion");
    require(o.is_object(), errc::config, "'fusion' must be an object");
    if (o.contains("source")) c.fusion.source = o.at("source").get<std::string>();
    require(c.fusion.source == "solve" || c.fusion.source == "file", errc::config,
            "fusion source must be 'solve' or 'file'");
    if (o.contains("file")) c.fusion.file = o.at("file").get<std::string>();
    require(c.fusion.source != "file" || !c.fusion.file.empty(), errc::config,
            "fusion source 'file' needs a 'file' path");
  }

  return c;
}

ModelConfig load_config(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::config, "cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

cell::Complex2 build_complex(const ComplexSpec& spec) {
  if (spec.type == "torus") return cell::torus_grid(spec.rows, spec.cols);
  if (spec.type == "custom") {
    cell::Complex2 c;
    c.vertex_count = spec.vertices;
    c.edges = spec.edges;
    c.faces = spec.faces;
    for (const auto& v : cell::validate(c))
      require(v.code != "IndexRange", errc::config, "custom complex: " + v.detail);
    return c;
  }
  cell::Complex2 a = build_complex(spec.parts.at(0));
  cell::Complex2 b = build_complex(spec.parts.at(1));
  if (spec.type == "union") return cell::disjoint_union(a, b);
  require(spec.at_a >= 0 && spec.at_a < a.vertex_count, errc::config,
          "wedge vertex out of range in first part");
  require(spec.at_b >= 0 && spec.at_b < b.vertex_count, errc::config,
          "wedge vertex out of range in second part");
  return cell::wedge_at_vertex(a, b, spec.at_a, spec.at_b);
}

act::Action make_action(const ModelConfig& c) {
  return act::Action(c.group_order, c.action);
}

std::vector<ex::WOperator> load_w_file(const std::string& path, int M) {
  std::ifstream in(path);
  require(in.good(), errc::config, "cannot open W file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(errc::config, std::string("W file is not valid JSON: ") + e.what());
  }
  require(j.is_object() && j.contains("ws") && j.at("ws").is_array(), errc::config,
          "W file needs a 'ws' array");
  std::vector<ex::WOperator> ws;
  for (const auto& e : j.at("ws")) {
    ex::WOperator w;
    require(e.contains("label") && e.at("label").is_array() && e.at("label").size() == 2,
            errc::config, "each W needs 'label': [J, K]");
    w.label.J = e.at("label").at(0).get<int>();
    w.label.K = e.at("label").at(1).get<int>();
    if (e.contains("alias")) w.alias = e.at("alias").get<std::string>();
    require(e.contains("matrix") && e.at("matrix").is_array() &&
                (int)e.at("matrix").size() == M * M,
            errc::config, "each W needs 'matrix' with M*M [re, im] rows");
    w.m = ex::Mat::Zero(M, M);
    for (int k = 0; k < M * M; ++k) {
      const auto& ent = e.at("matrix").at(k);
      require(ent.is_array() && ent.size() == 2, errc::config,
              "matrix entries are [re, im]");
      w.m(k / M, k % M) =
          std::complex<double>(ent.at(0).get<double>(), ent.at(1).get<double>());
    }
    ws.push_back(std::move(w));
  }
  require(!ws.empty(), errc::config, "W file lists no operators");
  return ws;
}

}  // namespace qdm::cfg
