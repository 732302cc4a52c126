// JSON model configuration: group/matter data, a recursive complex spec
// (torus | custom | union | wedge), excluded vertices and per-command
// options. Malformed input throws errc::config with a short reason.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/action.hpp"
#include "core/cell.hpp"
#include "core/wops.hpp"

namespace qdm::cfg {

struct ComplexSpec {
  std::string type;                // torus | custom | union | wedge
  int rows = 0, cols = 0;          // torus
  int vertices = 0;                // custom
  std::vector<cell::Edge> edges;   // custom
  std::vector<cell::Face> faces;   // custom
  std::vector<ComplexSpec> parts;  // union/wedge: exactly two
  int at_a = 0, at_b = 0;          // wedge gluing vertices (part order)
};

struct Options {
  uint64_t dense_cap = 1ull << 27;
  bool exclusion_keeps_edge_terms = false;
  uint64_t seed = 1;
  int threads = 1;
};

struct Confinement {
  std::vector<int> lengths;
  bool closed = false;
  int matter_rep = 0;
};

struct Fusion {
  std::string source = "solve";  // solve | file
  std::string file;
};

struct ModelConfig {
  int group_order = 0;
  int matter_dim = 0;
  std::vector<int> action;  // image list of theta(1, .)
  ComplexSpec complex;
  std::vector<int> excluded;
  Options options;
  Confinement confinement;
  Fusion fusion;
};

ModelConfig parse_config(const std::string& text);
ModelConfig load_config(const std::string& path);

cell::Complex2 build_complex(const ComplexSpec& spec);
act::Action make_action(const ModelConfig& c);

// W matrices for `fuse` from a file: {"ws": [{"label": [J,K],
// "alias": "...", "matrix": [[re,im], ...]}]} with row-major M*M entries.
std::vector<ex::WOperator> load_w_file(const std::string& path, int M);

}  // namespace qdm::cfg
