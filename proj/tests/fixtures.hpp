// Shared model fixtures for the test binaries.
#pragma once

#include <string>
#include <vector>

#include "core/config.hpp"
#include "core/space.hpp"

namespace fixtures {

struct ModelDef {
  std::string name;
  int N;
  std::vector<int> perm;
};

// The six standing fixtures: the four nontrivial Z2 matter models, the Z3
// cyclic one, and the matterless M=1 reference.
inline const std::vector<ModelDef>& models() {
  static const std::vector<ModelDef> ms = {
      {"d2z2", 2, {1, 0}},       {"d3z2", 2, {1, 0, 2}},
      {"d4i", 2, {1, 0, 3, 2}},  {"d4ii", 2, {1, 0, 2, 3}},
      {"d3z3", 3, {1, 2, 0}},    {"m1", 2, {0}},
  };
  return ms;
}

inline const ModelDef& model(const std::string& name) {
  for (const auto& m : models())
    if (m.name == name) return m;
  throw std::runtime_error("unknown fixture " + name);
}

inline qdm::hs::Space torus_space(const ModelDef& m, int rows, int cols,
                                  uint64_t cap = qdm::hs::kDefaultDenseCap) {
  return qdm::hs::Space(qdm::act::Action(m.N, m.perm),
                        qdm::cell::torus_grid(rows, cols), cap);
}

inline std::string torus_config(const ModelDef& m, int rows, int cols) {
  std::string a = "[";
  for (size_t i = 0; i < m.perm.size(); ++i)
    a += (i ? "," : "") + std::to_string(m.perm[i]);
  a += "]";
  return "{\"model\":{\"group_order\":" + std::to_string(m.N) +
         ",\"matter_dim\":" + std::to_string((int)m.perm.size()) +
         ",\"action\":" + a + "},\"complex\":{\"type\":\"torus\",\"rows\":" +
         std::to_string(rows) + ",\"cols\":" + std::to_string(cols) + "}}";
}

}  // namespace fixtures
