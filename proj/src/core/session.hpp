// One configured model instance driving the four report-producing commands.
// analyze/fuse/glue return JSON documents, confine returns CSV; all errors
// surface as qdm::error with the taxonomy from errors.hpp.
#pragma once

#include <cstdint>
#include <string>

#include "core/config.hpp"

namespace qdm::ses {

class Session {
public:
  explicit Session(cfg::ModelConfig cfg) : cfg_(std::move(cfg)) {}

  const cfg::ModelConfig& config() const { return cfg_; }
  void set_seed(uint64_t seed) { cfg_.options.seed = seed; }
  void set_threads(int threads);
  void set_dense_cap(uint64_t cap) { cfg_.options.dense_cap = cap; }

  // Structure, orbits, ground-space data, vacuum overlaps and (when the
  // dimension permits) the full algebra verification report.
  std::string analyze() const;

  // Quasiparticle family (solved on the two-vertex fixture, or loaded and
  // verified from cfg.fusion.file), fusion products and the non-Abelian
  // verdict. Closure failures propagate as errc::fusion.
  std::string fuse() const;

  // CSV string-tension scan; requires a torus complex (errc::path otherwise).
  std::string confine() const;

  // Degeneracy of union/wedge builds against the single-part values, both
  // exclusion conventions for the wedge, and the domain-wall probe. Requires
  // a union or wedge complex (errc::config otherwise).
  std::string glue() const;

private:
  cfg::ModelConfig cfg_;
};

}  // namespace qdm::ses
