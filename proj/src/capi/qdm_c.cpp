#include "qdm/qdm.h"

#include <exception>
#include <new>
#include <string>
#include <utility>

#include "core/errors.hpp"
#include "core/session.hpp"

struct qdm_session {
  explicit qdm_session(qdm::ses::Session s) : impl(std::move(s)) {}
  qdm::ses::Session impl;
  std::string doc;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
qdm_status guarded(F&& f) noexcept {
  try {
    g_last_error.clear();
    f();
    return QDM_OK;
  } catch (const qdm::error& e) {
    g_last_error = e.what();
    return static_cast<qdm_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    g_last_error = "allocation failed (state space too large?)";
    return QDM_E_DIM_CAP;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QDM_E_INTERNAL;
  }
}

template <typename Fn>
qdm_status command(qdm_session* s, const char** out, Fn&& fn) noexcept {
  if (out) *out = nullptr;
  if (!s || !out) {
    g_last_error = "null argument";
    return QDM_E_CONFIG;
  }
  return guarded([&] {
    s->doc = fn(s->impl);
    *out = s->doc.c_str();
  });
}

}  // namespace

extern "C" {

const char* qdm_version(void) { return "1.0.0"; }

const char* qdm_last_error(void) { return g_last_error.c_str(); }

qdm_status qdm_create(const char* config_json, qdm_session** out) {
  if (out) *out = nullptr;
  if (!config_json || !out) {
    g_last_error = "null argument";
    return QDM_E_CONFIG;
  }
  return guarded([&] {
    auto cfg = qdm::cfg::parse_config(config_json);
    *out = new qdm_session(qdm::ses::Session(std::move(cfg)));
  });
}

qdm_status qdm_create_from_file(const char* path, qdm_session** out) {
  if (out) *out = nullptr;
  if (!path || !out) {
    g_last_error = "null argument";
    return QDM_E_CONFIG;
  }
  return guarded([&] {
    auto cfg = qdm::cfg::load_config(path);
    *out = new qdm_session(qdm::ses::Session(std::move(cfg)));
  });
}

void qdm_destroy(qdm_session* s) { delete s; }

qdm_status qdm_set_seed(qdm_session* s, uint64_t seed) {
  if (!s) {
    g_last_error = "null argument";
    return QDM_E_CONFIG;
  }
  return guarded([&] { s->impl.set_seed(seed); });
}

qdm_status qdm_set_threads(qdm_session* s, int threads) {
  if (!s) {
    g_last_error = "null argument";
    return QDM_E_CONFIG;
  }
  return guarded([&] { s->impl.set_threads(threads); });
}

qdm_status qdm_set_dense_cap(qdm_session* s, uint64_t cap) {
  if (!s) {
    g_last_error = "null argument";
    return QDM_E_CONFIG;
  }
  return guarded([&] { s->impl.set_dense_cap(cap); });
}

qdm_status qdm_analyze(qdm_session* s, const char** out) {
  return command(s, out, [](const qdm::ses::Session& ses) { return ses.analyze(); });
}

qdm_status qdm_fuse(qdm_session* s, const char** out) {
  return command(s, out, [](const qdm::ses::Session& ses) { return ses.fuse(); });
}

qdm_status qdm_confine(qdm_session* s, const char** out) {
  return command(s, out, [](const qdm::ses::Session& ses) { return ses.confine(); });
}

qdm_status qdm_glue(qdm_session* s, const char** out) {
  return command(s, out, [](const qdm::ses::Session& ses) { return ses.glue(); });
}

}  // extern "C"
