/* C API for the D_M(Z_N) quantum-double toolkit: opaque sessions configured
 * from JSON, report-producing commands, and numeric statuses that double as
 * process exit codes. */
#ifndef QDM_H
#define QDM_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qdm_session qdm_session;

typedef enum qdm_status {
  QDM_OK = 0,
  QDM_E_CONFIG = 2,   /* malformed or inconsistent configuration / input   */
  QDM_E_DIM_CAP = 3,  /* state space exceeds the configured dense cap      */
  QDM_E_INTERNAL = 4, /* violated internal invariant (non-integer trace..) */
  QDM_E_FUSION = 5,   /* fusion closure failure (NotClosed / NonInteger..) */
  QDM_E_PATH = 6      /* requested string path unavailable on the complex  */
} qdm_status;

const char* qdm_version(void);

/* Message for the most recent failing call on this thread; empty after a
 * success. Valid until the next qdm_* call on the same thread. */
const char* qdm_last_error(void);

/* Builds a session from a JSON configuration document / a file containing
 * one. On failure *out is NULL and the status tells why. */
qdm_status qdm_create(const char* config_json, qdm_session** out);
qdm_status qdm_create_from_file(const char* path, qdm_session** out);
void qdm_destroy(qdm_session* s);

qdm_status qdm_set_seed(qdm_session* s, uint64_t seed);
qdm_status qdm_set_threads(qdm_session* s, int threads);
qdm_status qdm_set_dense_cap(qdm_session* s, uint64_t cap);

/* Each command stores its report in the session and hands out a pointer
 * that stays valid until the next command on the same session (or destroy).
 * analyze/fuse/glue produce JSON; confine produces CSV. */
qdm_status qdm_analyze(qdm_session* s, const char** out);
qdm_status qdm_fuse(qdm_session* s, const char** out);
qdm_status qdm_confine(qdm_session* s, const char** out);
qdm_status qdm_glue(qdm_session* s, const char** out);

#ifdef __cplusplus
}
#endif

#endif /* QDM_H */
