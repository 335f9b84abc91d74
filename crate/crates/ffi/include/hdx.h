#ifndef HDX_H
#define HDX_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HdxStatus {
  HDX_STATUS_OK = 0,
  HDX_STATUS_INTERNAL = 1,
  HDX_STATUS_HYPOTHESIS_FAILED = 2,
  HDX_STATUS_BUDGET = 3,
  HDX_STATUS_INVALID = 4,
  HDX_STATUS_NULL_POINTER = 5,
  HDX_STATUS_PANIC = 6,
} HdxStatus;

typedef enum HdxRank2Type {
  HDX_RANK2_TYPE_A1_TIMES_A1 = 0,
  HDX_RANK2_TYPE_A2 = 1,
  HDX_RANK2_TYPE_B2 = 2,
  HDX_RANK2_TYPE_G2 = 3,
} HdxRank2Type;

typedef enum HdxMode {
  HDX_MODE_EXPLICIT = 0,
  HDX_MODE_CERTIFICATE = 1,
} HdxMode;

/*
 The result of `hdx_certify`.
 */
typedef struct HdxCertificate HdxCertificate;

/*
 A resolved instance: diagram, field `F_{p^m}` and modulus `f`.
 */
typedef struct HdxInstance HdxInstance;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Resolves a preset diagram ("A~n" or "G~2") over `F_{p^m}` with modulus
 `f` ("t^2+t+1", "1,1,1" or "auto:<degree>"; null means "auto:2").

 # Safety
 `preset` and `f` are null or NUL-terminated strings; `out` is writable.
 */
enum HdxStatus hdx_instance_new(const char *preset,
                                uint64_t p,
                                uintptr_t m,
                                const char *f,
                                struct HdxInstance **out);

/*
 Like `hdx_instance_new` with a row-major `n x n` Cartan matrix.

 # Safety
 `entries` points to `n * n` integers; `f` and `out` as for `hdx_instance_new`.
 */
enum HdxStatus hdx_instance_from_gcm(const int64_t *entries,
                                     uintptr_t n,
                                     uint64_t p,
                                     uintptr_t m,
                                     const char *f,
                                     struct HdxInstance **out);

/*
 # Safety
 `instance` is null or came from `hdx_instance_new`; it is not used again.
 */
void hdx_instance_free(struct HdxInstance *instance);

/*
 Dimension `d` of the complex, one less than the number of nodes.

 # Safety
 `instance` is a live handle.
 */
uintptr_t hdx_instance_dimension(const struct HdxInstance *instance);

/*
 Largest rank-2 link bound over all pairs of nodes.

 # Safety
 `instance` is a live handle; `out` is writable.
 */
enum HdxStatus hdx_gamma_bound(const struct HdxInstance *instance, double *out);

/*
 `lambda_2` of the coset graph of `U(F_{p^m})` for a rank-2 type; `1` when
 that graph is disconnected.

 # Safety
 `out` is writable.
 */
enum HdxStatus hdx_lambda2_rank2(enum HdxRank2Type ty, uint64_t p, uintptr_t m, double *out);

/*
 Runs the checks of `mode`. A certificate is written to `out` whenever the
 checks ran, including when a hypothesis failed
 (`HDX_STATUS_HYPOTHESIS_FAILED`). `budget` caps group enumeration; 0
 selects the default.

 # Safety
 `instance` is a live handle; `out` is writable.
 */
enum HdxStatus hdx_certify(const struct HdxInstance *instance,
                           enum HdxMode mode,
                           uint64_t budget,
                           struct HdxCertificate **out);

/*
 # Safety
 `cert` is null or came from `hdx_certify`; it is not used again.
 */
void hdx_certificate_free(struct HdxCertificate *cert);

/*
 The certificate as JSON. The string is owned by the certificate.

 # Safety
 `cert` is a live handle.
 */
const char *hdx_certificate_json(const struct HdxCertificate *cert);

/*
 A copy of the certificate JSON, released with `hdx_string_free`.

 # Safety
 `cert` is a live handle.
 */
char *hdx_certificate_json_copy(const struct HdxCertificate *cert);

/*
 # Safety
 `s` is null or came from an `hdx_*` function returning `char *`.
 */
void hdx_string_free(char *s);

/*
 # Safety
 `cert` is a live handle.
 */
double hdx_certificate_gamma(const struct HdxCertificate *cert);

/*
 Writes `gamma'` and returns true when the trickling-down step applies.

 # Safety
 `cert` is a live handle; `out` is writable.
 */
bool hdx_certificate_gamma_prime(const struct HdxCertificate *cert, double *out);

/*
 Number of failed clauses.

 # Safety
 `cert` is a live handle.
 */
uintptr_t hdx_certificate_failed_count(const struct HdxCertificate *cert);

/*
 `|G|` when known and below 2^64.

 # Safety
 `cert` is a live handle; `out` is writable.
 */
bool hdx_certificate_group_order(const struct HdxCertificate *cert, uint64_t *out);

/*
 Message of the last failure on this thread, or null. Valid until the next
 `hdx_*` call on the same thread.
 */
const char *hdx_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HDX_H */
