/* Public C interface of the simplicial-complex embedding library.
 *
 * Conventions:
 *  - every function returns an scx_status; out-parameters are written only
 *    on SCX_OK,
 *  - scx_last_error() describes the most recent failure on this thread,
 *  - strings returned through char** out-parameters are owned by the caller
 *    and must be released with scx_string_free(),
 *  - complex handles are opaque and freed with scx_complex_free().
 */
#ifndef SCX_H
#define SCX_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum scx_status {
    SCX_OK = 0,
    SCX_ERROR_INVALID_ARGUMENT = 1,
    SCX_ERROR_IO = 2,
    SCX_ERROR_PARSE = 3,
    SCX_ERROR_CONFIG = 4,
    SCX_ERROR_NUMERIC = 5,
    SCX_ERROR_INTERNAL = 6
} scx_status;

/* Library version as "major.minor.patch"; storage owned by the library. */
const char* scx_version(void);

/* Message of the most recent error on the calling thread; empty string if
 * no error has occurred. Storage owned by the library, valid until the next
 * failing call on the same thread. */
const char* scx_last_error(void);

/* Releases a string returned through a char** out-parameter. NULL is ok. */
void scx_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Complexes                                                          */

typedef struct scx_complex scx_complex;

/* Parses a complex JSON file from disk. */
scx_status scx_complex_load(const char* path, scx_complex** out);

/* Builds a complex from the same JSON schema held in memory. */
scx_status scx_complex_from_json(const char* json_text, scx_complex** out);

void scx_complex_free(scx_complex* c);

scx_status scx_complex_dimension(const scx_complex* c, int* out);

/* Number of k-simplices. */
scx_status scx_complex_count(const scx_complex* c, int k, size_t* out);

/* Total number of simplices N. */
scx_status scx_complex_size(const scx_complex* c, size_t* out);

/* Number of simplices below the top dimension. */
scx_status scx_complex_size_below_top(const scx_complex* c, size_t* out);

/* JSON summary: name, dimension, per-dimension counts. */
scx_status scx_complex_summary_json(const scx_complex* c, char** out);

/* ------------------------------------------------------------------ */
/* Pipeline commands                                                  */
/*                                                                     */
/* Each command consumes a JSON argument object and hands back a JSON  */
/* result summary echoing the resolved configuration and seed. The     */
/* accepted arguments per command are documented with the CLI, which   */
/* is a thin shim over these calls.                                    */

scx_status scx_cmd_gen(const char* args_json, char** result_json);
scx_status scx_cmd_build(const char* args_json, char** result_json);
scx_status scx_cmd_train_ae(const char* args_json, char** result_json);
scx_status scx_cmd_embed(const char* args_json, char** result_json);
scx_status scx_cmd_distmat(const char* args_json, char** result_json);
scx_status scx_cmd_train_pool(const char* args_json, char** result_json);
scx_status scx_cmd_eval(const char* args_json, char** result_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SCX_H */
