#ifndef FLAGDESCENT_CAPI_H
#define FLAGDESCENT_CAPI_H

/* C surface of the flagdescent shared library.  Handles are opaque; every
 * query returns a JSON document in a malloc'd string released with
 * fd_free_string.  Status codes double as process exit codes in the CLI. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fd_form fd_form;

typedef enum fd_status {
    FD_OK = 0,
    FD_ERR_PARSE = 2, /* malformed specs, lambdas, or request JSON */
    FD_ERR_MATH = 3,  /* violated mathematical preconditions */
    FD_ERR_OTHER = 4
} fd_status;

/* Parses a form spec such as "u:2,1" or "so-star:6".  On success *out owns
 * the handle; free it with fd_form_free. */
fd_status fd_form_parse(const char* spec, fd_form** out);
void fd_form_free(fd_form* form);

/* Canonical spec string; owned by the handle. */
const char* fd_form_name(const fd_form* form);
int fd_form_rank(const fd_form* form);

/* pi/pi_len select a subset of the simple system by index.  pi_len < 0 asks
 * for every stable subset; pi_len == 0 is the empty subset. */
fd_status fd_classify(const fd_form* form, const int* pi, int pi_len, int max_coord, char** json_out);
fd_status fd_check(const fd_form* form, const long* lambda, int rank, const int* pi, int pi_len,
                   char** json_out);
fd_status fd_verify_w(const fd_form* form, char** json_out);
fd_status fd_cocycle(const fd_form* form, const long* lambda, int rank, char** json_out);
fd_status fd_irr(const fd_form* form, const long* lambda, int rank, char** json_out);

/* Weil-restriction case; the request is a JSON document (see README). */
fd_status fd_res_classify(const char* request_json, char** json_out);

/* Renders any report produced above as human-readable text. */
fd_status fd_render_text(const char* report_json, char** text_out);

/* Message for the most recent failure on this thread. */
const char* fd_last_error(void);
void fd_free_string(char* s);

#ifdef __cplusplus
}
#endif

#endif /* FLAGDESCENT_CAPI_H */
