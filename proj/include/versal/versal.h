/* C interface to the versal deformation library.
 *
 * Handles are opaque. Every function that can fail returns a vd_status and,
 * on failure, records a message readable through vd_last_error() on the
 * calling thread. Strings returned by the library stay valid until the
 * owning handle is freed.
 */
#ifndef VERSAL_VERSAL_H
#define VERSAL_VERSAL_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define VD_API __declspec(dllexport)
#else
#define VD_API __attribute__((visibility("default")))
#endif

typedef struct vd_system vd_system;
typedef struct vd_result vd_result;

typedef enum vd_status {
  VD_OK = 0,
  VD_ERR_NULL_ARGUMENT = 1,
  VD_ERR_IO = 2,
  VD_ERR_PARSE = 3,
  VD_ERR_USAGE = 4,
  VD_ERR_PRECONDITION = 5,
  VD_ERR_DIMENSION = 6,
  VD_ERR_LIFT = 7,
  VD_ERR_INTERNAL = 8
} vd_status;

typedef void (*vd_log_fn)(const char* line, void* user_data);

typedef struct vd_run_options {
  /* "t1", "t2", "normal", "deform", "gb" or "hilbert". */
  const char* command;
  /* Optional multidegree; ignored when degree_len is 0. */
  const int* degree;
  size_t degree_len;
  int max_order;
  int verbosity;
  int hilbert_upto;
  vd_log_fn log;
  void* log_user_data;
} vd_run_options;

/* Fills defaults: max_order 20, verbosity 0, hilbert_upto 10, no degree. */
VD_API void vd_run_options_init(vd_run_options* options);

VD_API vd_status vd_system_load_file(const char* path, vd_system** out);
VD_API vd_status vd_system_load_string(const char* text, vd_system** out);
VD_API void vd_system_free(vd_system* system);

VD_API size_t vd_system_num_variables(const vd_system* system);
VD_API size_t vd_system_num_generators(const vd_system* system);
VD_API size_t vd_system_grading_rank(const vd_system* system);

VD_API vd_status vd_run(const vd_system* system, const vd_run_options* options,
                        vd_result** out);
VD_API const char* vd_result_text(const vd_result* result);
VD_API const char* vd_result_json(const vd_result* result);
VD_API void vd_result_free(vd_result* result);

/* Message of the last failure on this thread, or "" when none. */
VD_API const char* vd_last_error(void);
/* Position of the last parse error (1-based), or 0. */
VD_API size_t vd_last_error_line(void);
VD_API size_t vd_last_error_column(void);

VD_API const char* vd_status_name(vd_status status);
VD_API const char* vd_version(void);

#ifdef __cplusplus
}
#endif

#endif
