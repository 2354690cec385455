#ifndef ODDGON_H
#define ODDGON_H

#include <stddef.h>
#include <stdint.h>

#if defined(ODDGON_BUILDING)
#define ODDGON_API __attribute__((visibility("default")))
#else
#define ODDGON_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum oddgon_status {
    ODDGON_OK = 0,
    ODDGON_INVALID_ARGUMENT = 1,
    ODDGON_UNSUPPORTED_SURFACE = 2,
    ODDGON_CORNER_HIT = 3,
    ODDGON_INVALID_PATH = 4,
    ODDGON_VERIFICATION_FAILED = 5,
    ODDGON_INTERNAL = 6
} oddgon_status;

/* Double regular n-gon surface, n odd and >= 5. */
typedef struct oddgon_surface oddgon_surface;

/* Library version, e.g. "1.0.0". Static storage. */
ODDGON_API const char* oddgon_version(void);

/* Message for the last failing call on this thread; "" after a success. */
ODDGON_API const char* oddgon_last_error(void);

/* Frees any char* returned through an out parameter. NULL is ignored. */
ODDGON_API void oddgon_string_free(char* s);

ODDGON_API oddgon_status oddgon_surface_create(int n, oddgon_surface** out);
ODDGON_API void oddgon_surface_destroy(oddgon_surface* surface);
ODDGON_API int oddgon_surface_n(const oddgon_surface* surface);

/* Surface geometry and edge gluing as JSON. */
ODDGON_API oddgon_status oddgon_surface_json(const oddgon_surface* surface, char** out_json);

/* Start on `edge` ("S3" or a letter alias) of `polygon` ("upper"/"lower",
 * NULL for upper) at parameter t in (0, 1), heading theta radians. */
typedef struct oddgon_trace_params {
    const char* edge;
    const char* polygon;
    double t;
    double theta;
    size_t crossings;
    double delta; /* corner tolerance; <= 0 selects the default */
} oddgon_trace_params;

ODDGON_API oddgon_status oddgon_trace_json(const oddgon_surface* surface, const oddgon_trace_params* params,
                                           char** out_json);

/* Trajectory JSON plus the primed crossings and derived letters. Directions
 * outside [0, pi/n) are rotated into that sector first. */
ODDGON_API oddgon_status oddgon_derive_geometric_json(const oddgon_surface* surface,
                                                      const oddgon_trace_params* params, char** out_json);

/* Combinatorial derivation of `sequence` ("BECE", "S2 S5 S3 S5").
 * method: "ksl" or "diagram". */
ODDGON_API oddgon_status oddgon_derive_json(const oddgon_surface* surface, const char* sequence, int cyclic,
                                            const char* method, char** out_json);

/* Plain derived letters of a ksl derivation, "" when empty. */
ODDGON_API oddgon_status oddgon_derive_text(const oddgon_surface* surface, const char* sequence, int cyclic,
                                            char** out_text);

/* stage: "arrows", "augmented", "dual" or "primed"; format: "json" or "dot". */
ODDGON_API oddgon_status oddgon_diagram(const oddgon_surface* surface, const char* stage, const char* format,
                                        char** out);

/* Vertex guide, cylinder decomposition, shear and reassembly residuals. */
ODDGON_API oddgon_status oddgon_guide_json(const oddgon_surface* surface, double tol, char** out_json);

typedef struct oddgon_verify_params {
    int n;
    double tol;
    const char* checks; /* comma separated; NULL or "" runs every check */
    uint64_t seed;
    int samples;
} oddgon_verify_params;

/* Writes the report even when a check fails; that case returns
 * ODDGON_VERIFICATION_FAILED. ODDGON_PRECISION=extended selects the
 * 100-digit oracles. */
ODDGON_API oddgon_status oddgon_verify_json(const oddgon_verify_params* params, char** out_json);

/* Unit-square torus. Give slope_q > 0 for slope p/q, else theta is used. */
typedef struct oddgon_torus_params {
    int slope_p;
    int slope_q;
    double theta;
    double start_x;
    double start_y;
    size_t crossings;
    double delta;
} oddgon_torus_params;

/* action: "trace" (trajectory) or "derive" (rule and geometric words). */
ODDGON_API oddgon_status oddgon_torus_json(const char* action, const oddgon_torus_params* params, char** out_json);

/* SVG of the polygons; `trace` (nullable) adds a trajectory, `with_guide`
 * adds the vertex guide dots. */
ODDGON_API oddgon_status oddgon_render_svg(const oddgon_surface* surface, const oddgon_trace_params* trace,
                                           int with_guide, char** out_svg);

#ifdef __cplusplus
}
#endif

#endif
