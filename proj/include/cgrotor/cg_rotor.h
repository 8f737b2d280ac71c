/* C interface to the Clebsch-Gordan rotor library.
 *
 * All computations run behind an opaque context that carries the backend
 * selection ("exact" radical arithmetic or "float" doubles) and the weight
 * cap.  Operations return serialized results (JSON, plain text or LaTeX)
 * as heap strings owned by the caller; release them with cgr_string_free.
 * On failure the return code is nonzero and cgr_last_error gives a
 * diagnostic message.
 */
#ifndef CGROTOR_CG_ROTOR_H
#define CGROTOR_CG_ROTOR_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cgr_status {
  CGR_OK = 0,
  CGR_ERR_DOMAIN = 1,   /* invalid weights, angles, tensors, divisors, ... */
  CGR_ERR_VERIFY = 2,   /* oracle comparison reported a mismatch */
  CGR_ERR_INTERNAL = 3, /* invariant violation inside an algorithm */
  CGR_ERR_USAGE = 64    /* malformed request */
} cgr_status;

typedef struct cgr_context cgr_context;

cgr_context* cgr_context_new(void);
void cgr_context_free(cgr_context* ctx);

/* backend: "exact" (default) or "float" */
cgr_status cgr_set_backend(cgr_context* ctx, const char* backend);
/* Cap on representation weights, guarding factorial growth; default 12. */
cgr_status cgr_set_max_weight(cgr_context* ctx, int max_weight);

/* Message for the most recent failure on this context; valid until the
 * next call on the same context. */
const char* cgr_last_error(const cgr_context* ctx);

void cgr_string_free(char* s);

/* Clebsch-Gordan family {G^n} (basis "h") or {C^n} (basis "e") for the
 * weight pair (n1, n2).  n selects one decomposition weight, or pass -1
 * for every admissible N.  format: "json", "text" or "latex". */
cgr_status cgr_cg_family(cgr_context* ctx, int n1, int n2, int n,
                         const char* basis, const char* format, char** out);

/* Representation matrix of the rotation about a coordinate axis
 * ("m1", "0", "p1") by an angle given as "pi/2", "2pi/3", "-pi/6", or
 * degrees ("90", "30.5").  The exact backend requires multiples of pi/6
 * or pi/4. */
cgr_status cgr_rep(cgr_context* ctx, int weight, const char* axis,
                   const char* angle, const char* format, char** out);

/* Cross-check of all families with N1, N2 <= max_weight against the
 * Racah-formula evaluation.  Returns CGR_ERR_VERIFY if any family
 * mismatches; *out carries the per-family report table (JSON). */
cgr_status cgr_verify(cgr_context* ctx, int max_weight, char** out);

/* Material-parameter reduction for a crystal system preset:
 * triclinic | monoclinic | rhombic | tetragonal | trigonal | hexagonal |
 * cubic | isotropic. */
cgr_status cgr_crystal_system(cgr_context* ctx, const char* system, char** out);

/* Reduction for explicit generators:
 * {"generators": [ [[..],[..],[..]], ... ]} with exact entries (integers
 * or {"num","den","rad"} / {"terms": [...]} objects). */
cgr_status cgr_crystal_generators(cgr_context* ctx, const char* generators_json,
                                  char** out);

/* Deviator decomposition and the five quadratic invariants.
 * input: {"tensor": [[..3x3..]]} or {"p": sc, "s": [5 scalars]}, plus
 * optional {"coeffs": {"c1","c2","a","b","d"}} (defaults: c1 = c2 = 1,
 * a = b = d = 0). */
cgr_status cgr_invariants(cgr_context* ctx, const char* input_json, char** out);

/* Assembled invariant elasticity system.
 * params: {"lambda": num, "mu": num, "density": num} for an isotropic
 * material, or {"density": num, "coeffs": {...}} for explicit
 * coefficients. */
cgr_status cgr_elasticity_assemble(cgr_context* ctx, const char* params_json,
                                   char** out);

/* Plane-wave characteristic speeds.
 * params: as for assemble, plus {"direction": [x, y, z]} (normalized
 * internally). */
cgr_status cgr_elasticity_speeds(cgr_context* ctx, const char* params_json,
                                 char** out);

#ifdef __cplusplus
}
#endif

#endif /* CGROTOR_CG_ROTOR_H */
