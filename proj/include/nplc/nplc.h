/* Part of the nplc project, under the Apache License v2.0.
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the nplc library: exact Newton-polyhedral analysis of
 * hypersurface singularities. All objects are opaque handles; every
 * structured result is a JSON document in a heap string owned by the
 * caller (release with nplc_string_free). Functions never throw; errors
 * come back as status codes with a thread-local message available via
 * nplc_last_error().
 */

#ifndef NPLC_H
#define NPLC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nplc_status {
    NPLC_OK = 0,
    NPLC_VERIFICATION_FAILED = 1, /* a mathematical check came back negative */
    NPLC_ERROR_INVALID = 2,       /* bad arguments or contract violation */
    NPLC_ERROR_PARSE = 3,         /* unreadable polynomial / JSON input */
    NPLC_ERROR_LIMIT = 4,         /* enumeration or subdivision cap exceeded */
    NPLC_ERROR_INTERNAL = 5
} nplc_status;

typedef struct nplc_poly nplc_poly;
typedef struct nplc_newton nplc_newton;
typedef struct nplc_fan nplc_fan;

const char* nplc_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char* nplc_last_error(void);

void nplc_string_free(char* s);

/* ---- polynomials (exact rational coefficients) ------------------------- */

/* Parses sums/products/powers in variables x1..xn, e.g.
 * "x1^2+2*x1*x2+x2^2+x3^3" or "(x1+x2)^2+x3^3". */
nplc_status nplc_poly_parse(const char* text, int nvars, nplc_poly** out);

/* {"nvars": n, "terms": [{"coeff": "p/q", "exp": [a1,...,an]}]} */
nplc_status nplc_poly_from_json(const char* json, nplc_poly** out);

char* nplc_poly_to_json(const nplc_poly* p);
char* nplc_poly_to_text(const nplc_poly* p);
int nplc_poly_nvars(const nplc_poly* p);

/* 1 when every coordinate axis carries a monomial of p, else 0. */
int nplc_poly_axis_condition(const nplc_poly* p);

void nplc_poly_free(nplc_poly* p);

/* ---- Newton polyhedron -------------------------------------------------- */

nplc_status nplc_newton_build(const nplc_poly* f, nplc_newton** out);

/* {"vertices": [[...]], "facets": [{"normal": [...], "height": c,
 *  "compact": bool}]} */
char* nplc_newton_to_json(const nplc_newton* np);

/* Half-space description of the axis relaxation Delta_1. */
nplc_status nplc_newton_delta1_json(const nplc_newton* np, int axis, char** out_json);

/* point: comma-separated exact rationals, e.g. "1,3/2,0".
 * dilation: exact rational >= 0. */
nplc_status nplc_newton_member(const nplc_newton* np, const char* point, const char* dilation, int* out_member);

/* Largest a with point in a*Delta, as a rational string. */
nplc_status nplc_newton_filtration_value(const nplc_newton* np, const char* point, char** out_value);

void nplc_newton_free(nplc_newton* np);

/* ---- fans ---------------------------------------------------------------- */

nplc_status nplc_fan_dual(const nplc_newton* np, nplc_fan** out);

/* Unimodular refinement with the same support; deterministic. */
nplc_status nplc_fan_regularize(const nplc_fan* fan, nplc_fan** out);

/* {"dim": n, "rays": [[...]], "cones": [[ray indices]]} */
nplc_status nplc_fan_from_json(const char* json, nplc_fan** out);
char* nplc_fan_to_json(const nplc_fan* fan);

/* 1 / 0; -1 on error. */
int nplc_fan_is_regular(const nplc_fan* fan);
int nplc_fan_refines(const nplc_fan* fine, const nplc_fan* coarse);

void nplc_fan_free(nplc_fan* fan);

/* ---- command-level entry points ----------------------------------------- */

/* command: "newton" | "resolve" | "check" | "extend". config_json carries
 * the same fields the CLI exposes; the report embeds tool version, the
 * interpreted config and the seed, and is byte-stable for a fixed seed.
 * Returns NPLC_OK, NPLC_VERIFICATION_FAILED, or an error status; a report
 * is produced in the first two cases and for input errors. */
nplc_status nplc_run(const char* command, const char* config_json, char** out_report_json);

#ifdef __cplusplus
}
#endif

#endif /* NPLC_H */
