/* tropc: lattice-path and subfloor-diagram curve counting.
 *
 * All functions return a status code; results come back through out
 * parameters. Returned strings are heap-allocated; release them with
 * tc_string_free. On failure, tc_last_error() describes the problem for the
 * calling thread. Handles are opaque and freed with their matching _free.
 */
#ifndef TROPC_H
#define TROPC_H

#ifdef __cplusplus
extern "C" {
#endif

#define TC_OK 0           /* success */
#define TC_DISAGREEMENT 1 /* the two counting methods disagree */
#define TC_INVALID 2      /* invalid input or unsupported parameters */
#define TC_INTERNAL 3     /* internal invariant violation */

typedef struct tc_polygon tc_polygon;
typedef struct tc_beta tc_beta;
typedef struct tc_path tc_path;

/* Last error message of the current thread; empty string when none. */
const char* tc_last_error(void);
void tc_string_free(char* s);

/* JSON: {"vertices": [[x,y],...]} */
int tc_polygon_parse(const char* json_text, tc_polygon** out);
void tc_polygon_free(tc_polygon* polygon);

/* JSON: {"beta": {"<edge index or bottom/top/left/right>": [b1,...], ...}};
 * validated against the polygon's per-edge lattice lengths. */
int tc_beta_parse(const tc_polygon* polygon, const char* json_text, tc_beta** out);
void tc_beta_free(tc_beta* beta);

/* JSON: {"points": [[x,y],...]} */
int tc_path_parse(const char* json_text, tc_path** out);
void tc_path_free(tc_path* path);

/* Multiplicity of the path, as a decimal string. */
int tc_multiplicity(const tc_polygon* polygon, const tc_beta* beta, const tc_path* path,
                    char** out_value);

/* Total count of paths of length |beta| + genus - 1, with multiplicity.
 * threads <= 0 uses all cores; pruning != 0 enables rectangle pruning. */
int tc_count(const tc_polygon* polygon, const tc_beta* beta, long long genus, int threads,
             int pruning, char** out_value);

/* JSON: {"count": n, "total": "...", "paths": [{"points": [...], "multiplicity":
 * "..."}, ...]} listing every nonzero-multiplicity path in enumeration order. */
int tc_nonzero_paths(const tc_polygon* polygon, const tc_beta* beta, long long genus,
                     int threads, char** out_json);

/* Curve count in P1xP1 for comma-separated partitions, e.g. mu1="2",
 * mu2="1,1". method is "lattice", "subfloor" or "both"; with "both" the two
 * values are compared and TC_DISAGREEMENT is returned if they differ.
 * JSON: {"lattice": "...", "subfloor": "...", "agree": true} (keys present
 * per method). Note the two methods count slightly different things: the
 * lattice-path count includes curves that split off extra fiber components
 * (possibly-disconnected curves), while the subfloor count is
 * connected-only. They agree exactly when no such splitting fits the point
 * budget. */
int tc_p1p1(const char* mu1, const char* mu2, const char* nu1, const char* nu2,
            long long genus, const char* method, int threads, char** out_json);

/* Polynomiality scan. template_json follows
 * {"mu1": [...], "mu2": [...], "nu1": [...], "nu2": [...]} with integer or
 * expression entries ("n1+n2"). ranges is "n1=1..3,n2=1..3". degree_bound < 0
 * picks |mu1| + 2. Returns the full scan report as JSON. */
int tc_polyscan(const char* template_json, const char* ranges, int degree_bound,
                long long genus, const char* method, int threads, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* TROPC_H */
