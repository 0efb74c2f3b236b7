#ifndef GKMLOC_H
#define GKMLOC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Exact GKM localization engine, C interface.  All objects are opaque
 * handles; all functions return an error code and write results through out
 * parameters.  Strings returned through char** are owned by the caller and
 * must be released with gkm_string_free. */

typedef struct gkm_graph gkm_graph;

enum {
  GKM_OK = 0,           /* success, all asserted checks passed */
  GKM_ERR_CHECK = 1,    /* a verification failed (output still produced) */
  GKM_ERR_INVALID = 2,  /* bad argument, unknown builder, malformed input */
  GKM_ERR_MATH = 3      /* arithmetic or degeneracy abort */
};

enum {
  GKM_MODE_UNTWISTED = 0,
  GKM_MODE_COTANGENT = 1
};

/* ---- graphs ---- */

/* builder spec: "pn:<n>" or "slflag:<n>" */
int gkm_graph_builder(const char* spec, gkm_graph** out);
/* text format: header "rank m picard r", then "v <id>" and
 * "e <v> <v'> <monomial> <class vector>" lines */
int gkm_graph_parse(const char* text, gkm_graph** out);
int gkm_graph_serialize(const gkm_graph* g, char** out);
/* GKM_OK when the graph satisfies the GKM conditions, GKM_ERR_CHECK with a
 * report otherwise */
int gkm_graph_validate(const gkm_graph* g, char** report);
/* vertex id by name ("e" accepted for flag manifolds); -1 when absent */
int gkm_graph_find_vertex(const gkm_graph* g, const char* name);
void gkm_graph_free(gkm_graph* g);

/* ---- computations; every *_json output embeds the schema version ---- */

/* tree enumeration: cohomological trees and their sectored K-trees */
int gkm_trees_json(const gkm_graph* g, int root, const long* degree,
                   size_t ndeg, char** json_out);
int gkm_trees_dot(const gkm_graph* g, int root, const long* degree, size_t ndeg,
                  char** dot_out);

/* per-tree contributions (with provenance when per_tree != 0) and the
 * normalized total */
int gkm_contrib_json(const gkm_graph* g, int root, const long* degree,
                     size_t ndeg, int mode, int per_tree, int jobs,
                     char** json_out);

/* J-function terms for all degrees up to cap (componentwise); oracle != 0
 * additionally compares against the closed hypergeometric form (projective
 * space builders only).  Returns GKM_ERR_CHECK when an oracle comparison
 * fails. */
int gkm_jfun_json(const gkm_graph* g, int root, int mode, const long* cap,
                  size_t ncap, int oracle, int jobs, char** json_out);

/* adelic verification: edge residue recursion for all edges at root, all
 * cover multiplicities and sectors within cap, plus no-regular-part and
 * pole-locus verdicts.  GKM_ERR_CHECK when any check fails. */
int gkm_verify_adelic_json(const gkm_graph* g, int root, int mode,
                           const long* cap, size_t ncap, int jobs,
                           char** json_out);

/* balancedness of the J-terms up to cap; on failure the report carries a
 * witness direction.  GKM_ERR_CHECK when any term is unbalanced. */
int gkm_balance_json(const gkm_graph* g, int root, int mode, const long* cap,
                     size_t ncap, int jobs, char** json_out);

/* per-tree growth table: exact and predicted newton degrees along the given
 * directions ("2,-1,-1;1,1,-2"); dirs may be NULL for a deterministic
 * sample */
int gkm_asymptotics_json(const gkm_graph* g, int root, int mode,
                         const long* degree, size_t ndeg, const char* dirs,
                         char** json_out);

/* ---- plumbing ---- */

const char* gkm_schema_version(void);
/* thread-local message for the last failing call */
const char* gkm_last_error(void);
void gkm_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* GKMLOC_H */
