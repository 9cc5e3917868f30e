#ifndef WONDER_C_H
#define WONDER_C_H

/* C interface to the wonderful-model combinatorics library.
 * All functions return a status; on failure, wonder_last_error() holds a
 * human-readable message (thread-local). Strings returned through char**
 * out-parameters are heap-allocated and must be released with
 * wonder_string_free(). Handles must be released with their _free pair. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wonder_status {
  WONDER_OK = 0,
  WONDER_ERR_DOMAIN = 1,   /* a checked property failed; witness in error */
  WONDER_ERR_BAD_INPUT = 2 /* malformed input or unusable argument */
} wonder_status;

const char* wonder_last_error(void);
void wonder_string_free(char* s);

/* ---- lattices ---- */

typedef struct wonder_lattice wonder_lattice;

/* Parse canonical lattice JSON (elements + covers, optional codim/building).
 * Validates that the covers describe a finite meet-semilattice. */
wonder_status wonder_lattice_from_json(const char* json, wonder_lattice** out);
/* kind: "partition" (2<=n<=7) or "boolean". */
wonder_status wonder_lattice_standard(const char* kind, int n,
                                      wonder_lattice** out);
void wonder_lattice_free(wonder_lattice* l);
wonder_status wonder_lattice_to_json(const wonder_lattice* l, char** out_json);
/* {"elements":N,"atoms":K,"has_top":bool,"mobius":"..."} — mobius is the
 * bottom-to-top Mobius value when a top exists. */
wonder_status wonder_lattice_stats(const wonder_lattice* l, char** out_json);

/* ---- building sets and nested sets ----
 * spec: "min", "max", or a comma-separated list of element labels. */

wonder_status wonder_building_min(const wonder_lattice* l, char** out_json);
/* {"ok":bool,"witness":"...","factors":{...}} */
wonder_status wonder_building_check(const wonder_lattice* l, const char* spec,
                                    char** out_json);
wonder_status wonder_building_enumerate(const wonder_lattice* l,
                                        char** out_json);
/* Canonical complex JSON of the nested-set complex. strip_top: delete every
 * maximal lattice element from the result (keep the faces avoiding them). */
wonder_status wonder_nested_complex(const wonder_lattice* l, const char* spec,
                                    int strip_top, char** out_json);

/* ---- blowups ---- */

wonder_status wonder_blowup_element(const wonder_lattice* l, const char* label,
                                    wonder_lattice** out);
/* order: comma-separated labels or NULL for the default (rank-descending)
 * order. verify: additionally check the result against the face poset of the
 * nested-set complex (DOMAIN failure if they differ). */
wonder_status wonder_resolve(const wonder_lattice* l, const char* spec,
                             const char* order, int verify,
                             wonder_lattice** out);

/* ---- nested-set algebra ----
 * what: "presentation" | "groebner" | "basis" | "hilbert".
 * doubled: report degrees doubled (cohomological grading) in text output. */
wonder_status wonder_algebra(const wonder_lattice* l, const char* spec,
                             const char* what, int doubled, char** out_text);

/* ---- fans ---- */

/* Text export of the nested-set fan; verify: run the pairwise intersection
 * check first (DOMAIN failure with witness if it fails). */
wonder_status wonder_fan(const wonder_lattice* l, const char* spec, int verify,
                         char** out_text);

/* ---- subspace arrangements ---- */

typedef struct wonder_arrangement wonder_arrangement;

wonder_status wonder_arrangement_from_json(const char* json,
                                           wonder_arrangement** out);
void wonder_arrangement_free(wonder_arrangement* a);
wonder_status wonder_arrangement_to_json(const wonder_arrangement* a,
                                         char** out_json);
wonder_status wonder_braid(int n, wonder_arrangement** out);
/* Intersection lattice as lattice JSON with a codim map. */
wonder_status wonder_arrangement_lattice(const wonder_arrangement* a,
                                         char** out_json);
wonder_status wonder_truncate(const wonder_arrangement* a, int k,
                              wonder_arrangement** out);

/* ---- group actions ---- */

/* cycles: generators in cycle notation, e.g. "(1 2),(1 2 3 4)".
 * Returns the audit report as JSON. */
wonder_status wonder_abelianize(const char* cycles, int dim, int samples,
                                unsigned long long seed, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* WONDER_C_H */
