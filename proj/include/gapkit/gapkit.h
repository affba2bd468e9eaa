#ifndef GAPKIT_H
#define GAPKIT_H

/*
 * C interface to the gapkit core. Conventions:
 *
 *   - Every fallible function returns gk_status. Out parameters are written
 *     only on GK_OK; on failure gk_last_error() holds a message (thread
 *     local, valid until the next gapkit call on the same thread).
 *   - Objects live behind opaque handles. Free each with its gk_*_free; the
 *     free functions accept NULL.
 *   - Strings produced by the library (char** out parameters) are owned by
 *     the caller and released with gk_string_free.
 *   - Where a parameter is documented as "0 = default", passing 0 selects
 *     the library's built-in budget or cap.
 *   - Rationals travel as separate int64 numerator / denominator pairs and
 *     come out normalized with a positive denominator.
 *
 * Instances are immutable once built (gk_xor_add is only valid before the
 * first read), so sharing handles across reader threads is safe.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gk_status {
    GK_OK = 0,
    GK_ERROR = 1,    /* unclassified failure                    */
    GK_EINVAL = 2,   /* invalid argument or malformed handle    */
    GK_EPARSE = 3,   /* text or JSON input rejected             */
    GK_EIO = 4,      /* file could not be read or written       */
    GK_EBUDGET = 5,  /* size/weight budget exceeded, refused    */
} gk_status;

const char* gk_last_error(void);
void gk_string_free(char* s);
const char* gk_version(void);

typedef struct gk_xor gk_xor;       /* 3-variable parity system            */
typedef struct gk_cnf gk_cnf;       /* 3-literal clause system             */
typedef struct gk_graph gk_graph;   /* weighted undirected graph           */
typedef struct gk_lc gk_lc;         /* label cover game                    */
typedef struct gk_struct gk_struct; /* finite relational structure         */

void gk_xor_free(gk_xor* s);
void gk_cnf_free(gk_cnf* s);
void gk_graph_free(gk_graph* g);
void gk_lc_free(gk_lc* lc);
void gk_struct_free(gk_struct* a);

/* ---- parity systems ---------------------------------------------------- */

gk_status gk_xor_new(int nvars, gk_xor** out);
/* Adds mult copies of x[a]+x[b]+x[c] = rhs; indices distinct, rhs in {0,1}. */
gk_status gk_xor_add(gk_xor* s, int a, int b, int c, int rhs, uint64_t mult);
/* Text format: "p xor <n> <m>" then "<i> <j> <k> <b> <mult>" per line.      */
gk_status gk_xor_parse(const char* text, gk_xor** out);
gk_status gk_xor_write(const gk_xor* s, char** out);
int gk_xor_nvars(const gk_xor* s);
uint64_t gk_xor_size(const gk_xor* s);
uint64_t gk_xor_total_weight(const gk_xor* s);

/* DIMACS cnf; multiplicity by clause repetition. */
gk_status gk_cnf_parse(const char* text, gk_cnf** out);
gk_status gk_cnf_write(const gk_cnf* s, char** out);
int gk_cnf_nvars(const gk_cnf* s);
uint64_t gk_cnf_size(const gk_cnf* s);
uint64_t gk_cnf_total_weight(const gk_cnf* s);

/* ---- graphs ------------------------------------------------------------ */

/* Text format: "p edge <n> <m>", "e <u> <v>" lines, optional "w <v> <wt>". */
gk_status gk_graph_parse(const char* text, gk_graph** out);
gk_status gk_graph_write(const gk_graph* g, char** out);
int gk_graph_n(const gk_graph* g);
uint64_t gk_graph_ecount(const gk_graph* g);
uint64_t gk_graph_total_weight(const gk_graph* g);

/* ---- label covers ------------------------------------------------------ */

/* JSON: {m,n,p,q, entries:[{u,v,w,pi:[b per a]}], flags:{...}}; the flags
 * block is recomputed on load and a mismatch is a parse error. */
gk_status gk_lc_parse(const char* text, gk_lc** out);
gk_status gk_lc_write(const gk_lc* lc, char** out);
int gk_lc_m(const gk_lc* lc);
int gk_lc_n(const gk_lc* lc);
int gk_lc_p(const gk_lc* lc);
int gk_lc_q(const gk_lc* lc);
uint64_t gk_lc_entries(const gk_lc* lc);
uint64_t gk_lc_w0(const gk_lc* lc);
/* JSON object of the five structural flags. */
gk_status gk_lc_flags(const gk_lc* lc, char** out);

/* ---- generators (seed-deterministic) ------------------------------------ */

/* Random 3-occurrence system: m = r*n equations, each a uniform 3-subset of
 * the variables, uniform right-hand sides. */
gk_status gk_gen_xor(int n, int r, uint64_t seed, gk_xor** out);
/* Gap pair: seed system S, easy = G(S^0) (satisfiable), hard = G(S). epsilon
 * is the recorded target (metadata only). Any of the three handle outs may
 * be NULL. report holds a JSON summary (opt fractions when brute-forced,
 * k-local satisfiability when k_check > 0). */
gk_status gk_gen_gap_pair(int n, int r, int64_t eps_num, int64_t eps_den, int k_check,
                          uint64_t seed, int brute_cap, gk_xor** seed_system, gk_xor** easy,
                          gk_xor** hard, char** report);
gk_status gk_gen_regular(int n, int d, uint64_t seed, gk_graph** out);
gk_status gk_gen_regular_bipartite(int m, int d, uint64_t seed, gk_graph** out);

/* ---- instance transformations ------------------------------------------ */

/* CFI-style doubling: x_j^a at index 2j+a, eight twisted equations per
 * original equation. */
gk_status gk_gadget(const gk_xor* s, gk_xor** out);
/* Same left-hand sides with zeroed right-hand sides. */
gk_status gk_homogeneous(const gk_xor* s, gk_xor** out);
/* Four clauses per equation; max satisfied = 3m + m*. */
gk_status gk_xor_to_cnf(const gk_xor* s, gk_cnf** out);
/* Equations vs variables projection game with A = {000,011,101,110}. */
gk_status gk_bipartite_reduction(const gk_xor* s, gk_lc** out);
/* t-fold parallel repetition; budgets 0 = default. */
gk_status gk_parallel_repetition(const gk_lc* lc, int t, uint64_t max_entries,
                                 uint64_t max_labels, uint64_t max_pairs, gk_lc** out);

/* Long-code tests over a projection game. stats (nullable) receives a JSON
 * object: per-entry emitted/dropped multiplicities, the dropped totals, and
 * the residue (collapsed mass that cannot live in a three-distinct-variable
 * system, consolidated per unary parity / two-literal clause). */
gk_status gk_longcode_xor(const gk_lc* lc, int64_t eps_num, int64_t eps_den,
                          uint64_t max_vars, uint64_t max_work, gk_xor** out, char** stats);
gk_status gk_longcode_sat_single(const gk_lc* lc, int64_t eps_num, int64_t eps_den,
                                 uint64_t max_vars, uint64_t max_work, gk_cnf** out,
                                 char** stats);
gk_status gk_longcode_sat(const gk_lc* lc, int64_t delta_num, int64_t delta_den,
                          uint64_t max_vars, uint64_t max_work, gk_cnf** out, char** stats);
/* Variable-name sidecar: one "<index> <name>" line per long-code variable. */
gk_status gk_longcode_names(const gk_lc* lc, char** out);

/* FGLSS conflict graph; vc = 4m - m* for parity input. max_vertices 0 = default. */
gk_status gk_fglss(const gk_xor* s, uint64_t max_vertices, gk_graph** out);
/* Conflict graph of a projection game; independence number m iff satisfiable. */
gk_status gk_labelcover_to_graph(const gk_lc* lc, uint64_t max_vertices, gk_graph** out);
/* Block-test graph over a co-partite input; bias = N/M, block size 2*l1*psize. */
gk_status gk_dinur_safra(const gk_graph* g, int64_t bias_num, int64_t bias_den, int l1,
                         uint64_t max_vertices, uint64_t max_edges, gk_graph** out);
/* Expand vertex weights into unit copies; preserves cover weight exactly. */
gk_status gk_unweight(const gk_graph* g, uint64_t max_vertices, uint64_t max_edges,
                      gk_graph** out);

/* Composed pipelines from a parity system. Every out is nullable; stage
 * failures carry the stage name in gk_last_error(). */
gk_status gk_pipeline_xor(const gk_xor* s, int t, int64_t eps_num, int64_t eps_den,
                          gk_lc** bipartite, gk_lc** repeated, gk_xor** system, char** stats);
gk_status gk_pipeline_sat(const gk_xor* s, int t, int64_t delta_num, int64_t delta_den,
                          gk_lc** bipartite, gk_lc** repeated, gk_cnf** system, char** stats);
gk_status gk_pipeline_sat_single(const gk_xor* s, int t, int64_t eps_num, int64_t eps_den,
                                 gk_lc** bipartite, gk_lc** repeated, gk_cnf** system,
                                 char** stats);
gk_status gk_pipeline_vc(const gk_xor* s, int t, int64_t bias_num, int64_t bias_den, int l1,
                         gk_lc** bipartite, gk_lc** repeated, gk_graph** conflict,
                         gk_graph** blocks, gk_graph** unweighted);

/* ---- relational structures and games ------------------------------------ */

typedef enum gk_encoding {
    GK_ENCODING_FIRST = 1,  /* variables + constraint elements, E1/E2/E3, Z_R */
    GK_ENCODING_SECOND = 2, /* variables only, one ternary relation per R     */
} gk_encoding;

typedef enum gk_lang {
    GK_LANG_XOR3 = 0,
    GK_LANG_SAT3 = 1,
} gk_lang;

gk_status gk_xor_encode(const gk_xor* s, gk_encoding enc, gk_struct** out);
gk_status gk_cnf_encode(const gk_cnf* s, gk_encoding enc, gk_struct** out);
gk_status gk_language_structure(gk_lang lang, gk_encoding enc, gk_struct** out);
gk_status gk_graph_structure(const gk_graph* g, gk_struct** out);
int gk_struct_n(const gk_struct* a);

#define GK_SPOILER 0
#define GK_DUPLICATOR 1

/* winner gets GK_SPOILER or GK_DUPLICATOR; live/total count game positions
 * (nullable). max_positions 0 = default. */
gk_status gk_existential_game(const gk_struct* a, const gk_struct* b, int k,
                              uint64_t max_positions, int* winner, uint64_t* live,
                              uint64_t* total);
gk_status gk_bijective_game(const gk_struct* a, const gk_struct* b, int k,
                            uint64_t max_positions, int* winner, uint64_t* live,
                            uint64_t* total);

/* Verdict plus the deletion-record certificate as JSON; "verified" reports an
 * independent replay audit of the records. bijective: 0 or 1. */
gk_status gk_game_certificate(const gk_struct* a, const gk_struct* b, int k, int bijective,
                              uint64_t max_positions, char** out);

gk_status gk_xor_k_locally_satisfiable(const gk_xor* s, int k, gk_encoding enc,
                                       uint64_t max_positions, int* out);
gk_status gk_cnf_k_locally_satisfiable(const gk_cnf* s, int k, gk_encoding enc,
                                       uint64_t max_positions, int* out);

/* Stable partition as JSON: {classes:[[v,...],...], delta:[[c,...],...]}. */
gk_status gk_color_refinement(const gk_graph* g, char** out);
gk_status gk_c2_equivalent(const gk_graph* g, const gk_graph* h, int* out);
/* k-dimensional WL on graphs, k <= 3; matches the bijective (k+1)-game. */
gk_status gk_wl_equivalent(const gk_graph* g, const gk_graph* h, int k,
                           uint64_t max_tuples, int* out);

/* ---- exact oracles ------------------------------------------------------ */

/* Exhaustive maximum satisfied weight. cap bounds the variable count
 * (0 = default), jobs <= 0 means 1. witness (nullable) is the
 * lexicographically least optimal assignment as a 0/1 string. */
gk_status gk_max_xor(const gk_xor* s, int cap, int jobs, uint64_t* value, uint64_t* total,
                     char** witness);
gk_status gk_max_cnf(const gk_cnf* s, int cap, int jobs, uint64_t* value, uint64_t* total,
                     char** witness);
/* F2 elimination, no cap. */
gk_status gk_xor_satisfiable(const gk_xor* s, int* out);

/* Exact label-cover optimum; witness JSON {f:[...], g:[...]} (nullable). */
gk_status gk_labelcover_opt(const gk_lc* lc, uint64_t cap, int64_t* num, int64_t* den,
                            char** witness);

/* Weighted branch-and-bound; value is the optimal weight, total the graph
 * weight, witness (nullable) a JSON array of vertices. cap 0 = default. */
gk_status gk_min_vc(const gk_graph* g, int cap, uint64_t* value, uint64_t* total,
                    char** witness);
gk_status gk_max_is(const gk_graph* g, int cap, uint64_t* value, uint64_t* total,
                    char** witness);
/* Largest-weight set with no induced h-clique; h = 2 is max_is. */
gk_status gk_max_hclique_free(const gk_graph* g, int h, int cap, uint64_t* value,
                              uint64_t* total, char** witness);

/* ---- refinement-based vertex cover approximation ------------------------ */

/* v = p + q with vc <= v <= 2 vc, C2-invariant. report (nullable) is a JSON
 * object with the class decomposition and quotient data. */
gk_status gk_v_invariant(const gk_graph* g, int cap, uint64_t* v, uint64_t* p, uint64_t* q,
                         char** report);
/* C2-equivalent pair with vc(G) > vc(H) = m; any out may be NULL. */
gk_status gk_c2_gap_witness(int m, uint64_t seed, int max_attempts, gk_graph** g,
                            gk_graph** h, uint64_t* vc_g, uint64_t* vc_h);

/* ---- verification recipes ----------------------------------------------- */

/* Newline-joined list of recipe names. */
gk_status gk_recipe_names(char** out);
/* Runs one recipe; pass gets 0/1, report the key=value text block. */
gk_status gk_run_recipe(const char* name, uint64_t seed, int jobs, int* pass, char** report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GAPKIT_H */
