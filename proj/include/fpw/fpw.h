/*
 * C interface to the fpw group-presentation workbench.
 *
 * Conventions
 *   - Every function returns an fpw_status. On failure a message is kept in
 *     thread-local storage and can be read with fpw_last_error().
 *   - Strings returned through `char** out` are heap allocated by the
 *     library and must be released with fpw_string_free().
 *   - Handles are opaque and released with their matching *_free function.
 *     Passing NULL to a *_free function is allowed.
 *   - Budgeted searches that run out of budget return FPW_EXHAUSTED; this is
 *     a verdict, not an error, and outputs such as step counts stay valid.
 *   - Structured results (certificates, witnesses, move logs) are JSON text.
 *   - Baumslag-Solitar parameters m and n are decimal strings so that large
 *     values are accepted.
 */
#ifndef FPW_FPW_H
#define FPW_FPW_H

#include <stddef.h>
#include <stdint.h>

#if defined(FPW_BUILDING_LIBRARY)
#define FPW_API __attribute__((visibility("default")))
#else
#define FPW_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fpw_status {
  FPW_OK = 0,
  FPW_ERR_PARSE = 1,
  FPW_ERR_DUPLICATE_GENERATOR = 2,
  FPW_ERR_UNKNOWN_GENERATOR = 3,
  FPW_ERR_ALPHABET_MISMATCH = 4,
  FPW_ERR_FOREIGN_GENERATOR = 5,
  FPW_ERR_EMPTY_ALPHABET = 6,
  FPW_ERR_INDEX_OUT_OF_RANGE = 7,
  FPW_ERR_INVALID_CERTIFICATE = 8,
  FPW_ERR_GENERATOR_NAME_CLASH = 9,
  FPW_ERR_DEFINING_RELATOR_NOT_FOUND = 10,
  FPW_ERR_ARITY_MISMATCH = 11,
  FPW_ERR_INVALID_ARGUMENT = 12,
  FPW_ERR_OVERFLOW = 13,
  FPW_EXHAUSTED = 100,
  FPW_ERR_NULL_ARGUMENT = 101,
  FPW_ERR_INTERNAL = 102
} fpw_status;

typedef struct fpw_presentation fpw_presentation;
typedef struct fpw_stream fpw_stream;
typedef struct fpw_oracle fpw_oracle;

/* ---- errors and memory ---- */
FPW_API const char* fpw_last_error(void);
FPW_API const char* fpw_status_name(fpw_status status);
FPW_API void fpw_string_free(char* s);

/* ---- presentations ---- */
FPW_API fpw_status fpw_presentation_parse(const char* text, fpw_presentation** out);
FPW_API fpw_status fpw_presentation_bs(const char* m, const char* n, fpw_presentation** out);
FPW_API void fpw_presentation_free(fpw_presentation* p);
FPW_API fpw_status fpw_presentation_to_string(const fpw_presentation* p, char** out);
FPW_API fpw_status fpw_presentation_hash(const fpw_presentation* p, char** out);

/* ---- words ----
 * Free reduction. With p == NULL the alphabet is the generators named in the
 * word, in order of first appearance. compact != 0 writes runs as powers. */
FPW_API fpw_status fpw_reduce(const fpw_presentation* p, const char* word, int compact, char** out);

/* ---- Baumslag-Solitar engine (generators s, t) ---- */
FPW_API fpw_status fpw_bs_is_trivial(const char* m, const char* n, const char* word, int* out);
FPW_API fpw_status fpw_bs_equal(const char* m, const char* n, const char* u, const char* v, int* out);
/* Britton-reduced syllable form, e.g. "t^0 s^-1 t^1 s^1 t^0". */
FPW_API fpw_status fpw_bs_reduce(const char* m, const char* n, const char* word, char** out);
FPW_API fpw_status fpw_apply_f(const char* word, uint64_t iterate, int compact, char** out);
FPW_API fpw_status fpw_w_family(uint64_t index, int compact, char** out);

/* ---- streams ---- */
FPW_API fpw_status fpw_kernel_stream_new(uint64_t iterate, fpw_stream** out);
FPW_API fpw_status fpw_trivial_stream_new(const fpw_presentation* p, fpw_stream** out);
/* Next word; for trivial-word streams *certificate receives the certificate
 * as JSON (pass NULL to skip it). Kernel streams set *certificate to NULL. */
FPW_API fpw_status fpw_stream_next(fpw_stream* s, int compact, char** word, char** certificate);
FPW_API void fpw_stream_free(fpw_stream* s);

/* ---- certificates and triviality ---- */
/* Evaluates a certificate (JSON) over p's relators; *word receives the product. */
FPW_API fpw_status fpw_certificate_word(const fpw_presentation* p, const char* certificate, char** word);
/* Searches the trivial-word stream; FPW_EXHAUSTED when the budget runs out. */
FPW_API fpw_status fpw_semidecide_trivial(const fpw_presentation* p, const char* word, uint64_t budget,
                                          char** certificate, uint64_t* steps);

/* ---- abelianization ---- */
/* JSON {"free_rank": r, "torsion": [d1, ...]}; torsion entries are strings. */
FPW_API fpw_status fpw_abelianization(const fpw_presentation* p, char** out);
FPW_API fpw_status fpw_is_perfect(const fpw_presentation* p, int* out);

/* ---- oracles (decision procedures for the word problem) ---- */
FPW_API fpw_status fpw_oracle_bs(const char* m, const char* n, fpw_oracle** out);
/* Cyclic group of the given order on one generator; order 0 means Z. */
FPW_API fpw_status fpw_oracle_cyclic(uint64_t order, fpw_oracle** out);
/* Word problem of BS(2,3) modulo the kernel of the k-th iterate of f. */
FPW_API fpw_status fpw_oracle_tower(uint64_t k, fpw_oracle** out);
FPW_API void fpw_oracle_free(fpw_oracle* o);
/* Parses word over p's generators and asks the oracle. */
FPW_API fpw_status fpw_oracle_query(const fpw_oracle* o, const fpw_presentation* p, const char* word, int* out);

/* ---- searches ----
 * Maps use "gen=word,gen=word" syntax. */
FPW_API fpw_status fpw_hom_check(const fpw_presentation* p, const fpw_presentation* q, const char* map,
                                 uint64_t budget, char** certificates, uint64_t* steps);
FPW_API fpw_status fpw_hom_decide(const fpw_presentation* p, const fpw_presentation* q, const char* map,
                                  const fpw_oracle* oracle_q, int* out);
/* *witness receives {"forward": map, "backward": map, "candidate": k, "steps": n}. */
FPW_API fpw_status fpw_iso_search(const fpw_presentation* p, const fpw_presentation* q,
                                  uint64_t max_candidates, uint64_t max_steps, char** witness,
                                  uint64_t* steps);
/* gens: comma-separated words over p. *result receives k, the presentation,
 * the witness and the Hopfian lift report as JSON. */
FPW_API fpw_status fpw_subgroup_search(const fpw_presentation* p, const fpw_oracle* oracle_p, const char* gens,
                                       const fpw_presentation* q, uint64_t max_candidates, uint64_t max_steps,
                                       char** result, uint64_t* steps);

/* ---- Tietze moves ----
 * moves: JSON array of moves; *result receives {"presentation": text, "log": [...]}. */
FPW_API fpw_status fpw_tietze_apply(const fpw_presentation* p, const char* moves, char** result);
/* move: one JSON move. Returns FPW_OK when valid (with *result describing any
 * certificate found), the move's error status when invalid, and
 * FPW_EXHAUSTED when a certificate-free relator move could not be settled. */
FPW_API fpw_status fpw_tietze_check(const fpw_presentation* p, const char* move, uint64_t budget, char** result);

/* ---- recursion-theoretic plumbing ---- */
FPW_API fpw_status fpw_cantor_pair(uint64_t x, uint64_t y, uint64_t* out);
FPW_API fpw_status fpw_cantor_unpair(uint64_t z, uint64_t* x, uint64_t* y);
/* Compresses a finite list; out must hold n entries, *out_n receives the count. */
FPW_API fpw_status fpw_compress(const uint64_t* values, size_t n, uint64_t* out, size_t* out_n);
/* set: comma-separated naturals. Runs compress -> tower oracle -> recovery. */
FPW_API fpw_status fpw_recover_cardinality(const char* set, uint64_t kmax, uint64_t* out);

/* ---- demonstrations ---- */
/* Machine-checks the non-Hopfian property of BS(2,3); *report is a
 * human-readable account, *all_pass is nonzero when every check held. */
FPW_API fpw_status fpw_demo_non_hopfian(char** report, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* FPW_FPW_H */
