/* emlex — early modern English lexicographic toolkit, C API.
 *
 * Every object is an opaque handle created by an emlex_* constructor and
 * released with the matching *_free. Functions return EMLEX_OK on success;
 * on failure emlex_last_error() holds a diagnostic for the calling thread.
 * Strings returned through char** are heap-allocated; release them with
 * emlex_string_free.
 */
#ifndef EMLEX_H
#define EMLEX_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum emlex_status {
  EMLEX_OK = 0,
  EMLEX_ERR_USAGE = 1,
  EMLEX_ERR_NOT_FOUND = 2,
  EMLEX_ERR_DECODE = 3,
  EMLEX_ERR_EMPTY = 4,
  EMLEX_ERR_PARSE = 5,
  EMLEX_ERR_VALIDATION = 6,
  EMLEX_ERR_CONFLICT = 7,
  EMLEX_ERR_PATTERN = 8,
  EMLEX_ERR_ANNOTATIONS = 9,
  EMLEX_ERR_INVALID = 10,
  EMLEX_ERR_INTERNAL = 11
} emlex_status;

typedef struct emlex_document emlex_document;
typedef struct emlex_tokens emlex_tokens;
typedef struct emlex_lexicon emlex_lexicon;
typedef struct emlex_config emlex_config;
typedef struct emlex_annotations emlex_annotations;
typedef struct emlex_report emlex_report;

const char* emlex_version(void);
const char* emlex_last_error(void);
void emlex_string_free(char* s);

/* -- documents ---------------------------------------------------------- */

emlex_status emlex_document_load(const char* path, const char* id,
                                 emlex_document** out);
emlex_status emlex_document_from_string(const char* text, const char* id,
                                        emlex_document** out);
emlex_status emlex_document_strip_catchwords(const emlex_document* doc,
                                             const char* page_break_marker,
                                             emlex_document** out);
const char* emlex_document_text(const emlex_document* doc);
/* NULL when the key is absent. */
const char* emlex_document_meta(const emlex_document* doc, const char* key);
void emlex_document_free(emlex_document* doc);

/* -- tokens ------------------------------------------------------------- */

#define EMLEX_FLAG_LEADING_APOSTROPHE (1u << 0)
#define EMLEX_FLAG_INTERNAL_APOSTROPHE (1u << 1)
#define EMLEX_FLAG_TRAILING_APOSTROPHE (1u << 2)
#define EMLEX_FLAG_INTERNAL_HYPHEN (1u << 3)
#define EMLEX_FLAG_CAPITALIZED (1u << 4)
#define EMLEX_FLAG_ALL_CAPS (1u << 5)

typedef struct emlex_token_info {
  size_t start;        /* byte offsets into the document text */
  size_t end;
  const char* kind;    /* "Word" | "Punct" | "Number" */
  unsigned flags;
  const char* surface; /* owned by the emlex_tokens handle */
} emlex_token_info;

/* contractions may be NULL; it settles leading-apostrophe attachment. */
emlex_status emlex_tokenize(const emlex_document* doc,
                            const emlex_lexicon* contractions,
                            emlex_tokens** out);
size_t emlex_tokens_count(const emlex_tokens* tokens);
emlex_status emlex_tokens_get(const emlex_tokens* tokens, size_t index,
                              emlex_token_info* out);
/* Comma-joined flag names, "-" when none. */
emlex_status emlex_flags_format(unsigned flags, char** out);
void emlex_tokens_free(emlex_tokens* tokens);

/* -- lexicons ----------------------------------------------------------- */

emlex_status emlex_lexicon_load(const char* path, const char* origin,
                                emlex_lexicon** out);
emlex_status emlex_lexicon_parse(const char* content, const char* origin,
                                 emlex_lexicon** out);
emlex_status emlex_lexicon_merge(const emlex_lexicon* base,
                                 const emlex_lexicon* overlay,
                                 emlex_lexicon** out);
size_t emlex_lexicon_size(const emlex_lexicon* lexicon);
/* Canonical one-entry-per-line form. */
emlex_status emlex_lexicon_format(const emlex_lexicon* lexicon, char** out);
void emlex_lexicon_free(emlex_lexicon* lexicon);

/* -- rule configuration ------------------------------------------------- */

emlex_status emlex_config_default(emlex_config** out);
emlex_status emlex_config_load(const char* path, emlex_config** out);
void emlex_config_free(emlex_config* config);

/* -- annotation --------------------------------------------------------- */

emlex_status emlex_annotate(const emlex_tokens* tokens,
                            const emlex_lexicon* base,
                            const emlex_lexicon* overlay,
                            const emlex_lexicon* contractions,
                            const emlex_config* config,
                            emlex_annotations** out);
size_t emlex_annotations_unknown_count(const emlex_annotations* annotations);
size_t emlex_annotations_recognized_count(
    const emlex_annotations* annotations);
/* 1 when the case-folded surface is in the unknown partition. */
int emlex_annotations_is_unknown(const emlex_annotations* annotations,
                                 const char* surface);
void emlex_annotations_free(emlex_annotations* annotations);

/* -- reports ------------------------------------------------------------ */

emlex_status emlex_report_pronouns(const emlex_tokens* tokens,
                                   const char* corpus_id,
                                   const emlex_config* config,
                                   emlex_report** out);
emlex_status emlex_report_lengths(const emlex_tokens* tokens,
                                  size_t min_letters, const char* corpus_id,
                                  const emlex_config* config,
                                  emlex_report** out);
emlex_status emlex_report_punctuation(const emlex_document* doc,
                                      const emlex_config* config,
                                      emlex_report** out);
emlex_status emlex_report_unknown(const emlex_annotations* annotations,
                                  const emlex_tokens* tokens,
                                  const char* corpus_id,
                                  const emlex_config* config,
                                  emlex_report** out);
/* suffixes: comma-separated list, or NULL for the default census list. */
emlex_status emlex_report_suffixes(const emlex_tokens* tokens,
                                   const char* suffixes,
                                   const emlex_lexicon* base,
                                   const emlex_lexicon* overlay,
                                   const char* corpus_id,
                                   const emlex_config* config,
                                   emlex_report** out);
emlex_status emlex_report_normalize(const emlex_tokens* tokens,
                                    const emlex_lexicon* base,
                                    const emlex_lexicon* overlay,
                                    const emlex_lexicon* contractions,
                                    const char* corpus_id,
                                    const emlex_config* config,
                                    emlex_report** out);
/* kind: "prefix" or "suffix". */
emlex_status emlex_report_affix(const emlex_tokens* tokens, const char* kind,
                                const char* affix, const char* corpus_id,
                                const emlex_config* config,
                                emlex_report** out);
emlex_status emlex_report_to_tsv(const emlex_report* report, char** out);
emlex_status emlex_report_to_json(const emlex_report* report, char** out);
void emlex_report_free(emlex_report* report);

/* -- locate / concordance ----------------------------------------------- */

/* annotations may be NULL unless the pattern uses a <POS> constraint.
 * format: "text" | "tsv" | "json". */
emlex_status emlex_locate_kwic(const emlex_document* doc,
                               const emlex_tokens* tokens,
                               const emlex_annotations* annotations,
                               const char* pattern, size_t width,
                               const char* format, char** out);
/* Number of matches only. */
emlex_status emlex_locate_count(const emlex_tokens* tokens,
                                const emlex_annotations* annotations,
                                const char* pattern, size_t* out);

#ifdef __cplusplus
}
#endif

#endif /* EMLEX_H */
