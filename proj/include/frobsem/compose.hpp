#pragma once

// Closed-form sentence and phrase composition for all supported models.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frobsem/lexicon.hpp"
#include "frobsem/tensor.hpp"

namespace frobsem {

enum class CompositionModel { Addtv, Multp, Kron, MixCpDl, CpSbj, CpObj, Reltn };

const char* model_name(CompositionModel model);
std::optional<CompositionModel> model_from_name(std::string_view name);

// True for the models whose transitive verb is a relational matrix.
bool model_uses_relational_matrix(CompositionModel model);

enum class PhraseKind { TransitiveSentence, IntransitiveSentence, AdjectiveNoun, VerbPhrase };

const char* phrase_kind_name(PhraseKind kind);
std::optional<PhraseKind> phrase_kind_from_name(std::string_view name);

// A phrase to compose. Lemma layout per kind:
//   TransitiveSentence    subject, verb, object        (exactly 3)
//   IntransitiveSentence  subject, verb                (exactly 2)
//   AdjectiveNoun         modifier..., head noun       (at least 1)
//   VerbPhrase            verb, object phrase lemmas   (at least 1)
struct PhraseSpec {
    PhraseKind kind = PhraseKind::TransitiveSentence;
    std::vector<std::string> lemmas;
};

// Throws std::invalid_argument when the lemma count does not fit the kind.
void validate(const PhraseSpec& phrase);

// Transitive sentence vector. The verb representation must be the relational
// matrix for CpSbj/CpObj/MixCpDl and the context vector for Multp/Kron/Addtv;
// Reltn does not apply to full sentences. The result is L2-normalized (a zero
// vector stays zero), as are all compositions below.
WordTensor compose_transitive(CompositionModel model, const WordTensor& sbj,
                              const WordTensor& verb_rep, const WordTensor& obj);

// Subject applied to a copied (sigma-encoded) verb vector: sbj (.) verb_vec.
WordTensor compose_intransitive(const WordTensor& sbj, const WordTensor& verb_vec);

// Mirrored one-argument application for adjectives: adj_vec (.) noun.
WordTensor compose_adj_noun(const WordTensor& adj_vec, const WordTensor& noun);

// Verb phrase without a subject; model must be Reltn or Multp and verb_rep the
// matching verb vector (object sum resp. context vector).
WordTensor compose_verb_phrase(CompositionModel model, const WordTensor& verb_rep,
                               const WordTensor& obj);

double sentence_similarity(const WordTensor& a, const WordTensor& b);

struct ComposeDiagnostics {
    std::vector<std::string> missing;  // lemmas whose lookup fell back to zero
};

// Composes a phrase from lexicon entries under the model. Lemmas without the
// needed entry contribute zero vectors and are recorded in `diag`. Throws
// std::invalid_argument for unsupported model/kind combinations (see README).
WordTensor compose_phrase(const PhraseSpec& phrase, CompositionModel model, const Lexicon& lex,
                          ComposeDiagnostics* diag = nullptr);

}  // namespace frobsem
