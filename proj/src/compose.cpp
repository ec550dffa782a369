#include "frobsem/compose.hpp"

#include <stdexcept>

namespace frobsem {

const char* model_name(CompositionModel model) {
    switch (model) {
        case CompositionModel::Addtv: return "addtv";
        case CompositionModel::Multp: return "multp";
        case CompositionModel::Kron: return "kron";
        case CompositionModel::MixCpDl: return "mixcpdl";
        case CompositionModel::CpSbj: return "cpsbj";
        case CompositionModel::CpObj: return "cpobj";
        case CompositionModel::Reltn: return "reltn";
    }
    return "?";
}

std::optional<CompositionModel> model_from_name(std::string_view name) {
    for (CompositionModel m :
         {CompositionModel::Addtv, CompositionModel::Multp, CompositionModel::Kron,
          CompositionModel::MixCpDl, CompositionModel::CpSbj, CompositionModel::CpObj,
          CompositionModel::Reltn})
        if (name == model_name(m)) return m;
    return std::nullopt;
}

bool model_uses_relational_matrix(CompositionModel model) {
    return model == CompositionModel::CpSbj || model == CompositionModel::CpObj ||
           model == CompositionModel::MixCpDl;
}

const char* phrase_kind_name(PhraseKind kind) {
    switch (kind) {
        case PhraseKind::TransitiveSentence: return "transitive";
        case PhraseKind::IntransitiveSentence: return "intransitive";
        case PhraseKind::AdjectiveNoun: return "adjnoun";
        case PhraseKind::VerbPhrase: return "verbphrase";
    }
    return "?";
}

std::optional<PhraseKind> phrase_kind_from_name(std::string_view name) {
    for (PhraseKind k : {PhraseKind::TransitiveSentence, PhraseKind::IntransitiveSentence,
                         PhraseKind::AdjectiveNoun, PhraseKind::VerbPhrase})
        if (name == phrase_kind_name(k)) return k;
    return std::nullopt;
}

void validate(const PhraseSpec& phrase) {
    const size_t n = phrase.lemmas.size();
    switch (phrase.kind) {
        case PhraseKind::TransitiveSentence:
            if (n != 3) throw std::invalid_argument("transitive sentence needs subject verb object");
            break;
        case PhraseKind::IntransitiveSentence:
            if (n != 2) throw std::invalid_argument("intransitive sentence needs subject verb");
            break;
        case PhraseKind::AdjectiveNoun:
        case PhraseKind::VerbPhrase:
            if (n < 1) throw std::invalid_argument("phrase needs at least one lemma");
            break;
    }
}

namespace {

void require_rank(const WordTensor& t, int rank, const char* what) {
    if (t.rank() != rank) throw std::invalid_argument(what);
}

}  // namespace

WordTensor compose_transitive(CompositionModel model, const WordTensor& sbj,
                              const WordTensor& verb_rep, const WordTensor& obj) {
    require_rank(sbj, 1, "subject must be a vector");
    require_rank(obj, 1, "object must be a vector");
    WordTensor result = WordTensor::zeros(1, sbj.dim());
    switch (model) {
        case CompositionModel::CpSbj:
            require_rank(verb_rep, 2, "cpsbj needs a relational matrix");
            result = pointwise(sbj, matvec(verb_rep, obj));
            break;
        case CompositionModel::CpObj:
            require_rank(verb_rep, 2, "cpobj needs a relational matrix");
            result = pointwise(obj, matvec(verb_rep, sbj, /*transposed=*/true));
            break;
        case CompositionModel::MixCpDl:
            require_rank(verb_rep, 2, "mixcpdl needs a relational matrix");
            result = pointwise(pointwise(sbj, mu(verb_rep)), obj);
            break;
        case CompositionModel::Multp:
            require_rank(verb_rep, 1, "multp needs a context vector");
            result = pointwise(pointwise(sbj, verb_rep), obj);
            break;
        case CompositionModel::Kron:
            require_rank(verb_rep, 1, "kron needs a context vector");
            result = pointwise(pointwise(sbj, pointwise(verb_rep, verb_rep)), obj);
            break;
        case CompositionModel::Addtv:
            require_rank(verb_rep, 1, "addtv needs a context vector");
            result = add(add(sbj, verb_rep), obj);
            break;
        case CompositionModel::Reltn:
            throw std::invalid_argument("reltn applies to verb phrases only");
    }
    return l2_normalized(result);
}

WordTensor compose_intransitive(const WordTensor& sbj, const WordTensor& verb_vec) {
    require_rank(sbj, 1, "subject must be a vector");
    require_rank(verb_vec, 1, "intransitive verb representation must be a vector");
    return l2_normalized(pointwise(sbj, verb_vec));
}

WordTensor compose_adj_noun(const WordTensor& adj_vec, const WordTensor& noun) {
    require_rank(adj_vec, 1, "adjective representation must be a vector");
    require_rank(noun, 1, "noun must be a vector");
    return l2_normalized(pointwise(adj_vec, noun));
}

WordTensor compose_verb_phrase(CompositionModel model, const WordTensor& verb_rep,
                               const WordTensor& obj) {
    if (model != CompositionModel::Reltn && model != CompositionModel::Multp)
        throw std::invalid_argument("verb phrases support the reltn and multp models");
    require_rank(verb_rep, 1, "verb representation must be a vector");
    require_rank(obj, 1, "object must be a vector");
    return l2_normalized(pointwise(verb_rep, obj));
}

double sentence_similarity(const WordTensor& a, const WordTensor& b) {
    return cosine(a, b);
}

namespace {

WordTensor context_of(const Lexicon& lex, const std::string& lemma, ComposeDiagnostics* diag) {
    bool missing = false;
    WordTensor v = lex.vector_or_zero(Role::Context, lemma, &missing);
    if (missing && diag) diag->missing.push_back(lemma);
    return v;
}

// Relational treatment of a modifier: the adjective vector when built,
// otherwise the context vector as a fallback.
WordTensor modifier_of(const Lexicon& lex, const std::string& lemma, ComposeDiagnostics* diag) {
    if (const WordTensor* adj = lex.find(Role::Adjective, lemma)) return *adj;
    return context_of(lex, lemma, diag);
}

WordTensor sum_of_contexts(const Lexicon& lex, const std::vector<std::string>& lemmas,
                           ComposeDiagnostics* diag) {
    WordTensor acc = WordTensor::zeros(1, lex.space().dim());
    for (const std::string& lemma : lemmas) acc = add(acc, context_of(lex, lemma, diag));
    return acc;
}

WordTensor product_of_contexts(const Lexicon& lex, const std::vector<std::string>& lemmas,
                               ComposeDiagnostics* diag) {
    WordTensor acc = zeta(lex.space().dim());
    for (const std::string& lemma : lemmas) acc = pointwise(acc, context_of(lex, lemma, diag));
    return acc;
}

// Head-final noun phrase under the relational construction: fold the modifier
// vectors onto the head noun, right to left.
WordTensor relational_noun_phrase(const Lexicon& lex, const std::vector<std::string>& lemmas,
                                  ComposeDiagnostics* diag) {
    WordTensor acc = context_of(lex, lemmas.back(), diag);
    for (size_t i = lemmas.size() - 1; i-- > 0;)
        acc = pointwise(modifier_of(lex, lemmas[i], diag), acc);
    return acc;
}

WordTensor compose_transitive_phrase(CompositionModel model, const Lexicon& lex,
                                     const std::vector<std::string>& lemmas,
                                     ComposeDiagnostics* diag) {
    const WordTensor sbj = context_of(lex, lemmas[0], diag);
    const WordTensor obj = context_of(lex, lemmas[2], diag);
    if (model_uses_relational_matrix(model)) {
        bool missing = false;
        const WordTensor m = lex.matrix_or_zero(Role::RelationalVerb, lemmas[1], &missing);
        if (missing && diag) diag->missing.push_back(lemmas[1]);
        return compose_transitive(model, sbj, m, obj);
    }
    return compose_transitive(model, sbj, context_of(lex, lemmas[1], diag), obj);
}

WordTensor compose_intransitive_phrase(CompositionModel model, const Lexicon& lex,
                                       const std::vector<std::string>& lemmas,
                                       ComposeDiagnostics* diag) {
    const WordTensor sbj = context_of(lex, lemmas[0], diag);
    const std::string& verb = lemmas[1];
    switch (model) {
        case CompositionModel::Addtv:
            return l2_normalized(add(sbj, context_of(lex, verb, diag)));
        case CompositionModel::Multp:
            return compose_intransitive(sbj, context_of(lex, verb, diag));
        case CompositionModel::Kron: {
            const WordTensor v = context_of(lex, verb, diag);
            return compose_intransitive(sbj, pointwise(v, v));
        }
        case CompositionModel::MixCpDl:
        case CompositionModel::CpSbj:
        case CompositionModel::CpObj: {
            bool missing = false;
            const WordTensor v = lex.vector_or_zero(Role::IntransitiveVerb, verb, &missing);
            if (missing && diag) diag->missing.push_back(verb);
            return compose_intransitive(sbj, v);
        }
        case CompositionModel::Reltn:
            throw std::invalid_argument("reltn applies to verb phrases only");
    }
    throw std::invalid_argument("unknown model");
}

}  // namespace

WordTensor compose_phrase(const PhraseSpec& phrase, CompositionModel model, const Lexicon& lex,
                          ComposeDiagnostics* diag) {
    validate(phrase);
    switch (phrase.kind) {
        case PhraseKind::TransitiveSentence:
            return compose_transitive_phrase(model, lex, phrase.lemmas, diag);
        case PhraseKind::IntransitiveSentence:
            return compose_intransitive_phrase(model, lex, phrase.lemmas, diag);
        case PhraseKind::AdjectiveNoun:
            switch (model) {
                case CompositionModel::Addtv:
                    return l2_normalized(sum_of_contexts(lex, phrase.lemmas, diag));
                case CompositionModel::Multp:
                    return l2_normalized(product_of_contexts(lex, phrase.lemmas, diag));
                case CompositionModel::Reltn:
                    return l2_normalized(relational_noun_phrase(lex, phrase.lemmas, diag));
                default:
                    throw std::invalid_argument(
                        "adjective-noun phrases support the addtv, multp, and reltn models");
            }
        case PhraseKind::VerbPhrase: {
            switch (model) {
                case CompositionModel::Addtv:
                    return l2_normalized(sum_of_contexts(lex, phrase.lemmas, diag));
                case CompositionModel::Multp: {
                    if (phrase.lemmas.size() == 1)
                        return l2_normalized(context_of(lex, phrase.lemmas[0], diag));
                    std::vector<std::string> rest(phrase.lemmas.begin() + 1, phrase.lemmas.end());
                    return compose_verb_phrase(model, context_of(lex, phrase.lemmas[0], diag),
                                               product_of_contexts(lex, rest, diag));
                }
                case CompositionModel::Reltn: {
                    bool missing = false;
                    const WordTensor v =
                        lex.vector_or_zero(Role::ReltnVerb, phrase.lemmas[0], &missing);
                    if (missing && diag) diag->missing.push_back(phrase.lemmas[0]);
                    if (phrase.lemmas.size() == 1) return l2_normalized(v);
                    std::vector<std::string> rest(phrase.lemmas.begin() + 1, phrase.lemmas.end());
                    return compose_verb_phrase(model, v, relational_noun_phrase(lex, rest, diag));
                }
                default:
                    throw std::invalid_argument(
                        "verb phrases support the addtv, multp, and reltn models");
            }
        }
    }
    throw std::invalid_argument("unknown phrase kind");
}

}  // namespace frobsem
