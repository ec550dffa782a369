#pragma once

// Corpus-derived lexicons: basis selection, windowed co-occurrence counting,
// probability-ratio weighting, relational tensors, and TSV persistence.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "frobsem/tensor.hpp"

namespace frobsem {

enum class Role { Context, RelationalVerb, IntransitiveVerb, Adjective, ReltnVerb };

inline constexpr int kRoleCount = 5;

const char* role_name(Role role);
std::optional<Role> role_from_name(std::string_view name);

// Raw corpus counts. Co-occurrence rows are sparse maps keyed by basis index.
struct CorpusStats {
    std::unordered_map<std::string, std::int64_t> target_counts;
    std::unordered_map<std::string, std::unordered_map<int, std::int64_t>> cooccurrence;
    std::int64_t total_tokens = 0;
};

// One corpus occurrence record of a verb with its arguments.
struct SvoTriple {
    std::string verb;
    std::string subject;
    std::string object;
    std::int64_t count = 1;
};

// (head, argument) pair for one-argument predicates (adjective with noun).
struct ArgPair {
    std::string head;
    std::string argument;
    std::int64_t count = 1;
};

// Word tensors per role over a shared space. Entries are kept sorted by lemma
// so that persistence and reports are byte-deterministic.
class Lexicon {
public:
    explicit Lexicon(SemanticSpace space) : space_(std::move(space)) {}

    const SemanticSpace& space() const { return space_; }

    // RelationalVerb entries are matrices, every other role holds vectors.
    // Throws on dimension/rank mismatch or a duplicate lemma within a role.
    void insert(Role role, const std::string& lemma, WordTensor tensor);

    const WordTensor* find(Role role, const std::string& lemma) const;

    // Lookup that never fails: absent lemmas yield the zero vector and set
    // the missing flag when given.
    WordTensor vector_or_zero(Role role, const std::string& lemma, bool* missing = nullptr) const;
    WordTensor matrix_or_zero(Role role, const std::string& lemma, bool* missing = nullptr) const;

    const std::map<std::string, WordTensor>& entries(Role role) const;
    size_t size() const;

    friend bool operator==(const Lexicon&, const Lexicon&) = default;

private:
    SemanticSpace space_;
    std::map<std::string, WordTensor> entries_[kRoleCount];
};

// The k most frequent lemmas of a whitespace-separated token stream, most
// frequent first, ties broken toward the lexicographically smaller lemma.
// When fewer than k distinct lemmas exist the whole vocabulary is used and a
// warning is written to `warn`.
SemanticSpace build_basis(std::istream& corpus, int k, std::ostream* warn = nullptr);

// Counts per-token windows over a sentence-per-line corpus: for every token,
// each basis lemma at distance <= window on either side (same sentence, the
// token itself excluded) increments one co-occurrence. `threads` > 1 shards
// sentences and merges counts by addition.
CorpusStats count_cooccurrence(std::istream& corpus, const SemanticSpace& space,
                               int window = 5, int threads = 1);

// Context vectors weighted by P(context|target) / P(context); entries with no
// co-occurrence are 0. Produces one Context entry per counted target lemma.
Lexicon weight_ratio(const CorpusStats& stats, const SemanticSpace& space);

struct RelationalBuildStats {
    std::int64_t missing_lemma_refs = 0;
};

// Adds per-verb entries built from the triples to `lex` (which must already
// hold the context vectors):
//   RelationalVerb   sum_i count_i * (sbj_i (x) obj_i)
//   IntransitiveVerb sum_i count_i * sbj_i
//   ReltnVerb        sum_i count_i * obj_i
// Triples naming lemmas without a context vector contribute zero and are
// logged to `log`.
RelationalBuildStats build_relational(const std::vector<SvoTriple>& triples, Lexicon& lex,
                                      std::ostream* log = nullptr);

// Adjective vectors sum_i count_i * noun_i from (adjective, noun) pairs.
RelationalBuildStats build_adjectives(const std::vector<ArgPair>& pairs, Lexicon& lex,
                                      std::ostream* log = nullptr);

// TSV `verb<TAB>subject<TAB>object<TAB>count`.
std::vector<SvoTriple> load_triples(const std::string& path);
// TSV `adjective<TAB>noun<TAB>count`.
std::vector<ArgPair> load_arg_pairs(const std::string& path);

// Lexicon file: `#dim<TAB>d`, `#basis<TAB>lemma...`, then one row per entry
// `role<TAB>lemma<TAB>value...` (d values for vectors, d*d row-major for
// matrices) with 17 significant digits, so save/load round-trips bit-exactly.
void save_lexicon(const Lexicon& lex, const std::string& path);
Lexicon load_lexicon(const std::string& path);

void write_lexicon(const Lexicon& lex, std::ostream& out);
Lexicon read_lexicon(std::istream& in, const std::string& source_name);

}  // namespace frobsem
