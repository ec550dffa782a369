#pragma once

// Free pregroup type algebra over the basic types {n, s}: simple types with
// iterated adjoints, type products, the type dictionary, and type reduction.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace frobsem {

enum class BasicType { N, S };

// A basic type with an iterated-adjoint order: 0 is the plain type, +1 the
// right adjoint, -1 the left adjoint, +2/-2 their iterates, and so on.
struct SimpleType {
    BasicType base = BasicType::N;
    int adjoint_order = 0;

    friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

// Ordered product of simple types. The empty product is the monoid unit;
// concatenation is the monoid product.
struct PregroupType {
    std::vector<SimpleType> simples;

    friend bool operator==(const PregroupType&, const PregroupType&) = default;
    friend PregroupType operator*(const PregroupType& a, const PregroupType& b) {
        PregroupType out = a;
        out.simples.insert(out.simples.end(), b.simples.begin(), b.simples.end());
        return out;
    }
};

enum class Side { Left, Right };

// Right adjoint adds +1 to every adjoint order, left adjoint -1; the order of
// the simples is reversed either way.
PregroupType adjoint(const PregroupType& t, Side side);

// Outcome of reducing a sequence of types, expressed over the flattened
// simple-type sequence. Each cup (i, j) pairs a simple type with its right
// adjoint and stands for an epsilon map; survivors are the unmatched wires.
// Cups are pairwise disjoint, planar, and sorted by their left endpoint.
struct Reduction {
    std::vector<std::pair<int, int>> cups;
    std::vector<int> survivors;

    friend bool operator==(const Reduction&, const Reduction&) = default;
};

// Concatenated simple types of a type sequence.
std::vector<SimpleType> flatten(std::span<const PregroupType> types);

// Reduces a type sequence as far as possible with contractions
// (x, z)(x, z+1) -> 1 on adjacent simples. Among all reachable contraction
// orders the result has the fewest survivors; ties are broken toward the
// lexicographically smallest cup list, which makes the output deterministic.
Reduction reduce(const std::vector<PregroupType>& types);

enum class PhraseClass { Sentence, NounPhrase, Other };

// Sentence iff the reduction left a single plain s, noun phrase iff a single
// plain n. `r` must have been produced by reduce() on `types`.
PhraseClass classify(const Reduction& r, const std::vector<PregroupType>& types);

const char* to_string(PhraseClass c);

// Compact text form used by dictionary files: simples separated by single
// spaces, adjoints written as ".r"/".l"/".rr"/".ll" suffixes (e.g. "n.r s n.l").
std::string to_string(const SimpleType& t);
std::string to_string(const PregroupType& t);
SimpleType parse_simple_type(std::string_view token);
PregroupType parse_pregroup_type(std::string_view text);

// Lemma -> candidate types, in file order.
struct TypeDictionary {
    std::map<std::string, std::vector<PregroupType>> entries;

    // Null when the lemma is unknown; otherwise a non-empty list.
    const std::vector<PregroupType>* lookup(const std::string& lemma) const;
};

// TSV rows `lemma<TAB>type`, blank lines and '#' comments skipped. A lemma may
// appear on several rows; its types keep file order. Dictionary entries are
// limited to adjoint orders within [-2, 2].
TypeDictionary load_type_dictionary(const std::string& path);

struct SentenceParse {
    std::vector<PregroupType> types;
    Reduction reduction;
    PhraseClass phrase_class = PhraseClass::Other;
};

// Tries type assignments in dictionary order (leftmost word most significant)
// and returns the first one classifying as Sentence or NounPhrase. Falls back
// to the first assignment when none does; nullopt if a word is unknown.
std::optional<SentenceParse> resolve(const TypeDictionary& dict,
                                     const std::vector<std::string>& words);

}  // namespace frobsem
