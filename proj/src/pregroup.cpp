#include "frobsem/pregroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "frobsem/error.hpp"

namespace frobsem {

PregroupType adjoint(const PregroupType& t, Side side) {
    const int delta = side == Side::Right ? 1 : -1;
    PregroupType out;
    out.simples.reserve(t.simples.size());
    for (auto it = t.simples.rbegin(); it != t.simples.rend(); ++it)
        out.simples.push_back({it->base, it->adjoint_order + delta});
    return out;
}

std::vector<SimpleType> flatten(std::span<const PregroupType> types) {
    std::vector<SimpleType> seq;
    for (const PregroupType& t : types)
        seq.insert(seq.end(), t.simples.begin(), t.simples.end());
    return seq;
}

// Minimal reduction by interval dynamic programming. A contraction-only
// rewrite can reach exactly the non-crossing cup sets whose cup interiors are
// fully matched, so the fewest-survivor result is found from
//   full[i][j]  : seq[i..j] contracts away completely
//   suffix[p]   : fewest survivors of seq[p..]
// A greedy left-to-right stack is not equivalent: on [x.ll, x.l, x, x.l] it
// pops (0,1) and strands two survivors where (1,2)+(0,3) clears the sequence.
Reduction reduce(const std::vector<PregroupType>& types) {
    const std::vector<SimpleType> seq = flatten(types);
    const int n = static_cast<int>(seq.size());
    Reduction out;
    if (n == 0) return out;

    auto contracts = [&seq](int i, int j) {
        return seq[i].base == seq[j].base &&
               seq[i].adjoint_order + 1 == seq[j].adjoint_order;
    };

    std::vector<char> full_buf(static_cast<size_t>(n) * n, 0);
    auto full = [&](int i, int j) -> bool {
        return i > j || full_buf[static_cast<size_t>(i) * n + j] != 0;
    };
    for (int len = 2; len <= n; len += 2) {
        for (int i = 0; i + len - 1 < n; ++i) {
            const int j = i + len - 1;
            for (int k = i + 1; k <= j; k += 2) {
                if (contracts(i, k) && full(i + 1, k - 1) && full(k + 1, j)) {
                    full_buf[static_cast<size_t>(i) * n + j] = 1;
                    break;
                }
            }
        }
    }

    std::vector<int> suffix(n + 1, 0);
    for (int p = n - 1; p >= 0; --p) {
        int best = 1 + suffix[p + 1];
        for (int j = p + 1; j < n; j += 2)
            if (contracts(p, j) && full(p + 1, j - 1))
                best = std::min(best, suffix[j + 1]);
        suffix[p] = best;
    }

    // Fully matched intervals nest; take the smallest partner first so the
    // emitted cup list is the lexicographically smallest one.
    std::function<void(int, int)> emit_full = [&](int a, int b) {
        if (a > b) return;
        for (int k = a + 1; k <= b; k += 2) {
            if (contracts(a, k) && full(a + 1, k - 1) && full(k + 1, b)) {
                out.cups.emplace_back(a, k);
                emit_full(a + 1, k - 1);
                emit_full(k + 1, b);
                return;
            }
        }
    };

    int p = 0;
    while (p < n) {
        bool matched = false;
        for (int j = p + 1; j < n && !matched; j += 2) {
            if (contracts(p, j) && full(p + 1, j - 1) && suffix[j + 1] == suffix[p]) {
                out.cups.emplace_back(p, j);
                emit_full(p + 1, j - 1);
                p = j + 1;
                matched = true;
            }
        }
        if (!matched) {
            out.survivors.push_back(p);
            ++p;
        }
    }
    std::sort(out.cups.begin(), out.cups.end());
    return out;
}

PhraseClass classify(const Reduction& r, const std::vector<PregroupType>& types) {
    if (r.survivors.size() != 1) return PhraseClass::Other;
    const std::vector<SimpleType> seq = flatten(types);
    const SimpleType& s = seq.at(static_cast<size_t>(r.survivors[0]));
    if (s.adjoint_order != 0) return PhraseClass::Other;
    return s.base == BasicType::S ? PhraseClass::Sentence : PhraseClass::NounPhrase;
}

const char* to_string(PhraseClass c) {
    switch (c) {
        case PhraseClass::Sentence: return "sentence";
        case PhraseClass::NounPhrase: return "noun_phrase";
        default: return "other";
    }
}

std::string to_string(const SimpleType& t) {
    std::string s(1, t.base == BasicType::N ? 'n' : 's');
    if (t.adjoint_order != 0) {
        s += '.';
        s.append(static_cast<size_t>(std::abs(t.adjoint_order)),
                 t.adjoint_order > 0 ? 'r' : 'l');
    }
    return s;
}

std::string to_string(const PregroupType& t) {
    std::string s;
    for (size_t i = 0; i < t.simples.size(); ++i) {
        if (i) s += ' ';
        s += to_string(t.simples[i]);
    }
    return s;
}

SimpleType parse_simple_type(std::string_view token) {
    if (token.empty())
        throw std::invalid_argument("empty simple type");
    SimpleType t;
    switch (token[0]) {
        case 'n': t.base = BasicType::N; break;
        case 's': t.base = BasicType::S; break;
        default:
            throw std::invalid_argument("unknown basic type in '" + std::string(token) + "'");
    }
    std::string_view rest = token.substr(1);
    if (rest.empty()) return t;
    if (rest[0] != '.' || rest.size() < 2)
        throw std::invalid_argument("malformed simple type '" + std::string(token) + "'");
    std::string_view suffix = rest.substr(1);
    const char kind = suffix[0];
    if (kind != 'r' && kind != 'l')
        throw std::invalid_argument("malformed adjoint suffix in '" + std::string(token) + "'");
    for (char c : suffix)
        if (c != kind)
            throw std::invalid_argument("mixed adjoint suffix in '" + std::string(token) + "'");
    t.adjoint_order = kind == 'r' ? static_cast<int>(suffix.size())
                                  : -static_cast<int>(suffix.size());
    return t;
}

PregroupType parse_pregroup_type(std::string_view text) {
    PregroupType t;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token)
        t.simples.push_back(parse_simple_type(token));
    return t;
}

const std::vector<PregroupType>* TypeDictionary::lookup(const std::string& lemma) const {
    auto it = entries.find(lemma);
    return it == entries.end() ? nullptr : &it->second;
}

TypeDictionary load_type_dictionary(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open type dictionary: " + path);
    TypeDictionary dict;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw ParseError(path, lineno, "expected lemma<TAB>type");
        const std::string lemma = line.substr(0, tab);
        const std::string type_text = line.substr(tab + 1);
        if (lemma.empty())
            throw ParseError(path, lineno, "empty lemma");
        if (type_text.find('\t') != std::string::npos)
            throw ParseError(path, lineno, "unexpected extra column");
        PregroupType t;
        try {
            t = parse_pregroup_type(type_text);
        } catch (const std::invalid_argument& e) {
            throw ParseError(path, lineno, e.what());
        }
        if (t.simples.empty())
            throw ParseError(path, lineno, "empty type for lemma '" + lemma + "'");
        for (const SimpleType& s : t.simples)
            if (std::abs(s.adjoint_order) > 2)
                throw ParseError(path, lineno, "adjoint order beyond ll/rr");
        dict.entries[lemma].push_back(std::move(t));
    }
    return dict;
}

std::optional<SentenceParse> resolve(const TypeDictionary& dict,
                                     const std::vector<std::string>& words) {
    if (words.empty()) return std::nullopt;
    std::vector<const std::vector<PregroupType>*> options;
    options.reserve(words.size());
    for (const std::string& w : words) {
        const auto* types = dict.lookup(w);
        if (!types || types->empty()) return std::nullopt;
        options.push_back(types);
    }

    std::vector<size_t> idx(words.size(), 0);
    std::optional<SentenceParse> fallback;
    while (true) {
        std::vector<PregroupType> assignment;
        assignment.reserve(words.size());
        for (size_t i = 0; i < idx.size(); ++i)
            assignment.push_back((*options[i])[idx[i]]);
        SentenceParse parse;
        parse.reduction = reduce(assignment);
        parse.phrase_class = classify(parse.reduction, assignment);
        parse.types = std::move(assignment);
        if (parse.phrase_class != PhraseClass::Other) return parse;
        if (!fallback) fallback = std::move(parse);

        int i = static_cast<int>(idx.size()) - 1;
        for (; i >= 0; --i) {
            if (++idx[static_cast<size_t>(i)] < options[static_cast<size_t>(i)]->size()) break;
            idx[static_cast<size_t>(i)] = 0;
        }
        if (i < 0) break;
    }
    return fallback;
}

}  // namespace frobsem
