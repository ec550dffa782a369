#include "frobsem/lexicon.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "frobsem/error.hpp"

namespace frobsem {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(std::move(tok));
    return tokens;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
        const size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return fields;
}

double parse_double(const std::string& text, const std::string& source, int lineno) {
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || text.empty())
        throw ParseError(source, lineno, "bad number '" + text + "'");
    if (!std::isfinite(value))
        throw ParseError(source, lineno, "non-finite value '" + text + "'");
    return value;
}

std::int64_t parse_count(const std::string& text, const std::string& source, int lineno) {
    char* end = nullptr;
    const long long value = std::strtoll(text.c_str(), &end, 10);
    if (end != text.c_str() + text.size() || text.empty() || value < 1)
        throw ParseError(source, lineno, "bad count '" + text + "'");
    return value;
}

}  // namespace

const char* role_name(Role role) {
    switch (role) {
        case Role::Context: return "context";
        case Role::RelationalVerb: return "relational_verb";
        case Role::IntransitiveVerb: return "intransitive_verb";
        case Role::Adjective: return "adjective";
        case Role::ReltnVerb: return "reltn_verb";
    }
    return "?";
}

std::optional<Role> role_from_name(std::string_view name) {
    for (int r = 0; r < kRoleCount; ++r) {
        const Role role = static_cast<Role>(r);
        if (name == role_name(role)) return role;
    }
    return std::nullopt;
}

void Lexicon::insert(Role role, const std::string& lemma, WordTensor tensor) {
    const int want_rank = role == Role::RelationalVerb ? 2 : 1;
    if (tensor.rank() != want_rank)
        throw std::invalid_argument(std::string("wrong tensor rank for role ") + role_name(role));
    if (tensor.dim() != space_.dim())
        throw std::invalid_argument("tensor dimension does not match the lexicon space");
    auto [it, fresh] = entries_[static_cast<int>(role)].emplace(lemma, std::move(tensor));
    (void)it;
    if (!fresh)
        throw std::invalid_argument("duplicate lemma '" + lemma + "' for role " + role_name(role));
}

const WordTensor* Lexicon::find(Role role, const std::string& lemma) const {
    const auto& m = entries_[static_cast<int>(role)];
    auto it = m.find(lemma);
    return it == m.end() ? nullptr : &it->second;
}

WordTensor Lexicon::vector_or_zero(Role role, const std::string& lemma, bool* missing) const {
    if (const WordTensor* t = find(role, lemma); t && t->rank() == 1) {
        if (missing) *missing = false;
        return *t;
    }
    if (missing) *missing = true;
    return WordTensor::zeros(1, space_.dim());
}

WordTensor Lexicon::matrix_or_zero(Role role, const std::string& lemma, bool* missing) const {
    if (const WordTensor* t = find(role, lemma); t && t->rank() == 2) {
        if (missing) *missing = false;
        return *t;
    }
    if (missing) *missing = true;
    return WordTensor::zeros(2, space_.dim());
}

const std::map<std::string, WordTensor>& Lexicon::entries(Role role) const {
    return entries_[static_cast<int>(role)];
}

size_t Lexicon::size() const {
    size_t n = 0;
    for (const auto& m : entries_) n += m.size();
    return n;
}

SemanticSpace build_basis(std::istream& corpus, int k, std::ostream* warn) {
    if (k < 1) throw std::invalid_argument("basis size must be >= 1");
    std::unordered_map<std::string, std::int64_t> counts;
    std::string tok;
    while (corpus >> tok) ++counts[tok];
    if (counts.empty()) throw std::invalid_argument("empty corpus");

    std::vector<std::pair<std::string, std::int64_t>> order(counts.begin(), counts.end());
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (static_cast<int>(order.size()) < k && warn)
        *warn << "basis: only " << order.size() << " distinct lemmas available, requested " << k
              << "\n";
    const size_t take = std::min(order.size(), static_cast<size_t>(k));
    std::vector<std::string> basis;
    basis.reserve(take);
    for (size_t i = 0; i < take; ++i) basis.push_back(order[i].first);
    return SemanticSpace(std::move(basis));
}

namespace {

void count_lines(const std::vector<std::string>* lines, size_t begin, size_t end,
                 const SemanticSpace* space, int window, CorpusStats* stats) {
    for (size_t li = begin; li < end; ++li) {
        const std::vector<std::string> tokens = split_tokens((*lines)[li]);
        const int n = static_cast<int>(tokens.size());
        for (int t = 0; t < n; ++t) {
            ++stats->target_counts[tokens[static_cast<size_t>(t)]];
            ++stats->total_tokens;
            const int lo = std::max(0, t - window);
            const int hi = std::min(n - 1, t + window);
            for (int j = lo; j <= hi; ++j) {
                if (j == t) continue;
                const int basis_idx = space->index_of(tokens[static_cast<size_t>(j)]);
                if (basis_idx >= 0)
                    ++stats->cooccurrence[tokens[static_cast<size_t>(t)]][basis_idx];
            }
        }
    }
}

void merge_stats(CorpusStats& into, const CorpusStats& from) {
    into.total_tokens += from.total_tokens;
    for (const auto& [lemma, count] : from.target_counts) into.target_counts[lemma] += count;
    for (const auto& [lemma, row] : from.cooccurrence) {
        auto& dst = into.cooccurrence[lemma];
        for (const auto& [idx, count] : row) dst[idx] += count;
    }
}

}  // namespace

CorpusStats count_cooccurrence(std::istream& corpus, const SemanticSpace& space, int window,
                               int threads) {
    if (window < 1) throw std::invalid_argument("window must be >= 1");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(corpus, line)) lines.push_back(line);

    CorpusStats stats;
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(lines.size())));
    if (workers <= 1) {
        count_lines(&lines, 0, lines.size(), &space, window, &stats);
        return stats;
    }

    std::vector<CorpusStats> partial(static_cast<size_t>(workers));
    std::vector<std::thread> pool;
    const size_t chunk = (lines.size() + static_cast<size_t>(workers) - 1) / static_cast<size_t>(workers);
    for (int w = 0; w < workers; ++w) {
        const size_t begin = static_cast<size_t>(w) * chunk;
        const size_t end = std::min(lines.size(), begin + chunk);
        pool.emplace_back(count_lines, &lines, begin, end, &space, window,
                          &partial[static_cast<size_t>(w)]);
    }
    for (std::thread& t : pool) t.join();
    for (const CorpusStats& p : partial) merge_stats(stats, p);
    return stats;
}

Lexicon weight_ratio(const CorpusStats& stats, const SemanticSpace& space) {
    if (stats.total_tokens <= 0) throw std::invalid_argument("weight_ratio needs a counted corpus");
    Lexicon lex(space);
    const int d = space.dim();
    for (const auto& [target, count] : stats.target_counts) {
        (void)count;
        WordTensor v = WordTensor::zeros(1, d);
        auto row_it = stats.cooccurrence.find(target);
        if (row_it != stats.cooccurrence.end() && !row_it->second.empty()) {
            std::int64_t row_sum = 0;
            for (const auto& [idx, c] : row_it->second) row_sum += c;
            for (const auto& [idx, c] : row_it->second) {
                auto ctx_count_it = stats.target_counts.find(space.basis()[static_cast<size_t>(idx)]);
                if (ctx_count_it == stats.target_counts.end() || ctx_count_it->second <= 0) continue;
                const double p_cond = static_cast<double>(c) / static_cast<double>(row_sum);
                const double p_ctx = static_cast<double>(ctx_count_it->second) /
                                     static_cast<double>(stats.total_tokens);
                v.at(idx) = p_cond / p_ctx;
            }
        }
        lex.insert(Role::Context, target, std::move(v));
    }
    return lex;
}

RelationalBuildStats build_relational(const std::vector<SvoTriple>& triples, Lexicon& lex,
                                      std::ostream* log) {
    RelationalBuildStats out;
    const int d = lex.space().dim();
    std::map<std::string, WordTensor> matrices;
    std::map<std::string, WordTensor> subject_sums;
    std::map<std::string, WordTensor> object_sums;

    auto context_of = [&](const std::string& lemma, const char* slot) {
        bool missing = false;
        WordTensor v = lex.vector_or_zero(Role::Context, lemma, &missing);
        if (missing) {
            ++out.missing_lemma_refs;
            if (log) *log << "relational: no context vector for " << slot << " '" << lemma << "'\n";
        }
        return v;
    };

    for (const SvoTriple& t : triples) {
        if (t.count < 1) throw std::invalid_argument("triple count must be >= 1");
        const WordTensor sbj = context_of(t.subject, "subject");
        const WordTensor obj = context_of(t.object, "object");
        const double c = static_cast<double>(t.count);

        auto [mit, m_fresh] = matrices.try_emplace(t.verb, WordTensor::zeros(2, d));
        (void)m_fresh;
        mit->second = add(mit->second, scale(outer(sbj, obj), c));
        auto [sit, s_fresh] = subject_sums.try_emplace(t.verb, WordTensor::zeros(1, d));
        (void)s_fresh;
        sit->second = add(sit->second, scale(sbj, c));
        auto [oit, o_fresh] = object_sums.try_emplace(t.verb, WordTensor::zeros(1, d));
        (void)o_fresh;
        oit->second = add(oit->second, scale(obj, c));
    }

    for (auto& [verb, m] : matrices) lex.insert(Role::RelationalVerb, verb, std::move(m));
    for (auto& [verb, v] : subject_sums) lex.insert(Role::IntransitiveVerb, verb, std::move(v));
    for (auto& [verb, v] : object_sums) lex.insert(Role::ReltnVerb, verb, std::move(v));
    return out;
}

RelationalBuildStats build_adjectives(const std::vector<ArgPair>& pairs, Lexicon& lex,
                                      std::ostream* log) {
    RelationalBuildStats out;
    const int d = lex.space().dim();
    std::map<std::string, WordTensor> sums;
    for (const ArgPair& p : pairs) {
        if (p.count < 1) throw std::invalid_argument("pair count must be >= 1");
        bool missing = false;
        const WordTensor noun = lex.vector_or_zero(Role::Context, p.argument, &missing);
        if (missing) {
            ++out.missing_lemma_refs;
            if (log) *log << "adjective: no context vector for noun '" << p.argument << "'\n";
        }
        auto [it, fresh] = sums.try_emplace(p.head, WordTensor::zeros(1, d));
        (void)fresh;
        it->second = add(it->second, scale(noun, static_cast<double>(p.count)));
    }
    for (auto& [adj, v] : sums) lex.insert(Role::Adjective, adj, std::move(v));
    return out;
}

std::vector<SvoTriple> load_triples(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open triples file: " + path);
    std::vector<SvoTriple> triples;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const std::vector<std::string> f = split_tabs(line);
        if (f.size() != 4)
            throw ParseError(path, lineno, "expected verb<TAB>subject<TAB>object<TAB>count");
        if (f[0].empty() || f[1].empty() || f[2].empty())
            throw ParseError(path, lineno, "empty lemma");
        triples.push_back({f[0], f[1], f[2], parse_count(f[3], path, lineno)});
    }
    return triples;
}

std::vector<ArgPair> load_arg_pairs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open pair file: " + path);
    std::vector<ArgPair> pairs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const std::vector<std::string> f = split_tabs(line);
        if (f.size() != 3)
            throw ParseError(path, lineno, "expected adjective<TAB>noun<TAB>count");
        if (f[0].empty() || f[1].empty())
            throw ParseError(path, lineno, "empty lemma");
        pairs.push_back({f[0], f[1], parse_count(f[2], path, lineno)});
    }
    return pairs;
}

namespace {

void write_value(std::ostream& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out << buf;
}

}  // namespace

void write_lexicon(const Lexicon& lex, std::ostream& out) {
    out << "#dim\t" << lex.space().dim() << "\n";
    out << "#basis";
    for (const std::string& lemma : lex.space().basis()) out << '\t' << lemma;
    out << "\n";
    for (int r = 0; r < kRoleCount; ++r) {
        const Role role = static_cast<Role>(r);
        for (const auto& [lemma, tensor] : lex.entries(role)) {
            out << role_name(role) << '\t' << lemma;
            for (double v : tensor.data()) {
                out << '\t';
                write_value(out, v);
            }
            out << "\n";
        }
    }
}

void save_lexicon(const Lexicon& lex, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write lexicon file: " + path);
    write_lexicon(lex, out);
    if (!out) throw std::runtime_error("failed while writing lexicon file: " + path);
}

Lexicon read_lexicon(std::istream& in, const std::string& source) {
    std::string line;
    int lineno = 0;

    if (!std::getline(in, line)) throw ParseError(source, 1, "missing '#dim' header");
    ++lineno;
    {
        const std::vector<std::string> f = split_tabs(line);
        if (f.size() != 2 || f[0] != "#dim")
            throw ParseError(source, lineno, "expected '#dim<TAB>d' header");
    }
    const std::string dim_text = split_tabs(line)[1];
    char* end = nullptr;
    const long dim = std::strtol(dim_text.c_str(), &end, 10);
    if (end != dim_text.c_str() + dim_text.size() || dim < 1)
        throw ParseError(source, lineno, "bad dimension '" + dim_text + "'");

    if (!std::getline(in, line)) throw ParseError(source, lineno + 1, "missing '#basis' header");
    ++lineno;
    std::vector<std::string> basis_fields = split_tabs(line);
    if (basis_fields.empty() || basis_fields[0] != "#basis")
        throw ParseError(source, lineno, "expected '#basis<TAB>lemma...' header");
    basis_fields.erase(basis_fields.begin());
    if (static_cast<long>(basis_fields.size()) != dim)
        throw ParseError(source, lineno,
                         "basis lists " + std::to_string(basis_fields.size()) + " lemmas, header says " +
                             std::to_string(dim));

    Lexicon lex{SemanticSpace(std::move(basis_fields))};
    const int d = lex.space().dim();

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const std::vector<std::string> f = split_tabs(line);
        if (f.size() < 3) throw ParseError(source, lineno, "expected role<TAB>lemma<TAB>value...");
        const std::optional<Role> role = role_from_name(f[0]);
        if (!role) throw ParseError(source, lineno, "unknown role '" + f[0] + "'");
        const int rank = *role == Role::RelationalVerb ? 2 : 1;
        const size_t want = rank == 2 ? static_cast<size_t>(d) * static_cast<size_t>(d)
                                      : static_cast<size_t>(d);
        if (f.size() - 2 != want)
            throw ParseError(source, lineno,
                             "expected " + std::to_string(want) + " values, found " +
                                 std::to_string(f.size() - 2));
        std::vector<double> data;
        data.reserve(want);
        for (size_t i = 2; i < f.size(); ++i) data.push_back(parse_double(f[i], source, lineno));
        try {
            lex.insert(*role, f[1], WordTensor::from_data(rank, d, std::move(data)));
        } catch (const std::invalid_argument& e) {
            throw ParseError(source, lineno, e.what());
        }
    }
    return lex;
}

Lexicon load_lexicon(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
    return read_lexicon(in, path);
}

}  // namespace frobsem
