// Command-line front end: corpus building, lexicon persistence, parsing,
// composition queries, and the three evaluation tasks.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "frobsem/compose.hpp"
#include "frobsem/error.hpp"
#include "frobsem/eval.hpp"
#include "frobsem/lexicon.hpp"
#include "frobsem/pregroup.hpp"
#include "frobsem/tensor.hpp"

namespace fs = std::filesystem;
using namespace frobsem;

namespace {

std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

// Optional config file: `key<TAB>value` rows supplying defaults for long
// option names; explicit flags win.
std::map<std::string, std::string> load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const size_t tab = line.find('\t');
        if (tab == std::string::npos || tab == 0)
            throw ParseError(path, lineno, "expected key<TAB>value");
        kv[line.substr(0, tab)] = line.substr(tab + 1);
    }
    return kv;
}

class ConfigDefaults {
public:
    explicit ConfigDefaults(std::map<std::string, std::string> kv) : kv_(std::move(kv)) {}

    CLI::Option* apply(CLI::Option* opt) const {
        auto it = kv_.find(opt->get_single_name());
        if (it != kv_.end()) {
            opt->default_val(it->second);
            opt->required(false);
        }
        return opt;
    }

private:
    std::map<std::string, std::string> kv_;
};

// Lexicon paths fall back to $FROBSEM_LEXICON_DIR when not found directly.
std::string resolve_lexicon_path(const std::string& path) {
    if (fs::exists(path)) return path;
    if (const char* dir = std::getenv("FROBSEM_LEXICON_DIR")) {
        const fs::path alt = fs::path(dir) / path;
        if (fs::exists(alt)) return alt.string();
    }
    return path;
}

std::vector<std::string> split_spaces(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

CompositionModel parse_model(const std::string& name) {
    if (auto m = model_from_name(name)) return *m;
    throw std::runtime_error("unknown model '" + name +
                             "' (expected addtv|multp|kron|mixcpdl|cpsbj|cpobj|reltn)");
}

PhraseKind parse_kind(const std::string& name) {
    if (auto k = phrase_kind_from_name(name)) return *k;
    throw std::runtime_error("unknown phrase kind '" + name +
                             "' (expected transitive|intransitive|adjnoun|verbphrase)");
}

void report_missing(const ComposeDiagnostics& diag) {
    for (const std::string& lemma : diag.missing)
        std::cerr << "note: no lexicon entry for '" << lemma << "', using the zero vector\n";
}

void write_report(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write report: " + out_path);
    out << text;
}

struct BuildSpaceArgs {
    std::string corpus, out;
    int k = 2000;
};

void run_build_space(const BuildSpaceArgs& args) {
    std::ifstream corpus(args.corpus);
    if (!corpus) throw std::runtime_error("cannot open corpus: " + args.corpus);
    const SemanticSpace space = build_basis(corpus, args.k, &std::cerr);
    save_lexicon(Lexicon(space), args.out);
    std::cerr << "wrote " << args.out << " (d=" << space.dim() << ")\n";
}

struct BuildLexiconArgs {
    std::string corpus, space, triples, adjpairs, out;
    int k = 2000;
    int window = 5;
    int threads = 0;
};

void run_build_lexicon(const BuildLexiconArgs& args) {
    std::optional<SemanticSpace> space;
    if (!args.space.empty()) {
        space = load_lexicon(resolve_lexicon_path(args.space)).space();
    } else {
        std::ifstream corpus(args.corpus);
        if (!corpus) throw std::runtime_error("cannot open corpus: " + args.corpus);
        space = build_basis(corpus, args.k, &std::cerr);
    }
    std::ifstream corpus(args.corpus);
    if (!corpus) throw std::runtime_error("cannot open corpus: " + args.corpus);
    const int threads =
        args.threads > 0 ? args.threads : static_cast<int>(std::thread::hardware_concurrency());
    const CorpusStats stats = count_cooccurrence(corpus, *space, args.window, threads);
    Lexicon lex = weight_ratio(stats, *space);
    if (!args.triples.empty()) {
        const RelationalBuildStats rb = build_relational(load_triples(args.triples), lex, &std::cerr);
        if (rb.missing_lemma_refs)
            std::cerr << "relational build: " << rb.missing_lemma_refs
                      << " argument lookups fell back to zero vectors\n";
    }
    if (!args.adjpairs.empty()) {
        const RelationalBuildStats ab = build_adjectives(load_arg_pairs(args.adjpairs), lex, &std::cerr);
        if (ab.missing_lemma_refs)
            std::cerr << "adjective build: " << ab.missing_lemma_refs
                      << " noun lookups fell back to zero vectors\n";
    }
    save_lexicon(lex, args.out);
    std::cerr << "wrote " << args.out << " (d=" << space->dim() << ", " << lex.size()
              << " entries)\n";
}

struct ParseArgs {
    std::string dict;
    std::vector<std::string> words;
};

void run_parse(const ParseArgs& args) {
    const TypeDictionary dict = load_type_dictionary(args.dict);
    for (const std::string& w : args.words)
        if (!dict.lookup(w)) throw std::runtime_error("word '" + w + "' is not in the dictionary");
    const std::optional<SentenceParse> parse = resolve(dict, args.words);
    if (!parse) throw std::runtime_error("no type assignment found");

    std::cout << "types";
    for (const PregroupType& t : parse->types) std::cout << '\t' << to_string(t);
    std::cout << "\ncups\t";
    for (size_t i = 0; i < parse->reduction.cups.size(); ++i) {
        const auto& [a, b] = parse->reduction.cups[i];
        std::cout << (i ? " " : "") << '(' << a << ',' << b << ')';
    }
    std::cout << "\nsurvivors\t";
    const std::vector<SimpleType> seq = flatten(parse->types);
    for (size_t i = 0; i < parse->reduction.survivors.size(); ++i) {
        const int s = parse->reduction.survivors[i];
        std::cout << (i ? " " : "") << s << ':' << to_string(seq[static_cast<size_t>(s)]);
    }
    std::cout << "\nclassification\t" << to_string(parse->phrase_class) << "\n";
}

struct ComposeArgs {
    std::string lexicon, model, kind = "transitive";
    std::vector<std::string> lemmas;
};

void run_compose(const ComposeArgs& args) {
    const Lexicon lex = load_lexicon(resolve_lexicon_path(args.lexicon));
    ComposeDiagnostics diag;
    const WordTensor v =
        compose_phrase({parse_kind(args.kind), args.lemmas}, parse_model(args.model), lex, &diag);
    report_missing(diag);
    for (int i = 0; i < v.dim(); ++i) std::cout << (i ? " " : "") << fmt6(v.at(i));
    std::cout << "\n";
}

struct SimilarityArgs {
    std::string lexicon, model;
    std::string phrase_a, phrase_b;
    std::string kind_a = "transitive", kind_b = "transitive";
};

void run_similarity(const SimilarityArgs& args) {
    const Lexicon lex = load_lexicon(resolve_lexicon_path(args.lexicon));
    const CompositionModel model = parse_model(args.model);
    ComposeDiagnostics diag;
    const WordTensor a =
        compose_phrase({parse_kind(args.kind_a), split_spaces(args.phrase_a)}, model, lex, &diag);
    const WordTensor b =
        compose_phrase({parse_kind(args.kind_b), split_spaces(args.phrase_b)}, model, lex, &diag);
    report_missing(diag);
    std::cout << fmt6(sentence_similarity(a, b)) << "\n";
}

struct EvalArgs {
    std::string lexicon, model, dataset, out;
};

void run_eval_disambig(const EvalArgs& args) {
    const Lexicon lex = load_lexicon(resolve_lexicon_path(args.lexicon));
    const DisambigReport report =
        eval_disambiguation(load_disambig_dataset(args.dataset), parse_model(args.model), lex);
    std::ostringstream text;
    report.write_tsv(text);
    write_report(args.out, text.str());
}

void run_eval_transintrans(const EvalArgs& args) {
    const Lexicon lex = load_lexicon(resolve_lexicon_path(args.lexicon));
    const TransIntransReport report =
        eval_trans_intrans(load_trans_intrans_dataset(args.dataset), parse_model(args.model), lex);
    std::ostringstream text;
    report.write_tsv(text);
    write_report(args.out, text.str());
}

void run_eval_definitions(const EvalArgs& args) {
    const Lexicon lex = load_lexicon(resolve_lexicon_path(args.lexicon));
    const DefinitionReport report =
        eval_definitions(load_definition_dataset(args.dataset), parse_model(args.model), lex);
    std::ostringstream text;
    report.write_tsv(text);
    write_report(args.out, text.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"compositional distributional semantics over pregroup grammars"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags remain usable after a subcommand name

    // The config file only supplies defaults, so it is prescanned before the
    // options are defined; explicit flags always win.
    std::string config_path;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--config" && i + 1 < argc)
            config_path = argv[i + 1];
        else if (arg.rfind("--config=", 0) == 0)
            config_path = arg.substr(9);
    }
    std::map<std::string, std::string> config_kv;
    try {
        if (!config_path.empty()) config_kv = load_config(config_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    const ConfigDefaults cfg(std::move(config_kv));
    app.add_option("--config", config_path, "TSV config file with key<TAB>value defaults");

    int seed = 42;
    app.add_option("--seed", seed, "random seed recorded in the run configuration")
        ->default_val(42);

    BuildSpaceArgs bs;
    CLI::App* build_space = app.add_subcommand("build-space", "select the basis lemmas of the space");
    cfg.apply(build_space->add_option("--corpus", bs.corpus, "sentence-per-line lemma corpus")->required());
    cfg.apply(build_space->add_option("--k", bs.k, "basis size (most frequent lemmas)"));
    cfg.apply(build_space->add_option("--out", bs.out, "output space file")->required());
    build_space->callback([&] { run_build_space(bs); });

    BuildLexiconArgs bl;
    CLI::App* build_lexicon = app.add_subcommand("build-lexicon", "build context vectors and verb tensors");
    cfg.apply(build_lexicon->add_option("--corpus", bl.corpus, "sentence-per-line lemma corpus")->required());
    cfg.apply(build_lexicon->add_option("--space", bl.space, "existing space/lexicon file to reuse"));
    cfg.apply(build_lexicon->add_option("--k", bl.k, "basis size when no --space is given"));
    cfg.apply(build_lexicon->add_option("--window", bl.window, "co-occurrence window"));
    cfg.apply(build_lexicon->add_option("--threads", bl.threads, "worker count (0 = all cores)"));
    cfg.apply(build_lexicon->add_option("--triples", bl.triples, "verb<TAB>subject<TAB>object<TAB>count file"));
    cfg.apply(build_lexicon->add_option("--adjpairs", bl.adjpairs, "adjective<TAB>noun<TAB>count file"));
    cfg.apply(build_lexicon->add_option("--out", bl.out, "output lexicon file")->required());
    build_lexicon->callback([&] { run_build_lexicon(bl); });

    ParseArgs pa;
    CLI::App* parse_cmd = app.add_subcommand("parse", "reduce a typed word sequence");
    cfg.apply(parse_cmd->add_option("--dict", pa.dict, "type dictionary TSV")->required());
    parse_cmd->add_option("words", pa.words, "word sequence")->required()->expected(-1);
    parse_cmd->callback([&] { run_parse(pa); });

    ComposeArgs ca;
    CLI::App* compose_cmd = app.add_subcommand("compose", "print the vector of a composed phrase");
    cfg.apply(compose_cmd->add_option("--lexicon", ca.lexicon, "lexicon file")->required());
    cfg.apply(compose_cmd->add_option("--model", ca.model, "composition model")->required());
    cfg.apply(compose_cmd->add_option("--kind", ca.kind,
                                      "transitive|intransitive|adjnoun|verbphrase"));
    compose_cmd->add_option("lemmas", ca.lemmas, "phrase lemmas")->required()->expected(-1);
    compose_cmd->callback([&] { run_compose(ca); });

    SimilarityArgs sa;
    CLI::App* sim_cmd = app.add_subcommand("similarity", "cosine similarity of two phrases");
    cfg.apply(sim_cmd->add_option("--lexicon", sa.lexicon, "lexicon file")->required());
    cfg.apply(sim_cmd->add_option("--model", sa.model, "composition model")->required());
    cfg.apply(sim_cmd->add_option("--a", sa.phrase_a, "first phrase (space-separated lemmas)")->required());
    cfg.apply(sim_cmd->add_option("--b", sa.phrase_b, "second phrase")->required());
    cfg.apply(sim_cmd->add_option("--kind-a", sa.kind_a, "kind of the first phrase"));
    cfg.apply(sim_cmd->add_option("--kind-b", sa.kind_b, "kind of the second phrase"));
    sim_cmd->callback([&] { run_similarity(sa); });

    EvalArgs ed, et, ef;
    CLI::App* eval_disambig = app.add_subcommand("eval-disambig", "verb disambiguation task");
    cfg.apply(eval_disambig->add_option("--lexicon", ed.lexicon, "lexicon file")->required());
    cfg.apply(eval_disambig->add_option("--model", ed.model, "composition model")->required());
    cfg.apply(eval_disambig->add_option("--dataset", ed.dataset, "disambiguation TSV")->required());
    cfg.apply(eval_disambig->add_option("--out", ed.out, "report file (stdout when absent)"));
    eval_disambig->callback([&] { run_eval_disambig(ed); });

    CLI::App* eval_ti = app.add_subcommand("eval-transintrans",
                                           "transitive/intransitive comparison task");
    cfg.apply(eval_ti->add_option("--lexicon", et.lexicon, "lexicon file")->required());
    cfg.apply(eval_ti->add_option("--model", et.model, "composition model")->required());
    cfg.apply(eval_ti->add_option("--dataset", et.dataset, "comparison TSV")->required());
    cfg.apply(eval_ti->add_option("--out", et.out, "report file (stdout when absent)"));
    eval_ti->callback([&] { run_eval_transintrans(et); });

    CLI::App* eval_def = app.add_subcommand("eval-definitions", "term/definition classification task");
    cfg.apply(eval_def->add_option("--lexicon", ef.lexicon, "lexicon file")->required());
    cfg.apply(eval_def->add_option("--model", ef.model, "composition model")->required());
    cfg.apply(eval_def->add_option("--dataset", ef.dataset, "definitions TSV")->required());
    cfg.apply(eval_def->add_option("--out", ef.out, "report file (stdout when absent)"));
    eval_def->callback([&] { run_eval_definitions(ef); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
