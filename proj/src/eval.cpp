#include "frobsem/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "frobsem/error.hpp"

namespace frobsem {

namespace {

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

std::vector<std::string> split_spaces(const std::string& text) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && text[i] == ' ') ++i;
        size_t j = i;
        while (j < text.size() && text[j] != ' ') ++j;
        if (j > i) out.push_back(text.substr(i, j - i));
        i = j;
    }
    return out;
}

std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

const char* group_name(DisambigEntry::Group g) {
    return g == DisambigEntry::Group::High ? "high" : "low";
}

const char* pos_name(TermPos pos) { return pos == TermPos::Noun ? "noun" : "verb"; }

}  // namespace

std::vector<DisambigEntry> load_disambig_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset: " + path);
    std::vector<DisambigEntry> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const std::vector<std::string> f = split_tabs(line);
        if (f.size() != 7)
            throw ParseError(path, lineno,
                             "expected annotator<TAB>target<TAB>subject<TAB>object<TAB>landmark"
                             "<TAB>score<TAB>group");
        DisambigEntry e;
        e.annotator_id = f[0];
        e.target_verb = f[1];
        e.subject = f[2];
        e.object = f[3];
        e.landmark_verb = f[4];
        char* end = nullptr;
        const long score = std::strtol(f[5].c_str(), &end, 10);
        if (end != f[5].c_str() + f[5].size() || score < 1 || score > 7)
            throw ParseError(path, lineno, "score must be an integer in 1..7");
        e.score = static_cast<int>(score);
        if (f[6] == "high")
            e.group = DisambigEntry::Group::High;
        else if (f[6] == "low")
            e.group = DisambigEntry::Group::Low;
        else
            throw ParseError(path, lineno, "group must be 'high' or 'low'");
        entries.push_back(std::move(e));
    }
    return entries;
}

std::vector<TransIntransItem> load_trans_intrans_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset: " + path);
    std::vector<TransIntransItem> items;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const std::vector<std::string> f = split_tabs(line);
        if (f.size() != 5)
            throw ParseError(path, lineno,
                             "expected target<TAB>subject<TAB>object<TAB>high<TAB>low");
        for (const std::string& field : f)
            if (field.empty()) throw ParseError(path, lineno, "empty lemma");
        items.push_back({f[0], f[1], f[2], f[3], f[4]});
    }
    return items;
}

std::vector<DefinitionEntry> load_definition_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset: " + path);
    std::vector<DefinitionEntry> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const std::vector<std::string> f = split_tabs(line);
        if (f.size() != 5)
            throw ParseError(path, lineno,
                             "expected term<TAB>pos<TAB>def_main<TAB>def_alt1<TAB>def_alt2");
        DefinitionEntry e;
        e.term = f[0];
        if (e.term.empty()) throw ParseError(path, lineno, "empty term");
        if (f[1] == "noun")
            e.pos = TermPos::Noun;
        else if (f[1] == "verb")
            e.pos = TermPos::Verb;
        else
            throw ParseError(path, lineno, "pos must be 'noun' or 'verb'");
        for (int k = 0; k < 3; ++k) {
            e.definitions[static_cast<size_t>(k)] = split_spaces(f[static_cast<size_t>(k) + 2]);
            if (e.definitions[static_cast<size_t>(k)].empty())
                throw ParseError(path, lineno, "empty definition");
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

namespace {

std::vector<double> average_ranks(std::span<const double> xs) {
    const size_t n = xs.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&xs](size_t a, size_t b) { return xs[a] < xs[b]; });
    std::vector<double> ranks(n, 0.0);
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < n && xs[order[j + 1]] == xs[order[i]]) ++j;
        const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

}  // namespace

SpearmanResult spearman_rho(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("series length mismatch");
    if (xs.size() < 2) throw std::invalid_argument("need at least two points");
    const std::vector<double> rx = average_ranks(xs);
    const std::vector<double> ry = average_ranks(ys);
    const double n = static_cast<double>(rx.size());
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < rx.size(); ++i) {
        mx += rx[i];
        my += ry[i];
    }
    mx /= n;
    my /= n;
    double cov = 0.0, vx = 0.0, vy = 0.0;
    for (size_t i = 0; i < rx.size(); ++i) {
        const double dx = rx[i] - mx;
        const double dy = ry[i] - my;
        cov += dx * dy;
        vx += dx * dx;
        vy += dy * dy;
    }
    if (vx == 0.0 || vy == 0.0) return {0.0, true};
    return {cov / std::sqrt(vx * vy), false};
}

DisambigReport eval_disambiguation(const std::vector<DisambigEntry>& entries,
                                   CompositionModel model, const Lexicon& lexicon) {
    if (entries.empty()) throw std::invalid_argument("empty disambiguation dataset");
    DisambigReport report;
    report.model = model;
    report.rows = static_cast<int>(entries.size());

    std::vector<double> cosines, scores;
    cosines.reserve(entries.size());
    scores.reserve(entries.size());
    double sum_high = 0.0, sum_low = 0.0;
    int n_high = 0, n_low = 0;

    for (const DisambigEntry& e : entries) {
        ComposeDiagnostics diag;
        const WordTensor target = compose_phrase(
            {PhraseKind::TransitiveSentence, {e.subject, e.target_verb, e.object}}, model, lexicon,
            &diag);
        const WordTensor landmark = compose_phrase(
            {PhraseKind::TransitiveSentence, {e.subject, e.landmark_verb, e.object}}, model,
            lexicon, &diag);
        report.missing_lookups += static_cast<std::int64_t>(diag.missing.size());
        const double cos = sentence_similarity(target, landmark);
        cosines.push_back(cos);
        scores.push_back(static_cast<double>(e.score));
        if (e.group == DisambigEntry::Group::High) {
            sum_high += cos;
            ++n_high;
        } else {
            sum_low += cos;
            ++n_low;
        }
        report.items.push_back({e.annotator_id, e.target_verb, e.subject, e.object,
                                e.landmark_verb, e.group, e.score, cos});
    }
    report.mean_high = n_high ? sum_high / n_high : 0.0;
    report.mean_low = n_low ? sum_low / n_low : 0.0;
    report.rho = spearman_rho(cosines, scores);
    return report;
}

void DisambigReport::write_tsv(std::ostream& out) const {
    out << "# task\tdisambiguation\n";
    out << "# rows\t" << rows << "\n";
    out << "# missing_lookups\t" << missing_lookups << "\n";
    out << "# rho_convention\tpooled entry-annotator rows\n";
    if (rho.degenerate) out << "# degenerate_rho\tconstant series, rho reported as 0\n";
    out << "model\thigh\tlow\trho\n";
    out << model_name(model) << '\t' << fmt6(mean_high) << '\t' << fmt6(mean_low) << '\t'
        << fmt6(rho.rho) << "\n";
    out << "# annotator\ttarget\tsubject\tobject\tlandmark\tgroup\tscore\tcosine\n";
    for (const Item& it : items)
        out << "# " << it.annotator_id << '\t' << it.target_verb << '\t' << it.subject << '\t'
            << it.object << '\t' << it.landmark_verb << '\t' << group_name(it.group) << '\t'
            << it.score << '\t' << fmt6(it.cos) << "\n";
}

TransIntransReport eval_trans_intrans(const std::vector<TransIntransItem>& items,
                                      CompositionModel model, const Lexicon& lexicon) {
    TransIntransReport report;
    report.model = model;
    report.items = static_cast<int>(items.size());

    std::vector<WordTensor> transitive, own_intrans;
    transitive.reserve(items.size());
    own_intrans.reserve(items.size());

    for (const TransIntransItem& item : items) {
        ComposeDiagnostics diag;
        const WordTensor s_tr = compose_phrase(
            {PhraseKind::TransitiveSentence, {item.subject, item.target_verb, item.object}}, model,
            lexicon, &diag);
        const WordTensor s_it = compose_phrase(
            {PhraseKind::IntransitiveSentence, {item.subject, item.target_verb}}, model, lexicon,
            &diag);
        const WordTensor s_hi = compose_phrase(
            {PhraseKind::IntransitiveSentence, {item.subject, item.high_landmark}}, model, lexicon,
            &diag);
        const WordTensor s_lo = compose_phrase(
            {PhraseKind::IntransitiveSentence, {item.subject, item.low_landmark}}, model, lexicon,
            &diag);
        report.missing_lookups += static_cast<std::int64_t>(diag.missing.size());

        TransIntransReport::Item per;
        per.target_verb = item.target_verb;
        per.sim_own = sentence_similarity(s_tr, s_it);
        per.sim_high = sentence_similarity(s_tr, s_hi);
        per.sim_low = sentence_similarity(s_tr, s_lo);
        if (per.sim_high > per.sim_own) ++report.high_errors;
        if (per.sim_low > per.sim_own) ++report.low_errors;
        report.per_item.push_back(std::move(per));
        transitive.push_back(s_tr);
        own_intrans.push_back(s_it);
    }

    const size_t n = items.size();
    report.unrelated_total = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n ? n - 1 : 0);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (sentence_similarity(transitive[i], own_intrans[j]) > report.per_item[i].sim_own) {
                ++report.unrelated_errors;
                ++report.per_item[i].unrelated_above;
            }
        }
    }
    return report;
}

void TransIntransReport::write_tsv(std::ostream& out) const {
    auto pct = [](double e, double t) { return t > 0.0 ? 100.0 * e / t : 0.0; };
    out << "# task\ttrans_intrans\n";
    out << "# model\t" << model_name(model) << "\n";
    out << "# missing_lookups\t" << missing_lookups << "\n";
    out << "case\terrors\ttotal\tpercent\n";
    out << "high_above_own\t" << high_errors << '\t' << items << '\t'
        << fmt6(pct(high_errors, items)) << "\n";
    out << "low_above_own\t" << low_errors << '\t' << items << '\t'
        << fmt6(pct(low_errors, items)) << "\n";
    out << "unrelated_above_own\t" << unrelated_errors << '\t' << unrelated_total << '\t'
        << fmt6(pct(static_cast<double>(unrelated_errors), static_cast<double>(unrelated_total)))
        << "\n";
    out << "# target\tsim_own\tsim_high\tsim_low\tunrelated_above\n";
    for (const Item& it : per_item)
        out << "# " << it.target_verb << '\t' << fmt6(it.sim_own) << '\t' << fmt6(it.sim_high)
            << '\t' << fmt6(it.sim_low) << '\t' << it.unrelated_above << "\n";
}

namespace {

DefinitionReport::PosBlock eval_definitions_pos(const std::vector<const DefinitionEntry*>& entries,
                                                TermPos pos, CompositionModel model,
                                                const Lexicon& lexicon,
                                                std::int64_t* missing_lookups) {
    DefinitionReport::PosBlock block;
    block.terms = static_cast<int>(entries.size());
    if (entries.empty()) return block;
    block.present = true;

    const PhraseKind kind =
        pos == TermPos::Noun ? PhraseKind::AdjectiveNoun : PhraseKind::VerbPhrase;

    std::vector<WordTensor> term_vectors;
    term_vectors.reserve(entries.size());
    for (const DefinitionEntry* e : entries) {
        bool missing = false;
        term_vectors.push_back(lexicon.vector_or_zero(Role::Context, e->term, &missing));
        if (missing) ++*missing_lookups;
    }

    // Definitions in input order: entry by entry, main first.
    struct Def {
        size_t entry;
        int index;
        WordTensor vec;
    };
    std::vector<Def> defs;
    defs.reserve(entries.size() * 3);
    for (size_t t = 0; t < entries.size(); ++t) {
        for (int k = 0; k < 3; ++k) {
            ComposeDiagnostics diag;
            WordTensor v = compose_phrase({kind, entries[t]->definitions[static_cast<size_t>(k)]},
                                          model, lexicon, &diag);
            *missing_lookups += static_cast<std::int64_t>(diag.missing.size());
            defs.push_back({t, k, std::move(v)});
        }
    }

    // Classify every definition to its argmax-cosine term; ties fall to the
    // lexicographically smaller term lemma.
    std::vector<size_t> assigned(defs.size(), 0);
    for (size_t d = 0; d < defs.size(); ++d) {
        size_t best = 0;
        double best_cos = cosine(defs[d].vec, term_vectors[0]);
        for (size_t t = 1; t < entries.size(); ++t) {
            const double c = cosine(defs[d].vec, term_vectors[t]);
            if (c > best_cos || (c == best_cos && entries[t]->term < entries[best]->term)) {
                best = t;
                best_cos = c;
            }
        }
        assigned[d] = best;
        block.diags.push_back({entries[defs[d].entry]->term, defs[d].index, entries[best]->term,
                               best_cos});
    }

    // Macro-averaged precision/recall/F1 with each term's own three
    // definitions as its gold class.
    double sum_p = 0.0, sum_r = 0.0, sum_f1 = 0.0;
    for (size_t t = 0; t < entries.size(); ++t) {
        int predicted = 0, correct = 0;
        for (size_t d = 0; d < defs.size(); ++d) {
            if (assigned[d] != t) continue;
            ++predicted;
            if (defs[d].entry == t) ++correct;
        }
        const double p = predicted ? static_cast<double>(correct) / predicted : 0.0;
        const double r = static_cast<double>(correct) / 3.0;
        const double f1 = (p + r) > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
        sum_p += p;
        sum_r += r;
        sum_f1 += f1;
    }
    block.precision = sum_p / static_cast<double>(entries.size());
    block.recall = sum_r / static_cast<double>(entries.size());
    block.f1 = sum_f1 / static_cast<double>(entries.size());

    // Rank of each main definition among all same-pos definitions by cosine
    // against its own term; equal cosines break by definition input order.
    double reciprocal_sum = 0.0;
    for (size_t t = 0; t < entries.size(); ++t) {
        const size_t main_pos = t * 3;
        const double main_cos = cosine(defs[main_pos].vec, term_vectors[t]);
        int rank = 1;
        for (size_t d = 0; d < defs.size(); ++d) {
            if (d == main_pos) continue;
            const double c = cosine(defs[d].vec, term_vectors[t]);
            if (c > main_cos || (c == main_cos && d < main_pos)) ++rank;
        }
        block.main_ranks.push_back(rank);
        reciprocal_sum += 1.0 / static_cast<double>(rank);
        if (rank == 1)
            ++block.rank_buckets[0];
        else if (rank <= 5)
            ++block.rank_buckets[1];
        else if (rank <= 10)
            ++block.rank_buckets[2];
        else
            ++block.rank_buckets[3];
    }
    block.mrr = reciprocal_sum / static_cast<double>(entries.size());
    return block;
}

}  // namespace

DefinitionReport eval_definitions(const std::vector<DefinitionEntry>& entries,
                                  CompositionModel model, const Lexicon& lexicon) {
    DefinitionReport report;
    report.model = model;
    std::vector<const DefinitionEntry*> nouns, verbs;
    for (const DefinitionEntry& e : entries)
        (e.pos == TermPos::Noun ? nouns : verbs).push_back(&e);
    report.nouns = eval_definitions_pos(nouns, TermPos::Noun, model, lexicon,
                                        &report.missing_lookups);
    report.verbs = eval_definitions_pos(verbs, TermPos::Verb, model, lexicon,
                                        &report.missing_lookups);
    return report;
}

void DefinitionReport::write_tsv(std::ostream& out) const {
    out << "# task\tdefinitions\n";
    out << "# model\t" << model_name(model) << "\n";
    out << "# missing_lookups\t" << missing_lookups << "\n";
    out << "pos\tterms\tprecision\trecall\tf1\tmrr\n";
    auto block_row = [&](const PosBlock& b, TermPos pos) {
        if (!b.present) {
            out << "# " << pos_name(pos) << "\tskipped (no entries)\n";
            return;
        }
        out << pos_name(pos) << '\t' << b.terms << '\t' << fmt6(b.precision) << '\t'
            << fmt6(b.recall) << '\t' << fmt6(b.f1) << '\t' << fmt6(b.mrr) << "\n";
    };
    block_row(nouns, TermPos::Noun);
    block_row(verbs, TermPos::Verb);

    out << "pos\trank\tcount\tpercent\n";
    static const char* kBucketNames[4] = {"1", "2-5", "6-10", "rest"};
    auto bucket_rows = [&](const PosBlock& b, TermPos pos) {
        if (!b.present) return;
        for (int k = 0; k < 4; ++k)
            out << pos_name(pos) << '\t' << kBucketNames[k] << '\t'
                << b.rank_buckets[static_cast<size_t>(k)] << '\t'
                << fmt6(100.0 * b.rank_buckets[static_cast<size_t>(k)] / b.terms) << "\n";
    };
    bucket_rows(nouns, TermPos::Noun);
    bucket_rows(verbs, TermPos::Verb);

    out << "# pos\tterm\tdef_index\tassigned\tcosine\n";
    auto diag_rows = [&](const PosBlock& b, TermPos pos) {
        for (const Diag& d : b.diags)
            out << "# " << pos_name(pos) << '\t' << d.term << '\t' << d.def_index << '\t'
                << d.assigned_term << '\t' << fmt6(d.cos) << "\n";
    };
    diag_rows(nouns, TermPos::Noun);
    diag_rows(verbs, TermPos::Verb);
}

}  // namespace frobsem
