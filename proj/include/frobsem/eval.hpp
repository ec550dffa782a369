#pragma once

// The three evaluation protocols: verb disambiguation by sentence similarity,
// transitive/intransitive comparison, and term/definition classification.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "frobsem/compose.hpp"
#include "frobsem/lexicon.hpp"

namespace frobsem {

// One annotator judgement row of the disambiguation dataset.
struct DisambigEntry {
    std::string annotator_id;
    std::string target_verb;
    std::string subject;
    std::string object;
    std::string landmark_verb;
    int score = 1;  // 1..7
    enum class Group { High, Low } group = Group::High;
};

struct TransIntransItem {
    std::string target_verb;
    std::string subject;
    std::string object;
    std::string high_landmark;
    std::string low_landmark;
};

enum class TermPos { Noun, Verb };

// A term with its three definitions, main definition first. Noun terms carry
// noun-phrase definitions, verb terms verb-phrase definitions.
struct DefinitionEntry {
    std::string term;
    TermPos pos = TermPos::Noun;
    std::array<std::vector<std::string>, 3> definitions;
};

std::vector<DisambigEntry> load_disambig_dataset(const std::string& path);
std::vector<TransIntransItem> load_trans_intrans_dataset(const std::string& path);
std::vector<DefinitionEntry> load_definition_dataset(const std::string& path);

struct SpearmanResult {
    double rho = 0.0;
    bool degenerate = false;  // a constant series; rho reported as 0
};

// Pearson correlation of the rank-transformed series; ties receive average
// ranks. Throws std::invalid_argument for length mismatch or fewer than two
// points.
SpearmanResult spearman_rho(std::span<const double> xs, std::span<const double> ys);

struct DisambigReport {
    CompositionModel model = CompositionModel::Multp;
    int rows = 0;
    std::int64_t missing_lookups = 0;
    double mean_high = 0.0;
    double mean_low = 0.0;
    SpearmanResult rho;
    struct Item {
        std::string annotator_id, target_verb, subject, object, landmark_verb;
        DisambigEntry::Group group = DisambigEntry::Group::High;
        int score = 1;
        double cos = 0.0;
    };
    std::vector<Item> items;

    void write_tsv(std::ostream& out) const;
};

// Composes <subject, target, object> and <subject, landmark, object> per row,
// reports Spearman's rho between the cosines and the human scores over all
// rows, plus the mean cosine for the high- and low-landmark groups.
DisambigReport eval_disambiguation(const std::vector<DisambigEntry>& entries,
                                   CompositionModel model, const Lexicon& lexicon);

struct TransIntransReport {
    CompositionModel model = CompositionModel::Multp;
    int items = 0;
    std::int64_t missing_lookups = 0;
    // strict inequalities against the sentence's own intransitive version
    int high_errors = 0;
    int low_errors = 0;
    std::int64_t unrelated_errors = 0;
    std::int64_t unrelated_total = 0;  // items * (items - 1)
    struct Item {
        std::string target_verb;
        double sim_own = 0.0, sim_high = 0.0, sim_low = 0.0;
        int unrelated_above = 0;
    };
    std::vector<Item> per_item;

    void write_tsv(std::ostream& out) const;
};

// Builds the transitive sentence and the object-dropped intransitive versions
// for every item and counts the error categories with strict inequalities
// (ties are not errors).
TransIntransReport eval_trans_intrans(const std::vector<TransIntransItem>& items,
                                      CompositionModel model, const Lexicon& lexicon);

struct DefinitionReport {
    CompositionModel model = CompositionModel::Multp;

    struct Diag {
        std::string term;
        int def_index = 0;  // 0 = main definition
        std::string assigned_term;
        double cos = 0.0;
    };

    struct PosBlock {
        bool present = false;
        int terms = 0;
        double precision = 0.0;
        double recall = 0.0;
        double f1 = 0.0;
        double mrr = 0.0;
        std::array<int, 4> rank_buckets{};  // 1, 2-5, 6-10, rest
        std::vector<int> main_ranks;        // per term, input order
        std::vector<Diag> diags;
    };

    std::int64_t missing_lookups = 0;
    PosBlock nouns;
    PosBlock verbs;

    void write_tsv(std::ostream& out) const;
};

// Classifies every definition to the argmax-cosine term of the same part of
// speech (ties to the lexicographically smaller term), averages the per-term
// F1 scores, and ranks each main definition among all same-pos definitions
// (bucketed 1 / 2-5 / 6-10 / rest, plus the mean reciprocal rank).
DefinitionReport eval_definitions(const std::vector<DefinitionEntry>& entries,
                                  CompositionModel model, const Lexicon& lexicon);

}  // namespace frobsem
