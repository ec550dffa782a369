#pragma once

// Dense tensor algebra over a fixed orthonormal basis: the epsilon/eta maps,
// the basis Frobenius operations, and a generic cup-contraction evaluator.

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "frobsem/pregroup.hpp"

namespace frobsem {

// The distributional vector space W: an ordered list of unique basis lemmas.
class SemanticSpace {
public:
    explicit SemanticSpace(std::vector<std::string> basis);

    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::string>& basis() const { return basis_; }

    // Position of a lemma in the basis, or -1.
    int index_of(const std::string& lemma) const;

    friend bool operator==(const SemanticSpace& a, const SemanticSpace& b) {
        return a.basis_ == b.basis_;
    }

private:
    std::vector<std::string> basis_;
    std::unordered_map<std::string, int> index_;
};

// Dense rank-1/2/3 tensor over W, row-major doubles.
class WordTensor {
public:
    WordTensor() = default;

    static WordTensor zeros(int rank, int dim);
    // Validates the element count and that every entry is finite.
    static WordTensor from_data(int rank, int dim, std::vector<double> data);
    static WordTensor vec(std::vector<double> data);

    int rank() const { return rank_; }
    int dim() const { return dim_; }

    double at(int i) const { return data_[static_cast<size_t>(i)]; }
    double& at(int i) { return data_[static_cast<size_t>(i)]; }
    double at(int i, int j) const { return data_[static_cast<size_t>(i) * dim_ + j]; }
    double& at(int i, int j) { return data_[static_cast<size_t>(i) * dim_ + j]; }
    double at(int i, int j, int k) const {
        return data_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
    }
    double& at(int i, int j, int k) {
        return data_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
    }

    std::span<const double> data() const { return data_; }
    std::vector<double>& raw() { return data_; }
    bool all_finite() const;

    friend bool operator==(const WordTensor&, const WordTensor&) = default;

private:
    WordTensor(int rank, int dim, std::vector<double> data)
        : rank_(rank), dim_(dim), data_(std::move(data)) {}

    int rank_ = 1;
    int dim_ = 0;
    std::vector<double> data_;
};

// epsilon_W: W (x) W -> R over the orthonormal basis, i.e. the trace.
double epsilon(const WordTensor& m);

// eta_W: R -> W (x) W, the maximally entangled state (identity matrix).
WordTensor eta(int dim);

// Frobenius copying: v -> diagonal matrix with v on the diagonal.
WordTensor sigma(const WordTensor& v);

// Frobenius uncopying: matrix -> vector of its diagonal entries.
WordTensor mu(const WordTensor& m);

// Counit: sum of the entries.
double iota(const WordTensor& v);

// Unit: all-ones vector.
WordTensor zeta(int dim);

// Elementwise product (the Frobenius multiplication on rank-1 arguments).
WordTensor pointwise(const WordTensor& u, const WordTensor& v);

WordTensor add(const WordTensor& u, const WordTensor& v);
WordTensor scale(const WordTensor& t, double factor);

// M*v, or M^T*v when transposed is set.
WordTensor matvec(const WordTensor& m, const WordTensor& v, bool transposed = false);

WordTensor transpose(const WordTensor& m);

// u (x) v as a matrix.
WordTensor outer(const WordTensor& u, const WordTensor& v);

double dot(const WordTensor& u, const WordTensor& v);
double l2_norm(const WordTensor& t);
// Unit-norm copy; the zero tensor stays zero.
WordTensor l2_normalized(const WordTensor& t);

// Cosine of the angle between two vectors; 0 when either norm is 0.
double cosine(const WordTensor& u, const WordTensor& v);

enum class VerbExpansion { CopySubject, CopyObject };

// Embeds a verb matrix into W (x) W (x) W by copying the subject (row) or
// object (column) dimension: T[i][i][j] = M[i][j] resp. T[i][j][j] = M[i][j].
WordTensor expand_verb(const WordTensor& m, VerbExpansion mode);

// Wiring of a word sequence: reduction cups/survivors index the flattened
// wires, where word w contributes word_ranks[w] consecutive wires.
struct ContractionPlan {
    Reduction reduction;
    std::vector<int> word_ranks;
};

// Plan induced by a pregroup type assignment: each word's wire count is the
// length of its type and the wiring is the type reduction.
ContractionPlan plan_for(const std::vector<PregroupType>& types);

// Contraction result of any rank; empty shape means a scalar.
struct DenseTensor {
    std::vector<int> shape;
    std::vector<double> data;

    int rank() const { return static_cast<int>(shape.size()); }
    double scalar() const;

    friend bool operator==(const DenseTensor&, const DenseTensor&) = default;
};

// Applies the plan to the word tensors: every cup becomes a summed index pair
// and the survivors become output axes, in survivor order. Throws
// std::invalid_argument when ranks, dimensions, or the wiring disagree.
DenseTensor eval_contraction(std::span<const WordTensor> words, const ContractionPlan& plan);

}  // namespace frobsem
