#include "frobsem/tensor.hpp"

#include <cmath>
#include <stdexcept>

namespace frobsem {

namespace {

size_t element_count(int rank, int dim) {
    size_t n = 1;
    for (int r = 0; r < rank; ++r) n *= static_cast<size_t>(dim);
    return n;
}

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

void require_rank(const WordTensor& t, int rank, const char* what) {
    require(t.rank() == rank, what);
}

void require_same_space(const WordTensor& a, const WordTensor& b) {
    require(a.dim() == b.dim(), "tensors live in different spaces");
}

}  // namespace

SemanticSpace::SemanticSpace(std::vector<std::string> basis) : basis_(std::move(basis)) {
    require(!basis_.empty(), "semantic space needs at least one basis lemma");
    index_.reserve(basis_.size());
    for (size_t i = 0; i < basis_.size(); ++i) {
        auto [it, fresh] = index_.emplace(basis_[i], static_cast<int>(i));
        (void)it;
        require(fresh, "duplicate basis lemma");
    }
}

int SemanticSpace::index_of(const std::string& lemma) const {
    auto it = index_.find(lemma);
    return it == index_.end() ? -1 : it->second;
}

WordTensor WordTensor::zeros(int rank, int dim) {
    require(rank >= 1 && rank <= 3, "tensor rank must be 1, 2, or 3");
    require(dim >= 0, "negative dimension");
    return WordTensor(rank, dim, std::vector<double>(element_count(rank, dim), 0.0));
}

WordTensor WordTensor::from_data(int rank, int dim, std::vector<double> data) {
    require(rank >= 1 && rank <= 3, "tensor rank must be 1, 2, or 3");
    require(dim >= 0, "negative dimension");
    require(data.size() == element_count(rank, dim), "data size does not match shape");
    WordTensor t(rank, dim, std::move(data));
    require(t.all_finite(), "tensor entries must be finite");
    return t;
}

WordTensor WordTensor::vec(std::vector<double> data) {
    const int dim = static_cast<int>(data.size());
    return from_data(1, dim, std::move(data));
}

bool WordTensor::all_finite() const {
    for (double x : data_)
        if (!std::isfinite(x)) return false;
    return true;
}

double epsilon(const WordTensor& m) {
    require_rank(m, 2, "epsilon expects a matrix");
    double sum = 0.0;
    for (int i = 0; i < m.dim(); ++i) sum += m.at(i, i);
    return sum;
}

WordTensor eta(int dim) {
    require(dim >= 1, "eta needs dimension >= 1");
    WordTensor m = WordTensor::zeros(2, dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

WordTensor sigma(const WordTensor& v) {
    require_rank(v, 1, "sigma expects a vector");
    WordTensor m = WordTensor::zeros(2, v.dim());
    for (int i = 0; i < v.dim(); ++i) m.at(i, i) = v.at(i);
    return m;
}

WordTensor mu(const WordTensor& m) {
    require_rank(m, 2, "mu expects a matrix");
    WordTensor v = WordTensor::zeros(1, m.dim());
    for (int i = 0; i < m.dim(); ++i) v.at(i) = m.at(i, i);
    return v;
}

double iota(const WordTensor& v) {
    require_rank(v, 1, "iota expects a vector");
    double sum = 0.0;
    for (int i = 0; i < v.dim(); ++i) sum += v.at(i);
    return sum;
}

WordTensor zeta(int dim) {
    require(dim >= 1, "zeta needs dimension >= 1");
    return WordTensor::from_data(1, dim, std::vector<double>(static_cast<size_t>(dim), 1.0));
}

WordTensor pointwise(const WordTensor& u, const WordTensor& v) {
    require_rank(u, 1, "pointwise expects vectors");
    require_rank(v, 1, "pointwise expects vectors");
    require_same_space(u, v);
    WordTensor out = WordTensor::zeros(1, u.dim());
    for (int i = 0; i < u.dim(); ++i) out.at(i) = u.at(i) * v.at(i);
    return out;
}

WordTensor add(const WordTensor& u, const WordTensor& v) {
    require(u.rank() == v.rank(), "rank mismatch in add");
    require_same_space(u, v);
    WordTensor out = u;
    for (size_t i = 0; i < out.raw().size(); ++i) out.raw()[i] += v.data()[i];
    return out;
}

WordTensor scale(const WordTensor& t, double factor) {
    WordTensor out = t;
    for (double& x : out.raw()) x *= factor;
    return out;
}

WordTensor matvec(const WordTensor& m, const WordTensor& v, bool transposed) {
    require_rank(m, 2, "matvec expects a matrix");
    require_rank(v, 1, "matvec expects a vector");
    require_same_space(m, v);
    const int d = m.dim();
    WordTensor out = WordTensor::zeros(1, d);
    for (int i = 0; i < d; ++i) {
        double sum = 0.0;
        for (int j = 0; j < d; ++j)
            sum += (transposed ? m.at(j, i) : m.at(i, j)) * v.at(j);
        out.at(i) = sum;
    }
    return out;
}

WordTensor transpose(const WordTensor& m) {
    require_rank(m, 2, "transpose expects a matrix");
    WordTensor out = WordTensor::zeros(2, m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out.at(j, i) = m.at(i, j);
    return out;
}

WordTensor outer(const WordTensor& u, const WordTensor& v) {
    require_rank(u, 1, "outer expects vectors");
    require_rank(v, 1, "outer expects vectors");
    require_same_space(u, v);
    WordTensor out = WordTensor::zeros(2, u.dim());
    for (int i = 0; i < u.dim(); ++i)
        for (int j = 0; j < v.dim(); ++j) out.at(i, j) = u.at(i) * v.at(j);
    return out;
}

double dot(const WordTensor& u, const WordTensor& v) {
    require_rank(u, 1, "dot expects vectors");
    require_rank(v, 1, "dot expects vectors");
    require_same_space(u, v);
    double sum = 0.0;
    for (int i = 0; i < u.dim(); ++i) sum += u.at(i) * v.at(i);
    return sum;
}

double l2_norm(const WordTensor& t) {
    double sum = 0.0;
    for (double x : t.data()) sum += x * x;
    return std::sqrt(sum);
}

WordTensor l2_normalized(const WordTensor& t) {
    const double norm = l2_norm(t);
    if (norm == 0.0) return t;
    return scale(t, 1.0 / norm);
}

double cosine(const WordTensor& u, const WordTensor& v) {
    const double nu = l2_norm(u);
    const double nv = l2_norm(v);
    if (nu == 0.0 || nv == 0.0) return 0.0;
    return dot(u, v) / (nu * nv);
}

WordTensor expand_verb(const WordTensor& m, VerbExpansion mode) {
    require_rank(m, 2, "expand_verb expects a matrix");
    const int d = m.dim();
    WordTensor t = WordTensor::zeros(3, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (mode == VerbExpansion::CopySubject)
                t.at(i, i, j) = m.at(i, j);
            else
                t.at(i, j, j) = m.at(i, j);
        }
    return t;
}

ContractionPlan plan_for(const std::vector<PregroupType>& types) {
    ContractionPlan plan;
    plan.reduction = reduce(types);
    plan.word_ranks.reserve(types.size());
    for (const PregroupType& t : types)
        plan.word_ranks.push_back(static_cast<int>(t.simples.size()));
    return plan;
}

double DenseTensor::scalar() const {
    if (!shape.empty() || data.size() != 1)
        throw std::invalid_argument("contraction result is not a scalar");
    return data[0];
}

DenseTensor eval_contraction(std::span<const WordTensor> words, const ContractionPlan& plan) {
    require(!words.empty(), "contraction needs at least one word");
    require(words.size() == plan.word_ranks.size(), "plan word count mismatch");

    const int d = words[0].dim();
    int total_wires = 0;
    for (size_t w = 0; w < words.size(); ++w) {
        require(words[w].rank() == plan.word_ranks[w], "word rank differs from plan");
        require(words[w].dim() == d, "contraction mixes spaces of different dimension");
        total_wires += plan.word_ranks[w];
    }

    // Wire -> index group: each cup shares one summed group, each survivor
    // gets its own output group, ordered as listed.
    std::vector<int> group(static_cast<size_t>(total_wires), -1);
    const int n_cups = static_cast<int>(plan.reduction.cups.size());
    for (int c = 0; c < n_cups; ++c) {
        auto [i, j] = plan.reduction.cups[static_cast<size_t>(c)];
        require(i >= 0 && j >= 0 && i < total_wires && j < total_wires && i < j,
                "cup index out of range");
        require(group[static_cast<size_t>(i)] == -1 && group[static_cast<size_t>(j)] == -1,
                "cup endpoints overlap");
        group[static_cast<size_t>(i)] = c;
        group[static_cast<size_t>(j)] = c;
    }
    const int n_out = static_cast<int>(plan.reduction.survivors.size());
    for (int s = 0; s < n_out; ++s) {
        const int wire = plan.reduction.survivors[static_cast<size_t>(s)];
        require(wire >= 0 && wire < total_wires, "survivor index out of range");
        require(group[static_cast<size_t>(wire)] == -1, "survivor overlaps a cup");
        group[static_cast<size_t>(wire)] = n_cups + s;
    }
    for (int g : group)
        require(g != -1, "plan does not cover every wire");

    DenseTensor out;
    out.shape.assign(static_cast<size_t>(n_out), d);
    out.data.assign(element_count(n_out, d), 0.0);

    // index[g] holds the current basis index of group g; groups [0, n_cups)
    // are summed, the rest enumerate the output.
    std::vector<int> index(static_cast<size_t>(n_cups + n_out), 0);
    std::vector<size_t> word_offset(words.size(), 0);
    {
        size_t off = 0;
        for (size_t w = 0; w < words.size(); ++w) {
            word_offset[w] = off;
            off += static_cast<size_t>(plan.word_ranks[w]);
        }
    }

    auto term = [&]() {
        double prod = 1.0;
        for (size_t w = 0; w < words.size(); ++w) {
            size_t flat = 0;
            for (int r = 0; r < plan.word_ranks[w]; ++r)
                flat = flat * static_cast<size_t>(d) +
                       static_cast<size_t>(index[static_cast<size_t>(group[word_offset[w] + static_cast<size_t>(r)])]);
            prod *= words[w].data()[flat];
        }
        return prod;
    };

    if (d == 0) return out;

    size_t out_flat = 0;
    while (true) {
        // sum over all cup assignments for the current output index
        double acc = 0.0;
        while (true) {
            acc += term();
            int c = n_cups - 1;
            for (; c >= 0; --c) {
                if (++index[static_cast<size_t>(c)] < d) break;
                index[static_cast<size_t>(c)] = 0;
            }
            if (c < 0) break;
        }
        out.data[out_flat] = acc;

        int s = n_out - 1;
        for (; s >= 0; --s) {
            if (++index[static_cast<size_t>(n_cups + s)] < d) break;
            index[static_cast<size_t>(n_cups + s)] = 0;
        }
        if (s < 0) break;
        // recompute the flat output position from the odometer
        out_flat = 0;
        for (int k = 0; k < n_out; ++k)
            out_flat = out_flat * static_cast<size_t>(d) +
                       static_cast<size_t>(index[static_cast<size_t>(n_cups + k)]);
    }
    return out;
}

}  // namespace frobsem
