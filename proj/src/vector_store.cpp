#include "adavrag/vector_store.hpp"

#include <algorithm>
#include <stdexcept>

namespace adavrag {

void VectorStore::add(VectorRow row) {
    if (frozen_) throw IndexFrozen("cannot add to a frozen store");
    if (row.embedding.empty()) throw DimensionMismatch("empty embedding");
    row.embedding.validate_finite();
    if (dim_ == 0) {
        dim_ = static_cast<int>(row.embedding.dim());
    } else if (row.embedding.dim() != static_cast<std::size_t>(dim_)) {
        throw DimensionMismatch("embedding dim " + std::to_string(row.embedding.dim()) +
                                " does not match index dim " + std::to_string(dim_));
    }
    if (by_id_.count(row.item_id)) throw DuplicateChunkId("duplicate item id: " + row.item_id);
    by_id_.emplace(row.item_id, rows_.size());
    rows_.push_back(std::move(row));
}

const VectorRow* VectorStore::find(const std::string& item_id) const {
    auto it = by_id_.find(item_id);
    return it == by_id_.end() ? nullptr : &rows_[it->second];
}

std::vector<SearchHit> VectorStore::rank(const std::vector<double>& scores, int k,
                                         double threshold) const {
    std::vector<std::size_t> order;
    order.reserve(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (scores[i] > threshold) order.push_back(i);
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        const VectorRow& ra = rows_[a];
        const VectorRow& rb = rows_[b];
        if (ra.video_id != rb.video_id) return ra.video_id < rb.video_id;
        if (ra.clip_id != rb.clip_id) return ra.clip_id < rb.clip_id;
        return ra.item_id < rb.item_id;
    });
    if (order.size() > static_cast<std::size_t>(k)) order.resize(static_cast<std::size_t>(k));

    std::vector<SearchHit> hits;
    hits.reserve(order.size());
    for (std::size_t idx : order) hits.push_back({rows_[idx].item_id, scores[idx]});
    return hits;
}

std::vector<SearchHit> VectorStore::knn(const EmbeddingVector& query, int k,
                                        double threshold) const {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    search_count_.fetch_add(1, std::memory_order_relaxed);
    if (rows_.empty()) return {};
    if (query.dim() != static_cast<std::size_t>(dim_)) {
        throw DimensionMismatch("query dim " + std::to_string(query.dim()) +
                                " does not match index dim " + std::to_string(dim_));
    }
    std::vector<double> scores(rows_.size());
    const auto n = static_cast<std::ptrdiff_t>(rows_.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        scores[static_cast<std::size_t>(i)] =
            cosine(query, rows_[static_cast<std::size_t>(i)].embedding);
    }
    return rank(scores, k, threshold);
}

std::vector<SearchHit> VectorStore::knn_serial(const EmbeddingVector& query, int k,
                                               double threshold) const {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    search_count_.fetch_add(1, std::memory_order_relaxed);
    if (rows_.empty()) return {};
    if (query.dim() != static_cast<std::size_t>(dim_)) {
        throw DimensionMismatch("query dim " + std::to_string(query.dim()) +
                                " does not match index dim " + std::to_string(dim_));
    }
    std::vector<double> scores(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        scores[i] = cosine(query, rows_[i].embedding);
    }
    return rank(scores, k, threshold);
}

} // namespace adavrag
