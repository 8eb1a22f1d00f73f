#pragma once
// Exact cosine k-NN over a flat row set. The scoring scan is the engine's
// one data-parallel kernel: knn() scores rows with OpenMP, knn_serial() is
// the reference implementation kept for equivalence tests and benchmarks.
// Both paths score each pair through the same cosine() call, so rankings
// are bit-identical.
//
// Stores are mutable only while building; after freeze() they are read-only
// and safe for unlimited concurrent readers. Reads are counted (atomically)
// so tests can assert that Level-1 routing touches no index.

#include "adavrag/embedding.hpp"
#include "adavrag/errors.hpp"

#include <atomic>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace adavrag {

struct VectorRow {
    std::string item_id;
    std::string video_id;
    int clip_id = 0;
    EmbeddingVector embedding;
};

struct SearchHit {
    std::string item_id;
    double score = 0.0;
};

class VectorStore {
public:
    VectorStore() = default;

    VectorStore(VectorStore&& other) noexcept { move_from(std::move(other)); }
    VectorStore& operator=(VectorStore&& other) noexcept {
        if (this != &other) move_from(std::move(other));
        return *this;
    }
    VectorStore(const VectorStore&) = delete;
    VectorStore& operator=(const VectorStore&) = delete;

    // First add pins the store dimension.
    void add(VectorRow row);

    // Hits with cosine strictly greater than threshold, sorted by score
    // descending, ties broken by ascending (video_id, clip_id, item_id),
    // truncated to k. OpenMP-parallel scoring scan.
    std::vector<SearchHit> knn(const EmbeddingVector& query, int k, double threshold) const;

    // Serial reference scan; identical contract and identical results.
    std::vector<SearchHit> knn_serial(const EmbeddingVector& query, int k,
                                      double threshold) const;

    void freeze() { frozen_ = true; }
    bool frozen() const { return frozen_; }

    std::size_t size() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }
    int dim() const { return dim_; }
    const std::vector<VectorRow>& rows() const { return rows_; }
    const VectorRow* find(const std::string& item_id) const;

    uint64_t search_count() const { return search_count_.load(std::memory_order_relaxed); }
    void reset_search_count() { search_count_.store(0, std::memory_order_relaxed); }

private:
    std::vector<VectorRow> rows_;
    std::unordered_map<std::string, std::size_t> by_id_;
    int dim_ = 0;
    bool frozen_ = false;
    mutable std::atomic<uint64_t> search_count_{0};

    void move_from(VectorStore&& other) {
        rows_ = std::move(other.rows_);
        by_id_ = std::move(other.by_id_);
        dim_ = other.dim_;
        frozen_ = other.frozen_;
        search_count_.store(other.search_count_.load(std::memory_order_relaxed),
                            std::memory_order_relaxed);
    }

    std::vector<SearchHit> rank(const std::vector<double>& scores, int k,
                                double threshold) const;
};

} // namespace adavrag
