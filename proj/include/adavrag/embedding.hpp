#pragma once
// Fixed-dimension embedding vector with the cosine kernel shared by every
// index scan (the parallel path and the serial reference must score pairs
// with bit-identical arithmetic, so both call cosine()).

#include "adavrag/errors.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

namespace adavrag {

struct EmbeddingVector {
    std::vector<double> values;

    std::size_t dim() const { return values.size(); }
    bool empty() const { return values.empty(); }

    double norm() const {
        double s = 0.0;
        for (double v : values) s += v * v;
        return std::sqrt(s);
    }

    // In-place L2 normalization. Zero vectors stay zero.
    void normalize() {
        double n = norm();
        if (n > 0.0) {
            for (double& v : values) v /= n;
        }
    }

    void validate_finite() const {
        for (double v : values) {
            if (!std::isfinite(v)) throw BackendMalformed("embedding contains non-finite value");
        }
    }

    bool operator==(const EmbeddingVector& other) const { return values == other.values; }
};

inline double cosine(const EmbeddingVector& a, const EmbeddingVector& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("cosine: dim " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
    }
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        dot += a.values[i] * b.values[i];
        na += a.values[i] * a.values[i];
        nb += b.values[i] * b.values[i];
    }
    double denom = std::sqrt(na) * std::sqrt(nb);
    if (denom == 0.0) return 0.0;
    return dot / denom;
}

} // namespace adavrag
