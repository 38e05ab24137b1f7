#pragma once

// Embedding providers and similarity scoring. The hash embedder is a
// deterministic bag-of-words stand-in for a CLS-style sentence encoder:
// bit-exact across platforms, which keeps every downstream test reproducible.

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kgnav/errors.hpp"
#include "kgnav/text.hpp"

namespace kgnav {

using EmbeddingVector = std::vector<double>;

// Embeds whole texts into fixed-dimension vectors. Implementations must be
// deterministic per instance and safe for concurrent embed() calls.
class EmbeddingProvider {
public:
    virtual ~EmbeddingProvider() = default;
    virtual std::string name() const = 0;
    virtual std::size_t dimension() const = 0;
    virtual EmbeddingVector embed(const std::string& text) const = 0;
};

inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char byte : std::string_view(data)) {
        hash ^= byte;
        hash *= 1099511628211ull;  // wrapping by definition of unsigned
    }
    return hash;
}

// Token-count vector hashed with FNV-1a into 256 buckets, L2-normalized.
// A tokenless input stays the zero vector.
class HashEmbedder final : public EmbeddingProvider {
public:
    static constexpr std::size_t kDimension = 256;

    std::string name() const override { return "hash-fnv1a-256"; }
    std::size_t dimension() const override { return kDimension; }

    EmbeddingVector embed(const std::string& text) const override {
        EmbeddingVector v(kDimension, 0.0);
        for (const auto& token : tokenize(text))
            v[fnv1a64(token) % kDimension] += 1.0;
        double sumsq = 0.0;
        for (double x : v) sumsq += x * x;
        if (sumsq == 0.0) return v;
        const double norm = std::sqrt(sumsq);
        for (double& x : v) x /= norm;
        return v;
    }
};

inline double dot(const EmbeddingVector& u, const EmbeddingVector& v) {
    if (u.size() != v.size())
        throw DimensionError("dot: dimensions " + std::to_string(u.size()) +
                             " vs " + std::to_string(v.size()));
    double sum = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) sum += u[i] * v[i];
    return sum;
}

// u.v / (|u||v|); zero when either vector has zero norm, so tokenless texts
// never win a ranking.
inline double cosine(const EmbeddingVector& u, const EmbeddingVector& v) {
    if (u.size() != v.size())
        throw DimensionError("cosine: dimensions " + std::to_string(u.size()) +
                             " vs " + std::to_string(v.size()));
    double uu = 0.0, vv = 0.0, uv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        uu += u[i] * u[i];
        vv += v[i] * v[i];
        uv += u[i] * v[i];
    }
    if (uu == 0.0 || vv == 0.0) return 0.0;
    return uv / (std::sqrt(uu) * std::sqrt(vv));
}

} // namespace kgnav
