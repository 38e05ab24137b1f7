#pragma once

// Embedding provider backed by an HTTP service speaking the texts/vectors
// wire contract. The service's declared dimension is enforced on every reply.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kgnav/embedding.hpp"
#include "kgnav/errors.hpp"
#include "kgnav/net.hpp"

namespace kgnav {

inline EmbeddingVector remote_embed(const std::string& service_url,
                                    const std::string& text, int timeout_ms,
                                    std::size_t expected_dimension) {
    const nlohmann::json request = {{"texts", {text}}};
    const std::string body =
        http_post(service_url, request.dump(), "application/json", timeout_ms);

    nlohmann::json doc = nlohmann::json::parse(body, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("vectors") ||
        !doc["vectors"].is_array() || doc["vectors"].size() != 1 ||
        !doc["vectors"][0].is_array())
        throw FormatError("embedder response missing vectors[0]");

    EmbeddingVector v;
    for (const auto& x : doc["vectors"][0]) {
        if (!x.is_number()) throw FormatError("embedder vector entry not a number");
        v.push_back(x.get<double>());
    }
    if (v.size() != expected_dimension)
        throw DimensionError("embedder returned dimension " +
                             std::to_string(v.size()) + ", expected " +
                             std::to_string(expected_dimension));
    return v;
}

class RemoteEmbedder final : public EmbeddingProvider {
public:
    RemoteEmbedder(std::string service_url, std::size_t dimension, int timeout_ms)
        : url_(std::move(service_url)), dimension_(dimension), timeout_ms_(timeout_ms) {}

    std::string name() const override { return "remote"; }
    std::size_t dimension() const override { return dimension_; }

    EmbeddingVector embed(const std::string& text) const override {
        return remote_embed(url_, text, timeout_ms_, dimension_);
    }

private:
    std::string url_;
    std::size_t dimension_;
    int timeout_ms_;
};

} // namespace kgnav
