#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vasekit/similarity.hpp"

namespace vasekit {

namespace detail {
class ConcurrencyGate;
}

struct ScorerEndpointConfig {
    std::string base_url;
    int timeout_ms = 10000;
    std::size_t max_batch = 64;
    int max_retries = 3;
    int backoff_base_ms = 250;
    double jitter = 0.2;
    std::size_t max_concurrent = 4;
    std::optional<std::string> bearer_token;

    void validate() const;  // throws InvalidConfig
};

struct ServiceDescriptor {
    std::size_t dimension = 0;
    std::string model;
};

struct ClientStats {
    std::uint64_t requests = 0;
    std::uint64_t retries = 0;
    std::uint64_t failures = 0;
};

// JSON-over-HTTP client for an external embedding service.
//   POST {base}/v1/embed   {"texts": [...], "normalize": bool}
//                       -> {"vectors": [[...]], "dimension": n, "model": tag}
//   GET  {base}/v1/health -> {"dimension": n, "model": tag}
// 429/5xx and transport failures retry with exponential backoff and jitter;
// other 4xx are fatal. A batch either fully succeeds or the whole call
// throws; partial results never escape. Safe for concurrent callers; total
// in-flight requests stay within max_concurrent.
class ScorerClient {
public:
    explicit ScorerClient(ScorerEndpointConfig cfg);
    ~ScorerClient();

    // Input order is preserved; texts are split into batches of <= max_batch.
    std::vector<EmbeddingVector> fetch_embeddings(const std::vector<std::string>& texts) const;

    ServiceDescriptor health_check() const;

    ClientStats stats() const;
    const ScorerEndpointConfig& config() const { return cfg_; }

private:
    std::string post_embed_batch(const std::vector<std::string>& batch) const;
    std::vector<EmbeddingVector> parse_embed_response(const std::string& body, std::size_t expected) const;

    ScorerEndpointConfig cfg_;
    std::unique_ptr<detail::ConcurrencyGate> gate_;
    mutable std::atomic<std::uint64_t> requests_{0};
    mutable std::atomic<std::uint64_t> retries_{0};
    mutable std::atomic<std::uint64_t> failures_{0};
};

// SimilarityProvider backed by a ScorerClient, so neural similarity can
// replace the built-in provider without code changes.
class RemoteProvider final : public SimilarityProvider {
public:
    explicit RemoteProvider(std::shared_ptr<ScorerClient> client);

    EmbeddingVector embed(std::string_view text) const override;
    std::vector<EmbeddingVector> embed_batch(const std::vector<std::string>& texts) const override;
    std::size_t dimension() const override { return dimension_; }
    bool deterministic() const override { return false; }
    std::string name() const override { return "remote:" + model_; }

private:
    std::shared_ptr<ScorerClient> client_;
    std::size_t dimension_ = 0;
    std::string model_;
};

}  // namespace vasekit
