#include "vasekit/scorer_client.hpp"

#include <chrono>
#include <cmath>
#include <condition_variable>
#include <mutex>
#include <random>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "vasekit/errors.hpp"

namespace vasekit {

void ScorerEndpointConfig::validate() const {
    if (base_url.empty()) throw InvalidConfig("scorer base_url is empty");
    if (base_url.rfind("http://", 0) != 0 && base_url.rfind("https://", 0) != 0) {
        throw InvalidConfig("scorer base_url must start with http:// or https://");
    }
    if (timeout_ms <= 0) throw InvalidConfig("scorer timeout must be > 0");
    if (max_batch < 1) throw InvalidConfig("scorer max_batch must be >= 1");
    if (max_retries < 0) throw InvalidConfig("scorer max_retries must be >= 0");
    if (backoff_base_ms < 0) throw InvalidConfig("scorer backoff base must be >= 0");
    if (jitter < 0.0 || jitter >= 1.0) throw InvalidConfig("scorer jitter must be in [0, 1)");
    if (max_concurrent < 1) throw InvalidConfig("scorer max_concurrent must be >= 1");
}

namespace detail {

// Counting gate bounding the client's total in-flight requests.
class ConcurrencyGate {
public:
    explicit ConcurrencyGate(std::size_t slots) : slots_(slots) {}

    void acquire() {
        std::unique_lock lock(mutex_);
        cv_.wait(lock, [&] { return slots_ > 0; });
        --slots_;
    }

    void release() {
        {
            std::lock_guard lock(mutex_);
            ++slots_;
        }
        cv_.notify_one();
    }

private:
    std::mutex mutex_;
    std::condition_variable cv_;
    std::size_t slots_;
};

}  // namespace detail

namespace {

struct GateGuard {
    detail::ConcurrencyGate* gate;
    explicit GateGuard(detail::ConcurrencyGate& g) : gate(&g) { gate->acquire(); }
    ~GateGuard() { gate->release(); }
    GateGuard(const GateGuard&) = delete;
    GateGuard& operator=(const GateGuard&) = delete;
};

bool retryable_status(int status) {
    return status == 429 || (status >= 500 && status < 600);
}

std::chrono::milliseconds backoff_delay(const ScorerEndpointConfig& cfg, int attempt) {
    const double base = static_cast<double>(cfg.backoff_base_ms) * std::pow(2.0, attempt);
    thread_local std::mt19937_64 rng{std::random_device{}()};
    std::uniform_real_distribution<double> spread(1.0 - cfg.jitter, 1.0 + cfg.jitter);
    return std::chrono::milliseconds(static_cast<long>(base * spread(rng)));
}

httplib::Client make_http_client(const ScorerEndpointConfig& cfg) {
    httplib::Client client(cfg.base_url);
    const auto seconds = cfg.timeout_ms / 1000;
    const auto microseconds = (cfg.timeout_ms % 1000) * 1000;
    client.set_connection_timeout(seconds, microseconds);
    client.set_read_timeout(seconds, microseconds);
    client.set_write_timeout(seconds, microseconds);
    if (cfg.bearer_token) client.set_bearer_token_auth(*cfg.bearer_token);
    return client;
}

}  // namespace

ScorerClient::ScorerClient(ScorerEndpointConfig cfg) : cfg_(std::move(cfg)) {
    cfg_.validate();
    gate_ = std::make_unique<detail::ConcurrencyGate>(cfg_.max_concurrent);
}

ScorerClient::~ScorerClient() = default;

// One request with the retry budget applied; returns the response body.
std::string ScorerClient::post_embed_batch(const std::vector<std::string>& batch) const {
    nlohmann::json payload;
    payload["texts"] = batch;
    payload["normalize"] = false;
    const std::string body = payload.dump();

    std::string last_error;
    for (int attempt = 0; attempt <= cfg_.max_retries; ++attempt) {
        if (attempt > 0) {
            retries_.fetch_add(1, std::memory_order_relaxed);
            std::this_thread::sleep_for(backoff_delay(cfg_, attempt - 1));
        }
        GateGuard guard(*gate_);
        httplib::Client client = make_http_client(cfg_);
        requests_.fetch_add(1, std::memory_order_relaxed);
        auto res = client.Post("/v1/embed", body, "application/json");
        if (!res) {
            last_error = "transport failure: " + httplib::to_string(res.error());
            continue;
        }
        if (res->status >= 200 && res->status < 300) return res->body;
        if (retryable_status(res->status)) {
            last_error = "retryable status " + std::to_string(res->status);
            continue;
        }
        failures_.fetch_add(1, std::memory_order_relaxed);
        throw TransportError("embed request failed with status " + std::to_string(res->status));
    }
    failures_.fetch_add(1, std::memory_order_relaxed);
    throw TransportError("embed request failed after " + std::to_string(cfg_.max_retries + 1) +
                         " attempts: " + last_error);
}

std::vector<EmbeddingVector> ScorerClient::parse_embed_response(const std::string& body,
                                                                std::size_t expected) const {
    nlohmann::json obj;
    try {
        obj = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
        throw ProtocolError(std::string("embed response is not valid JSON: ") + e.what());
    }
    if (!obj.contains("vectors") || !obj["vectors"].is_array()) {
        throw ProtocolError("embed response is missing 'vectors'");
    }
    const auto& vectors = obj["vectors"];
    if (vectors.size() != expected) {
        throw ProtocolError("embed response has " + std::to_string(vectors.size()) + " vectors for " +
                            std::to_string(expected) + " texts");
    }
    std::size_t dimension = 0;
    if (obj.contains("dimension") && obj["dimension"].is_number_unsigned()) {
        dimension = obj["dimension"].get<std::size_t>();
    }
    const std::string model = obj.value("model", "unknown");

    std::vector<EmbeddingVector> out;
    out.reserve(vectors.size());
    for (const auto& values : vectors) {
        if (!values.is_array()) throw ProtocolError("embed response vector is not an array");
        EmbeddingVector vec;
        vec.provider = "remote:" + model;
        try {
            vec.values = values.get<std::vector<double>>();
        } catch (const nlohmann::json::exception& e) {
            throw ProtocolError(std::string("embed response vector is not numeric: ") + e.what());
        }
        if (dimension == 0) dimension = vec.values.size();
        if (vec.values.size() != dimension) {
            throw ProtocolError("embed response mixes dimensions " + std::to_string(dimension) + " and " +
                                std::to_string(vec.values.size()));
        }
        out.push_back(std::move(vec));
    }
    return out;
}

std::vector<EmbeddingVector> ScorerClient::fetch_embeddings(const std::vector<std::string>& texts) const {
    if (texts.empty()) throw InvalidConfig("fetch_embeddings needs at least one text");

    std::vector<std::pair<std::size_t, std::size_t>> batches;  // [begin, end)
    for (std::size_t begin = 0; begin < texts.size(); begin += cfg_.max_batch) {
        batches.emplace_back(begin, std::min(begin + cfg_.max_batch, texts.size()));
    }

    std::vector<std::vector<EmbeddingVector>> results(batches.size());
    std::vector<std::exception_ptr> errors(batches.size());

    auto run_batch = [&](std::size_t index) {
        try {
            const auto [begin, end] = batches[index];
            const std::vector<std::string> batch(texts.begin() + static_cast<std::ptrdiff_t>(begin),
                                                 texts.begin() + static_cast<std::ptrdiff_t>(end));
            results[index] = parse_embed_response(post_embed_batch(batch), batch.size());
        } catch (...) {
            errors[index] = std::current_exception();
        }
    };

    if (batches.size() == 1) {
        run_batch(0);
    } else {
        // Worker pool sized by the concurrency cap; the gate still bounds
        // total in-flight requests across concurrent callers.
        std::atomic<std::size_t> next{0};
        const std::size_t workers_n = std::min(batches.size(), cfg_.max_concurrent);
        std::vector<std::thread> workers;
        workers.reserve(workers_n);
        for (std::size_t w = 0; w < workers_n; ++w) {
            workers.emplace_back([&] {
                for (std::size_t index = next.fetch_add(1); index < batches.size();
                     index = next.fetch_add(1)) {
                    run_batch(index);
                }
            });
        }
        for (auto& worker : workers) worker.join();
    }

    for (const auto& error : errors) {
        if (error) std::rethrow_exception(error);
    }

    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    std::size_t dimension = 0;
    for (auto& batch_result : results) {
        for (auto& vec : batch_result) {
            if (dimension == 0) dimension = vec.dimension();
            if (vec.dimension() != dimension) {
                throw ProtocolError("batches returned mismatching dimensions " + std::to_string(dimension) +
                                    " and " + std::to_string(vec.dimension()));
            }
            out.push_back(std::move(vec));
        }
    }
    return out;
}

ServiceDescriptor ScorerClient::health_check() const {
    std::string last_error;
    for (int attempt = 0; attempt <= cfg_.max_retries; ++attempt) {
        if (attempt > 0) {
            retries_.fetch_add(1, std::memory_order_relaxed);
            std::this_thread::sleep_for(backoff_delay(cfg_, attempt - 1));
        }
        GateGuard guard(*gate_);
        httplib::Client client = make_http_client(cfg_);
        requests_.fetch_add(1, std::memory_order_relaxed);
        auto res = client.Get("/v1/health");
        if (!res) {
            last_error = "transport failure: " + httplib::to_string(res.error());
            continue;
        }
        if (res->status >= 200 && res->status < 300) {
            nlohmann::json obj;
            try {
                obj = nlohmann::json::parse(res->body);
            } catch (const nlohmann::json::exception& e) {
                throw ProtocolError(std::string("health response is not valid JSON: ") + e.what());
            }
            if (!obj.contains("dimension") || !obj["dimension"].is_number_unsigned()) {
                throw ProtocolError("health response is missing 'dimension'");
            }
            ServiceDescriptor descriptor;
            descriptor.dimension = obj["dimension"].get<std::size_t>();
            descriptor.model = obj.value("model", "unknown");
            return descriptor;
        }
        if (retryable_status(res->status)) {
            last_error = "retryable status " + std::to_string(res->status);
            continue;
        }
        failures_.fetch_add(1, std::memory_order_relaxed);
        throw TransportError("health check failed with status " + std::to_string(res->status));
    }
    failures_.fetch_add(1, std::memory_order_relaxed);
    throw TransportError("health check failed after " + std::to_string(cfg_.max_retries + 1) +
                         " attempts: " + last_error);
}

ClientStats ScorerClient::stats() const {
    return {requests_.load(std::memory_order_relaxed), retries_.load(std::memory_order_relaxed),
            failures_.load(std::memory_order_relaxed)};
}

RemoteProvider::RemoteProvider(std::shared_ptr<ScorerClient> client) : client_(std::move(client)) {
    const ServiceDescriptor descriptor = client_->health_check();
    dimension_ = descriptor.dimension;
    model_ = descriptor.model;
}

EmbeddingVector RemoteProvider::embed(std::string_view text) const {
    return client_->fetch_embeddings({std::string(text)}).front();
}

std::vector<EmbeddingVector> RemoteProvider::embed_batch(const std::vector<std::string>& texts) const {
    if (texts.empty()) return {};
    return client_->fetch_embeddings(texts);
}

}  // namespace vasekit
