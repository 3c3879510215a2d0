#include <doctest.h>

#include <string>
#include <thread>
#include <vector>

#include "support/mock_scorer.hpp"
#include "vasekit/errors.hpp"
#include "vasekit/scorer_client.hpp"

using namespace vasekit;

namespace {

ScorerEndpointConfig fast_config(const std::string& url) {
    ScorerEndpointConfig cfg;
    cfg.base_url = url;
    cfg.timeout_ms = 2000;
    cfg.max_retries = 3;
    cfg.backoff_base_ms = 5;  // keep test retries quick
    cfg.jitter = 0.1;
    return cfg;
}

}  // namespace

TEST_CASE("config validation") {
    ScorerEndpointConfig cfg;
    CHECK_THROWS_AS(cfg.validate(), InvalidConfig);  // empty url
    cfg.base_url = "ftp://nope";
    CHECK_THROWS_AS(cfg.validate(), InvalidConfig);
    cfg.base_url = "http://localhost:1";
    cfg.max_batch = 0;
    CHECK_THROWS_AS(cfg.validate(), InvalidConfig);
    cfg = fast_config("http://localhost:1");
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("batching splits requests and preserves input order") {
    test::MockScorer mock(8);
    ScorerEndpointConfig cfg = fast_config(mock.url());
    cfg.max_batch = 2;
    const ScorerClient client(cfg);

    const std::vector<std::string> texts = {"a", "bb", "ccc"};
    const std::vector<EmbeddingVector> vectors = client.fetch_embeddings(texts);
    CHECK(mock.requests_seen() == 2);  // 3 texts at batch size 2
    REQUIRE(vectors.size() == 3);
    for (std::size_t i = 0; i < texts.size(); ++i) {
        CHECK(vectors[i].dimension() == 8);
        CHECK(vectors[i].values[0] == static_cast<double>(texts[i].size()));
    }
}

TEST_CASE("a 500 is retried and recorded in the stats") {
    test::MockScorer mock(8, [](std::size_t index) { return index == 0 ? 500 : 0; });
    const ScorerClient client(fast_config(mock.url()));

    const auto vectors = client.fetch_embeddings({"hello"});
    REQUIRE(vectors.size() == 1);
    CHECK(vectors[0].values[0] == 5.0);
    CHECK(client.stats().retries == 1);
    CHECK(client.stats().requests == 2);
}

TEST_CASE("retries exhaust into a transport error") {
    test::MockScorer mock(8, [](std::size_t) { return 503; });
    ScorerEndpointConfig cfg = fast_config(mock.url());
    cfg.max_retries = 2;
    const ScorerClient client(cfg);
    CHECK_THROWS_AS(client.fetch_embeddings({"x"}), TransportError);
    CHECK(client.stats().requests == 3);  // initial try + 2 retries
    CHECK(client.stats().failures == 1);
}

TEST_CASE("plain 4xx is fatal without retry") {
    test::MockScorer mock(8, [](std::size_t) { return 403; });
    const ScorerClient client(fast_config(mock.url()));
    CHECK_THROWS_AS(client.fetch_embeddings({"x"}), TransportError);
    CHECK(client.stats().requests == 1);
    CHECK(client.stats().retries == 0);
}

TEST_CASE("cross-batch dimension mismatch names both dimensions") {
    test::MockScorer mock(512, {}, [](std::size_t index) { return index == 0 ? 512 : 768; });
    ScorerEndpointConfig cfg = fast_config(mock.url());
    cfg.max_batch = 2;
    const ScorerClient client(cfg);
    try {
        client.fetch_embeddings({"a", "b", "c"});
        FAIL("expected ProtocolError");
    } catch (const ProtocolError& e) {
        const std::string message = e.what();
        CHECK(message.find("512") != std::string::npos);
        CHECK(message.find("768") != std::string::npos);
    }
}

TEST_CASE("whole calls fail rather than returning partial batches") {
    // The batch carrying the poison text fails on every attempt.
    test::MockScorer mock(8);
    mock.set_body_script([](const std::string& body) {
        return body.find("poison") != std::string::npos ? 500 : 0;
    });
    ScorerEndpointConfig cfg = fast_config(mock.url());
    cfg.max_batch = 1;
    cfg.max_retries = 1;
    const ScorerClient client(cfg);
    CHECK_THROWS_AS(client.fetch_embeddings({"a", "poison"}), TransportError);
}

TEST_CASE("malformed responses are protocol errors") {
    test::MockScorer mock(8);
    mock.set_raw_response("this is not json");
    const ScorerClient client(fast_config(mock.url()));
    CHECK_THROWS_AS(client.fetch_embeddings({"x"}), ProtocolError);

    test::MockScorer strings(8);
    strings.set_raw_response(R"({"vectors": [["a", "b"]], "dimension": 2, "model": "m"})");
    const ScorerClient client2(fast_config(strings.url()));
    CHECK_THROWS_AS(client2.fetch_embeddings({"x"}), ProtocolError);

    test::MockScorer short_count(8);
    short_count.set_raw_response(R"({"vectors": [], "dimension": 2, "model": "m"})");
    const ScorerClient client3(fast_config(short_count.url()));
    CHECK_THROWS_AS(client3.fetch_embeddings({"x"}), ProtocolError);
}

TEST_CASE("health check reports the service descriptor") {
    test::MockScorer mock(512);
    const ScorerClient client(fast_config(mock.url()));
    const ServiceDescriptor descriptor = client.health_check();
    CHECK(descriptor.dimension == 512);
    CHECK(descriptor.model == "mock");
}

TEST_CASE("health check without a dimension field is a protocol error") {
    test::MockScorer mock(512);
    mock.omit_health_dimension();
    const ScorerClient client(fast_config(mock.url()));
    CHECK_THROWS_AS(client.health_check(), ProtocolError);
}

TEST_CASE("unreachable hosts surface as transport errors within the retry budget") {
    ScorerEndpointConfig cfg = fast_config("http://127.0.0.1:9");  // discard port, nothing listens
    cfg.max_retries = 1;
    cfg.timeout_ms = 200;
    const ScorerClient client(cfg);
    CHECK_THROWS_AS(client.health_check(), TransportError);
}

TEST_CASE("the in-flight cap holds under many parallel fetches") {
    test::MockScorer mock(8);
    mock.set_delay_ms(3);  // hold requests open so concurrency actually builds
    ScorerEndpointConfig cfg = fast_config(mock.url());
    cfg.max_concurrent = 4;
    const ScorerClient client(cfg);

    std::vector<std::thread> callers;
    for (int i = 0; i < 32; ++i) {
        callers.emplace_back([&client] { (void)client.fetch_embeddings({"parallel text"}); });
    }
    for (auto& caller : callers) caller.join();
    CHECK(mock.requests_seen() == 32);
    CHECK(mock.max_in_flight() <= 4);
    CHECK(mock.max_in_flight() >= 2);  // the cap was exercised, not idle
}

TEST_CASE("one call with many batches stays within the cap and keeps order") {
    test::MockScorer mock(8);
    mock.set_delay_ms(2);
    ScorerEndpointConfig cfg = fast_config(mock.url());
    cfg.max_batch = 1;
    cfg.max_concurrent = 3;
    const ScorerClient client(cfg);

    std::vector<std::string> texts;
    for (int i = 1; i <= 12; ++i) texts.push_back(std::string(static_cast<std::size_t>(i), 'x'));
    const auto vectors = client.fetch_embeddings(texts);
    REQUIRE(vectors.size() == 12);
    for (std::size_t i = 0; i < texts.size(); ++i) {
        CHECK(vectors[i].values[0] == static_cast<double>(i + 1));
    }
    CHECK(mock.requests_seen() == 12);
    CHECK(mock.max_in_flight() <= 3);
}

TEST_CASE("remote provider adapts the client to the provider contract") {
    test::MockScorer mock(32);
    auto client = std::make_shared<ScorerClient>(fast_config(mock.url()));
    const RemoteProvider provider(client);
    CHECK(provider.dimension() == 32);
    CHECK_FALSE(provider.deterministic());
    CHECK(provider.name() == "remote:mock");
    const EmbeddingVector vec = provider.embed("four");
    CHECK(vec.dimension() == 32);
    CHECK(vec.values[0] == 4.0);
    CHECK(provider.embed_batch({"a", "bb"}).size() == 2);
}
