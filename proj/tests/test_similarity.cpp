#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "support/oracles.hpp"
#include "vasekit/errors.hpp"
#include "vasekit/similarity.hpp"
#include "vasekit/text.hpp"

using namespace vasekit;

namespace {

std::string random_word(std::mt19937_64& rng, std::size_t max_len = 8) {
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::uniform_int_distribution<int> ch('a', 'e');
    std::string word;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) word.push_back(static_cast<char>(ch(rng)));
    return word;
}

std::string random_text(std::mt19937_64& rng, std::size_t max_words = 12) {
    std::uniform_int_distribution<std::size_t> count(0, max_words);
    std::string text;
    const std::size_t n = count(rng);
    for (std::size_t i = 0; i < n; ++i) {
        if (!text.empty()) text += ' ';
        text += random_word(rng);
    }
    return text;
}

}  // namespace

TEST_CASE("fnv1a64 agrees with the reference implementation") {
    std::mt19937_64 rng(7);
    CHECK(fnv1a64("") == test::oracle_fnv1a64(""));
    for (int i = 0; i < 200; ++i) {
        const std::string word = random_word(rng, 16);
        CHECK(fnv1a64(word) == test::oracle_fnv1a64(word));
    }
}

TEST_CASE("hashed bow puts a repeated token in one bucket") {
    const EmbeddingVector vec = embed_hashed_bow("amphora amphora", 1024);
    std::size_t nonzero = 0;
    double value = 0.0;
    for (double v : vec.values) {
        if (v != 0.0) {
            ++nonzero;
            value = v;
        }
    }
    CHECK(nonzero == 1);
    CHECK(value == 2.0);
}

TEST_CASE("hashed bow is deterministic and dimension-checked") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const std::string text = random_text(rng);
        CHECK(embed_hashed_bow(text, 64).values == embed_hashed_bow(text, 64).values);
    }
    CHECK(embed_hashed_bow("", 16).values == std::vector<double>(16, 0.0));
    CHECK_THROWS_AS(embed_hashed_bow("x", 1), InvalidConfig);
}

TEST_CASE("disjoint buckets give cosine zero once the oracle confirms no collision") {
    const std::size_t bucket_a = test::oracle_fnv1a64("amphora") % 1024;
    const std::size_t bucket_b = test::oracle_fnv1a64("kylix") % 1024;
    REQUIRE(bucket_a != bucket_b);
    CHECK(cosine(embed_hashed_bow("amphora", 1024), embed_hashed_bow("kylix", 1024)) == 0.0);
}

TEST_CASE("cosine basics") {
    const EmbeddingVector u{{1.0, 0.0}, "t"};
    const EmbeddingVector v{{1.0, 1.0}, "t"};
    const EmbeddingVector zero{{0.0, 0.0}, "t"};
    CHECK(cosine(u, u) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cosine(zero, v) == 0.0);
    CHECK(std::abs(cosine(u, v) - 0.7071067811865475) < 1e-9);
    CHECK_THROWS_AS(cosine(u, EmbeddingVector{{1.0, 2.0, 3.0}, "t"}), DimensionMismatch);
}

TEST_CASE("cosine symmetry is exact and scaling is invariant") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> value(-2.0, 2.0);
    std::uniform_real_distribution<double> scale(0.1, 50.0);
    for (int i = 0; i < 100; ++i) {
        EmbeddingVector u{{}, "t"};
        EmbeddingVector v{{}, "t"};
        for (int d = 0; d < 8; ++d) {
            u.values.push_back(value(rng));
            v.values.push_back(value(rng));
        }
        CHECK(cosine(u, v) == cosine(v, u));
        const double c = scale(rng);
        EmbeddingVector scaled = u;
        for (double& x : scaled.values) x *= c;
        CHECK(std::abs(cosine(scaled, v) - cosine(u, v)) < 1e-12);
        CHECK(cosine(u, v) >= -1.0 - 1e-12);
        CHECK(cosine(u, v) <= 1.0 + 1e-12);
    }
}

TEST_CASE("identical token multisets embed to cosine exactly one") {
    CHECK(cosine(embed_hashed_bow("red amphora attic", 1024), embed_hashed_bow("attic red amphora", 1024)) ==
          1.0);
}

TEST_CASE("sequence match ratio fixed points") {
    CHECK(sequence_match_ratio("same text", "same text") == 1.0);
    CHECK(sequence_match_ratio("abcd", "wxyz") == 0.0);
    CHECK(sequence_match_ratio("abcd", "bcde") == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(sequence_match_ratio("", "") == 1.0);
    CHECK(sequence_match_ratio("", "abc") == 0.0);
}

TEST_CASE("sequence match ratio is symmetric, bounded and matches the oracle") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        const std::string a = random_text(rng, 6);
        const std::string b = random_text(rng, 6);
        const double forward = sequence_match_ratio(a, b);
        const double backward = sequence_match_ratio(b, a);
        CHECK(forward >= 0.0);
        CHECK(forward <= 1.0);
        CHECK(std::abs(forward - backward) < 1e-12);
        // The ratio contract fixes the canonical operand order; give the
        // oracle the same orientation.
        std::string na = normalize_text(a);
        std::string nb = normalize_text(b);
        if (nb < na) std::swap(na, nb);
        const double expected = test::oracle_match_ratio(na, nb);
        CHECK(std::abs(forward - expected) < 1e-12);
    }
}
