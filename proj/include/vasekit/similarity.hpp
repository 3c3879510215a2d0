#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vasekit {

inline constexpr std::size_t kDefaultEmbeddingDimension = 1024;

struct EmbeddingVector {
    std::vector<double> values;
    std::string provider;

    std::size_t dimension() const { return values.size(); }
};

// Text -> vector contract used by the reward engine and the eval metrics.
// Implementations must be safe for concurrent callers.
class SimilarityProvider {
public:
    virtual ~SimilarityProvider() = default;

    virtual EmbeddingVector embed(std::string_view text) const = 0;

    // Default loops over embed(); remote providers override to batch.
    virtual std::vector<EmbeddingVector> embed_batch(const std::vector<std::string>& texts) const;

    virtual std::size_t dimension() const = 0;
    virtual bool deterministic() const = 0;
    virtual std::string name() const = 0;
};

// 64-bit FNV-1a over a token's bytes; buckets are hash % dimension.
std::uint64_t fnv1a64(std::string_view data);

// Term-count vector over hashed normalized tokens. Empty text -> zero vector.
// Requires dimension >= 2.
EmbeddingVector embed_hashed_bow(std::string_view text, std::size_t dimension = kDefaultEmbeddingDimension);

// Built-in deterministic provider. Stateless, no model downloads.
class HashedBowProvider final : public SimilarityProvider {
public:
    explicit HashedBowProvider(std::size_t dimension = kDefaultEmbeddingDimension);

    EmbeddingVector embed(std::string_view text) const override;
    std::size_t dimension() const override { return dimension_; }
    bool deterministic() const override { return true; }
    std::string name() const override { return "hashed-bow"; }

private:
    std::size_t dimension_;
};

// Standard cosine in [-1, 1]. Either operand with zero norm -> 0.0.
// Throws DimensionMismatch on unequal dimensions.
double cosine(const EmbeddingVector& u, const EmbeddingVector& v);

// Ratcliff-Obershelp ratio over the characters of the normalized strings:
// 2*M / (|a| + |b|) with M from recursive longest-common-substring block
// matching, the pair taken in canonical (lexicographic) order so the result
// is exactly symmetric. Both sides empty -> 1.0.
double sequence_match_ratio(std::string_view a, std::string_view b);

}  // namespace vasekit
