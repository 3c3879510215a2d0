#include "vasekit/similarity.hpp"

#include <algorithm>
#include <cmath>

#include "vasekit/errors.hpp"
#include "vasekit/text.hpp"

namespace vasekit {

std::vector<EmbeddingVector> SimilarityProvider::embed_batch(const std::vector<std::string>& texts) const {
    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(embed(t));
    return out;
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char byte : data) {
        hash ^= byte;
        hash *= 1099511628211ULL;
    }
    return hash;
}

EmbeddingVector embed_hashed_bow(std::string_view text, std::size_t dimension) {
    if (dimension < 2) throw InvalidConfig("hashed-bow dimension must be >= 2");
    EmbeddingVector vec;
    vec.values.assign(dimension, 0.0);
    vec.provider = "hashed-bow";
    for (const auto& token : tokenize(text)) {
        vec.values[fnv1a64(token) % dimension] += 1.0;
    }
    return vec;
}

HashedBowProvider::HashedBowProvider(std::size_t dimension) : dimension_(dimension) {
    if (dimension < 2) throw InvalidConfig("hashed-bow dimension must be >= 2");
}

EmbeddingVector HashedBowProvider::embed(std::string_view text) const {
    return embed_hashed_bow(text, dimension_);
}

double cosine(const EmbeddingVector& u, const EmbeddingVector& v) {
    if (u.dimension() != v.dimension()) {
        throw DimensionMismatch("cosine over dimensions " + std::to_string(u.dimension()) + " and " +
                                std::to_string(v.dimension()));
    }
    double dot = 0.0;
    double nu = 0.0;
    double nv = 0.0;
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        dot += u.values[i] * v.values[i];
        nu += u.values[i] * u.values[i];
        nv += v.values[i] * v.values[i];
    }
    if (nu == 0.0 || nv == 0.0) return 0.0;
    // sqrt(nu * nv) keeps cosine(v, v) exactly 1.0: same-vector operands give
    // dot == nu == nv, and IEEE sqrt(x*x) == x. The clamp absorbs the odd
    // ulp of rounding on correlated pairs.
    return std::clamp(dot / std::sqrt(nu * nv), -1.0, 1.0);
}

namespace {

struct Match {
    std::size_t pos_a;
    std::size_t pos_b;
    std::size_t length;
};

// Longest common substring of a[a_lo, a_hi) x b[b_lo, b_hi); ties resolved
// toward the earliest position in a, then in b.
Match longest_match(std::string_view a, std::string_view b, std::size_t a_lo, std::size_t a_hi,
                    std::size_t b_lo, std::size_t b_hi) {
    Match best{a_lo, b_lo, 0};
    // lengths[j] = length of the common suffix ending at a[i], b[j].
    std::vector<std::size_t> lengths(b_hi - b_lo, 0);
    for (std::size_t i = a_lo; i < a_hi; ++i) {
        std::vector<std::size_t> next(b_hi - b_lo, 0);
        for (std::size_t j = b_lo; j < b_hi; ++j) {
            if (a[i] != b[j]) continue;
            std::size_t len = 1;
            if (i > a_lo && j > b_lo) len = lengths[j - b_lo - 1] + 1;
            next[j - b_lo] = len;
            if (len > best.length) {
                best = Match{i - len + 1, j - len + 1, len};
            }
        }
        lengths = std::move(next);
    }
    return best;
}

std::size_t matched_chars(std::string_view a, std::string_view b, std::size_t a_lo, std::size_t a_hi,
                          std::size_t b_lo, std::size_t b_hi) {
    if (a_lo >= a_hi || b_lo >= b_hi) return 0;
    const Match m = longest_match(a, b, a_lo, a_hi, b_lo, b_hi);
    if (m.length == 0) return 0;
    return m.length + matched_chars(a, b, a_lo, m.pos_a, b_lo, m.pos_b) +
           matched_chars(a, b, m.pos_a + m.length, a_hi, m.pos_b + m.length, b_hi);
}

}  // namespace

double sequence_match_ratio(std::string_view a, std::string_view b) {
    std::string na = normalize_text(a);
    std::string nb = normalize_text(b);
    if (na.empty() && nb.empty()) return 1.0;
    if (na.empty() || nb.empty()) return 0.0;
    // Block matching breaks length ties toward the earlier position, which
    // is orientation-dependent; fixing a canonical operand order keeps the
    // ratio exactly symmetric.
    if (nb < na) std::swap(na, nb);
    const std::size_t matched = matched_chars(na, nb, 0, na.size(), 0, nb.size());
    return 2.0 * static_cast<double>(matched) / static_cast<double>(na.size() + nb.size());
}

}  // namespace vasekit
