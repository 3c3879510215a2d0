#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vasekit/dimensions.hpp"
#include "vasekit/similarity.hpp"

namespace vasekit {

// Per-dimension weights, canonical order. Defaults: fabric 0.20,
// technique 0.20, shape 0.15, dating 0.15, decoration 0.20,
// attribution 0.10; they sum to 1.0 exactly.
struct RewardWeights {
    double fabric = 0.20;
    double technique = 0.20;
    double shape = 0.15;
    double dating = 0.15;
    double decoration = 0.20;
    double attribution = 0.10;

    double get(Dimension dim) const;
    // Pairwise grouping; sums the default vector to 1.0 exactly.
    double sum() const { return (fabric + technique) + (shape + dating) + (decoration + attribution); }

    bool operator==(const RewardWeights&) const = default;
};

struct RewardConfig {
    RewardWeights weights{};
    // Similarity threshold: a dimension scores only when sim >= tau.
    double tau = 0.7;
    // Penalty coefficients for length, repetition, irrelevance.
    double alpha_length = 0.1;
    double alpha_repetition = 0.1;
    double alpha_irrelevant = 0.15;
    // Bonus scale on the sequence-match ratio.
    double beta = 0.1;
    // Acceptable caption length band, in tokens.
    int length_min = 15;
    int length_max = 120;
    // A sentence counts as irrelevant when its best slot similarity is below this.
    double tau_irrelevant = 0.2;

    // Throws InvalidConfig on violated invariants (weights >= 0 summing to
    // 1.0 within 1e-9, tau in [0,1], alphas/beta >= 0, length_min < length_max).
    void validate() const;

    bool operator==(const RewardConfig&) const = default;
};

// Component penalties, each in [0,1], plus the weighted total
// total = alpha_l*length + alpha_r*repetition + alpha_i*irrelevant.
struct PenaltyBreakdown {
    double length = 0.0;
    double repetition = 0.0;
    double irrelevant = 0.0;
    double total = 0.0;
};

struct RewardResult {
    std::array<double, kDimensionCount> sims{};     // cosine per dimension, 0 when a slot is absent
    std::array<double, kDimensionCount> rewards{};  // thresholded sims
    PenaltyBreakdown penalty;
    double bonus = 0.0;  // in [0, beta]
    double raw = 0.0;    // sum(w_i * r_i) - P + B
    double value = 0.0;  // raw clamped to [0, 1]
};

// Thresholded dimensional reward: negatives clamp to 0, then
// r = sim if sim >= tau else 0. Boundary is inclusive.
double dimensional_reward(double sim, double tau);

// Quality-control penalties over a generated caption.
//   length:     0 inside [length_min, length_max], otherwise the relative
//               deviation from the nearest bound, capped at 1.
//   repetition: 1 - distinct/total trigrams for captions of >= 3 tokens.
//   irrelevant: fraction of sentences whose best similarity against any
//               populated target slot falls below tau_irrelevant.
// Empty caption -> length 1, repetition 0, irrelevant 1.
PenaltyBreakdown compute_penalty(std::string_view caption, const DimensionSlots& target_slots,
                                 const RewardConfig& cfg, const SimilarityProvider& provider);

// Full caption reward: generated slots via extract_slots, per-dimension
// cosine against target slots (absent side -> 0), thresholding, penalties,
// sequence-match bonus against the target caption, and the final clamp to
// the unit interval. Requires at least one populated target slot.
RewardResult compute_reward(std::string_view generated, const DimensionSlots& target_slots,
                            std::string_view target_caption, const RewardConfig& cfg,
                            const SimilarityProvider& provider, const Lexicon& lexicon = Lexicon::defaults());

struct AdvantageResult {
    std::vector<double> rewards;
    double mean = 0.0;
    double stddev = 0.0;  // population
    std::vector<double> advantages;
};

// Group-relative advantages over one rollout group:
// A_i = (R_i - mean) / (stddev + epsilon), all zeros when stddev <= epsilon.
AdvantageResult group_advantages(std::span<const double> rewards, double epsilon = 1e-8);

}  // namespace vasekit
