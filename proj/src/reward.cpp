#include "vasekit/reward.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "vasekit/errors.hpp"
#include "vasekit/text.hpp"

namespace vasekit {

double RewardWeights::get(Dimension dim) const {
    switch (dim) {
        case Dimension::Fabric: return fabric;
        case Dimension::Technique: return technique;
        case Dimension::Shape: return shape;
        case Dimension::Dating: return dating;
        case Dimension::Decoration: return decoration;
        case Dimension::Attribution: return attribution;
    }
    return 0.0;
}

void RewardConfig::validate() const {
    for (Dimension dim : kAllDimensions) {
        if (weights.get(dim) < 0.0) {
            throw InvalidConfig("weight for '" + std::string(to_string(dim)) + "' is negative");
        }
    }
    if (std::abs(weights.sum() - 1.0) > 1e-9) throw InvalidConfig("dimension weights must sum to 1.0");
    if (tau < 0.0 || tau > 1.0) throw InvalidConfig("tau must be in [0, 1]");
    if (alpha_length < 0.0 || alpha_repetition < 0.0 || alpha_irrelevant < 0.0) {
        throw InvalidConfig("penalty coefficients must be >= 0");
    }
    if (beta < 0.0) throw InvalidConfig("beta must be >= 0");
    if (length_min >= length_max) throw InvalidConfig("length band requires length_min < length_max");
    if (tau_irrelevant < 0.0 || tau_irrelevant > 1.0) throw InvalidConfig("tau_irrelevant must be in [0, 1]");
}

double dimensional_reward(double sim, double tau) {
    const double s = std::clamp(sim, 0.0, 1.0);
    return s >= tau ? s : 0.0;
}

namespace {

double length_penalty(std::size_t tokens, int length_min, int length_max) {
    const auto count = static_cast<double>(tokens);
    if (count < length_min) {
        return std::min(1.0, (length_min - count) / static_cast<double>(length_min));
    }
    if (count > length_max) {
        return std::min(1.0, (count - length_max) / static_cast<double>(length_max));
    }
    return 0.0;
}

double repetition_penalty(const std::vector<std::string>& tokens) {
    if (tokens.size() < 3) return 0.0;
    const std::size_t total = tokens.size() - 2;
    std::unordered_set<std::string> distinct;
    for (std::size_t i = 0; i + 2 < tokens.size(); ++i) {
        distinct.insert(tokens[i] + ' ' + tokens[i + 1] + ' ' + tokens[i + 2]);
    }
    return 1.0 - static_cast<double>(distinct.size()) / static_cast<double>(total);
}

double irrelevance_penalty(std::string_view caption, const DimensionSlots& target_slots,
                           double tau_irrelevant, const SimilarityProvider& provider) {
    const std::vector<std::string> sentences = split_sentences(caption);
    if (sentences.empty()) return 1.0;

    std::vector<EmbeddingVector> slot_vecs;
    for (Dimension dim : kAllDimensions) {
        if (target_slots.has(dim)) slot_vecs.push_back(provider.embed(*target_slots.get(dim)));
    }

    std::size_t irrelevant = 0;
    for (const auto& sentence : sentences) {
        const EmbeddingVector sentence_vec = provider.embed(sentence);
        double best = 0.0;
        for (const auto& slot_vec : slot_vecs) {
            best = std::max(best, cosine(sentence_vec, slot_vec));
        }
        if (best < tau_irrelevant) ++irrelevant;
    }
    return static_cast<double>(irrelevant) / static_cast<double>(sentences.size());
}

}  // namespace

PenaltyBreakdown compute_penalty(std::string_view caption, const DimensionSlots& target_slots,
                                 const RewardConfig& cfg, const SimilarityProvider& provider) {
    cfg.validate();
    PenaltyBreakdown penalty;
    const std::vector<std::string> tokens = tokenize(caption);
    if (tokens.empty()) {
        penalty.length = 1.0;
        penalty.repetition = 0.0;
        penalty.irrelevant = 1.0;
    } else {
        penalty.length = length_penalty(tokens.size(), cfg.length_min, cfg.length_max);
        penalty.repetition = repetition_penalty(tokens);
        penalty.irrelevant = irrelevance_penalty(caption, target_slots, cfg.tau_irrelevant, provider);
    }
    penalty.total = cfg.alpha_length * penalty.length + cfg.alpha_repetition * penalty.repetition +
                    cfg.alpha_irrelevant * penalty.irrelevant;
    return penalty;
}

RewardResult compute_reward(std::string_view generated, const DimensionSlots& target_slots,
                            std::string_view target_caption, const RewardConfig& cfg,
                            const SimilarityProvider& provider, const Lexicon& lexicon) {
    cfg.validate();
    if (target_slots.populated_count() == 0) {
        throw InvalidConfig("target slots are all absent; nothing to reward against");
    }

    RewardResult result;
    const DimensionSlots generated_slots = extract_slots(generated, lexicon);

    double weighted = 0.0;
    for (Dimension dim : kAllDimensions) {
        const auto i = static_cast<std::size_t>(dim);
        double sim = 0.0;
        if (generated_slots.has(dim) && target_slots.has(dim)) {
            sim = cosine(provider.embed(*generated_slots.get(dim)), provider.embed(*target_slots.get(dim)));
        }
        result.sims[i] = sim;
        result.rewards[i] = dimensional_reward(sim, cfg.tau);
        weighted += cfg.weights.get(dim) * result.rewards[i];
    }

    result.penalty = compute_penalty(generated, target_slots, cfg, provider);
    result.bonus = cfg.beta * sequence_match_ratio(generated, target_caption);
    result.raw = weighted - result.penalty.total + result.bonus;
    result.value = std::clamp(result.raw, 0.0, 1.0);
    return result;
}

AdvantageResult group_advantages(std::span<const double> rewards, double epsilon) {
    if (rewards.empty()) throw EmptyGroup("advantage normalization needs a non-empty group");

    AdvantageResult result;
    result.rewards.assign(rewards.begin(), rewards.end());

    // Accumulate in sorted order so mean and std do not depend on the
    // group's ordering; permuting rewards then permutes advantages exactly.
    std::vector<double> sorted(rewards.begin(), rewards.end());
    std::sort(sorted.begin(), sorted.end());

    double sum = 0.0;
    for (double r : sorted) sum += r;
    result.mean = sum / static_cast<double>(rewards.size());

    double variance = 0.0;
    for (double r : sorted) {
        const double d = r - result.mean;
        variance += d * d;
    }
    variance /= static_cast<double>(rewards.size());
    result.stddev = std::sqrt(variance);

    result.advantages.resize(rewards.size());
    if (result.stddev <= epsilon) {
        std::fill(result.advantages.begin(), result.advantages.end(), 0.0);
    } else {
        for (std::size_t i = 0; i < rewards.size(); ++i) {
            result.advantages[i] = (rewards[i] - result.mean) / (result.stddev + epsilon);
        }
    }
    return result;
}

}  // namespace vasekit
