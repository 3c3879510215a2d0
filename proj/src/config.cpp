#include "vasekit/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vasekit/errors.hpp"

namespace vasekit {

void EngineConfig::validate() const {
    reward.validate();
    if (provider != "hashed-bow" && provider != "remote") {
        throw InvalidConfig("provider must be 'hashed-bow' or 'remote', got '" + provider + "'");
    }
    if (embedding_dimension < 2) throw InvalidConfig("embedding dimension must be >= 2");
    if (provider == "remote") scorer.validate();
    if (filter.quality_threshold < 0.0 || filter.quality_threshold > 1.0) {
        throw InvalidConfig("quality threshold must be in [0, 1]");
    }
    if (!(split.ratios.train > 0.0) || !(split.ratios.val > 0.0) || !(split.ratios.test > 0.0) ||
        std::abs(split.ratios.train + split.ratios.val + split.ratios.test - 1.0) > 1e-9) {
        throw InvalidConfig("split ratios must be positive and sum to 1.0");
    }
}

namespace {

using nlohmann::json;

void merge_reward(const json& obj, RewardConfig& reward) {
    if (obj.contains("weights")) {
        const auto& weights = obj["weights"];
        reward.weights.fabric = weights.value("fabric", reward.weights.fabric);
        reward.weights.technique = weights.value("technique", reward.weights.technique);
        reward.weights.shape = weights.value("shape", reward.weights.shape);
        reward.weights.dating = weights.value("dating", reward.weights.dating);
        reward.weights.decoration = weights.value("decoration", reward.weights.decoration);
        reward.weights.attribution = weights.value("attribution", reward.weights.attribution);
    }
    reward.tau = obj.value("tau", reward.tau);
    reward.alpha_length = obj.value("alpha_length", reward.alpha_length);
    reward.alpha_repetition = obj.value("alpha_repetition", reward.alpha_repetition);
    reward.alpha_irrelevant = obj.value("alpha_irrelevant", reward.alpha_irrelevant);
    reward.beta = obj.value("beta", reward.beta);
    if (obj.contains("length_band")) {
        const auto& band = obj["length_band"];
        if (!band.is_array() || band.size() != 2) throw InvalidConfig("length_band must be [min, max]");
        reward.length_min = band[0].get<int>();
        reward.length_max = band[1].get<int>();
    }
    reward.tau_irrelevant = obj.value("tau_irrelevant", reward.tau_irrelevant);
}

void merge_scorer(const json& obj, ScorerEndpointConfig& scorer) {
    scorer.base_url = obj.value("base_url", scorer.base_url);
    scorer.timeout_ms = obj.value("timeout_ms", scorer.timeout_ms);
    scorer.max_batch = obj.value("max_batch", scorer.max_batch);
    scorer.max_retries = obj.value("max_retries", scorer.max_retries);
    scorer.backoff_base_ms = obj.value("backoff_base_ms", scorer.backoff_base_ms);
    scorer.jitter = obj.value("jitter", scorer.jitter);
    scorer.max_concurrent = obj.value("max_concurrent", scorer.max_concurrent);
    if (obj.contains("bearer_token") && !obj["bearer_token"].is_null()) {
        scorer.bearer_token = obj["bearer_token"].get<std::string>();
    }
}

}  // namespace

EngineConfig engine_config_from_json_text(std::string_view json_text, EngineConfig base) {
    json obj;
    try {
        obj = json::parse(json_text);
    } catch (const json::exception& e) {
        throw InvalidConfig(std::string("config is not valid JSON: ") + e.what());
    }
    if (!obj.is_object()) throw InvalidConfig("config must be a JSON object");

    if (obj.contains("reward")) merge_reward(obj["reward"], base.reward);
    base.provider = obj.value("provider", base.provider);
    base.embedding_dimension = obj.value("embedding_dimension", base.embedding_dimension);
    if (obj.contains("scorer")) merge_scorer(obj["scorer"], base.scorer);
    if (obj.contains("filter")) {
        base.filter.quality_threshold = obj["filter"].value("quality_threshold", base.filter.quality_threshold);
        base.filter.fragment_margin = obj["filter"].value("fragment_margin", base.filter.fragment_margin);
    }
    if (obj.contains("split")) {
        const auto& split = obj["split"];
        if (split.contains("ratios")) {
            const auto& ratios = split["ratios"];
            if (!ratios.is_array() || ratios.size() != 3) {
                throw InvalidConfig("split ratios must be [train, val, test]");
            }
            base.split.ratios = {ratios[0].get<double>(), ratios[1].get<double>(), ratios[2].get<double>()};
        }
        base.split.seed = split.value("seed", base.split.seed);
    }
    base.lexicon_path = obj.value("lexicon", base.lexicon_path);
    return base;
}

EngineConfig load_engine_config(const std::filesystem::path& path, EngineConfig base) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return engine_config_from_json_text(buffer.str(), std::move(base));
}

std::string engine_config_to_json_text(const EngineConfig& cfg) {
    nlohmann::ordered_json obj;
    obj["reward"] = {
        {"weights",
         {{"fabric", cfg.reward.weights.fabric},
          {"technique", cfg.reward.weights.technique},
          {"shape", cfg.reward.weights.shape},
          {"dating", cfg.reward.weights.dating},
          {"decoration", cfg.reward.weights.decoration},
          {"attribution", cfg.reward.weights.attribution}}},
        {"tau", cfg.reward.tau},
        {"alpha_length", cfg.reward.alpha_length},
        {"alpha_repetition", cfg.reward.alpha_repetition},
        {"alpha_irrelevant", cfg.reward.alpha_irrelevant},
        {"beta", cfg.reward.beta},
        {"length_band", {cfg.reward.length_min, cfg.reward.length_max}},
        {"tau_irrelevant", cfg.reward.tau_irrelevant},
    };
    obj["provider"] = cfg.provider;
    obj["embedding_dimension"] = cfg.embedding_dimension;
    obj["scorer"] = {
        {"base_url", cfg.scorer.base_url},
        {"timeout_ms", cfg.scorer.timeout_ms},
        {"max_batch", cfg.scorer.max_batch},
        {"max_retries", cfg.scorer.max_retries},
        {"backoff_base_ms", cfg.scorer.backoff_base_ms},
        {"jitter", cfg.scorer.jitter},
        {"max_concurrent", cfg.scorer.max_concurrent},
        {"bearer_token", cfg.scorer.bearer_token ? nlohmann::ordered_json(*cfg.scorer.bearer_token)
                                                 : nlohmann::ordered_json(nullptr)},
    };
    obj["filter"] = {
        {"quality_threshold", cfg.filter.quality_threshold},
        {"fragment_margin", cfg.filter.fragment_margin},
    };
    obj["split"] = {
        {"ratios", {cfg.split.ratios.train, cfg.split.ratios.val, cfg.split.ratios.test}},
        {"seed", cfg.split.seed},
    };
    obj["lexicon"] = cfg.lexicon_path;
    return obj.dump(2);
}

std::string engine_config_hash(const EngineConfig& cfg) {
    const std::uint64_t hash = fnv1a64(engine_config_to_json_text(cfg));
    char buffer[17];
    std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
    return std::string(buffer);
}

}  // namespace vasekit
