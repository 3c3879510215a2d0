#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "vasekit/dataset.hpp"
#include "vasekit/reward.hpp"
#include "vasekit/scorer_client.hpp"

namespace vasekit {

struct FilterConfig {
    double quality_threshold = 0.5;
    double fragment_margin = 0.1;
};

struct SplitConfig {
    SplitRatios ratios{};
    std::uint64_t seed = 42;
};

// Everything a batch run needs, merged defaults <- config file <- flags.
struct EngineConfig {
    RewardConfig reward{};
    std::string provider = "hashed-bow";  // "hashed-bow" | "remote"
    std::size_t embedding_dimension = kDefaultEmbeddingDimension;
    ScorerEndpointConfig scorer{};
    FilterConfig filter{};
    SplitConfig split{};
    std::string lexicon_path;  // empty -> built-in lexicon

    void validate() const;  // throws InvalidConfig
};

EngineConfig engine_config_from_json_text(std::string_view json_text, EngineConfig base = {});
EngineConfig load_engine_config(const std::filesystem::path& path, EngineConfig base = {});
std::string engine_config_to_json_text(const EngineConfig& cfg);

// FNV-1a over the canonical JSON form; stable across runs and platforms.
std::string engine_config_hash(const EngineConfig& cfg);

}  // namespace vasekit
