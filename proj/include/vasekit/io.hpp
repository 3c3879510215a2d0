#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "vasekit/filter.hpp"
#include "vasekit/metrics.hpp"
#include "vasekit/reward.hpp"

namespace vasekit {

// One sampled generation to score: {"group_id": str, "vase_id": str, "generated": str}.
struct RolloutRecord {
    std::string group_id;
    std::string vase_id;
    std::string generated;
};

std::vector<RolloutRecord> load_rollouts(const std::filesystem::path& path);

// Scores file: one ScoreRecord object per line.
std::vector<ScoreRecord> load_score_records(const std::filesystem::path& path);
void save_score_records(const std::vector<ScoreRecord>& records, const std::filesystem::path& path);

// Predictions file: {"vase_id": str, "caption": str, "answers": {type: str}}.
std::vector<Prediction> load_predictions(const std::filesystem::path& path);

// Reward output line: inputs echoed plus the full breakdown.
std::string reward_line_json(const RolloutRecord& rollout, const RewardResult& result);

// Reward line reader for the advantage pass; returns (group_id, echoed json, R).
struct RewardLine {
    std::string group_id;
    std::string raw_json;
    double reward = 0.0;
};

std::vector<RewardLine> load_reward_lines(const std::filesystem::path& path);

std::string eval_report_json(const EvalReport& report, std::string_view engine_version,
                             std::string_view config_hash);

std::string retention_table_json(const RetentionTable& table);

// Newline-separated ids, blank lines skipped.
std::vector<std::string> load_id_list(const std::filesystem::path& path);

// Write-to-temp-then-rename so interrupted runs never leave a truncated
// file at the final path.
void atomic_write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace vasekit
