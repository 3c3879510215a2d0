#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace vasekit {

// Externally computed per-image scores; scoring itself never happens here.
struct ScoreRecord {
    std::string image_id;
    std::string vase_id;
    double quality_prob = 0.0;     // binary classifier confidence
    double sim_complete = 0.0;     // similarity to the complete-vase prompt
    double sim_fragment = 0.0;     // similarity to the fragment prompt
    double sim_descriptive = 0.0;  // similarity to the descriptive prompt

    bool operator==(const ScoreRecord&) const = default;
};

// Order-preserving partition of one stage: kept + rejected == input.
struct FilterPartition {
    std::vector<ScoreRecord> kept;
    std::vector<ScoreRecord> rejected;
};

inline constexpr double kDefaultQualityThreshold = 0.5;
inline constexpr double kDefaultFragmentMargin = 0.1;

// Keep iff quality_prob >= threshold. Boundary inclusive.
FilterPartition quality_gate(std::span<const ScoreRecord> records, double threshold = kDefaultQualityThreshold);

// Keep iff sim_complete - sim_fragment >= margin. Boundary inclusive.
FilterPartition fragment_filter(std::span<const ScoreRecord> records, double margin = kDefaultFragmentMargin);

// Image with the highest sim_descriptive in a single-vase group; ties go to
// the lexicographically smallest image_id. Throws EmptyGroup / MixedGroup.
std::string select_best_view(std::span<const ScoreRecord> group);

// Applies select_best_view per vase_id; kept holds each winner in input order.
FilterPartition view_selection(std::span<const ScoreRecord> records);

// 3D-generation outcome ingested as a plain success list; the criterion is
// the generator's, not ours.
FilterPartition generation_gate(std::span<const ScoreRecord> records,
                                const std::unordered_set<std::string>& succeeded_image_ids);

struct FilterStage {
    std::string name;
    std::vector<ScoreRecord> input;
    std::vector<ScoreRecord> kept;
    bool score_defined = false;  // report mean sim_descriptive of survivors
};

struct RetentionRow {
    std::string name;
    std::size_t input_count = 0;
    std::size_t output_count = 0;
    double retention_rate = 0.0;
    std::optional<double> mean_score;
};

struct RetentionTable {
    std::vector<RetentionRow> rows;
    RetentionRow overall;
};

// Per-stage counts, rates and survivor mean scores plus an overall row.
// Throws ChainMismatch when a stage's input is not the prior stage's output.
RetentionTable pipeline_stats(std::span<const FilterStage> stages);

// Plain-text table with Stage / Input / Output / Retention / Quality Score
// columns, aligned for terminals.
std::string render_retention_table(const RetentionTable& table);

}  // namespace vasekit
