#include "vasekit/filter.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_map>

#include "vasekit/errors.hpp"

namespace vasekit {

namespace {

template <typename Keep>
FilterPartition partition_records(std::span<const ScoreRecord> records, Keep keep) {
    FilterPartition out;
    for (const auto& record : records) {
        (keep(record) ? out.kept : out.rejected).push_back(record);
    }
    return out;
}

}  // namespace

FilterPartition quality_gate(std::span<const ScoreRecord> records, double threshold) {
    return partition_records(records, [&](const ScoreRecord& r) { return r.quality_prob >= threshold; });
}

FilterPartition fragment_filter(std::span<const ScoreRecord> records, double margin) {
    return partition_records(records,
                             [&](const ScoreRecord& r) { return r.sim_complete - r.sim_fragment >= margin; });
}

std::string select_best_view(std::span<const ScoreRecord> group) {
    if (group.empty()) throw EmptyGroup("view selection over an empty group");
    const std::string& vase_id = group.front().vase_id;
    const ScoreRecord* best = &group.front();
    for (const auto& record : group) {
        if (record.vase_id != vase_id) {
            throw MixedGroup("view group mixes vases '" + vase_id + "' and '" + record.vase_id + "'");
        }
        if (record.sim_descriptive > best->sim_descriptive ||
            (record.sim_descriptive == best->sim_descriptive && record.image_id < best->image_id)) {
            best = &record;
        }
    }
    return best->image_id;
}

FilterPartition view_selection(std::span<const ScoreRecord> records) {
    std::unordered_map<std::string, std::vector<ScoreRecord>> groups;
    for (const auto& record : records) groups[record.vase_id].push_back(record);

    std::unordered_set<std::string> winners;
    winners.reserve(groups.size());
    for (const auto& [vase_id, group] : groups) {
        winners.insert(select_best_view(group));
    }
    return partition_records(records, [&](const ScoreRecord& r) { return winners.count(r.image_id) > 0; });
}

FilterPartition generation_gate(std::span<const ScoreRecord> records,
                                const std::unordered_set<std::string>& succeeded_image_ids) {
    return partition_records(records,
                             [&](const ScoreRecord& r) { return succeeded_image_ids.count(r.image_id) > 0; });
}

namespace {

bool same_sequence(const std::vector<ScoreRecord>& a, const std::vector<ScoreRecord>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].image_id != b[i].image_id) return false;
    }
    return true;
}

double mean_descriptive(const std::vector<ScoreRecord>& records) {
    double sum = 0.0;
    for (const auto& record : records) sum += record.sim_descriptive;
    return records.empty() ? 0.0 : sum / static_cast<double>(records.size());
}

}  // namespace

RetentionTable pipeline_stats(std::span<const FilterStage> stages) {
    if (stages.empty()) throw InvalidConfig("pipeline needs at least one stage");

    RetentionTable table;
    for (std::size_t i = 0; i < stages.size(); ++i) {
        const FilterStage& stage = stages[i];
        if (i > 0 && !same_sequence(stage.input, stages[i - 1].kept)) {
            throw ChainMismatch("stage '" + stage.name + "' input is not the output of '" + stages[i - 1].name +
                                "'");
        }
        RetentionRow row;
        row.name = stage.name;
        row.input_count = stage.input.size();
        row.output_count = stage.kept.size();
        row.retention_rate =
            row.input_count == 0 ? 0.0
                                 : static_cast<double>(row.output_count) / static_cast<double>(row.input_count);
        if (stage.score_defined) row.mean_score = mean_descriptive(stage.kept);
        table.rows.push_back(std::move(row));
    }

    table.overall.name = "Overall Pipeline";
    table.overall.input_count = table.rows.front().input_count;
    table.overall.output_count = table.rows.back().output_count;
    table.overall.retention_rate = table.overall.input_count == 0
                                       ? 0.0
                                       : static_cast<double>(table.overall.output_count) /
                                             static_cast<double>(table.overall.input_count);
    for (const auto& row : table.rows) {
        if (row.mean_score) table.overall.mean_score = row.mean_score;
    }
    return table;
}

std::string render_retention_table(const RetentionTable& table) {
    auto format_row = [](const RetentionRow& row) {
        char rate[16];
        std::snprintf(rate, sizeof(rate), "%.1f%%", row.retention_rate * 100.0);
        char score[16];
        if (row.mean_score) {
            std::snprintf(score, sizeof(score), "%.3f", *row.mean_score);
        } else {
            std::snprintf(score, sizeof(score), "-");
        }
        char line[160];
        std::snprintf(line, sizeof(line), "%-28s %10zu %10zu %10s %14s", row.name.c_str(), row.input_count,
                      row.output_count, rate, score);
        return std::string(line);
    };

    std::string out;
    char header[160];
    std::snprintf(header, sizeof(header), "%-28s %10s %10s %10s %14s", "Filtering Stage", "Input", "Output",
                  "Retention", "Quality Score");
    out += header;
    out += '\n';
    out.append(76, '-');
    out += '\n';
    for (const auto& row : table.rows) {
        out += format_row(row);
        out += '\n';
    }
    out.append(76, '-');
    out += '\n';
    out += format_row(table.overall);
    out += '\n';
    return out;
}

}  // namespace vasekit
