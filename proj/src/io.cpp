#include "vasekit/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vasekit/errors.hpp"
#include "vasekit/version.hpp"

namespace vasekit {

using ordered_json = nlohmann::ordered_json;

namespace {

// Applies `parse(json, line_no)` to each non-blank line.
template <typename T, typename Parse>
std::vector<T> load_jsonl(const std::filesystem::path& path, Parse parse) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path.string());
    std::vector<T> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        ordered_json obj;
        try {
            obj = ordered_json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(line_no, e.what());
        }
        out.push_back(parse(obj, line_no));
    }
    return out;
}

template <typename JsonT>
void require_fields(const JsonT& obj, std::initializer_list<const char*> fields, std::size_t line_no) {
    for (const char* field : fields) {
        if (!obj.contains(field)) {
            throw ParseError(line_no, std::string("missing field '") + field + "'");
        }
    }
}

}  // namespace

std::vector<RolloutRecord> load_rollouts(const std::filesystem::path& path) {
    return load_jsonl<RolloutRecord>(path, [](const ordered_json& obj, std::size_t line_no) {
        require_fields(obj, {"group_id", "vase_id", "generated"}, line_no);
        return RolloutRecord{obj["group_id"].get<std::string>(), obj["vase_id"].get<std::string>(),
                             obj["generated"].get<std::string>()};
    });
}

std::vector<ScoreRecord> load_score_records(const std::filesystem::path& path) {
    return load_jsonl<ScoreRecord>(path, [](const ordered_json& obj, std::size_t line_no) {
        require_fields(obj, {"image_id", "vase_id", "quality_prob", "sim_complete", "sim_fragment",
                             "sim_descriptive"},
                       line_no);
        ScoreRecord record;
        record.image_id = obj["image_id"].get<std::string>();
        record.vase_id = obj["vase_id"].get<std::string>();
        record.quality_prob = obj["quality_prob"].get<double>();
        record.sim_complete = obj["sim_complete"].get<double>();
        record.sim_fragment = obj["sim_fragment"].get<double>();
        record.sim_descriptive = obj["sim_descriptive"].get<double>();
        return record;
    });
}

void save_score_records(const std::vector<ScoreRecord>& records, const std::filesystem::path& path) {
    std::string out;
    for (const auto& record : records) {
        ordered_json obj;
        obj["image_id"] = record.image_id;
        obj["vase_id"] = record.vase_id;
        obj["quality_prob"] = record.quality_prob;
        obj["sim_complete"] = record.sim_complete;
        obj["sim_fragment"] = record.sim_fragment;
        obj["sim_descriptive"] = record.sim_descriptive;
        out += obj.dump();
        out += '\n';
    }
    atomic_write_file(path, out);
}

std::vector<Prediction> load_predictions(const std::filesystem::path& path) {
    return load_jsonl<Prediction>(path, [](const ordered_json& obj, std::size_t line_no) {
        require_fields(obj, {"vase_id", "caption"}, line_no);
        Prediction pred;
        pred.vase_id = obj["vase_id"].get<std::string>();
        pred.caption = obj["caption"].get<std::string>();
        if (obj.contains("answers")) {
            for (const auto& [key, value] : obj["answers"].items()) {
                const auto type = question_type_from_string(key);
                if (!type) throw ParseError(line_no, "unknown question type '" + key + "'");
                pred.answers[*type] = value.get<std::string>();
            }
        }
        return pred;
    });
}

std::string reward_line_json(const RolloutRecord& rollout, const RewardResult& result) {
    ordered_json obj;
    obj["group_id"] = rollout.group_id;
    obj["vase_id"] = rollout.vase_id;
    obj["generated"] = rollout.generated;
    ordered_json sims;
    ordered_json rewards;
    for (Dimension dim : kAllDimensions) {
        const auto i = static_cast<std::size_t>(dim);
        sims[std::string(to_string(dim))] = result.sims[i];
        rewards[std::string(to_string(dim))] = result.rewards[i];
    }
    obj["sims"] = std::move(sims);
    obj["rewards"] = std::move(rewards);
    obj["penalty"] = {{"length", result.penalty.length},
                      {"repetition", result.penalty.repetition},
                      {"irrelevant", result.penalty.irrelevant},
                      {"total", result.penalty.total}};
    obj["bonus"] = result.bonus;
    obj["r_raw"] = result.raw;
    obj["r"] = result.value;
    return obj.dump();
}

std::vector<RewardLine> load_reward_lines(const std::filesystem::path& path) {
    return load_jsonl<RewardLine>(path, [](const ordered_json& obj, std::size_t line_no) {
        require_fields(obj, {"group_id", "r"}, line_no);
        RewardLine line;
        line.group_id = obj["group_id"].get<std::string>();
        line.reward = obj["r"].get<double>();
        line.raw_json = obj.dump();
        return line;
    });
}

std::string eval_report_json(const EvalReport& report, std::string_view engine_version,
                             std::string_view config_hash) {
    ordered_json obj;
    obj["n_items"] = report.n_items;
    ordered_json recall;
    for (const auto& [k, value] : report.recall_at) recall[std::to_string(k)] = value;
    obj["recall_at"] = std::move(recall);
    obj["lexical_similarity"] = report.lexical_similarity;
    ordered_json accuracy;
    for (const auto& [type, value] : report.per_dimension_accuracy) {
        accuracy[std::string(to_string(type))] = value;
    }
    obj["per_dimension_accuracy"] = std::move(accuracy);
    obj["fid"] = report.fid ? ordered_json(*report.fid) : ordered_json(nullptr);
    obj["clip_score"] = report.clip_score ? ordered_json(*report.clip_score) : ordered_json(nullptr);
    obj["engine_version"] = std::string(engine_version);
    obj["config_hash"] = std::string(config_hash);
    return obj.dump(2);
}

std::string retention_table_json(const RetentionTable& table) {
    auto row_json = [](const RetentionRow& row) {
        ordered_json obj;
        obj["stage"] = row.name;
        obj["input"] = row.input_count;
        obj["output"] = row.output_count;
        obj["retention_rate"] = row.retention_rate;
        obj["mean_score"] = row.mean_score ? ordered_json(*row.mean_score) : ordered_json(nullptr);
        return obj;
    };
    ordered_json obj;
    obj["stages"] = ordered_json::array();
    for (const auto& row : table.rows) obj["stages"].push_back(row_json(row));
    obj["overall"] = row_json(table.overall);
    return obj.dump(2);
}

std::vector<std::string> load_id_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path.string());
    std::vector<std::string> ids;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) ids.push_back(line);
    }
    return ids;
}

void atomic_write_file(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write file: " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw Error("short write to: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace vasekit
