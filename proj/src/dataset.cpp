#include "vasekit/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "vasekit/errors.hpp"

namespace vasekit {

using ordered_json = nlohmann::ordered_json;

std::string_view to_string(QuestionType type) {
    switch (type) {
        case QuestionType::Fabric: return "fabric";
        case QuestionType::Technique: return "technique";
        case QuestionType::Shape: return "shape";
        case QuestionType::Caption: return "caption";
        case QuestionType::Dating: return "dating";
        case QuestionType::Decoration: return "decoration";
        case QuestionType::Attribution: return "attribution";
        case QuestionType::Provenance: return "provenance";
    }
    return "unknown";
}

std::optional<QuestionType> question_type_from_string(std::string_view name) {
    for (QuestionType type : kAllQuestionTypes) {
        if (to_string(type) == name) return type;
    }
    return std::nullopt;
}

std::string_view to_string(Split split) {
    switch (split) {
        case Split::Train: return "train";
        case Split::Val: return "val";
        case Split::Test: return "test";
    }
    return "unknown";
}

std::optional<Split> split_from_string(std::string_view name) {
    if (name == "train") return Split::Train;
    if (name == "val") return Split::Val;
    if (name == "test") return Split::Test;
    return std::nullopt;
}

std::string_view to_string(FindingKind kind) {
    switch (kind) {
        case FindingKind::DuplicateId: return "DuplicateId";
        case FindingKind::DuplicateQuestionType: return "DuplicateQuestionType";
        case FindingKind::EmptyAnswer: return "EmptyAnswer";
        case FindingKind::NonTemplateQuestion: return "NonTemplateQuestion";
    }
    return "Unknown";
}

const VaseEntry* DatasetManifest::find(std::string_view vase_id) const {
    for (const auto& entry : entries) {
        if (entry.vase_id == vase_id) return &entry;
    }
    return nullptr;
}

std::map<QuestionType, std::size_t> DatasetManifest::qa_type_counts() const {
    std::map<QuestionType, std::size_t> counts;
    for (const auto& entry : entries) {
        for (const auto& qa : entry.qa_pairs) ++counts[qa.question_type];
    }
    return counts;
}

std::size_t DatasetManifest::total_qa_pairs() const {
    std::size_t total = 0;
    for (const auto& entry : entries) total += entry.qa_pairs.size();
    return total;
}

double DatasetManifest::avg_qa_per_entry() const {
    if (entries.empty()) return 0.0;
    return static_cast<double>(total_qa_pairs()) / static_cast<double>(entries.size());
}

namespace {

std::string entry_label(const ordered_json& obj, std::size_t line) {
    if (obj.contains("vase_id") && obj["vase_id"].is_string()) {
        return "entry '" + obj["vase_id"].get<std::string>() + "'";
    }
    return "entry at line " + std::to_string(line);
}

VaseEntry parse_entry(const ordered_json& obj, std::size_t line) {
    const std::string label = entry_label(obj, line);
    if (!obj.is_object()) throw SchemaError(label + ": not a JSON object");
    if (!obj.contains("vase_id") || !obj["vase_id"].is_string()) {
        throw SchemaError(label + ": missing string field 'vase_id'");
    }
    VaseEntry entry;
    entry.vase_id = obj["vase_id"].get<std::string>();
    if (entry.vase_id.empty()) throw SchemaError(label + ": vase_id is empty");

    if (!obj.contains("views") || !obj["views"].is_array() || obj["views"].empty()) {
        throw SchemaError(label + ": needs at least one view");
    }
    for (const auto& view : obj["views"]) {
        if (!view.is_object() || !view.contains("view_id") || !view.contains("uri")) {
            throw SchemaError(label + ": view objects need 'view_id' and 'uri'");
        }
        entry.views.push_back({view["view_id"].get<std::string>(), view["uri"].get<std::string>()});
    }

    if (!obj.contains("qa_pairs") || !obj["qa_pairs"].is_array()) {
        throw SchemaError(label + ": missing array field 'qa_pairs'");
    }
    for (const auto& qa : obj["qa_pairs"]) {
        if (!qa.is_object() || !qa.contains("question_type") || !qa.contains("question") ||
            !qa.contains("answer")) {
            throw SchemaError(label + ": qa objects need 'question_type', 'question', 'answer'");
        }
        const std::string type_name = qa["question_type"].get<std::string>();
        const auto type = question_type_from_string(type_name);
        if (!type) throw SchemaError(label + ": unknown question type '" + type_name + "'");
        entry.qa_pairs.push_back({*type, qa["question"].get<std::string>(), qa["answer"].get<std::string>()});
    }

    if (!obj.contains("caption") || !obj["caption"].is_string()) {
        throw SchemaError(label + ": missing string field 'caption'");
    }
    entry.caption = obj["caption"].get<std::string>();

    if (obj.contains("split") && !obj["split"].is_null()) {
        const std::string split_name = obj["split"].get<std::string>();
        const auto split = split_from_string(split_name);
        if (!split) throw SchemaError(label + ": unknown split '" + split_name + "'");
        entry.split = split;
    }
    return entry;
}

ordered_json entry_to_json(const VaseEntry& entry) {
    ordered_json obj;
    obj["vase_id"] = entry.vase_id;
    obj["views"] = ordered_json::array();
    for (const auto& view : entry.views) {
        ordered_json v;
        v["view_id"] = view.view_id;
        v["uri"] = view.uri;
        obj["views"].push_back(std::move(v));
    }
    obj["qa_pairs"] = ordered_json::array();
    for (const auto& qa : entry.qa_pairs) {
        ordered_json q;
        q["question_type"] = std::string(to_string(qa.question_type));
        q["question"] = qa.question;
        q["answer"] = qa.answer;
        obj["qa_pairs"].push_back(std::move(q));
    }
    obj["caption"] = entry.caption;
    if (entry.split) {
        obj["split"] = std::string(to_string(*entry.split));
    } else {
        obj["split"] = nullptr;
    }
    return obj;
}

}  // namespace

DatasetManifest manifest_from_jsonl(std::string_view jsonl, std::string source) {
    DatasetManifest manifest;
    manifest.source = std::move(source);
    std::istringstream in{std::string(jsonl)};
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
        try {
            manifest.entries.push_back(parse_entry(obj, line_no));
        } catch (const nlohmann::json::exception& e) {
            // Ill-typed nested fields (a numeric view_id and the like).
            throw SchemaError(entry_label(obj, line_no) + ": " + e.what());
        }
    }
    if (manifest.entries.empty()) throw SchemaError("manifest has no entries");
    return manifest;
}

DatasetManifest load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open manifest: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return manifest_from_jsonl(buffer.str(), path.string());
}

std::string manifest_to_jsonl(const DatasetManifest& manifest) {
    std::string out;
    for (const auto& entry : manifest.entries) {
        out += entry_to_json(entry).dump();
        out += '\n';
    }
    return out;
}

void save_manifest(const DatasetManifest& manifest, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write manifest: " + path.string());
    out << manifest_to_jsonl(manifest);
}

ValidationReport validate_manifest(const DatasetManifest& manifest) {
    ValidationReport report;
    std::unordered_set<std::string> seen_ids;
    for (const auto& entry : manifest.entries) {
        if (!seen_ids.insert(entry.vase_id).second) {
            report.findings.push_back({FindingKind::DuplicateId, entry.vase_id, "vase_id appears more than once"});
        }
        std::set<QuestionType> seen_types;
        for (const auto& qa : entry.qa_pairs) {
            if (!seen_types.insert(qa.question_type).second) {
                report.findings.push_back({FindingKind::DuplicateQuestionType, entry.vase_id,
                                           "duplicate '" + std::string(to_string(qa.question_type)) + "' question"});
            }
            if (qa.answer.empty()) {
                report.findings.push_back({FindingKind::EmptyAnswer, entry.vase_id,
                                           "empty answer for '" + std::string(to_string(qa.question_type)) + "'"});
            }
            // The six attribute questions follow "What is the <attribute> of the vase?".
            if (qa.question_type != QuestionType::Caption && qa.question_type != QuestionType::Provenance) {
                const std::string expected =
                    "What is the " + std::string(to_string(qa.question_type)) + " of the vase?";
                if (qa.question != expected) {
                    report.findings.push_back({FindingKind::NonTemplateQuestion, entry.vase_id,
                                               "question does not follow the template: '" + qa.question + "'"});
                }
            }
        }
    }
    return report;
}

std::size_t SplitAssignment::count(Split split) const {
    std::size_t n = 0;
    for (const auto& [id, s] : assignment) {
        if (s == split) ++n;
    }
    return n;
}

SplitAssignment split_dataset(const DatasetManifest& manifest, const SplitRatios& ratios, std::uint64_t seed) {
    if (manifest.entries.empty()) throw EmptyManifest("cannot split an empty manifest");
    if (!(ratios.train > 0.0) || !(ratios.val > 0.0) || !(ratios.test > 0.0)) {
        throw InvalidRatios("split ratios must be positive");
    }
    if (std::abs(ratios.train + ratios.val + ratios.test - 1.0) > 1e-9) {
        throw InvalidRatios("split ratios must sum to 1.0");
    }

    std::vector<std::string> ids;
    ids.reserve(manifest.entries.size());
    for (const auto& entry : manifest.entries) ids.push_back(entry.vase_id);

    SplitMix64 rng(seed);
    for (std::size_t i = ids.size() - 1; i > 0; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.next() % (i + 1));
        std::swap(ids[i], ids[j]);
    }

    const std::size_t n = ids.size();
    const auto train_n = static_cast<std::size_t>(std::floor(ratios.train * static_cast<double>(n)));
    const auto val_n = static_cast<std::size_t>(std::floor(ratios.val * static_cast<double>(n)));

    SplitAssignment result;
    result.ratios = ratios;
    result.seed = seed;
    for (std::size_t i = 0; i < n; ++i) {
        Split split = Split::Test;
        if (i < train_n) {
            split = Split::Train;
        } else if (i < train_n + val_n) {
            split = Split::Val;
        }
        result.assignment.emplace(ids[i], split);
    }
    return result;
}

}  // namespace vasekit
