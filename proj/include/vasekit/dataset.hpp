#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vasekit {

inline constexpr std::string_view kManifestSchemaVersion = "1";

enum class QuestionType {
    Fabric,
    Technique,
    Shape,
    Caption,
    Dating,
    Decoration,
    Attribution,
    Provenance,
};

inline constexpr std::array<QuestionType, 8> kAllQuestionTypes = {
    QuestionType::Fabric,     QuestionType::Technique,   QuestionType::Shape,
    QuestionType::Caption,    QuestionType::Dating,      QuestionType::Decoration,
    QuestionType::Attribution, QuestionType::Provenance,
};

std::string_view to_string(QuestionType type);
std::optional<QuestionType> question_type_from_string(std::string_view name);

enum class Split { Train, Val, Test };

std::string_view to_string(Split split);
std::optional<Split> split_from_string(std::string_view name);

struct ViewRef {
    std::string view_id;
    std::string uri;

    bool operator==(const ViewRef&) const = default;
};

struct QAPair {
    QuestionType question_type{};
    std::string question;
    std::string answer;

    bool operator==(const QAPair&) const = default;
};

struct VaseEntry {
    std::string vase_id;
    std::vector<ViewRef> views;
    std::vector<QAPair> qa_pairs;
    std::string caption;
    std::optional<Split> split;

    bool operator==(const VaseEntry&) const = default;
};

struct DatasetManifest {
    std::vector<VaseEntry> entries;
    std::string source;
    std::string schema_version{kManifestSchemaVersion};

    const VaseEntry* find(std::string_view vase_id) const;
    std::map<QuestionType, std::size_t> qa_type_counts() const;
    std::size_t total_qa_pairs() const;
    double avg_qa_per_entry() const;

    // Equality is over content, not provenance.
    bool operator==(const DatasetManifest& other) const { return entries == other.entries; }
};

// One VaseEntry object per line. Structural violations (missing fields,
// empty vase_id, no views, unknown question type) raise SchemaError naming
// the entry; broken JSON raises ParseError with the line number. Duplicate
// ids / duplicate question types / empty answers are soft findings reported
// by validate_manifest, so that damaged manifests stay inspectable.
DatasetManifest load_manifest(const std::filesystem::path& path);

// Canonical form: keys in schema order, compact separators, one entry per
// line. load(save(m)) == m and canonical files round-trip byte-identically.
void save_manifest(const DatasetManifest& manifest, const std::filesystem::path& path);

std::string manifest_to_jsonl(const DatasetManifest& manifest);
DatasetManifest manifest_from_jsonl(std::string_view jsonl, std::string source = "");

enum class FindingKind {
    DuplicateId,
    DuplicateQuestionType,
    EmptyAnswer,
    NonTemplateQuestion,
};

std::string_view to_string(FindingKind kind);

struct Finding {
    FindingKind kind{};
    std::string vase_id;
    std::string detail;
};

struct ValidationReport {
    std::vector<Finding> findings;

    bool clean() const { return findings.empty(); }
};

ValidationReport validate_manifest(const DatasetManifest& manifest);

struct SplitRatios {
    double train = 0.70;
    double val = 0.15;
    double test = 0.15;
};

struct SplitAssignment {
    SplitRatios ratios;
    std::uint64_t seed = 0;
    std::map<std::string, Split> assignment;

    std::size_t count(Split split) const;
};

// Deterministic split: entries are shuffled by a Fisher-Yates pass driven by
// a splitmix64 stream seeded with `seed`, then sized train=floor(r1*N),
// val=floor(r2*N), test=remainder. Identical inputs give identical
// assignments on every platform.
SplitAssignment split_dataset(const DatasetManifest& manifest, const SplitRatios& ratios, std::uint64_t seed);

// The generator behind split_dataset; exposed so tests can pin the stream.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

}  // namespace vasekit
