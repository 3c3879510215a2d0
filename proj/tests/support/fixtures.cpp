#include "support/fixtures.hpp"

#include <array>
#include <cstdio>

namespace vasekit::test {

namespace {

const std::array<const char*, 7> kShapes = {"amphora", "kylix", "krater", "hydria",
                                            "lekythos", "pelike", "skyphos"};
const std::array<const char*, 5> kFabrics = {"attic", "corinthian", "laconian", "boeotian", "apulian"};
const std::array<const char*, 3> kTechniques = {"red-figure", "black-figure", "white-ground"};
const std::array<const char*, 6> kPainters = {"exekias", "douris", "berlin painter",
                                              "makron",  "oltos",  "achilles painter"};
const std::array<const char*, 5> kMotifs = {"meander", "palmette", "sphinx", "symposium", "chariot"};

std::string zero_padded(std::size_t value, int width) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%0*zu", width, value);
    return buffer;
}

}  // namespace

vasekit::VaseEntry make_entry(std::size_t index) {
    const std::string shape = kShapes[index % kShapes.size()];
    const std::string fabric = kFabrics[index % kFabrics.size()];
    const std::string technique = kTechniques[index % kTechniques.size()];
    const std::string painter = kPainters[index % kPainters.size()];
    const std::string motif = kMotifs[index % kMotifs.size()];
    const std::string year = std::to_string(400 + index);
    const std::string dating = "ca. " + year + " bc";

    vasekit::VaseEntry entry;
    entry.vase_id = "vase-" + zero_padded(index, 4);
    entry.views = {{"front", "renders/" + entry.vase_id + "/front.png"},
                   {"back", "renders/" + entry.vase_id + "/back.png"}};
    entry.caption = "this " + fabric + " " + technique + " " + shape + " was painted by " + painter +
                    " around " + dating + " and shows a " + motif +
                    " above the handle zone of the vessel";

    auto question = [](vasekit::QuestionType type) {
        return "What is the " + std::string(to_string(type)) + " of the vase?";
    };
    entry.qa_pairs = {
        {vasekit::QuestionType::Fabric, question(vasekit::QuestionType::Fabric), fabric},
        {vasekit::QuestionType::Technique, question(vasekit::QuestionType::Technique), technique},
        {vasekit::QuestionType::Shape, question(vasekit::QuestionType::Shape), shape},
        {vasekit::QuestionType::Caption, "Describe the vase.", entry.caption},
        {vasekit::QuestionType::Dating, question(vasekit::QuestionType::Dating), dating},
        {vasekit::QuestionType::Decoration, question(vasekit::QuestionType::Decoration), motif},
        {vasekit::QuestionType::Attribution, question(vasekit::QuestionType::Attribution), painter},
        {vasekit::QuestionType::Provenance, "Where was the vase found?", "found near athens"},
    };
    return entry;
}

vasekit::DatasetManifest make_sample_manifest(std::size_t n) {
    vasekit::DatasetManifest manifest;
    manifest.source = "fixture";
    for (std::size_t i = 0; i < n; ++i) manifest.entries.push_back(make_entry(i));
    return manifest;
}

vasekit::DatasetManifest make_corpus_manifest() {
    constexpr std::size_t kEntries = 664;
    constexpr std::size_t kDecoration = 663;
    constexpr std::size_t kAttribution = 280;
    constexpr std::size_t kProvenance = 197;

    vasekit::DatasetManifest manifest;
    manifest.source = "fixture-corpus";
    for (std::size_t i = 0; i < kEntries; ++i) {
        vasekit::VaseEntry entry = make_entry(i);
        std::vector<vasekit::QAPair> kept;
        for (const auto& qa : entry.qa_pairs) {
            if (qa.question_type == vasekit::QuestionType::Decoration && i >= kDecoration) continue;
            if (qa.question_type == vasekit::QuestionType::Attribution && i >= kAttribution) continue;
            if (qa.question_type == vasekit::QuestionType::Provenance && i >= kProvenance) continue;
            kept.push_back(qa);
        }
        entry.qa_pairs = std::move(kept);
        manifest.entries.push_back(std::move(entry));
    }
    return manifest;
}

std::vector<vasekit::ScoreRecord> make_retention_corpus(std::vector<std::string>& success_ids) {
    constexpr std::size_t kTotal = 30000;
    constexpr std::size_t kQualityPass = 13599;
    constexpr std::size_t kFragmentPass = 6330;
    constexpr std::size_t kVases = 3880;           // view-selection survivors
    constexpr std::size_t kTwoViewVases = kFragmentPass - kVases;  // 2450
    constexpr std::size_t kOneViewVases = kVases - kTwoViewVases;  // 1430
    constexpr std::size_t kGenerated = 664;

    // Winner/single scores average 0.234; losers are pinned so the mean over
    // all 6,330 fragment survivors lands on 0.156.
    constexpr double kWinnerMean = 0.234;
    constexpr double kLoserMean =
        (0.156 * static_cast<double>(kFragmentPass) - kWinnerMean * static_cast<double>(kVases)) /
        static_cast<double>(kTwoViewVases);

    std::vector<vasekit::ScoreRecord> records;
    records.reserve(kTotal);
    success_ids.clear();

    std::size_t image_seq = 0;
    std::size_t vase_seq = 0;
    auto next_image = [&] { return "img-" + zero_padded(image_seq++, 5); };
    auto next_vase = [&] { return "vase-" + zero_padded(vase_seq++, 5); };

    auto survivor = [&](const std::string& vase_id, double descriptive, bool boundary) {
        vasekit::ScoreRecord record;
        record.image_id = next_image();
        record.vase_id = vase_id;
        record.quality_prob = boundary ? 0.50 : 0.62;
        record.sim_complete = boundary ? 0.55 : 0.60;
        record.sim_fragment = 0.45;  // margins 0.10 (boundary) and 0.15
        record.sim_descriptive = descriptive;
        return record;
    };

    // Zero-sum jitter around the target means, cancelled in consecutive pairs.
    auto jittered = [](double mean, double amplitude, std::size_t index) {
        return index % 2 == 0 ? mean + amplitude : mean - amplitude;
    };

    std::size_t winner_index = 0;
    std::size_t loser_index = 0;

    for (std::size_t v = 0; v < kTwoViewVases; ++v) {
        const std::string vase_id = next_vase();
        const bool boundary = v == 0;  // pin both inclusive boundaries once
        vasekit::ScoreRecord winner = survivor(vase_id, jittered(kWinnerMean, 0.01, winner_index++), boundary);
        vasekit::ScoreRecord loser = survivor(vase_id, jittered(kLoserMean, 0.005, loser_index++), false);
        if (success_ids.size() < kGenerated) success_ids.push_back(winner.image_id);
        records.push_back(std::move(winner));
        records.push_back(std::move(loser));
    }
    for (std::size_t v = 0; v < kOneViewVases; ++v) {
        vasekit::ScoreRecord single = survivor(next_vase(), jittered(kWinnerMean, 0.01, winner_index++), false);
        if (success_ids.size() < kGenerated) success_ids.push_back(single.image_id);
        records.push_back(std::move(single));
    }

    // Quality passes that fail the fragment margin.
    for (std::size_t i = records.size(); i < kQualityPass; ++i) {
        vasekit::ScoreRecord record;
        record.image_id = next_image();
        record.vase_id = next_vase();
        record.quality_prob = 0.62;
        record.sim_complete = 0.50;
        record.sim_fragment = 0.45;  // margin 0.05, rejected
        record.sim_descriptive = 0.10;
        records.push_back(std::move(record));
    }

    // Quality failures.
    for (std::size_t i = records.size(); i < kTotal; ++i) {
        vasekit::ScoreRecord record;
        record.image_id = next_image();
        record.vase_id = next_vase();
        record.quality_prob = 0.38;
        record.sim_complete = 0.55;
        record.sim_fragment = 0.40;
        record.sim_descriptive = 0.10;
        records.push_back(std::move(record));
    }
    return records;
}

}  // namespace vasekit::test
