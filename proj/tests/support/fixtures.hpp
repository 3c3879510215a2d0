#pragma once

// Deterministic fixtures shared by the unit and acceptance suites.

#include <string>
#include <vector>

#include "vasekit/dataset.hpp"
#include "vasekit/filter.hpp"

namespace vasekit::test {

// Entry whose caption and QA answers are built from the same vocabulary the
// built-in lexicon knows, so extraction and rewards line up. Captions embed
// a per-entry year so no two captions share a token multiset.
vasekit::VaseEntry make_entry(std::size_t index);

// Small clean manifest of n entries.
vasekit::DatasetManifest make_sample_manifest(std::size_t n);

// 664 entries with the production QA coverage: the five universal types on
// every entry, decoration on 663, attribution on 280, provenance on 197 —
// 4,460 pairs in total.
vasekit::DatasetManifest make_corpus_manifest();

// 30,000 synthetic score records shaped to survive the pipeline at
// 13,599 / 6,330 / 3,880 / 664, with survivor descriptive-score means of
// 0.156 after fragment filtering and 0.234 after view selection.
// `success_ids` receives the 664 image ids of the generation stage.
std::vector<vasekit::ScoreRecord> make_retention_corpus(std::vector<std::string>& success_ids);

}  // namespace vasekit::test
