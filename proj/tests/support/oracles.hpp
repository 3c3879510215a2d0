#pragma once

// Independent reference implementations the tests check the library
// against. Everything here is written from the algorithm definitions and
// stays off the library's code paths.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vasekit::test {

// FNV-1a 64 from the published offset basis and prime.
std::uint64_t oracle_fnv1a64(std::string_view data);

// Character-level matching-blocks ratio in the difflib style: a b2j
// position index drives the longest-match search, a work queue replaces the
// recursion. Inputs are taken as-is (caller normalizes).
double oracle_match_ratio(std::string_view a, std::string_view b);

// Full-table LCS F1 over token vectors.
double oracle_rouge_f1(const std::vector<std::string>& candidate, const std::vector<std::string>& reference);

// Sort-based recall@k: stable sort each row by (value desc, column asc) and
// look for the diagonal inside the top k.
double oracle_recall_at_k(const std::vector<std::vector<double>>& values, std::size_t k);

// Mask-painting span collector: per-position phrase comparison (plus regex
// matches when `regex_rules`), word boundaries checked, matched characters
// painted into a mask whose runs become the maximal spans.
std::vector<std::string> oracle_spans(const std::string& normalized_text,
                                      const std::vector<std::string>& rules, bool regex_rules);

}  // namespace vasekit::test
