#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace vasekit {

// Canonical text normalization shared by slot extraction, similarity and
// answer matching: ASCII lowercase, whitespace runs collapsed to one space,
// ends trimmed. Non-ASCII bytes pass through untouched.
std::string normalize_text(std::string_view text);

// normalize_text + split on spaces, punctuation stripped from token edges.
// Inner punctuation ("red-figure", "ca.") survives only when not at an edge.
std::vector<std::string> tokenize(std::string_view text);

// Sentences of the normalized text, split on . ! ? ; with empties dropped.
std::vector<std::string> split_sentences(std::string_view text);

// Word-boundary test used by phrase matching: alnum or underscore.
bool is_word_char(char c);

}  // namespace vasekit
