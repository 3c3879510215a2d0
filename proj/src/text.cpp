#include "vasekit/text.hpp"

#include <cctype>

namespace vasekit {

namespace {

bool is_ascii_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_edge_punct(char c) {
    return std::ispunct(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

std::string normalize_text(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (char c : text) {
        if (is_ascii_space(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

std::vector<std::string> tokenize(std::string_view text) {
    const std::string norm = normalize_text(text);
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < norm.size()) {
        if (norm[i] == ' ') {
            ++i;
            continue;
        }
        std::size_t j = norm.find(' ', i);
        if (j == std::string::npos) j = norm.size();
        std::size_t b = i;
        std::size_t e = j;
        while (b < e && is_edge_punct(norm[b])) ++b;
        while (e > b && is_edge_punct(norm[e - 1])) --e;
        if (e > b) tokens.emplace_back(norm.substr(b, e - b));
        i = j;
    }
    return tokens;
}

std::vector<std::string> split_sentences(std::string_view text) {
    const std::string norm = normalize_text(text);
    std::vector<std::string> sentences;
    std::string current;
    for (char c : norm) {
        if (c == '.' || c == '!' || c == '?' || c == ';') {
            std::string trimmed = normalize_text(current);
            if (!trimmed.empty()) sentences.push_back(std::move(trimmed));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    std::string trimmed = normalize_text(current);
    if (!trimmed.empty()) sentences.push_back(std::move(trimmed));
    return sentences;
}

}  // namespace vasekit
