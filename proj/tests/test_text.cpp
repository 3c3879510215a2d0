#include <doctest.h>

#include "vasekit/text.hpp"

using namespace vasekit;

TEST_CASE("normalize lowercases, collapses whitespace and trims") {
    CHECK(normalize_text("  Attic  Red-Figure\tAmphora \n") == "attic red-figure amphora");
    CHECK(normalize_text("") == "");
    CHECK(normalize_text("   ") == "");
    CHECK(normalize_text("already normal") == "already normal");
}

TEST_CASE("normalize is idempotent") {
    const char* samples[] = {"A  B   C", "ca. 450 BC", "x", "  mixed CASE  text "};
    for (const char* s : samples) {
        CHECK(normalize_text(normalize_text(s)) == normalize_text(s));
    }
}

TEST_CASE("tokenize strips edge punctuation but keeps inner") {
    CHECK(tokenize("Attic red-figure amphora, ca. 450 BC.") ==
          std::vector<std::string>{"attic", "red-figure", "amphora", "ca", "450", "bc"});
    CHECK(tokenize("...") == std::vector<std::string>{});
    CHECK(tokenize("(kylix)") == std::vector<std::string>{"kylix"});
}

TEST_CASE("sentence split on terminators") {
    CHECK(split_sentences("one. two! three? four; five") ==
          std::vector<std::string>{"one", "two", "three", "four", "five"});
    CHECK(split_sentences("").empty());
    CHECK(split_sentences("..!.").empty());
}
