#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "vasekit/dataset.hpp"

namespace vasekit {

// The six semantic dimensions, in canonical order.
enum class Dimension {
    Fabric,
    Technique,
    Shape,
    Dating,
    Decoration,
    Attribution,
};

inline constexpr std::array<Dimension, 6> kAllDimensions = {
    Dimension::Fabric,   Dimension::Technique,  Dimension::Shape,
    Dimension::Dating,   Dimension::Decoration, Dimension::Attribution,
};

inline constexpr std::size_t kDimensionCount = 6;

std::string_view to_string(Dimension dim);
std::optional<Dimension> dimension_from_string(std::string_view name);

// Maps the six attribute question types onto dimensions; caption and
// provenance questions carry no dimension.
std::optional<Dimension> dimension_for_question(QuestionType type);

// Per-dimension content holder for both generated (g) and target (t) sides.
// Slot strings are normalized on write; an empty string clears the slot.
class DimensionSlots {
public:
    const std::optional<std::string>& get(Dimension dim) const { return slots_[index(dim)]; }
    bool has(Dimension dim) const { return slots_[index(dim)].has_value(); }
    void set(Dimension dim, std::string_view content);
    void clear(Dimension dim) { slots_[index(dim)].reset(); }
    std::size_t populated_count() const;

    bool operator==(const DimensionSlots&) const = default;

private:
    static std::size_t index(Dimension dim) { return static_cast<std::size_t>(dim); }

    std::array<std::optional<std::string>, kDimensionCount> slots_;
};

// Matcher rules per dimension: literal phrases for five dimensions, regex
// patterns for Dating. Rules must be lowercase and non-empty; every
// dimension needs at least one rule. Immutable once built.
class Lexicon {
public:
    Lexicon(std::array<std::vector<std::string>, kDimensionCount> rules, std::string version);

    static const Lexicon& defaults();
    static Lexicon from_json_text(std::string_view json_text);
    static Lexicon load(const std::filesystem::path& path);

    const std::vector<std::string>& rules_for(Dimension dim) const { return rules_[static_cast<std::size_t>(dim)]; }
    const std::vector<std::regex>& dating_regexes() const { return dating_regexes_; }
    const std::string& version() const { return version_; }

    std::string to_json_text() const;

private:
    std::array<std::vector<std::string>, kDimensionCount> rules_;
    std::vector<std::regex> dating_regexes_;
    std::string version_;
};

// Decomposes free text into the six dimensions. Each populated slot is the
// single-space join, in text order, of the maximal spans matched by that
// dimension's rules over the normalized text. Literal phrases match at word
// boundaries; Dating additionally matches date patterns. No hits -> slot
// absent.
DimensionSlots extract_slots(std::string_view text, const Lexicon& lexicon = Lexicon::defaults());

// Target-side slots from an entry's attribute QA answers. Throws
// DuplicateAttribute when an entry carries two QAs of one attribute type.
DimensionSlots target_slots_from_qa(const VaseEntry& entry);

}  // namespace vasekit
