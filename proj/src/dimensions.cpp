#include "vasekit/dimensions.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vasekit/errors.hpp"
#include "vasekit/text.hpp"

namespace vasekit {

std::string_view to_string(Dimension dim) {
    switch (dim) {
        case Dimension::Fabric: return "fabric";
        case Dimension::Technique: return "technique";
        case Dimension::Shape: return "shape";
        case Dimension::Dating: return "dating";
        case Dimension::Decoration: return "decoration";
        case Dimension::Attribution: return "attribution";
    }
    return "unknown";
}

std::optional<Dimension> dimension_from_string(std::string_view name) {
    for (Dimension dim : kAllDimensions) {
        if (to_string(dim) == name) return dim;
    }
    return std::nullopt;
}

std::optional<Dimension> dimension_for_question(QuestionType type) {
    switch (type) {
        case QuestionType::Fabric: return Dimension::Fabric;
        case QuestionType::Technique: return Dimension::Technique;
        case QuestionType::Shape: return Dimension::Shape;
        case QuestionType::Dating: return Dimension::Dating;
        case QuestionType::Decoration: return Dimension::Decoration;
        case QuestionType::Attribution: return Dimension::Attribution;
        case QuestionType::Caption:
        case QuestionType::Provenance: return std::nullopt;
    }
    return std::nullopt;
}

void DimensionSlots::set(Dimension dim, std::string_view content) {
    std::string normalized = normalize_text(content);
    if (normalized.empty()) {
        slots_[index(dim)].reset();
    } else {
        slots_[index(dim)] = std::move(normalized);
    }
}

std::size_t DimensionSlots::populated_count() const {
    std::size_t n = 0;
    for (const auto& slot : slots_) {
        if (slot) ++n;
    }
    return n;
}

namespace {

bool is_lowercase(const std::string& s) {
    return std::none_of(s.begin(), s.end(),
                        [](unsigned char c) { return std::isupper(c) != 0; });
}

// Greek-pottery vocabulary for the built-in matcher. Phrase lists are not
// exhaustive; a domain lexicon file can replace them wholesale.
const char* const kDefaultLexiconJson = R"LEX({
  "version": "builtin-1",
  "fabric": [
    "attic", "athenian", "corinthian", "laconian", "boeotian", "euboean",
    "chalcidian", "east greek", "ionian", "rhodian", "cycladic", "apulian",
    "lucanian", "campanian", "paestan", "sicilian", "etruscan",
    "south italian", "terracotta", "clay"
  ],
  "technique": [
    "red-figure", "red figure", "black-figure", "black figure",
    "white-ground", "white ground", "black-glaze", "black glaze",
    "bilingual", "polychrome", "incised", "incision", "added red",
    "added white", "coral red", "outline drawing", "wheel-made",
    "wheelmade", "handmade", "moulded", "burnished"
  ],
  "shape": [
    "amphora", "neck amphora", "belly amphora", "panathenaic amphora",
    "kylix", "cup", "krater", "volute krater", "calyx krater",
    "bell krater", "column krater", "hydria", "kalpis", "lekythos",
    "oinochoe", "olpe", "pelike", "psykter", "skyphos", "kotyle",
    "kantharos", "mastos", "alabastron", "aryballos", "askos", "pyxis",
    "lebes", "dinos", "loutrophoros", "stamnos", "phiale", "plate",
    "pinax", "kyathos", "rhyton", "lydion", "exaleiptron"
  ],
  "dating_patterns": [
    "ca\\.? ?\\d{1,4} ?(bce|bc|ce|ad)",
    "circa ?\\d{1,4} ?(bce|bc|ce|ad)",
    "\\d{1,4} ?- ?\\d{1,4} ?(bce|bc|ce|ad)",
    "\\d{1,4} ?(bce|bc|ce|ad)",
    "(early |late |mid |middle )?\\d{1,2}(st|nd|rd|th) century( (bce|bc|ce|ad))?",
    "(archaic|classical|hellenistic|geometric|orientalizing) period"
  ],
  "decoration": [
    "meander", "key pattern", "palmette", "palmettes", "lotus", "ivy",
    "laurel", "rosette", "rosettes", "rays", "tongues", "gorgoneion",
    "sphinx", "sphinxes", "siren", "sirens", "griffin", "griffins",
    "satyr", "satyrs", "maenad", "maenads", "komos", "symposium",
    "banquet", "warrior", "warriors", "hoplite", "hoplites", "chariot",
    "horseman", "horsemen", "dionysos", "herakles", "athena", "apollo",
    "artemis", "zeus", "nike", "hermes", "amazonomachy", "gigantomachy",
    "centauromachy", "animal frieze", "panther", "panthers", "lion",
    "lions", "boar", "boars", "bull", "bulls", "owl", "owls",
    "floral band", "net pattern", "checkerboard", "zigzag", "spiral",
    "battle scene", "departure scene", "procession"
  ],
  "attribution": [
    "exekias", "euphronios", "euthymides", "douris", "makron",
    "onesimos", "epiktetos", "psiax", "oltos", "phintias", "smikros",
    "nikosthenes", "amasis painter", "andokides painter",
    "berlin painter", "kleophrades painter", "pan painter",
    "brygos painter", "achilles painter", "niobid painter",
    "penthesilea painter", "meidias painter", "pistoxenos painter",
    "sotades painter", "antimenes painter", "euergides painter",
    "triptolemos painter", "leagros group", "pioneer group"
  ]
})LEX";

struct Span {
    std::size_t begin;
    std::size_t end;
};

bool boundary_ok(const std::string& text, std::size_t begin, std::size_t end) {
    const bool left = begin == 0 || !is_word_char(text[begin - 1]);
    const bool right = end == text.size() || !is_word_char(text[end]);
    return left && right;
}

void collect_literal_spans(const std::string& text, const std::string& phrase, std::vector<Span>& spans) {
    std::size_t pos = 0;
    while ((pos = text.find(phrase, pos)) != std::string::npos) {
        if (boundary_ok(text, pos, pos + phrase.size())) {
            spans.push_back({pos, pos + phrase.size()});
        }
        ++pos;
    }
}

void collect_regex_spans(const std::string& text, const std::regex& pattern, std::vector<Span>& spans) {
    for (auto it = std::sregex_iterator(text.begin(), text.end(), pattern); it != std::sregex_iterator(); ++it) {
        const auto begin = static_cast<std::size_t>(it->position());
        const auto end = begin + static_cast<std::size_t>(it->length());
        if (begin != end && boundary_ok(text, begin, end)) {
            spans.push_back({begin, end});
        }
    }
}

// Sort and merge overlapping spans so each survivor is maximal.
std::vector<Span> merge_spans(std::vector<Span> spans) {
    std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) {
        return a.begin != b.begin ? a.begin < b.begin : a.end > b.end;
    });
    std::vector<Span> merged;
    for (const Span& span : spans) {
        if (!merged.empty() && span.begin < merged.back().end) {
            merged.back().end = std::max(merged.back().end, span.end);
        } else {
            merged.push_back(span);
        }
    }
    return merged;
}

std::string strip_edge_punct(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::ispunct(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::ispunct(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace

Lexicon::Lexicon(std::array<std::vector<std::string>, kDimensionCount> rules, std::string version)
    : rules_(std::move(rules)), version_(std::move(version)) {
    for (Dimension dim : kAllDimensions) {
        const auto& list = rules_[static_cast<std::size_t>(dim)];
        if (list.empty()) {
            throw InvalidConfig("lexicon has no rules for dimension '" + std::string(to_string(dim)) + "'");
        }
        for (const auto& rule : list) {
            if (rule.empty()) throw InvalidConfig("lexicon rule for '" + std::string(to_string(dim)) + "' is empty");
            if (!is_lowercase(rule)) {
                throw InvalidConfig("lexicon rule '" + rule + "' must be lowercase");
            }
        }
    }
    for (const auto& pattern : rules_[static_cast<std::size_t>(Dimension::Dating)]) {
        try {
            dating_regexes_.emplace_back(pattern, std::regex::ECMAScript);
        } catch (const std::regex_error& e) {
            throw InvalidConfig("bad dating pattern '" + pattern + "': " + e.what());
        }
    }
}

const Lexicon& Lexicon::defaults() {
    static const Lexicon instance = Lexicon::from_json_text(kDefaultLexiconJson);
    return instance;
}

Lexicon Lexicon::from_json_text(std::string_view json_text) {
    nlohmann::json obj;
    try {
        obj = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidConfig(std::string("lexicon is not valid JSON: ") + e.what());
    }
    std::array<std::vector<std::string>, kDimensionCount> rules;
    const std::array<std::pair<Dimension, const char*>, kDimensionCount> keys = {{
        {Dimension::Fabric, "fabric"},
        {Dimension::Technique, "technique"},
        {Dimension::Shape, "shape"},
        {Dimension::Dating, "dating_patterns"},
        {Dimension::Decoration, "decoration"},
        {Dimension::Attribution, "attribution"},
    }};
    for (const auto& [dim, key] : keys) {
        if (!obj.contains(key) || !obj[key].is_array()) {
            throw InvalidConfig(std::string("lexicon is missing array field '") + key + "'");
        }
        rules[static_cast<std::size_t>(dim)] = obj[key].get<std::vector<std::string>>();
    }
    std::string version = obj.value("version", "unversioned");
    return Lexicon(std::move(rules), std::move(version));
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open lexicon: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_json_text(buffer.str());
}

std::string Lexicon::to_json_text() const {
    nlohmann::ordered_json obj;
    obj["fabric"] = rules_for(Dimension::Fabric);
    obj["technique"] = rules_for(Dimension::Technique);
    obj["shape"] = rules_for(Dimension::Shape);
    obj["dating_patterns"] = rules_for(Dimension::Dating);
    obj["decoration"] = rules_for(Dimension::Decoration);
    obj["attribution"] = rules_for(Dimension::Attribution);
    obj["version"] = version_;
    return obj.dump(2);
}

DimensionSlots extract_slots(std::string_view text, const Lexicon& lexicon) {
    DimensionSlots slots;
    const std::string norm = normalize_text(text);
    if (norm.empty()) return slots;

    for (Dimension dim : kAllDimensions) {
        std::vector<Span> spans;
        if (dim == Dimension::Dating) {
            for (const auto& pattern : lexicon.dating_regexes()) {
                collect_regex_spans(norm, pattern, spans);
            }
        } else {
            for (const auto& phrase : lexicon.rules_for(dim)) {
                collect_literal_spans(norm, phrase, spans);
            }
        }
        if (spans.empty()) continue;

        std::string content;
        for (const Span& span : merge_spans(std::move(spans))) {
            const std::string piece =
                strip_edge_punct(std::string_view(norm).substr(span.begin, span.end - span.begin));
            if (piece.empty()) continue;
            if (!content.empty()) content += ' ';
            content += piece;
        }
        slots.set(dim, content);
    }
    return slots;
}

DimensionSlots target_slots_from_qa(const VaseEntry& entry) {
    DimensionSlots slots;
    std::array<bool, kDimensionCount> seen{};
    for (const auto& qa : entry.qa_pairs) {
        const auto dim = dimension_for_question(qa.question_type);
        if (!dim) continue;
        // Tracked apart from slot presence: an empty answer leaves the slot
        // absent but still claims the attribute.
        if (seen[static_cast<std::size_t>(*dim)]) {
            throw DuplicateAttribute("entry '" + entry.vase_id + "' has two '" +
                                     std::string(to_string(qa.question_type)) + "' questions");
        }
        seen[static_cast<std::size_t>(*dim)] = true;
        slots.set(*dim, qa.answer);
    }
    return slots;
}

}  // namespace vasekit
