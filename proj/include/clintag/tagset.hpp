// clintag -- rule-based POS tagger for clinical English
//
// The closed 40-tag vocabulary, plus the eight rule-category records.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace clintag {

// Left column top-to-bottom, then right column.  Order is fixed so reports
// are reproducible.
enum class Tag : std::uint8_t {
    ADV, AVB, CND, CNJ, ADJ, DTR, ETC, FW, INT, JF,
    JJ, JQC, INPR, JQQ, NEG, NN, NP, NUM, NV, PC,
    PO, PP, PPI, PPP, PQ, PPH, PT, QUA, RPP, RPS,
    RPT, SEN, SHD, SYM, LVB, VF, VIS, VM, VN, VNG,
};

inline constexpr std::size_t kTagCount = 40;

struct TagInfo {
    Tag tag;
    std::string_view code;
    std::string_view description;
};

inline constexpr std::array<TagInfo, kTagCount> kTagTable = {{
    {Tag::ADV, "ADV", "Adverb"},
    {Tag::AVB, "AVB", "Adverbial particle"},
    {Tag::CND, "CND", "Conditional"},
    {Tag::CNJ, "CNJ", "Conjunction"},
    {Tag::ADJ, "ADJ", "Adjective"},
    {Tag::DTR, "DTR", "Relative Determiner"},
    {Tag::ETC, "ETC", "Continuation Marker"},
    {Tag::FW, "FW", "Foreign Word"},
    {Tag::INT, "INT", "Interjection"},
    {Tag::JF, "JF", "Following Adjectives"},
    {Tag::JJ, "JJ", "Noun Qual. Adjectives"},
    {Tag::JQC, "JQC", "Cardinal Qual. adjectives"},
    {Tag::INPR, "INPR", "Interrogative Pronoun"},
    {Tag::JQQ, "JQQ", "Quantifier"},
    {Tag::NEG, "NEG", "Negative"},
    {Tag::NN, "NN", "Common Noun"},
    {Tag::NP, "NP", "Proper Noun"},
    {Tag::NUM, "NUM", "Number"},
    {Tag::NV, "NV", "Verbal noun"},
    {Tag::PC, "PC", "Cardinal pronoun"},
    {Tag::PO, "PO", "Ordinal pronoun"},
    {Tag::PP, "PP", "Personal pronoun"},
    {Tag::PPI, "PPI", "Inflectional post position"},
    {Tag::PPP, "PPP", "Possessive post position"},
    {Tag::PQ, "PQ", "Question marker"},
    {Tag::PPH, "PPH", "Preposition"},
    {Tag::PT, "PT", "Temporal pronoun"},
    {Tag::QUA, "QUA", "Qualifier"},
    {Tag::RPP, "RPP", "Personal relative pronoun"},
    {Tag::RPS, "RPS", "Spatial relative pronoun"},
    {Tag::RPT, "RPT", "Temporal relative pronoun"},
    {Tag::SEN, "SEN", "Sentinel"},
    {Tag::SHD, "SHD", "Semantic Shades incurring particle"},
    {Tag::SYM, "SYM", "Symbol"},
    {Tag::LVB, "LVB", "Linking Verb"},
    {Tag::VF, "VF", "Finite Verb"},
    {Tag::VIS, "VIS", "Imperative Verbs"},
    {Tag::VM, "VM", "Modal Verb"},
    {Tag::VN, "VN", "Non-Finite Verb"},
    {Tag::VNG, "VNG", "Verb Negative"},
}};

inline std::string_view render_tag(Tag t) {
    return kTagTable[static_cast<std::size_t>(t)].code;
}

inline std::string_view tag_description(Tag t) {
    return kTagTable[static_cast<std::size_t>(t)].description;
}

/// Case-sensitive on the canonical uppercase codes; anything else is an error.
inline Tag parse_tag(std::string_view code) {
    for (const auto& info : kTagTable)
        if (info.code == code) return info.tag;
    throw UnknownTagError(std::string(code));
}

inline bool is_valid_tag_code(std::string_view code) {
    for (const auto& info : kTagTable)
        if (info.code == code) return true;
    return false;
}

inline std::vector<Tag> all_tags() {
    std::vector<Tag> out;
    out.reserve(kTagCount);
    for (const auto& info : kTagTable) out.push_back(info.tag);
    return out;
}

// ---------------------------------------------------------------------------
// Rule categories.  Declared counts document the full rule budget; the
// reference pack is a faithful subset, so the counts are targets, not
// requirements.

struct RuleCategory {
    std::string_view name;
    int declared_count;
};

inline constexpr std::array<RuleCategory, 8> kRuleCategories = {{
    {"NounAndNounClause", 90},
    {"VerbAndVerbalPhrase", 102},
    {"AdjectiveAndAdjectiveClause", 77},
    {"Preposition", 38},
    {"Punctuation", 98},
    {"Adverb", 21},
    {"AdverbClause", 13},
    {"Modifier", 46},
}};

inline RuleCategory category_of_rule_group(std::string_view name) {
    for (const auto& cat : kRuleCategories)
        if (cat.name == name) return cat;
    throw UnknownCategoryError(std::string(name));
}

inline bool is_valid_category(std::string_view name) {
    for (const auto& cat : kRuleCategories)
        if (cat.name == name) return true;
    return false;
}

} // namespace clintag
