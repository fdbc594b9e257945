// clintag -- rule-based POS tagger for clinical English
//
// The contextual rule DSL, its parser and linter, and the three-pass engine
// (phrases, clauses, modifiers).
//
// Rule syntax, one rule per line:
//
//   id | category | pass | priority | PATTERN => ACTION
//
// PATTERN is whitespace-joined token predicates; each predicate is a
// conjunction of atoms joined by '&' and may carry a quantifier:
//
//   word:"of|in"  cand:NN|NP  tag:DTR  kind:Punct  suffix:ly  pos:start
//   inphrase:Prepositional  inclause:AdverbSub  base:ADJ  untagged
//   quantifiers:  pred?  (optional)   pred*  or  pred*3  (bounded star)
//
// ACTION is one of:
//
//   assign(k,TAG)   span(KIND,i..j)   attach(m->h,KIND)
//
// where k, i, j, m, h are 0-based pattern element indices.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "lexicon.hpp"
#include "stemmer.hpp"
#include "tagset.hpp"
#include "tokenizer.hpp"

namespace clintag {

// ---------------------------------------------------------------------------
// Tag masks (40 tags fit in 64 bits)

using TagMask = std::uint64_t;

inline constexpr TagMask tag_bit(Tag t) {
    return TagMask{1} << static_cast<unsigned>(t);
}

inline TagMask mask_of(const std::vector<Tag>& tags) {
    TagMask m = 0;
    for (Tag t : tags) m |= tag_bit(t);
    return m;
}

inline constexpr TagMask kVerbMask = tag_bit(Tag::VF) | tag_bit(Tag::LVB) |
                                     tag_bit(Tag::VM) | tag_bit(Tag::VIS) |
                                     tag_bit(Tag::VN);

inline constexpr TagMask kFiniteVerbMask =
    tag_bit(Tag::VF) | tag_bit(Tag::VIS) | tag_bit(Tag::VM);

// noun/pronoun heads an adjective may modify, and an adverb may not
inline constexpr TagMask kNounPronounMask =
    tag_bit(Tag::NN) | tag_bit(Tag::NP) | tag_bit(Tag::NV) | tag_bit(Tag::PP) |
    tag_bit(Tag::PC) | tag_bit(Tag::PO) | tag_bit(Tag::PT);

inline constexpr TagMask kAdverbMask = tag_bit(Tag::ADV) | tag_bit(Tag::AVB);

// ---------------------------------------------------------------------------
// Spans, attachments, passes

enum class Pass { Phrase, Clause, Modifier };

enum class PhraseKind { Prepositional, Verbal, Appositive };
enum class ClauseKind { Independent, AdjectiveSub, AdverbSub, NounSub };
enum class AttachmentKind { AdjToNoun, AdvToVerb, AdvToAdj, AdvToAdv, AdvToPhrase, AdvToClause };

struct TokenRange {
    std::size_t begin = 0; // half-open token indices
    std::size_t end = 0;
    bool contains(std::size_t i) const { return i >= begin && i < end; }
    bool overlaps(const TokenRange& o) const { return begin < o.end && o.begin < end; }
    bool operator==(const TokenRange&) const = default;
};

struct PhraseSpan {
    PhraseKind kind;
    TokenRange token_range;
    std::string rule_id;
    bool operator==(const PhraseSpan&) const = default;
};

struct ClauseSpan {
    ClauseKind kind;
    TokenRange token_range;
    std::string rule_id;
    bool operator==(const ClauseSpan&) const = default;
};

struct Attachment {
    std::size_t modifier_index = 0;
    std::size_t head_index = 0;
    AttachmentKind kind;
    std::string rule_id;
    bool operator==(const Attachment&) const = default;
};

namespace names {

inline std::string_view pass_name(Pass p) {
    switch (p) {
        case Pass::Phrase: return "Phrase";
        case Pass::Clause: return "Clause";
        case Pass::Modifier: return "Modifier";
    }
    return "?";
}

inline std::string_view phrase_kind_name(PhraseKind k) {
    switch (k) {
        case PhraseKind::Prepositional: return "Prepositional";
        case PhraseKind::Verbal: return "Verbal";
        case PhraseKind::Appositive: return "Appositive";
    }
    return "?";
}

inline std::string_view clause_kind_name(ClauseKind k) {
    switch (k) {
        case ClauseKind::Independent: return "Independent";
        case ClauseKind::AdjectiveSub: return "AdjectiveSub";
        case ClauseKind::AdverbSub: return "AdverbSub";
        case ClauseKind::NounSub: return "NounSub";
    }
    return "?";
}

inline std::string_view attachment_kind_name(AttachmentKind k) {
    switch (k) {
        case AttachmentKind::AdjToNoun: return "AdjToNoun";
        case AttachmentKind::AdvToVerb: return "AdvToVerb";
        case AttachmentKind::AdvToAdj: return "AdvToAdj";
        case AttachmentKind::AdvToAdv: return "AdvToAdv";
        case AttachmentKind::AdvToPhrase: return "AdvToPhrase";
        case AttachmentKind::AdvToClause: return "AdvToClause";
    }
    return "?";
}

} // namespace names

// ---------------------------------------------------------------------------
// Predicates and actions

enum class AtomType {
    WordIn,   // normalized surface in set
    CandIn,   // candidate tags intersect set
    TagIn,    // final tag assigned and in set
    BaseIn,   // stem-base lexicon tags intersect set
    KindIs,
    SuffixIs,
    PosStart,
    PosEnd,
    InPhrase,
    InClause,
    Untagged,
};

struct PredicateAtom {
    AtomType type;
    TagMask tags = 0;
    std::vector<std::string> words; // lowercased
    TokenKind kind = TokenKind::Word;
    std::string suffix;
    PhraseKind phrase_kind = PhraseKind::Prepositional;
    ClauseKind clause_kind = ClauseKind::Independent;
};

enum class Quantifier { One, Optional, Star };

inline constexpr int kDefaultStarWindow = 6;

struct TokenPredicate {
    std::vector<PredicateAtom> atoms; // conjunction
    Quantifier quantifier = Quantifier::One;
    int window = 1; // max tokens this element may consume
};

enum class ActionType { Assign, Span, Attach };

struct RuleAction {
    ActionType type;
    // Assign
    std::size_t position_ref = 0;
    Tag tag = Tag::NN;
    // Span
    bool span_is_clause = false;
    PhraseKind phrase_kind = PhraseKind::Prepositional;
    ClauseKind clause_kind = ClauseKind::Independent;
    std::size_t start_ref = 0;
    std::size_t end_ref = 0;
    // Attach
    std::size_t modifier_ref = 0;
    std::size_t head_ref = 0;
    AttachmentKind attachment_kind = AttachmentKind::AdjToNoun;
};

struct Rule {
    std::string id;
    std::string category;
    Pass pass = Pass::Phrase;
    int priority = 0;
    std::vector<TokenPredicate> pattern;
    RuleAction action;
    int file_order = 0;
};

struct RulePack {
    std::vector<Rule> rules; // file order
    std::string source;
    std::map<std::string, int> counts_by_category;

    std::vector<const Rule*> pass_rules(Pass p) const {
        std::vector<const Rule*> out;
        for (const auto& r : rules)
            if (r.pass == p) out.push_back(&r);
        std::stable_sort(out.begin(), out.end(),
                         [](const Rule* a, const Rule* b) {
                             return a->priority > b->priority;
                         });
        return out;
    }
};

// ---------------------------------------------------------------------------
// DSL parsing

namespace dsl {

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

// split on a separator character, honoring double quotes
inline std::vector<std::string> split_unquoted(std::string_view s, char sep,
                                               int max_fields = -1) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char c : s) {
        if (c == '"') quoted = !quoted;
        if (c == sep && !quoted &&
            (max_fields < 0 || static_cast<int>(out.size()) + 1 < max_fields)) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::vector<std::string> split_ws_unquoted(std::string_view s) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char c : s) {
        if (c == '"') quoted = !quoted;
        if (!quoted && std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

inline TagMask parse_tag_set(std::string_view text) {
    TagMask m = 0;
    for (const auto& piece : split_unquoted(text, '|'))
        m |= tag_bit(parse_tag(trim(piece)));
    return m;
}

inline Pass parse_pass(const std::string& s, int line) {
    if (s == "Phrase") return Pass::Phrase;
    if (s == "Clause") return Pass::Clause;
    if (s == "Modifier") return Pass::Modifier;
    throw SyntaxError(line, "pass Phrase|Clause|Modifier");
}

inline std::optional<PhraseKind> parse_phrase_kind(const std::string& s) {
    if (s == "Prepositional") return PhraseKind::Prepositional;
    if (s == "Verbal") return PhraseKind::Verbal;
    if (s == "Appositive") return PhraseKind::Appositive;
    return std::nullopt;
}

inline std::optional<ClauseKind> parse_clause_kind(const std::string& s) {
    if (s == "Independent") return ClauseKind::Independent;
    if (s == "AdjectiveSub") return ClauseKind::AdjectiveSub;
    if (s == "AdverbSub") return ClauseKind::AdverbSub;
    if (s == "NounSub") return ClauseKind::NounSub;
    return std::nullopt;
}

inline std::optional<AttachmentKind> parse_attachment_kind(const std::string& s) {
    if (s == "AdjToNoun") return AttachmentKind::AdjToNoun;
    if (s == "AdvToVerb") return AttachmentKind::AdvToVerb;
    if (s == "AdvToAdj") return AttachmentKind::AdvToAdj;
    if (s == "AdvToAdv") return AttachmentKind::AdvToAdv;
    if (s == "AdvToPhrase") return AttachmentKind::AdvToPhrase;
    if (s == "AdvToClause") return AttachmentKind::AdvToClause;
    return std::nullopt;
}

inline TokenKind parse_kind(const std::string& s, int line) {
    if (s == "Word") return TokenKind::Word;
    if (s == "Number") return TokenKind::Number;
    if (s == "Punct") return TokenKind::Punct;
    if (s == "Symbol") return TokenKind::Symbol;
    throw SyntaxError(line, "kind Word|Number|Punct|Symbol");
}

inline PredicateAtom parse_atom(const std::string& text, int line) {
    PredicateAtom a{};
    if (text == "untagged") {
        a.type = AtomType::Untagged;
        return a;
    }
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw SyntaxError(line, "predicate atom 'name:value'");
    std::string name = text.substr(0, colon);
    std::string value = text.substr(colon + 1);
    if (name == "word") {
        if (value.size() < 2 || value.front() != '"' || value.back() != '"')
            throw SyntaxError(line, "quoted word list");
        a.type = AtomType::WordIn;
        for (const auto& w : split_unquoted(value.substr(1, value.size() - 2), '|'))
            a.words.push_back(detail::lowercase(w));
        if (a.words.empty()) throw SyntaxError(line, "non-empty word list");
    } else if (name == "cand") {
        a.type = AtomType::CandIn;
        a.tags = parse_tag_set(value);
    } else if (name == "tag") {
        a.type = AtomType::TagIn;
        a.tags = parse_tag_set(value);
    } else if (name == "base") {
        a.type = AtomType::BaseIn;
        a.tags = parse_tag_set(value);
    } else if (name == "kind") {
        a.type = AtomType::KindIs;
        a.kind = parse_kind(value, line);
    } else if (name == "suffix") {
        if (value.empty()) throw SyntaxError(line, "non-empty suffix");
        a.type = AtomType::SuffixIs;
        a.suffix = value;
    } else if (name == "pos") {
        if (value == "start") a.type = AtomType::PosStart;
        else if (value == "end") a.type = AtomType::PosEnd;
        else throw SyntaxError(line, "pos:start or pos:end");
    } else if (name == "inphrase") {
        auto k = parse_phrase_kind(value);
        if (!k) throw SyntaxError(line, "phrase kind");
        a.type = AtomType::InPhrase;
        a.phrase_kind = *k;
    } else if (name == "inclause") {
        auto k = parse_clause_kind(value);
        if (!k) throw SyntaxError(line, "clause kind");
        a.type = AtomType::InClause;
        a.clause_kind = *k;
    } else {
        throw SyntaxError(line, "known predicate atom, got '" + name + "'");
    }
    return a;
}

inline TokenPredicate parse_element(std::string element, int line) {
    TokenPredicate pred;
    // quantifier suffix (never inside quotes: a quoted value ends with '"')
    if (!element.empty() && element.back() != '"') {
        if (element.back() == '?') {
            pred.quantifier = Quantifier::Optional;
            pred.window = 1;
            element.pop_back();
        } else {
            std::size_t star = element.rfind('*');
            if (star != std::string::npos &&
                element.find('"', star) == std::string::npos) {
                std::string bound = element.substr(star + 1);
                bool digits = !bound.empty() &&
                              std::all_of(bound.begin(), bound.end(), [](char c) {
                                  return std::isdigit(static_cast<unsigned char>(c));
                              });
                if (bound.empty() || digits) {
                    pred.quantifier = Quantifier::Star;
                    pred.window = bound.empty() ? kDefaultStarWindow
                                                : std::stoi(bound);
                    if (pred.window <= 0)
                        throw SyntaxError(line, "positive star window");
                    element = element.substr(0, star);
                }
            }
        }
    }
    if (element.empty()) throw SyntaxError(line, "non-empty predicate");
    for (const auto& atom_text : split_unquoted(element, '&'))
        pred.atoms.push_back(parse_atom(trim(atom_text), line));
    return pred;
}

inline RuleAction parse_action(const std::string& text, int line,
                               std::size_t pattern_size) {
    auto check_ref = [&](std::size_t r) {
        if (r >= pattern_size)
            throw SyntaxError(line, "position ref inside the pattern");
        return r;
    };
    auto paren = text.find('(');
    if (paren == std::string::npos || text.back() != ')')
        throw SyntaxError(line, "action call");
    std::string name = trim(text.substr(0, paren));
    std::string args = text.substr(paren + 1, text.size() - paren - 2);
    auto parts = split_unquoted(args, ',');
    auto as_index = [&](const std::string& s) -> std::size_t {
        std::string t = trim(s);
        if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
            }))
            throw SyntaxError(line, "numeric position ref");
        return static_cast<std::size_t>(std::stoul(t));
    };
    RuleAction act{};
    if (name == "assign") {
        if (parts.size() != 2) throw SyntaxError(line, "assign(k,TAG)");
        act.type = ActionType::Assign;
        act.position_ref = check_ref(as_index(parts[0]));
        act.tag = parse_tag(trim(parts[1]));
    } else if (name == "span") {
        if (parts.size() != 2) throw SyntaxError(line, "span(KIND,i..j)");
        act.type = ActionType::Span;
        std::string kind = trim(parts[0]);
        if (auto pk = parse_phrase_kind(kind)) {
            act.span_is_clause = false;
            act.phrase_kind = *pk;
        } else if (auto ck = parse_clause_kind(kind)) {
            act.span_is_clause = true;
            act.clause_kind = *ck;
        } else {
            throw SyntaxError(line, "span kind");
        }
        std::string range = trim(parts[1]);
        auto dots = range.find("..");
        if (dots == std::string::npos) throw SyntaxError(line, "range i..j");
        act.start_ref = check_ref(as_index(range.substr(0, dots)));
        act.end_ref = check_ref(as_index(range.substr(dots + 2)));
        if (act.start_ref > act.end_ref)
            throw SyntaxError(line, "range start <= end");
    } else if (name == "attach") {
        if (parts.size() != 2) throw SyntaxError(line, "attach(m->h,KIND)");
        act.type = ActionType::Attach;
        std::string refs = trim(parts[0]);
        auto arrow = refs.find("->");
        if (arrow == std::string::npos) throw SyntaxError(line, "m->h refs");
        act.modifier_ref = check_ref(as_index(refs.substr(0, arrow)));
        act.head_ref = check_ref(as_index(refs.substr(arrow + 2)));
        auto k = parse_attachment_kind(trim(parts[1]));
        if (!k) throw SyntaxError(line, "attachment kind");
        act.attachment_kind = *k;
    } else {
        throw SyntaxError(line, "assign/span/attach, got '" + name + "'");
    }
    return act;
}

} // namespace dsl

/// Parses a rule pack file.  Sections `[category:NAME]` set the current
/// category; the inline category field of each rule must agree with the
/// enclosing section when one is open.
inline RulePack parse_rules(std::string_view text, std::string source = "") {
    RulePack pack;
    pack.source = std::move(source);
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    int order = 0;
    std::string section;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = dsl::trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[' && t.back() == ']') {
            std::string inner = t.substr(1, t.size() - 2);
            if (inner.rfind("category:", 0) != 0)
                throw SyntaxError(line_no, "[category:NAME] header");
            section = dsl::trim(inner.substr(9));
            if (!is_valid_category(section)) throw UnknownCategoryError(section);
            continue;
        }
        auto fields = dsl::split_unquoted(t, '|', 5);
        if (fields.size() != 5)
            throw SyntaxError(line_no, "id | category | pass | priority | PATTERN => ACTION");
        Rule rule;
        rule.id = dsl::trim(fields[0]);
        if (rule.id.empty()) throw SyntaxError(line_no, "non-empty rule id");
        rule.category = dsl::trim(fields[1]);
        if (!is_valid_category(rule.category)) throw UnknownCategoryError(rule.category);
        if (!section.empty() && rule.category != section)
            throw SyntaxError(line_no, "category matching section '" + section + "'");
        rule.pass = dsl::parse_pass(dsl::trim(fields[2]), line_no);
        std::string prio = dsl::trim(fields[3]);
        try {
            rule.priority = std::stoi(prio);
        } catch (const std::exception&) {
            throw SyntaxError(line_no, "integer priority");
        }
        std::string body = fields[4];
        auto arrow = body.find("=>");
        if (arrow == std::string::npos) throw SyntaxError(line_no, "'=>' action");
        for (const auto& el : dsl::split_ws_unquoted(body.substr(0, arrow)))
            rule.pattern.push_back(dsl::parse_element(el, line_no));
        if (rule.pattern.empty()) throw SyntaxError(line_no, "non-empty pattern");
        rule.action = dsl::parse_action(dsl::trim(body.substr(arrow + 2)), line_no,
                                        rule.pattern.size());
        rule.file_order = order++;
        for (const auto& r : pack.rules)
            if (r.id == rule.id) throw DuplicateRuleIdError(rule.id);
        pack.counts_by_category[rule.category] += 1;
        pack.rules.push_back(std::move(rule));
    }
    return pack;
}

// ---------------------------------------------------------------------------
// Serialization (canonical form; preserves file order so the pass-order
// tie-break survives a round trip)

namespace dsl {

inline std::string render_tag_set(TagMask m) {
    std::string out;
    for (const auto& info : kTagTable) {
        if (m & tag_bit(info.tag)) {
            if (!out.empty()) out += '|';
            out += info.code;
        }
    }
    return out;
}

inline std::string render_atom(const PredicateAtom& a) {
    switch (a.type) {
        case AtomType::WordIn: {
            std::string w;
            for (const auto& s : a.words) {
                if (!w.empty()) w += '|';
                w += s;
            }
            return "word:\"" + w + "\"";
        }
        case AtomType::CandIn: return "cand:" + render_tag_set(a.tags);
        case AtomType::TagIn: return "tag:" + render_tag_set(a.tags);
        case AtomType::BaseIn: return "base:" + render_tag_set(a.tags);
        case AtomType::KindIs: return "kind:" + std::string(token_kind_name(a.kind));
        case AtomType::SuffixIs: return "suffix:" + a.suffix;
        case AtomType::PosStart: return "pos:start";
        case AtomType::PosEnd: return "pos:end";
        case AtomType::InPhrase:
            return "inphrase:" + std::string(names::phrase_kind_name(a.phrase_kind));
        case AtomType::InClause:
            return "inclause:" + std::string(names::clause_kind_name(a.clause_kind));
        case AtomType::Untagged: return "untagged";
    }
    return "?";
}

inline std::string render_element(const TokenPredicate& p) {
    std::string out;
    for (const auto& a : p.atoms) {
        if (!out.empty()) out += '&';
        out += render_atom(a);
    }
    if (p.quantifier == Quantifier::Optional) out += '?';
    else if (p.quantifier == Quantifier::Star)
        out += "*" + std::to_string(p.window);
    return out;
}

inline std::string render_action(const RuleAction& a) {
    switch (a.type) {
        case ActionType::Assign:
            return "assign(" + std::to_string(a.position_ref) + "," +
                   std::string(render_tag(a.tag)) + ")";
        case ActionType::Span: {
            std::string kind = a.span_is_clause
                                   ? std::string(names::clause_kind_name(a.clause_kind))
                                   : std::string(names::phrase_kind_name(a.phrase_kind));
            return "span(" + kind + "," + std::to_string(a.start_ref) + ".." +
                   std::to_string(a.end_ref) + ")";
        }
        case ActionType::Attach:
            return "attach(" + std::to_string(a.modifier_ref) + "->" +
                   std::to_string(a.head_ref) + "," +
                   std::string(names::attachment_kind_name(a.attachment_kind)) + ")";
    }
    return "?";
}

} // namespace dsl

inline std::string serialize_pack(const RulePack& pack) {
    std::ostringstream out;
    std::string section;
    for (const auto& r : pack.rules) {
        if (r.category != section) {
            section = r.category;
            out << "[category:" << section << "]\n";
        }
        out << r.id << " | " << r.category << " | " << names::pass_name(r.pass)
            << " | " << r.priority << " | ";
        for (std::size_t i = 0; i < r.pattern.size(); ++i) {
            if (i) out << ' ';
            out << dsl::render_element(r.pattern[i]);
        }
        out << " => " << dsl::render_action(r.action) << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Lint

enum class LintSeverity { Violation, Warning, Info };

struct LintFinding {
    LintSeverity severity;
    std::string code;
    std::string rule_id;
    std::string message;
};

namespace detail {

// intersection of all tag:/cand: atom masks of an element; ~0 when unconstrained
inline TagMask forced_tags(const TokenPredicate& p) {
    TagMask m = ~TagMask{0};
    for (const auto& a : p.atoms)
        if (a.type == AtomType::TagIn || a.type == AtomType::CandIn) m &= a.tags;
    return m;
}

} // namespace detail

inline std::vector<LintFinding> lint_pack(const RulePack& pack) {
    std::vector<LintFinding> findings;

    for (const auto& r : pack.rules) {
        if (r.action.type != ActionType::Attach) continue;
        TagMask mod = detail::forced_tags(r.pattern[r.action.modifier_ref]);
        TagMask head = detail::forced_tags(r.pattern[r.action.head_ref]);
        bool mod_adv = mod != 0 && (mod & ~kAdverbMask) == 0;
        bool head_noun = head != 0 && (head & ~kNounPronounMask) == 0 &&
                         head != ~TagMask{0};
        if (mod_adv && head_noun)
            findings.push_back({LintSeverity::Violation, "AdvNounViolation", r.id,
                                "attachment pairs an adverb modifier with a "
                                "noun/pronoun head"});
    }

    // shadowing: identical pass+pattern+action behind an earlier rule
    for (Pass p : {Pass::Phrase, Pass::Clause, Pass::Modifier}) {
        auto ordered = pack.pass_rules(p);
        for (std::size_t j = 1; j < ordered.size(); ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                const Rule* a = ordered[i];
                const Rule* b = ordered[j];
                if (a->pattern.size() != b->pattern.size()) continue;
                bool same = dsl::render_action(a->action) ==
                            dsl::render_action(b->action);
                for (std::size_t k = 0; same && k < a->pattern.size(); ++k)
                    same = dsl::render_element(a->pattern[k]) ==
                           dsl::render_element(b->pattern[k]);
                if (same) {
                    findings.push_back({LintSeverity::Warning, "ShadowedRule",
                                        b->id,
                                        "shadowed by identical rule '" + a->id +
                                            "'"});
                    break;
                }
            }
        }
    }

    for (const auto& cat : kRuleCategories) {
        auto it = pack.counts_by_category.find(std::string(cat.name));
        int have = it == pack.counts_by_category.end() ? 0 : it->second;
        if (have != cat.declared_count)
            findings.push_back(
                {LintSeverity::Info, "CategoryCountMismatch", "",
                 std::string(cat.name) + ": pack has " + std::to_string(have) +
                     " rules, declared budget is " +
                     std::to_string(cat.declared_count)});
    }
    return findings;
}

inline std::string lint_report(const std::vector<LintFinding>& findings) {
    std::ostringstream out;
    for (const auto& f : findings) {
        switch (f.severity) {
            case LintSeverity::Violation: out << "violation"; break;
            case LintSeverity::Warning: out << "warning"; break;
            case LintSeverity::Info: out << "info"; break;
        }
        out << " " << f.code;
        if (!f.rule_id.empty()) out << " [" << f.rule_id << "]";
        out << ": " << f.message << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Sentence state and the matcher

struct WorkingToken {
    Token token;
    StemResult stem;
    std::vector<Tag> candidates;
    TagMask cand_mask = 0;
    TagMask base_mask = 0; // lexicon tags of the stem base
    std::optional<Tag> final_tag;
    std::string provenance;
};

struct TagAssignment {
    std::size_t index;
    Tag tag;
    std::string rule_id;
    bool operator==(const TagAssignment&) const = default;
};

struct SentenceState {
    std::vector<WorkingToken> tokens;
    std::vector<PhraseSpan> phrases;
    std::vector<ClauseSpan> clauses;
    std::vector<Attachment> attachments;
    std::vector<std::string> warnings;
};

namespace engine {

inline bool atom_holds(const PredicateAtom& a, const SentenceState& s,
                       std::size_t i) {
    const WorkingToken& t = s.tokens[i];
    switch (a.type) {
        case AtomType::WordIn:
            return std::find(a.words.begin(), a.words.end(), t.token.normalized) !=
                   a.words.end();
        case AtomType::CandIn: return (t.cand_mask & a.tags) != 0;
        case AtomType::TagIn:
            return t.final_tag && (tag_bit(*t.final_tag) & a.tags) != 0;
        case AtomType::BaseIn: return (t.base_mask & a.tags) != 0;
        case AtomType::KindIs: return t.token.kind == a.kind;
        case AtomType::SuffixIs: {
            const std::string& w = t.token.normalized;
            return w.size() >= a.suffix.size() &&
                   w.compare(w.size() - a.suffix.size(), a.suffix.size(),
                             a.suffix) == 0;
        }
        case AtomType::PosStart: return i == 0;
        case AtomType::PosEnd: return i + 1 == s.tokens.size();
        case AtomType::InPhrase:
            for (const auto& span : s.phrases)
                if (span.kind == a.phrase_kind && span.token_range.contains(i))
                    return true;
            return false;
        case AtomType::InClause:
            for (const auto& span : s.clauses)
                if (span.kind == a.clause_kind && span.token_range.contains(i))
                    return true;
            return false;
        case AtomType::Untagged: return !t.final_tag;
    }
    return false;
}

inline bool predicate_holds(const TokenPredicate& p, const SentenceState& s,
                            std::size_t i) {
    for (const auto& a : p.atoms)
        if (!atom_holds(a, s, i)) return false;
    return true;
}

struct Match {
    std::vector<std::vector<std::size_t>> element_tokens;
    std::size_t end = 0;
};

// Greedy longest-first with backtracking; deterministic.
inline bool match_elements(const std::vector<TokenPredicate>& pattern,
                           std::size_t el, std::size_t pos,
                           const SentenceState& s, Match& m) {
    if (el == pattern.size()) {
        m.end = pos;
        return true;
    }
    const TokenPredicate& p = pattern[el];
    std::size_t avail = s.tokens.size() - pos;
    std::size_t max_take = 1;
    std::size_t min_take = 1;
    if (p.quantifier == Quantifier::Optional) min_take = 0;
    else if (p.quantifier == Quantifier::Star) {
        min_take = 0;
        max_take = static_cast<std::size_t>(p.window);
    }
    if (max_take > avail) max_take = avail;
    // longest consecutive run satisfying the predicate
    std::size_t run = 0;
    while (run < max_take && predicate_holds(p, s, pos + run)) ++run;
    for (std::size_t take = run + 1; take-- > min_take;) {
        std::vector<std::size_t> taken;
        for (std::size_t k = 0; k < take; ++k) taken.push_back(pos + k);
        m.element_tokens.push_back(std::move(taken));
        if (match_elements(pattern, el + 1, pos + take, s, m)) return true;
        m.element_tokens.pop_back();
        if (take == 0) break;
    }
    return false;
}

inline bool match_at(const Rule& rule, const SentenceState& s, std::size_t pos,
                     Match& m) {
    m.element_tokens.clear();
    return match_elements(rule.pattern, 0, pos, s, m);
}

/// Applies the action; returns the assignments it made (empty for span and
/// attach actions and for no-ops).  Monotone: never overwrites a final tag,
/// never duplicates spans or re-attaches a modifier, and never pairs an
/// adverb modifier with a noun/pronoun head.
inline std::vector<TagAssignment> apply_action(const Rule& rule, const Match& m,
                                               SentenceState& s) {
    std::vector<TagAssignment> made;
    const RuleAction& a = rule.action;
    auto tokens_of = [&](std::size_t ref) -> const std::vector<std::size_t>& {
        return m.element_tokens[ref];
    };
    switch (a.type) {
        case ActionType::Assign: {
            for (std::size_t idx : tokens_of(a.position_ref)) {
                WorkingToken& t = s.tokens[idx];
                if (t.final_tag) continue;
                t.final_tag = a.tag;
                t.provenance = rule.id;
                made.push_back({idx, a.tag, rule.id});
            }
            break;
        }
        case ActionType::Span: {
            const auto& start_toks = tokens_of(a.start_ref);
            const auto& end_toks = tokens_of(a.end_ref);
            if (start_toks.empty() || end_toks.empty()) break;
            TokenRange range{start_toks.front(), end_toks.back() + 1};
            if (a.span_is_clause) {
                for (const auto& sp : s.clauses)
                    if (sp.kind == a.clause_kind && sp.token_range.overlaps(range))
                        return made;
                s.clauses.push_back({a.clause_kind, range, rule.id});
            } else {
                for (const auto& sp : s.phrases)
                    if (sp.kind == a.phrase_kind && sp.token_range.overlaps(range))
                        return made;
                s.phrases.push_back({a.phrase_kind, range, rule.id});
            }
            break;
        }
        case ActionType::Attach: {
            const auto& mod_toks = tokens_of(a.modifier_ref);
            const auto& head_toks = tokens_of(a.head_ref);
            if (mod_toks.empty() || head_toks.empty()) break;
            std::size_t mod = mod_toks.front();
            std::size_t head = head_toks.front();
            if (mod == head) break;
            for (const auto& at : s.attachments)
                if (at.modifier_index == mod) return made;
            const auto& head_tok = s.tokens[head];
            if (a.attachment_kind == AttachmentKind::AdjToNoun) {
                if (!head_tok.final_tag ||
                    (tag_bit(*head_tok.final_tag) & kNounPronounMask) == 0)
                    break;
            } else {
                // Adv* kinds: an adverb cannot modify a noun or pronoun
                if (head_tok.final_tag &&
                    (tag_bit(*head_tok.final_tag) & kNounPronounMask) != 0)
                    break;
            }
            s.attachments.push_back({mod, head, a.attachment_kind, rule.id});
            break;
        }
    }
    return made;
}

/// One pass: rules in (priority desc, file order), each scanned left to
/// right; after a match the scan resumes at max(match end, pos+1).
inline std::vector<TagAssignment> apply_pass(SentenceState& s,
                                             const RulePack& pack, Pass pass) {
    std::vector<TagAssignment> made;
    for (const Rule* rule : pack.pass_rules(pass)) {
        std::size_t pos = 0;
        while (pos < s.tokens.size()) {
            Match m;
            if (match_at(*rule, s, pos, m)) {
                auto a = apply_action(*rule, m, s);
                made.insert(made.end(), a.begin(), a.end());
                pos = std::max(m.end, pos + 1);
            } else {
                ++pos;
            }
        }
    }
    return made;
}

// ---------------------------------------------------------------------------
// Clause segmentation

inline bool in_prepositional(const SentenceState& s, std::size_t i) {
    for (const auto& span : s.phrases)
        if (span.kind == PhraseKind::Prepositional && span.token_range.contains(i))
            return true;
    return false;
}

/// Subject and verbs are never found inside a prepositional phrase, so
/// phrase-internal tokens are excluded from verb candidacy.
inline bool verb_candidate(const SentenceState& s, std::size_t i) {
    if (in_prepositional(s, i)) return false;
    const WorkingToken& t = s.tokens[i];
    if (t.final_tag) return (tag_bit(*t.final_tag) & kVerbMask) != 0;
    return (t.cand_mask & kVerbMask) != 0;
}

enum class OpenerKind { None, WhAdverb, Relative, Subordinator };

inline const std::vector<std::string>& subordinating_conjunctions() {
    static const std::vector<std::string> subs = {
        "because", "although", "though", "while", "whereas", "unless", "if",
    };
    return subs;
}

inline OpenerKind opener_kind(const SentenceState& s, std::size_t i) {
    const WorkingToken& t = s.tokens[i];
    const std::string& w = t.token.normalized;
    if (w == "when" || w == "where") return OpenerKind::WhAdverb;
    constexpr TagMask rel = tag_bit(Tag::RPP) | tag_bit(Tag::RPS) | tag_bit(Tag::RPT);
    if (t.final_tag) {
        if (tag_bit(*t.final_tag) & rel) return OpenerKind::Relative;
    } else if (t.cand_mask & rel) {
        return OpenerKind::Relative;
    }
    const auto& subs = subordinating_conjunctions();
    if (std::find(subs.begin(), subs.end(), w) != subs.end())
        return OpenerKind::Subordinator;
    constexpr TagMask cnd = tag_bit(Tag::CND);
    if (t.final_tag ? (tag_bit(*t.final_tag) & cnd) != 0 : (t.cand_mask & cnd) != 0)
        return OpenerKind::Subordinator;
    return OpenerKind::None;
}

inline std::optional<TokenRange> trim_punct(const SentenceState& s,
                                            TokenRange r) {
    while (r.begin < r.end && s.tokens[r.begin].token.kind == TokenKind::Punct)
        ++r.begin;
    while (r.end > r.begin && s.tokens[r.end - 1].token.kind == TokenKind::Punct)
        --r.end;
    if (r.begin >= r.end) return std::nullopt;
    return r;
}

inline bool range_has_verb(const SentenceState& s, TokenRange r) {
    for (std::size_t i = r.begin; i < r.end; ++i)
        if (verb_candidate(s, i)) return true;
    return false;
}

/// Verb-first shallow segmentation: the sentence splits at clause openers;
/// a subordinate span runs from its opener through the first verb group and
/// ends at the next comma or the next verb candidate; verb-bearing leftovers
/// become Independent spans.  Verbless material yields no span.
inline void segment_clauses(SentenceState& s) {
    const std::size_t n = s.tokens.size();
    bool any_verb = false;
    for (std::size_t i = 0; i < n; ++i)
        if (verb_candidate(s, i)) any_verb = true;
    if (!any_verb) {
        if (n > 0) s.warnings.push_back("VerblessSentence");
        return;
    }

    std::vector<std::size_t> starts = {0};
    for (std::size_t i = 1; i < n; ++i)
        if (opener_kind(s, i) != OpenerKind::None) starts.push_back(i);

    auto emit_independent = [&](TokenRange r) {
        auto t = trim_punct(s, r);
        if (t && range_has_verb(s, *t))
            s.clauses.push_back({ClauseKind::Independent, *t, "clause-segmenter"});
    };

    for (std::size_t si = 0; si < starts.size(); ++si) {
        std::size_t seg_begin = starts[si];
        std::size_t seg_end = si + 1 < starts.size() ? starts[si + 1] : n;
        OpenerKind op = opener_kind(s, seg_begin);
        if (op == OpenerKind::None) {
            emit_independent({seg_begin, seg_end});
            continue;
        }
        // first verb of the subordinate clause
        std::size_t v = seg_begin;
        while (v < seg_end && !verb_candidate(s, v)) ++v;
        if (v == seg_end) {
            emit_independent({seg_begin, seg_end});
            continue;
        }
        // clause ends at the next comma or the next verb candidate
        std::size_t end = v + 1;
        while (end < seg_end && s.tokens[end].token.normalized != "," &&
               !verb_candidate(s, end))
            ++end;
        ClauseKind kind;
        switch (op) {
            case OpenerKind::WhAdverb:
                kind = seg_begin == 0 ? ClauseKind::AdverbSub
                                      : ClauseKind::AdjectiveSub;
                break;
            case OpenerKind::Relative: {
                bool subject_or_object = seg_begin == 0;
                if (!subject_or_object) {
                    std::size_t prev = seg_begin - 1;
                    while (prev > 0 && s.tokens[prev].token.kind == TokenKind::Punct)
                        --prev;
                    if (verb_candidate(s, prev)) subject_or_object = true;
                }
                kind = subject_or_object ? ClauseKind::NounSub
                                         : ClauseKind::AdjectiveSub;
                break;
            }
            default: kind = ClauseKind::AdverbSub; break;
        }
        if (auto t = trim_punct(s, {seg_begin, end}))
            s.clauses.push_back({kind, *t, "clause-segmenter"});
        if (end < seg_end) emit_independent({end, seg_end});
    }
}

} // namespace engine

// ---------------------------------------------------------------------------
// The three passes

struct PhraseResult {
    std::vector<PhraseSpan> spans;
    std::vector<TagAssignment> assignments;
};

struct ClauseResult {
    std::vector<ClauseSpan> spans;
    std::vector<TagAssignment> assignments;
};

struct ModifierResult {
    std::vector<Attachment> attachments;
    std::vector<TagAssignment> assignments;
};

inline PhraseResult find_phrases(SentenceState& s, const RulePack& pack) {
    PhraseResult out;
    out.assignments = engine::apply_pass(s, pack, Pass::Phrase);
    out.spans = s.phrases;
    return out;
}

inline ClauseResult find_clauses(SentenceState& s, const RulePack& pack) {
    ClauseResult out;
    engine::segment_clauses(s);
    out.assignments = engine::apply_pass(s, pack, Pass::Clause);
    out.spans = s.clauses;
    return out;
}

/// Modifier rules, then the lexicon fallback: any still-untagged token
/// receives its first candidate so tagging is total.
inline ModifierResult apply_modifier_rules(SentenceState& s, const RulePack& pack) {
    ModifierResult out;
    out.assignments = engine::apply_pass(s, pack, Pass::Modifier);
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
        WorkingToken& t = s.tokens[i];
        if (t.final_tag) continue;
        t.final_tag = t.candidates.front();
        t.provenance = "lexicon-fallback";
        out.assignments.push_back({i, *t.final_tag, "lexicon-fallback"});
    }
    out.attachments = s.attachments;
    return out;
}

} // namespace clintag
