// clintag -- rule-based POS tagger for clinical English
//
// End-to-end orchestration: tokenize -> stem -> lexicon -> three rule passes.
#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lexicon.hpp"
#include "rules.hpp"
#include "stemmer.hpp"
#include "tagset.hpp"
#include "tokenizer.hpp"

namespace clintag {

struct TaggedToken {
    Token token;
    StemResult stem;
    std::vector<Tag> candidates;
    Tag final_tag;
    std::string provenance; // rule id or "lexicon-fallback"
};

struct TaggedSentence {
    std::vector<TaggedToken> tokens;
    std::vector<PhraseSpan> phrase_spans;
    std::vector<ClauseSpan> clause_spans;
    std::vector<Attachment> attachments;
    std::vector<std::string> warnings;
};

class Engine {
public:
    /// Fail-fast: lint violations abort construction; warnings and infos are
    /// kept for inspection.
    Engine(Lexicon lexicon, RulePack pack, StemTable stems,
           std::vector<std::string> abbreviations = default_abbreviations())
        : lexicon_(std::move(lexicon)), pack_(std::move(pack)),
          stems_(std::move(stems)), abbreviations_(std::move(abbreviations)) {
        lint_findings_ = lint_pack(pack_);
        std::vector<LintFinding> violations;
        for (const auto& f : lint_findings_)
            if (f.severity == LintSeverity::Violation) violations.push_back(f);
        if (!violations.empty())
            throw PackViolationError(lint_report(violations));
    }

    const Lexicon& lexicon() const { return lexicon_; }
    const RulePack& pack() const { return pack_; }
    const StemTable& stems() const { return stems_; }
    const std::vector<std::string>& abbreviations() const { return abbreviations_; }
    const std::vector<LintFinding>& lint_findings() const { return lint_findings_; }

    /// Builds the working state for one sentence: tokens, stems, candidates.
    SentenceState prepare(std::string_view sentence_text) const {
        SentenceState s;
        for (auto& tok : tokenize(sentence_text)) {
            WorkingToken wt;
            wt.stem = tok.kind == TokenKind::Word
                          ? stems_.stem(tok.normalized)
                          : StemResult{tok.normalized, std::nullopt, std::nullopt};
            bool initial = s.tokens.empty();
            wt.candidates = lexicon_.lookup(tok, wt.stem, initial);
            wt.cand_mask = mask_of(wt.candidates);
            wt.base_mask = mask_of(lexicon_.base_tags(wt.stem));
            wt.token = std::move(tok);
            s.tokens.push_back(std::move(wt));
        }
        return s;
    }

    TaggedSentence tag_sentence(std::string_view sentence_text) const {
        SentenceState s = prepare(sentence_text);
        find_phrases(s, pack_);
        find_clauses(s, pack_);
        apply_modifier_rules(s, pack_);
        return finish(std::move(s));
    }

    std::vector<TaggedSentence> tag_document(std::string_view document) const {
        std::vector<TaggedSentence> out;
        for (const auto& sent : split_sentences(document, abbreviations_))
            out.push_back(tag_sentence(sent.text));
        return out;
    }

    static TaggedSentence finish(SentenceState s) {
        TaggedSentence out;
        for (auto& wt : s.tokens) {
            TaggedToken t;
            t.token = std::move(wt.token);
            t.stem = std::move(wt.stem);
            t.candidates = std::move(wt.candidates);
            t.final_tag = *wt.final_tag; // totality holds after the third pass
            t.provenance = std::move(wt.provenance);
            out.tokens.push_back(std::move(t));
        }
        out.phrase_spans = std::move(s.phrases);
        out.clause_spans = std::move(s.clauses);
        out.attachments = std::move(s.attachments);
        out.warnings = std::move(s.warnings);
        return out;
    }

private:
    Lexicon lexicon_;
    RulePack pack_;
    StemTable stems_;
    std::vector<std::string> abbreviations_;
    std::vector<LintFinding> lint_findings_;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<std::string> load_abbreviations(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError(path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        out.push_back(line);
    }
    return out;
}

inline Engine build_engine(const std::string& lexicon_file,
                           const std::string& pack_file,
                           const std::string& stem_rules_file,
                           const std::string& stem_stops_file,
                           const std::string& abbreviations_file = "") {
    Lexicon lex = load_lexicon(lexicon_file);
    RulePack pack = parse_rules(read_file(pack_file), pack_file);
    StemTable stems = load_stem_table(stem_rules_file, stem_stops_file);
    std::vector<std::string> abbrevs = abbreviations_file.empty()
                                           ? default_abbreviations()
                                           : load_abbreviations(abbreviations_file);
    return Engine(std::move(lex), std::move(pack), std::move(stems),
                  std::move(abbrevs));
}

} // namespace clintag
