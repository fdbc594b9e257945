// clintag -- rule-based POS tagger for clinical English
//
// Corpus file formats and the evaluation comparison.
//
// Vertical gold format: one token per line `surface<TAB>TAG`, blank line
// between sentences, group headers `## group: <label>`.
#pragma once

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "eval.hpp"
#include "pipeline.hpp"
#include "tagset.hpp"

namespace clintag {

struct GoldToken {
    std::string surface;
    Tag tag;
    bool operator==(const GoldToken&) const = default;
};

using GoldSentence = std::vector<GoldToken>;

struct GoldGroup {
    std::string label;
    std::vector<GoldSentence> sentences;
};

struct GoldCorpus {
    std::vector<GoldGroup> groups;
};

inline GoldCorpus read_gold(std::istream& in) {
    GoldCorpus corpus;
    std::string line;
    int line_no = 0;
    GoldSentence current;
    bool any_header = false;

    auto flush_sentence = [&]() {
        if (current.empty()) return;
        if (corpus.groups.empty()) {
            corpus.groups.push_back({"all", {}});
        }
        corpus.groups.back().sentences.push_back(std::move(current));
        current.clear();
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind("## group:", 0) == 0) {
            flush_sentence();
            if (!corpus.groups.empty() && corpus.groups.back().sentences.empty())
                throw EmptyGroupError(corpus.groups.back().label);
            std::string label = dsl::trim(line.substr(9));
            if (label.empty()) throw MalformedGoldLineError(line_no, line);
            for (const auto& g : corpus.groups)
                if (g.label == label)
                    throw MalformedGoldLineError(line_no,
                                                 "duplicate group '" + label + "'");
            corpus.groups.push_back({label, {}});
            any_header = true;
            continue;
        }
        if (line.empty()) {
            flush_sentence();
            continue;
        }
        if (line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size())
            throw MalformedGoldLineError(line_no, line);
        std::string surface = line.substr(0, tab);
        std::string code = line.substr(tab + 1);
        if (!is_valid_tag_code(code))
            throw UnknownTagError(code + " (line " + std::to_string(line_no) + ")");
        current.push_back({std::move(surface), parse_tag(code)});
    }
    flush_sentence();
    if (!corpus.groups.empty() && corpus.groups.back().sentences.empty())
        throw EmptyGroupError(corpus.groups.back().label);
    (void)any_header;
    return corpus;
}

inline GoldCorpus read_gold_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError(path);
    return read_gold(in);
}

// ---------------------------------------------------------------------------
// Tagged output

enum class OutputFormat { Vertical, JsonLines };

inline std::string write_vertical(const std::vector<TaggedSentence>& sentences,
                                  const std::string& group_label = "") {
    std::ostringstream out;
    if (!group_label.empty()) out << "## group: " << group_label << "\n";
    for (const auto& sent : sentences) {
        for (const auto& t : sent.tokens)
            out << t.token.surface << '\t' << render_tag(t.final_tag) << "\n";
        out << "\n";
    }
    return out.str();
}

inline nlohmann::ordered_json sentence_to_json(const TaggedSentence& sent) {
    nlohmann::ordered_json j;
    j["tokens"] = nlohmann::ordered_json::array();
    for (const auto& t : sent.tokens) {
        nlohmann::ordered_json tok;
        tok["surface"] = t.token.surface;
        tok["kind"] = std::string(token_kind_name(t.token.kind));
        tok["stem"] = t.stem.base;
        nlohmann::ordered_json cands = nlohmann::ordered_json::array();
        for (Tag c : t.candidates) cands.push_back(std::string(render_tag(c)));
        tok["candidates"] = std::move(cands);
        tok["tag"] = std::string(render_tag(t.final_tag));
        tok["provenance"] = t.provenance;
        j["tokens"].push_back(std::move(tok));
    }
    j["phrases"] = nlohmann::ordered_json::array();
    for (const auto& p : sent.phrase_spans)
        j["phrases"].push_back({{"kind", std::string(names::phrase_kind_name(p.kind))},
                                {"begin", p.token_range.begin},
                                {"end", p.token_range.end},
                                {"rule", p.rule_id}});
    j["clauses"] = nlohmann::ordered_json::array();
    for (const auto& c : sent.clause_spans)
        j["clauses"].push_back({{"kind", std::string(names::clause_kind_name(c.kind))},
                                {"begin", c.token_range.begin},
                                {"end", c.token_range.end},
                                {"rule", c.rule_id}});
    j["attachments"] = nlohmann::ordered_json::array();
    for (const auto& a : sent.attachments)
        j["attachments"].push_back(
            {{"modifier", a.modifier_index},
             {"head", a.head_index},
             {"kind", std::string(names::attachment_kind_name(a.kind))},
             {"rule", a.rule_id}});
    j["warnings"] = sent.warnings;
    return j;
}

inline std::string write_json_lines(const std::vector<TaggedSentence>& sentences) {
    std::ostringstream out;
    for (const auto& sent : sentences) out << sentence_to_json(sent).dump() << "\n";
    return out.str();
}

inline std::string write_tagged(const std::vector<TaggedSentence>& sentences,
                                OutputFormat format,
                                const std::string& group_label = "") {
    return format == OutputFormat::Vertical
               ? write_vertical(sentences, group_label)
               : write_json_lines(sentences);
}

// ---------------------------------------------------------------------------
// Stats

struct GroupStats {
    std::string label;
    std::size_t sentences = 0;
    std::size_t tokens = 0;
};

struct CorpusStats {
    std::vector<GroupStats> groups;
    std::size_t total_sentences = 0;
    std::size_t total_tokens = 0;
};

inline CorpusStats corpus_stats(const GoldCorpus& corpus) {
    CorpusStats stats;
    for (const auto& g : corpus.groups) {
        GroupStats gs{g.label, g.sentences.size(), 0};
        for (const auto& sent : g.sentences) gs.tokens += sent.size();
        stats.total_sentences += gs.sentences;
        stats.total_tokens += gs.tokens;
        stats.groups.push_back(std::move(gs));
    }
    return stats;
}

// ---------------------------------------------------------------------------
// Comparison (manual-appraisal arithmetic: token i correct iff predicted
// final tag equals gold tag)

inline std::vector<GroupCounts> compare(const GoldCorpus& gold,
                                        const GoldCorpus& predicted) {
    if (gold.groups.size() != predicted.groups.size())
        throw AlignmentError("<corpus>", -1, -1);
    std::vector<GroupCounts> out;
    for (std::size_t gi = 0; gi < gold.groups.size(); ++gi) {
        const auto& gg = gold.groups[gi];
        const auto& pg = predicted.groups[gi];
        if (gg.label != pg.label || gg.sentences.size() != pg.sentences.size())
            throw AlignmentError(gg.label, -1, -1);
        GroupCounts counts{gg.label, 0, 0, 0};
        for (std::size_t si = 0; si < gg.sentences.size(); ++si) {
            const auto& gs = gg.sentences[si];
            const auto& ps = pg.sentences[si];
            if (gs.size() != ps.size())
                throw AlignmentError(gg.label, static_cast<int>(si), -1);
            for (std::size_t ti = 0; ti < gs.size(); ++ti) {
                if (gs[ti].surface != ps[ti].surface)
                    throw AlignmentError(gg.label, static_cast<int>(si),
                                         static_cast<int>(ti));
                if (gs[ti].tag == ps[ti].tag) ++counts.correct;
                else ++counts.incorrect;
                ++counts.total;
            }
        }
        out.push_back(std::move(counts));
    }
    return out;
}

/// Tags the gold corpus's own surfaces (joined by single spaces) and returns
/// the predicted corpus plus the lexicon-fallback rate in percent.
inline std::pair<GoldCorpus, double> tag_gold_surfaces(const Engine& engine,
                                                       const GoldCorpus& gold) {
    GoldCorpus predicted;
    std::size_t fallback = 0, total = 0;
    for (const auto& g : gold.groups) {
        GoldGroup pg{g.label, {}};
        for (std::size_t si = 0; si < g.sentences.size(); ++si) {
            const auto& gs = g.sentences[si];
            std::string text;
            for (const auto& t : gs) {
                if (!text.empty()) text += ' ';
                text += t.surface;
            }
            TaggedSentence tagged = engine.tag_sentence(text);
            if (tagged.tokens.size() != gs.size())
                throw AlignmentError(g.label, static_cast<int>(si), -1);
            GoldSentence ps;
            for (std::size_t ti = 0; ti < tagged.tokens.size(); ++ti) {
                if (tagged.tokens[ti].token.surface != gs[ti].surface)
                    throw AlignmentError(g.label, static_cast<int>(si),
                                         static_cast<int>(ti));
                ps.push_back({gs[ti].surface, tagged.tokens[ti].final_tag});
                if (tagged.tokens[ti].provenance == "lexicon-fallback") ++fallback;
                ++total;
            }
            pg.sentences.push_back(std::move(ps));
        }
        predicted.groups.push_back(std::move(pg));
    }
    double rate = total == 0 ? 0.0 : 100.0 * static_cast<double>(fallback) /
                                         static_cast<double>(total);
    return {std::move(predicted), rate};
}

// ---------------------------------------------------------------------------
// Report rendering

inline std::string render_report_text(const EvalReport& report) {
    std::ostringstream out;
    out << std::left;
    out << "Performance of Part of Speech Tagger\n";
    out << std::setw(16) << "Group" << std::setw(14) << "Incorrect"
        << std::setw(12) << "Correct" << std::setw(12) << "Total" << "\n";
    std::int64_t ti = 0, tc = 0, tt = 0;
    for (const auto& g : report.groups) {
        out << std::setw(16) << g.group << std::setw(14) << g.incorrect
            << std::setw(12) << g.correct << std::setw(12) << g.total << "\n";
        ti += g.incorrect;
        tc += g.correct;
        tt += g.total;
    }
    out << std::setw(16) << "Total" << std::setw(14) << ti << std::setw(12) << tc
        << std::setw(12) << tt << "\n\n";
    out << "Accuracy of POS Tagging\n";
    out << std::fixed << std::setprecision(2);
    for (std::size_t i = 0; i < report.groups.size(); ++i)
        out << std::setw(16) << report.groups[i].group
            << report.per_group_accuracy[i] << " %\n";
    out << std::setw(16) << "Average" << report.macro_accuracy
        << " % (unweighted mean of group accuracies)\n";
    out << std::setw(16) << "Micro" << report.micro_accuracy << " %\n";
    out << std::setw(16) << "Fallback rate" << report.fallback_rate << " %\n";
    return out.str();
}

inline std::string render_report_kv(const EvalReport& report) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2);
    for (std::size_t i = 0; i < report.groups.size(); ++i) {
        const auto& g = report.groups[i];
        out << "group." << g.group << ".correct=" << g.correct << "\n";
        out << "group." << g.group << ".incorrect=" << g.incorrect << "\n";
        out << "group." << g.group << ".total=" << g.total << "\n";
        out << "group." << g.group << ".accuracy=" << report.per_group_accuracy[i]
            << "\n";
    }
    out << "macro_accuracy=" << report.macro_accuracy << "\n";
    out << "micro_accuracy=" << report.micro_accuracy << "\n";
    out << "fallback_rate=" << report.fallback_rate << "\n";
    return out.str();
}

} // namespace clintag
