// clintag -- rule-based POS tagger for clinical English
//
// Suffix-stripping normalizer: a small ordered table, not a full stemmer.
// Output is used for lexicon lookup and rule predicates only; the surface
// keeps its tag.
#pragma once

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace clintag {

struct StemResult {
    std::string base;
    std::optional<std::string> stripped_suffix;
    std::optional<std::string> rule_id;
};

struct SuffixRule {
    std::string suffix;
    std::string replacement;
    std::string id; // "suffix->replacement"
};

class StemTable {
public:
    StemTable(std::vector<SuffixRule> rules, std::set<std::string> stop_set)
        : rules_(std::move(rules)), stop_set_(std::move(stop_set)) {}

    /// At most one rule applies, tried in table order; a rule whose result
    /// would drop below a 3-character base is skipped.  The "es" and "s"
    /// rules carry respelling guards so that produced bases are fixed points
    /// of the table ("causes" -> "cause", not "caus").
    StemResult stem(std::string_view normalized) const {
        std::string word(normalized);
        if (!stop_set_.contains(word)) {
            for (const auto& r : rules_) {
                if (word.size() <= r.suffix.size()) continue;
                if (word.compare(word.size() - r.suffix.size(), r.suffix.size(),
                                 r.suffix) != 0)
                    continue;
                if (!suffix_applicable(r.suffix, word)) continue;
                std::string base =
                    word.substr(0, word.size() - r.suffix.size()) + r.replacement;
                if (base.size() < kMinBase) continue;
                return {std::move(base), r.suffix, r.id};
            }
        }
        return {std::move(word), std::nullopt, std::nullopt};
    }

    const std::vector<SuffixRule>& rules() const { return rules_; }
    const std::set<std::string>& stop_set() const { return stop_set_; }

    static constexpr std::size_t kMinBase = 3;

private:
    static bool ends_with(std::string_view w, std::string_view suf) {
        return w.size() >= suf.size() &&
               w.compare(w.size() - suf.size(), suf.size(), suf) == 0;
    }

    // "es" only after sibilants/o; "s" never after s/u/i.
    static bool suffix_applicable(std::string_view suffix, std::string_view word) {
        if (suffix == "es") {
            return ends_with(word, "sses") || ends_with(word, "xes") ||
                   ends_with(word, "zes") || ends_with(word, "ches") ||
                   ends_with(word, "shes") || ends_with(word, "oes");
        }
        if (suffix == "s") {
            return !ends_with(word, "ss") && !ends_with(word, "us") &&
                   !ends_with(word, "is");
        }
        return true;
    }

    std::vector<SuffixRule> rules_;
    std::set<std::string> stop_set_;
};

inline StemTable default_stem_table() {
    std::vector<SuffixRule> rules = {
        {"ies", "y", "ies->y"}, {"ly", "", "ly->"}, {"ing", "", "ing->"},
        {"ed", "", "ed->"},     {"es", "", "es->"}, {"s", "", "s->"},
    };
    std::set<std::string> stops = {"species", "always", "only", "during", "this",
                                   "less", "its", "his", "us", "is", "was"};
    return StemTable(std::move(rules), std::move(stops));
}

/// Table file: one rule per line, `suffix<TAB>replacement`, '#' comments.
/// An empty replacement cell means plain stripping.
inline std::vector<SuffixRule> load_suffix_rules(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError(path);
    std::vector<SuffixRule> rules;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0)
            throw SyntaxError(line_no, "suffix<TAB>replacement");
        std::string suffix = line.substr(0, tab);
        std::string repl = line.substr(tab + 1);
        rules.push_back({suffix, repl, suffix + "->" + repl});
    }
    return rules;
}

/// Stop-set file: one word per line, '#' comments.
inline std::set<std::string> load_stem_stop_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError(path);
    std::set<std::string> stops;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        stops.insert(line);
    }
    return stops;
}

inline StemTable load_stem_table(const std::string& rules_path,
                                 const std::string& stops_path) {
    return StemTable(load_suffix_rules(rules_path), load_stem_stop_set(stops_path));
}

} // namespace clintag
