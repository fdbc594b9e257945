// clintag command line front end.
//
//   clintag tag <file> [--format vertical|jsonl]
//   clintag eval --gold <gold.vert> [--pred <pred.vert>] [--kv]
//   clintag rules lint <pack>
//   clintag corpus stats <gold.vert>
//
// Data files default to $CLINTAG_DATA_DIR (or ./data); --data-dir overrides.
// Exit codes: 0 success, 1 usage error, 2 data error (including lint
// violations and misaligned eval inputs).

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <clintag/clintag.hpp>

namespace {

std::string default_data_dir() {
    if (const char* env = std::getenv("CLINTAG_DATA_DIR")) return env;
    return "data";
}

clintag::Engine make_engine(const std::string& data_dir) {
    return clintag::build_engine(data_dir + "/lexicon.tsv",
                                 data_dir + "/rules/reference.rules",
                                 data_dir + "/stem/suffixes.tsv",
                                 data_dir + "/stem/stopwords.txt",
                                 data_dir + "/abbreviations.txt");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rule-based POS tagger for clinical English"};
    app.require_subcommand(1);
    std::string data_dir = default_data_dir();
    app.add_option("--data-dir", data_dir, "data directory");

    // tag
    auto* tag_cmd = app.add_subcommand("tag", "tag a plain-text file");
    std::string tag_file;
    std::string tag_format = "vertical";
    tag_cmd->add_option("file", tag_file, "input text file")->required();
    tag_cmd->add_option("--format", tag_format, "vertical|jsonl")
        ->check(CLI::IsMember({"vertical", "jsonl"}));

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "score predictions against gold");
    std::string gold_file, pred_file;
    bool kv = false;
    eval_cmd->add_option("--gold", gold_file, "gold vertical file")->required();
    eval_cmd->add_option("--pred", pred_file,
                         "predicted vertical file (default: run the tagger)");
    eval_cmd->add_flag("--kv", kv, "key=value output");

    // rules lint
    auto* rules_cmd = app.add_subcommand("rules", "rule pack utilities");
    rules_cmd->require_subcommand(1);
    auto* lint_cmd = rules_cmd->add_subcommand("lint", "lint a rule pack");
    std::string pack_file;
    lint_cmd->add_option("pack", pack_file, "rule pack file")->required();

    // corpus stats
    auto* corpus_cmd = app.add_subcommand("corpus", "corpus utilities");
    corpus_cmd->require_subcommand(1);
    auto* stats_cmd = corpus_cmd->add_subcommand("stats", "corpus statistics");
    std::string stats_file;
    stats_cmd->add_option("gold", stats_file, "gold vertical file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*tag_cmd) {
            clintag::Engine engine = make_engine(data_dir);
            std::string text = clintag::read_file(tag_file);
            auto sentences = engine.tag_document(text);
            auto format = tag_format == "jsonl"
                              ? clintag::OutputFormat::JsonLines
                              : clintag::OutputFormat::Vertical;
            std::cout << clintag::write_tagged(sentences, format);
            return 0;
        }
        if (*eval_cmd) {
            clintag::GoldCorpus gold = clintag::read_gold_file(gold_file);
            double fallback_rate = 0.0;
            clintag::GoldCorpus pred;
            if (pred_file.empty()) {
                clintag::Engine engine = make_engine(data_dir);
                auto tagged = clintag::tag_gold_surfaces(engine, gold);
                pred = std::move(tagged.first);
                fallback_rate = tagged.second;
            } else {
                pred = clintag::read_gold_file(pred_file);
            }
            auto counts = clintag::compare(gold, pred);
            auto report = clintag::build_report(counts, fallback_rate);
            std::cout << (kv ? clintag::render_report_kv(report)
                             : clintag::render_report_text(report));
            return 0;
        }
        if (*lint_cmd) {
            clintag::RulePack pack =
                clintag::parse_rules(clintag::read_file(pack_file), pack_file);
            auto findings = clintag::lint_pack(pack);
            std::cout << clintag::lint_report(findings);
            for (const auto& f : findings)
                if (f.severity == clintag::LintSeverity::Violation) return 2;
            return 0;
        }
        if (*stats_cmd) {
            auto stats =
                clintag::corpus_stats(clintag::read_gold_file(stats_file));
            for (const auto& g : stats.groups)
                std::cout << g.label << "\t" << g.sentences << " sentences\t"
                          << g.tokens << " tokens\n";
            std::cout << "total\t" << stats.total_sentences << " sentences\t"
                      << stats.total_tokens << " tokens\n";
            return 0;
        }
    } catch (const clintag::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
