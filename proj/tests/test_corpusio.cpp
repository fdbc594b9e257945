#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <clintag/clintag.hpp>

using namespace clintag;

namespace {

GoldCorpus gold_from(const std::string& text) {
    std::istringstream in(text);
    return read_gold(in);
}

const Engine& tagger() {
    static Engine e = build_engine(
        std::string(CLINTAG_DATA_DIR) + "/lexicon.tsv",
        std::string(CLINTAG_DATA_DIR) + "/rules/reference.rules",
        std::string(CLINTAG_DATA_DIR) + "/stem/suffixes.tsv",
        std::string(CLINTAG_DATA_DIR) + "/stem/stopwords.txt",
        std::string(CLINTAG_DATA_DIR) + "/abbreviations.txt");
    return e;
}

} // namespace

TEST_CASE("gold files parse groups, sentences, and tokens") {
    auto corpus = gold_from(
        "# comment\n"
        "## group: A\n"
        "Pain\tNN\n"
        "subsides\tVF\n"
        ".\tSYM\n"
        "\n"
        "Rest\tNN\n"
        ".\tSYM\n"
        "\n"
        "## group: B\n"
        "Relief\tNN\n"
        "\n");
    REQUIRE(corpus.groups.size() == 2);
    REQUIRE(corpus.groups[0].label == "A");
    REQUIRE(corpus.groups[0].sentences.size() == 2);
    REQUIRE(corpus.groups[0].sentences[0].size() == 3);
    REQUIRE(corpus.groups[0].sentences[0][0] == GoldToken{"Pain", Tag::NN});
    REQUIRE(corpus.groups[1].label == "B");
    REQUIRE(corpus.groups[1].sentences.size() == 1);
}

TEST_CASE("headerless gold files form an implicit 'all' group") {
    auto corpus = gold_from("Pain\tNN\n.\tSYM\n");
    REQUIRE(corpus.groups.size() == 1);
    REQUIRE(corpus.groups[0].label == "all");
}

TEST_CASE("malformed gold input is rejected") {
    REQUIRE_THROWS_AS(gold_from("no tab NN\n"), MalformedGoldLineError);
    REQUIRE_THROWS_AS(gold_from("\tNN\n"), MalformedGoldLineError);
    REQUIRE_THROWS_AS(gold_from("Pain\t\n"), MalformedGoldLineError);
    REQUIRE_THROWS_AS(gold_from("Pain\tBAD\n"), UnknownTagError);
    REQUIRE_THROWS_AS(gold_from("## group:\n"), MalformedGoldLineError);
    // duplicate group label
    REQUIRE_THROWS_AS(gold_from("## group: A\nPain\tNN\n\n## group: A\nx\tNN\n"),
                      MalformedGoldLineError);
    // empty groups
    REQUIRE_THROWS_AS(gold_from("## group: A\n"), EmptyGroupError);
    REQUIRE_THROWS_AS(gold_from("## group: A\n## group: B\nx\tNN\n"),
                      EmptyGroupError);
}

TEST_CASE("vertical write then read is the identity on random sentences") {
    std::mt19937 rng(777);
    auto tags = all_tags();
    const std::vector<std::string> words = {"pain", "The", "30C", "relieves",
                                            "scar", "Arnica", "worse", "night"};
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<TaggedSentence> sents;
        int n_sent = 1 + static_cast<int>(rng() % 4);
        for (int si = 0; si < n_sent; ++si) {
            TaggedSentence s;
            int n_tok = 1 + static_cast<int>(rng() % 7);
            for (int ti = 0; ti < n_tok; ++ti) {
                TaggedToken t;
                t.token.surface = words[rng() % words.size()];
                t.final_tag = tags[rng() % tags.size()];
                s.tokens.push_back(std::move(t));
            }
            sents.push_back(std::move(s));
        }
        auto corpus = gold_from(write_vertical(sents));
        REQUIRE(corpus.groups.size() == 1);
        REQUIRE(corpus.groups[0].sentences.size() == sents.size());
        for (std::size_t si = 0; si < sents.size(); ++si) {
            const auto& got = corpus.groups[0].sentences[si];
            REQUIRE(got.size() == sents[si].tokens.size());
            for (std::size_t ti = 0; ti < got.size(); ++ti) {
                REQUIRE(got[ti].surface == sents[si].tokens[ti].token.surface);
                REQUIRE(got[ti].tag == sents[si].tokens[ti].final_tag);
            }
        }
    }
}

TEST_CASE("corpus stats add up per group") {
    auto corpus = read_gold_file(std::string(CLINTAG_DATA_DIR) + "/corpus/gold.vert");
    auto stats = corpus_stats(corpus);
    REQUIRE(stats.groups.size() == 4);
    std::size_t sentences = 0, tokens = 0;
    for (const auto& g : stats.groups) {
        sentences += g.sentences;
        tokens += g.tokens;
    }
    REQUIRE(stats.total_sentences == sentences);
    REQUIRE(stats.total_tokens == tokens);
    REQUIRE(stats.total_tokens >= 600);
}

TEST_CASE("compare counts matching tags and demands aligned streams") {
    auto gold = gold_from("## group: A\nPain\tNN\nworse\tADJ\n\n");
    auto good = gold_from("## group: A\nPain\tNN\nworse\tADV\n\n");
    auto counts = compare(gold, good);
    REQUIRE(counts.size() == 1);
    REQUIRE(counts[0].correct == 1);
    REQUIRE(counts[0].incorrect == 1);
    REQUIRE(counts[0].total == 2);

    // different surface at position 1
    auto drifted = gold_from("## group: A\nPain\tNN\nbetter\tADJ\n\n");
    REQUIRE_THROWS_AS(compare(gold, drifted), AlignmentError);
    // different sentence count
    auto extra = gold_from("## group: A\nPain\tNN\nworse\tADJ\n\nRest\tNN\n\n");
    REQUIRE_THROWS_AS(compare(gold, extra), AlignmentError);
    // different group label
    auto relabeled = gold_from("## group: B\nPain\tNN\nworse\tADJ\n\n");
    REQUIRE_THROWS_AS(compare(gold, relabeled), AlignmentError);
}

TEST_CASE("alignment errors carry their location") {
    auto gold = gold_from("## group: A\nPain\tNN\nworse\tADJ\n\n");
    auto drifted = gold_from("## group: A\nPain\tNN\nbetter\tADJ\n\n");
    try {
        compare(gold, drifted);
        FAIL("expected AlignmentError");
    } catch (const AlignmentError& e) {
        REQUIRE(e.group == "A");
        REQUIRE(e.sentence == 0);
        REQUIRE(e.position == 1);
    }
}

TEST_CASE("json lines expose tokens, spans, attachments, and warnings") {
    auto s = tagger().tag_sentence("The patient complained of pain .");
    auto j = sentence_to_json(s);
    REQUIRE(j["tokens"].size() == 6);
    REQUIRE(j["tokens"][0]["surface"] == "The");
    REQUIRE(j["tokens"][0]["kind"] == "Word");
    REQUIRE(j["tokens"][0]["tag"] == "DTR");
    REQUIRE(j["tokens"][0]["candidates"].is_array());
    REQUIRE(j["tokens"][0].contains("stem"));
    REQUIRE(j["tokens"][0].contains("provenance"));
    REQUIRE(j.contains("phrases"));
    REQUIRE(j.contains("clauses"));
    REQUIRE(j.contains("attachments"));
    REQUIRE(j["warnings"].is_array());

    auto lines = write_json_lines(std::vector<TaggedSentence>{s, s});
    REQUIRE(std::count(lines.begin(), lines.end(), '\n') == 2);
}

TEST_CASE("tag_gold_surfaces reproduces the corpus shape") {
    auto gold = gold_from("## group: A\nPain\tNN\nworse\tADJ\n.\tSYM\n\n");
    auto [pred, fallback_rate] = tag_gold_surfaces(tagger(), gold);
    REQUIRE(pred.groups.size() == 1);
    REQUIRE(pred.groups[0].label == "A");
    REQUIRE(pred.groups[0].sentences.size() == 1);
    REQUIRE(pred.groups[0].sentences[0].size() == 3);
    REQUIRE(fallback_rate >= 0.0);
    REQUIRE(fallback_rate <= 100.0);
    REQUIRE_NOTHROW(compare(gold, pred));
}

TEST_CASE("report renderers include every group and the summary lines") {
    EvalReport r = build_report({{"A", 9, 1, 10}, {"B", 5, 5, 10}}, 2.0);
    auto text = render_report_text(r);
    REQUIRE(text.find("A") != std::string::npos);
    REQUIRE(text.find("Average") != std::string::npos);
    REQUIRE(text.find("Micro") != std::string::npos);
    REQUIRE(text.find("Fallback rate") != std::string::npos);
    auto kv = render_report_kv(r);
    REQUIRE(kv.find("group.A.correct=9") != std::string::npos);
    REQUIRE(kv.find("macro_accuracy=70.00") != std::string::npos);
    REQUIRE(kv.find("micro_accuracy=70.00") != std::string::npos);
    REQUIRE(kv.find("fallback_rate=2.00") != std::string::npos);
}
