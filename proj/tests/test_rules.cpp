#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include <clintag/clintag.hpp>

using namespace clintag;

namespace {

RulePack pack_of(const std::string& text) { return parse_rules(text); }

SentenceState prepare(const std::string& sentence) {
    static Engine engine(seed_lexicon(), RulePack{}, default_stem_table());
    return engine.prepare(sentence);
}

std::string reference_pack_text() {
    return read_file(std::string(CLINTAG_DATA_DIR) + "/rules/reference.rules");
}

} // namespace

// ---------------------------------------------------------------------------
// DSL parsing

TEST_CASE("a rule line parses into its five fields") {
    auto pack = pack_of(
        "r1 | Preposition | Phrase | 40 | "
        "word:\"of|in\" cand:DTR? cand:NN|NP*3 => span(Prepositional,0..2)\n");
    REQUIRE(pack.rules.size() == 1);
    const Rule& r = pack.rules[0];
    REQUIRE(r.id == "r1");
    REQUIRE(r.category == "Preposition");
    REQUIRE(r.pass == Pass::Phrase);
    REQUIRE(r.priority == 40);
    REQUIRE(r.pattern.size() == 3);
    REQUIRE(r.pattern[0].atoms[0].type == AtomType::WordIn);
    REQUIRE(r.pattern[0].atoms[0].words == std::vector<std::string>{"of", "in"});
    REQUIRE(r.pattern[1].quantifier == Quantifier::Optional);
    REQUIRE(r.pattern[2].quantifier == Quantifier::Star);
    REQUIRE(r.pattern[2].window == 3);
    REQUIRE(r.action.type == ActionType::Span);
    REQUIRE_FALSE(r.action.span_is_clause);
    REQUIRE(r.action.phrase_kind == PhraseKind::Prepositional);
    REQUIRE(r.action.start_ref == 0);
    REQUIRE(r.action.end_ref == 2);
}

TEST_CASE("atoms join with & and bare star uses the default window") {
    auto pack = pack_of(
        "r1 | Modifier | Modifier | 1 | "
        "untagged&cand:ADJ&suffix:ly&pos:start&kind:Word cand:NN* "
        "=> assign(0,ADV)\n");
    const Rule& r = pack.rules[0];
    REQUIRE(r.pattern[0].atoms.size() == 5);
    REQUIRE(r.pattern[1].window == kDefaultStarWindow);
    REQUIRE(r.action.type == ActionType::Assign);
    REQUIRE(r.action.tag == Tag::ADV);
}

TEST_CASE("attach actions parse modifier and head refs") {
    auto pack = pack_of(
        "r1 | Modifier | Modifier | 1 | tag:ADJ tag:NN => attach(0->1,AdjToNoun)\n");
    const RuleAction& a = pack.rules[0].action;
    REQUIRE(a.type == ActionType::Attach);
    REQUIRE(a.modifier_ref == 0);
    REQUIRE(a.head_ref == 1);
    REQUIRE(a.attachment_kind == AttachmentKind::AdjToNoun);
}

TEST_CASE("category sections set and check the category") {
    auto pack = pack_of(
        "[category:Adverb]\n"
        "r1 | Adverb | Clause | 5 | cand:ADV => assign(0,ADV)\n");
    REQUIRE(pack.rules[0].category == "Adverb");
    REQUIRE(pack.counts_by_category.at("Adverb") == 1);

    REQUIRE_THROWS_AS(pack_of("[category:Adverb]\n"
                              "r1 | Modifier | Clause | 5 | cand:ADV => assign(0,ADV)\n"),
                      SyntaxError);
    REQUIRE_THROWS_AS(pack_of("[category:NotAThing]\n"), UnknownCategoryError);
}

TEST_CASE("parse errors carry line numbers and expectations") {
    try {
        pack_of("# comment\n\nr1 | Adverb | Clause | 5 | cand:ADV\n");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        REQUIRE(e.line == 3);
        REQUIRE(e.expected.find("=>") != std::string::npos);
    }
}

TEST_CASE("malformed rules are rejected") {
    // too few fields
    REQUIRE_THROWS_AS(pack_of("r1 | Adverb | Clause | cand:ADV => assign(0,ADV)\n"),
                      SyntaxError);
    // unknown pass
    REQUIRE_THROWS_AS(
        pack_of("r1 | Adverb | Verb | 5 | cand:ADV => assign(0,ADV)\n"),
        SyntaxError);
    // non-integer priority
    REQUIRE_THROWS_AS(
        pack_of("r1 | Adverb | Clause | high | cand:ADV => assign(0,ADV)\n"),
        SyntaxError);
    // unknown category
    REQUIRE_THROWS_AS(
        pack_of("r1 | Verbs | Clause | 5 | cand:ADV => assign(0,ADV)\n"),
        UnknownCategoryError);
    // unknown tag in a set
    REQUIRE_THROWS_AS(
        pack_of("r1 | Adverb | Clause | 5 | cand:ZZZ => assign(0,ADV)\n"),
        UnknownTagError);
    // unknown atom name
    REQUIRE_THROWS_AS(
        pack_of("r1 | Adverb | Clause | 5 | lemma:x => assign(0,ADV)\n"),
        SyntaxError);
    // action position ref outside the pattern
    REQUIRE_THROWS_AS(
        pack_of("r1 | Adverb | Clause | 5 | cand:ADV => assign(1,ADV)\n"),
        SyntaxError);
    // span range reversed
    REQUIRE_THROWS_AS(
        pack_of("r1 | Adverb | Phrase | 5 | cand:ADV cand:NN => span(Verbal,1..0)\n"),
        SyntaxError);
    // zero star window
    REQUIRE_THROWS_AS(
        pack_of("r1 | Adverb | Clause | 5 | cand:ADV*0 => assign(0,ADV)\n"),
        SyntaxError);
    // unknown action
    REQUIRE_THROWS_AS(
        pack_of("r1 | Adverb | Clause | 5 | cand:ADV => retag(0,ADV)\n"),
        SyntaxError);
    // duplicate id
    REQUIRE_THROWS_AS(
        pack_of("r1 | Adverb | Clause | 5 | cand:ADV => assign(0,ADV)\n"
                "r1 | Adverb | Clause | 4 | cand:ADV => assign(0,AVB)\n"),
        DuplicateRuleIdError);
}

TEST_CASE("serialize then parse is a fixpoint on the reference pack") {
    RulePack parsed = parse_rules(reference_pack_text());
    std::string once = serialize_pack(parsed);
    std::string twice = serialize_pack(parse_rules(once));
    REQUIRE(once == twice);
    REQUIRE(parse_rules(once).rules.size() == parsed.rules.size());
}

TEST_CASE("pass_rules orders by priority then file order") {
    auto pack = pack_of(
        "a | Adverb | Clause | 5 | cand:ADV => assign(0,ADV)\n"
        "b | Adverb | Clause | 9 | cand:ADV => assign(0,ADV)\n"
        "c | Adverb | Clause | 5 | cand:ADV => assign(0,AVB)\n"
        "d | Adverb | Phrase | 99 | cand:ADV => assign(0,ADV)\n");
    auto ordered = pack.pass_rules(Pass::Clause);
    REQUIRE(ordered.size() == 3);
    REQUIRE(ordered[0]->id == "b");
    REQUIRE(ordered[1]->id == "a"); // ties keep file order
    REQUIRE(ordered[2]->id == "c");
}

// ---------------------------------------------------------------------------
// Lint

TEST_CASE("the reference pack has no lint violations") {
    auto findings = lint_pack(parse_rules(reference_pack_text()));
    for (const auto& f : findings) {
        CAPTURE(f.code, f.rule_id, f.message);
        REQUIRE(f.severity != LintSeverity::Violation);
    }
}

TEST_CASE("an adverb-to-noun attachment is a lint violation") {
    auto pack = pack_of(
        "bad | Modifier | Modifier | 1 | tag:ADV tag:NN|NP => attach(0->1,AdvToVerb)\n");
    auto findings = lint_pack(pack);
    int violations = 0;
    for (const auto& f : findings)
        if (f.severity == LintSeverity::Violation) {
            ++violations;
            REQUIRE(f.code == "AdvNounViolation");
            REQUIRE(f.rule_id == "bad");
        }
    REQUIRE(violations == 1);
}

TEST_CASE("unconstrained heads do not trip the adverb-noun check") {
    auto pack = pack_of(
        "ok | Modifier | Modifier | 1 | tag:ADV untagged => attach(0->1,AdvToVerb)\n");
    for (const auto& f : lint_pack(pack))
        REQUIRE(f.severity != LintSeverity::Violation);
}

TEST_CASE("identical later rules are reported as shadowed") {
    auto pack = pack_of(
        "a | Adverb | Clause | 9 | cand:ADV => assign(0,ADV)\n"
        "b | Adverb | Clause | 5 | cand:ADV => assign(0,ADV)\n");
    bool found = false;
    for (const auto& f : lint_pack(pack))
        if (f.code == "ShadowedRule") {
            found = true;
            REQUIRE(f.severity == LintSeverity::Warning);
            REQUIRE(f.rule_id == "b");
        }
    REQUIRE(found);
}

TEST_CASE("category budget shortfalls are informational only") {
    auto findings = lint_pack(parse_rules(reference_pack_text()));
    bool info = false;
    for (const auto& f : findings)
        if (f.code == "CategoryCountMismatch") {
            info = true;
            REQUIRE(f.severity == LintSeverity::Info);
        }
    REQUIRE(info); // the reference pack is a documented subset of the budget
}

// ---------------------------------------------------------------------------
// Matching and actions

TEST_CASE("assign never overwrites an earlier tag") {
    auto pack = pack_of(
        "hi | Adverb | Clause | 9 | cand:NN|ADJ => assign(0,NN)\n"
        "lo | Adverb | Clause | 1 | cand:NN|ADJ => assign(0,ADJ)\n");
    auto s = prepare("patient");
    engine::apply_pass(s, pack, Pass::Clause);
    REQUIRE(s.tokens[0].final_tag == Tag::NN);
    REQUIRE(s.tokens[0].provenance == "hi");
}

TEST_CASE("star elements match greedily") {
    auto pack = pack_of(
        "sp | Adverb | Phrase | 1 | cand:ADJ* cand:NN => span(Appositive,0..1)\n");
    auto s = prepare("severe sharp pain");
    engine::apply_pass(s, pack, Pass::Phrase);
    REQUIRE(s.phrases.size() == 1);
    REQUIRE(s.phrases[0].token_range == TokenRange{0, 3});
}

TEST_CASE("optional elements may take zero tokens") {
    auto pack = pack_of(
        "as | Adverb | Clause | 1 | cand:DTR? cand:NN&word:\"pain\" => assign(1,NN)\n");
    auto s = prepare("pain");
    engine::apply_pass(s, pack, Pass::Clause);
    REQUIRE(s.tokens[0].final_tag == Tag::NN);
}

TEST_CASE("span actions skip overlaps of the same kind and empty endpoints") {
    auto pack = pack_of(
        "p1 | Preposition | Phrase | 9 | word:\"of\" cand:NN => span(Prepositional,0..1)\n"
        "p2 | Preposition | Phrase | 5 | cand:NN word:\"of\"? => span(Prepositional,0..0)\n");
    auto s = prepare("relief of pain");
    engine::apply_pass(s, pack, Pass::Phrase);
    // p1 spans [1,3); p2 at "pain" (inside) would overlap and is skipped,
    // p2 at "relief" [0,1) does not overlap and is kept
    REQUIRE(s.phrases.size() == 2);
    REQUIRE(s.phrases[0].rule_id == "p1");
    REQUIRE(s.phrases[0].token_range == TokenRange{1, 3});
    REQUIRE(s.phrases[1].token_range == TokenRange{0, 1});
}

TEST_CASE("attachment guards") {
    SECTION("AdjToNoun requires a noun-like head") {
        auto pack = pack_of(
            "t1 | Modifier | Clause | 9 | cand:ADJ cand:NN&word:\"pain\" => assign(1,NN)\n"
            "t2 | Modifier | Clause | 8 | cand:ADJ => assign(0,ADJ)\n"
            "m1 | Modifier | Modifier | 1 | tag:ADJ tag:NN => attach(0->1,AdjToNoun)\n");
        auto s = prepare("severe pain");
        engine::apply_pass(s, pack, Pass::Clause);
        engine::apply_pass(s, pack, Pass::Modifier);
        REQUIRE(s.attachments.size() == 1);
        REQUIRE(s.attachments[0].modifier_index == 0);
        REQUIRE(s.attachments[0].head_index == 1);
    }
    SECTION("adverb kinds refuse noun heads") {
        auto pack = pack_of(
            "t1 | Modifier | Clause | 9 | cand:ADV => assign(0,ADV)\n"
            "t2 | Modifier | Clause | 8 | cand:NN => assign(0,NN)\n"
            "m1 | Modifier | Modifier | 1 | tag:ADV tag:NN|ADJ => attach(0->1,AdvToAdj)\n");
        auto s = prepare("often pain");
        engine::apply_pass(s, pack, Pass::Clause);
        engine::apply_pass(s, pack, Pass::Modifier);
        REQUIRE(s.tokens[1].final_tag == Tag::NN);
        REQUIRE(s.attachments.empty());
    }
    SECTION("one attachment per modifier") {
        auto pack = pack_of(
            "t1 | Modifier | Clause | 9 | cand:ADJ => assign(0,ADJ)\n"
            "t2 | Modifier | Clause | 8 | cand:NN => assign(0,NN)\n"
            "m1 | Modifier | Modifier | 9 | tag:ADJ tag:NN => attach(0->1,AdjToNoun)\n"
            "m2 | Modifier | Modifier | 1 | tag:ADJ cand:SYM? tag:NN => attach(0->2,AdjToNoun)\n");
        auto s = prepare("severe pain");
        engine::apply_pass(s, pack, Pass::Clause);
        engine::apply_pass(s, pack, Pass::Modifier);
        REQUIRE(s.attachments.size() == 1);
        REQUIRE(s.attachments[0].rule_id == "m1");
    }
}

TEST_CASE("the scan resumes after a match, not inside it") {
    auto pack = pack_of(
        "a1 | Adverb | Clause | 1 | cand:ADJ cand:ADJ => assign(0,ADJ)\n");
    auto s = prepare("severe sharp dull pale");
    engine::apply_pass(s, pack, Pass::Clause);
    // matches at 0 (assigns 0) and resumes at 2 (assigns 2); 1 and 3 untouched
    REQUIRE(s.tokens[0].final_tag == Tag::ADJ);
    REQUIRE_FALSE(s.tokens[1].final_tag.has_value());
    REQUIRE(s.tokens[2].final_tag == Tag::ADJ);
    REQUIRE_FALSE(s.tokens[3].final_tag.has_value());
}

// ---------------------------------------------------------------------------
// Clause segmentation

TEST_CASE("mid-sentence relative clause is adjectival") {
    auto s = prepare("The patient who complained of pain recovered .");
    engine::segment_clauses(s);
    REQUIRE(s.clauses.size() == 2);
    REQUIRE(s.clauses[0].kind == ClauseKind::AdjectiveSub);
    REQUIRE(s.clauses[0].token_range == TokenRange{2, 6});
    REQUIRE(s.clauses[0].rule_id == "clause-segmenter");
    REQUIRE(s.clauses[1].kind == ClauseKind::Independent);
    REQUIRE(s.clauses[1].token_range == TokenRange{6, 7});
}

TEST_CASE("sentence-initial wh-adverb clause is adverbial") {
    auto s = prepare("When pain subsides the patient sleeps .");
    engine::segment_clauses(s);
    REQUIRE(s.clauses.size() == 2);
    REQUIRE(s.clauses[0].kind == ClauseKind::AdverbSub);
    REQUIRE(s.clauses[0].token_range.begin == 0);
    REQUIRE(s.clauses[1].kind == ClauseKind::Independent);
}

TEST_CASE("subordinating conjunctions open adverb clauses") {
    auto s = prepare("Because rest helps , pain subsides .");
    engine::segment_clauses(s);
    REQUIRE_FALSE(s.clauses.empty());
    REQUIRE(s.clauses[0].kind == ClauseKind::AdverbSub);
    REQUIRE(s.clauses[0].token_range.begin == 0);
}

TEST_CASE("relative clause after a verb is nominal") {
    auto s = prepare("She knows who complained .");
    engine::segment_clauses(s);
    bool noun_sub = false;
    for (const auto& c : s.clauses)
        if (c.kind == ClauseKind::NounSub) noun_sub = true;
    REQUIRE(noun_sub);
}

TEST_CASE("verbless sentences warn and emit no clause spans") {
    auto s = prepare("The red scar .");
    engine::segment_clauses(s);
    REQUIRE(s.clauses.empty());
    REQUIRE(s.warnings == std::vector<std::string>{"VerblessSentence"});
}

TEST_CASE("clause spans never start or end on punctuation") {
    auto s = prepare("Pain subsides , and sleep returns .");
    engine::segment_clauses(s);
    REQUIRE_FALSE(s.clauses.empty());
    for (const auto& c : s.clauses) {
        REQUIRE(s.tokens[c.token_range.begin].token.kind != TokenKind::Punct);
        REQUIRE(s.tokens[c.token_range.end - 1].token.kind != TokenKind::Punct);
    }
}

TEST_CASE("prepositional phrases shield their tokens from verb candidacy") {
    auto pack = pack_of(
        "pp | Preposition | Phrase | 9 | cand:PPH cand:NN|VF => span(Prepositional,0..1)\n");
    auto s = prepare("The scar itches after rest .");
    engine::apply_pass(s, pack, Pass::Phrase);
    REQUIRE(s.phrases.size() == 1);
    // "rest" has a VF candidate but sits inside the phrase
    REQUIRE_FALSE(engine::verb_candidate(s, 4));
    REQUIRE(engine::verb_candidate(s, 2)); // "itches"
}
