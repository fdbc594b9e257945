// clintag -- rule-based POS tagger for clinical English
//
// Word form -> ordered candidate tag lists.  Ambiguity is preserved; the
// rule engine selects the final tag, and candidate order is the fallback
// preference when no rule decides.
#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "stemmer.hpp"
#include "tagset.hpp"
#include "tokenizer.hpp"

namespace clintag {

enum class EntrySource { Seed, UserFile };

struct LexiconEntry {
    std::string form; // lowercased key
    std::vector<Tag> candidates; // most-preferred first, no duplicates
    EntrySource source = EntrySource::Seed;
};

class Lexicon {
public:
    void add(LexiconEntry entry,
             const std::function<void(const std::string&)>& warn = nullptr) {
        auto it = entries_.find(entry.form);
        if (it != entries_.end()) {
            if (warn) warn("lexicon entry '" + entry.form + "' overridden");
            it->second = std::move(entry);
        } else {
            entries_.emplace(entry.form, std::move(entry));
        }
    }

    const LexiconEntry* find(std::string_view form) const {
        auto it = entries_.find(std::string(form));
        return it == entries_.end() ? nullptr : &it->second;
    }

    std::size_t size() const { return entries_.size(); }

    const std::vector<Tag>& default_open_class() const { return default_open_class_; }

    /// Candidate tags of the stem base's entry, if any (used by the `base:`
    /// rule predicate and by the -ly guesser).
    std::vector<Tag> base_tags(const StemResult& stem) const {
        if (const auto* e = find(stem.base)) return e->candidates;
        return {};
    }

    /// Total lookup: exact form, then stem base, then the unknown-word
    /// guesser.  Number -> NUM, Punct/Symbol -> SYM.
    std::vector<Tag> lookup(const Token& token, const StemResult& stem,
                            bool sentence_initial) const {
        switch (token.kind) {
            case TokenKind::Number: return {Tag::NUM};
            case TokenKind::Punct: return {Tag::SYM};
            case TokenKind::Symbol: return {Tag::SYM};
            case TokenKind::Word: break;
        }
        if (const auto* e = find(token.normalized)) return e->candidates;
        if (stem.stripped_suffix)
            if (const auto* e = find(stem.base)) return e->candidates;
        // unknown-word guesser
        bool capitalized =
            !token.surface.empty() &&
            std::isupper(static_cast<unsigned char>(token.surface[0]));
        if (capitalized && !sentence_initial) return {Tag::NP, Tag::NN};
        if (stem.stripped_suffix == "ly") {
            auto base = base_tags(stem);
            if (std::find(base.begin(), base.end(), Tag::ADJ) != base.end())
                return {Tag::ADV};
        }
        return default_open_class_;
    }

private:
    std::map<std::string, LexiconEntry> entries_;
    std::vector<Tag> default_open_class_ = {Tag::NN, Tag::ADJ, Tag::VF};
};

namespace detail {

struct SeedRow {
    std::string_view form;
    std::string_view tags; // comma-separated codes
};

// Closed-class coverage plus frequent clinical vocabulary.  Closed-class
// entries are what make phrase detection possible.
inline constexpr SeedRow kSeedRows[] = {
    // determiners
    {"the", "DTR"}, {"a", "DTR"}, {"an", "DTR"}, {"this", "DTR"},
    {"these", "DTR"}, {"those", "DTR"}, {"each", "DTR"}, {"every", "DTR"},
    {"such", "DTR"}, {"another", "DTR"}, {"any", "DTR"}, {"both", "DTR"},
    {"either", "DTR"}, {"same", "DTR"}, {"certain", "DTR,ADJ"},
    {"my", "DTR"}, {"your", "DTR"}, {"his", "DTR"}, {"her", "DTR,PP"},
    {"its", "DTR"}, {"our", "DTR"}, {"their", "DTR"}, {"own", "DTR,ADJ"},
    // prepositions
    {"about", "PPH"}, {"above", "PPH"}, {"across", "PPH"}, {"after", "PPH"},
    {"against", "PPH"}, {"along", "PPH"}, {"among", "PPH"}, {"around", "PPH"},
    {"at", "PPH"}, {"before", "PPH"}, {"behind", "PPH"}, {"below", "PPH"},
    {"beneath", "PPH"}, {"beside", "PPH"}, {"between", "PPH"}, {"beyond", "PPH"},
    {"by", "PPH"}, {"down", "PPH,AVB"}, {"during", "PPH"}, {"except", "PPH"},
    {"for", "PPH"}, {"from", "PPH"}, {"in", "PPH"}, {"inside", "PPH"},
    {"into", "PPH"}, {"near", "PPH"}, {"of", "PPH"}, {"off", "PPH,AVB"},
    {"on", "PPH"}, {"onto", "PPH"}, {"out", "PPH,AVB"}, {"outside", "PPH"},
    {"over", "PPH"}, {"past", "PPH"}, {"through", "PPH"}, {"throughout", "PPH"},
    {"to", "PPH"}, {"toward", "PPH"}, {"towards", "PPH"}, {"under", "PPH"},
    {"until", "PPH"}, {"up", "PPH,AVB"}, {"upon", "PPH"}, {"with", "PPH"},
    {"within", "PPH"}, {"without", "PPH"}, {"per", "PPH"}, {"since", "PPH,CNJ"},
    // personal pronouns
    {"i", "PP"}, {"you", "PP"}, {"he", "PP"}, {"she", "PP"}, {"it", "PP"},
    {"we", "PP"}, {"they", "PP"}, {"me", "PP"}, {"him", "PP"}, {"us", "PP"},
    {"them", "PP"}, {"himself", "PP"}, {"herself", "PP"}, {"itself", "PP"},
    {"themselves", "PP"},
    // cardinal / temporal / ordinal pronouns
    {"anyone", "PC"}, {"someone", "PC"}, {"everyone", "PC"},
    {"something", "PC"}, {"anything", "PC"}, {"nothing", "NEG,PC"},
    {"today", "PT"}, {"tonight", "PT"}, {"yesterday", "PT"}, {"tomorrow", "PT"},
    {"first", "PO,ADJ"}, {"second", "PO,ADJ"}, {"third", "PO,ADJ"},
    {"last", "PO,VF"},
    // interrogative / relative
    {"who", "RPP,INPR"}, {"whom", "RPP"}, {"whose", "RPP"},
    {"which", "RPP,INPR"}, {"what", "INPR"}, {"why", "INPR,ADV"},
    {"how", "ADV,INPR"}, {"that", "CNJ,RPP"}, {"when", "RPT"}, {"where", "RPS"},
    // conjunctions and conditionals
    {"and", "CNJ"}, {"or", "CNJ"}, {"but", "CNJ"}, {"nor", "CNJ"},
    {"yet", "CNJ"}, {"because", "CNJ"}, {"although", "CNJ"}, {"though", "CNJ"},
    {"while", "CNJ"}, {"whereas", "CNJ"}, {"than", "CNJ"}, {"as", "CNJ,PPH"},
    {"so", "CNJ,QUA"}, {"if", "CND"}, {"unless", "CND"}, {"provided", "CND,VF"},
    {"whether", "CND"},
    // negatives
    {"not", "NEG"}, {"no", "NEG"}, {"never", "NEG"}, {"none", "NEG"},
    {"neither", "NEG"},
    {"cannot", "VNG"}, {"don't", "VNG"}, {"doesn't", "VNG"}, {"didn't", "VNG"},
    {"won't", "VNG"}, {"isn't", "VNG"}, {"aren't", "VNG"}, {"wasn't", "VNG"},
    // modals
    {"can", "VM"}, {"could", "VM"}, {"may", "VM"}, {"might", "VM"},
    {"must", "VM"}, {"shall", "VM"}, {"should", "VM"}, {"will", "VM"},
    {"would", "VM"}, {"ought", "VM"},
    // linking verbs
    {"am", "LVB"}, {"is", "LVB"}, {"are", "LVB"}, {"was", "LVB"},
    {"were", "LVB"}, {"be", "LVB"}, {"been", "LVB"}, {"being", "LVB"},
    {"seem", "LVB"}, {"seems", "LVB"}, {"seemed", "LVB"},
    {"feel", "LVB"}, {"feels", "LVB"}, {"felt", "LVB"},
    {"appear", "LVB"}, {"appears", "LVB"}, {"appeared", "LVB"},
    {"become", "LVB"}, {"becomes", "LVB"}, {"became", "LVB"},
    {"remain", "LVB"}, {"remains", "LVB"}, {"remained", "LVB"},
    {"look", "LVB"}, {"looks", "LVB"}, {"looked", "LVB"},
    {"stay", "LVB"}, {"stays", "LVB"},
    // qualifiers and quantifiers
    {"very", "QUA"}, {"quite", "QUA"}, {"rather", "QUA"}, {"too", "QUA"},
    {"somewhat", "QUA"}, {"extremely", "QUA"}, {"almost", "QUA"},
    {"some", "JQQ"}, {"many", "JQQ"}, {"much", "JQQ"}, {"few", "JQQ"},
    {"several", "JQQ"}, {"all", "JQQ"}, {"most", "JQQ"}, {"more", "JQQ"},
    {"less", "JQQ"}, {"little", "JQQ,ADJ"}, {"enough", "JQQ"},
    // cardinal qualifying adjectives
    {"one", "JQC,PC"}, {"two", "JQC"}, {"three", "JQC"}, {"four", "JQC"},
    {"five", "JQC"}, {"six", "JQC"}, {"seven", "JQC"}, {"eight", "JQC"},
    {"nine", "JQC"}, {"ten", "JQC"}, {"twelve", "JQC"}, {"twenty", "JQC"},
    {"half", "JQC,NN"},
    // adverbs
    {"again", "ADV"}, {"often", "ADV"}, {"sometimes", "ADV"}, {"always", "ADV"},
    {"daily", "ADV,ADJ"}, {"twice", "ADV"}, {"once", "ADV"}, {"soon", "ADV"},
    {"now", "ADV"}, {"then", "ADV"}, {"here", "ADV"}, {"there", "ADV"},
    {"away", "ADV"}, {"worse", "ADJ,ADV"}, {"better", "ADJ,ADV"},
    {"well", "ADV,ADJ"}, {"seldom", "ADV"}, {"together", "ADV"},
    {"alone", "ADJ,ADV"}, {"still", "ADV,ADJ"}, {"even", "ADV"},
    {"also", "ADV"}, {"perhaps", "ADV"}, {"early", "ADJ,ADV"},
    {"forth", "AVB"},
    // interjections
    {"oh", "INT"}, {"alas", "INT"},
    // classic clinical ambiguity examples
    {"patient", "ADJ,NN"}, {"dose", "NN,VF"},
    // clinical verbs (inflected forms listed so lookup beats the guesser)
    {"relieve", "VF"}, {"relieves", "VF"}, {"relieved", "VF"},
    {"aggravate", "VF"}, {"aggravates", "VF"}, {"aggravated", "VF"},
    {"improve", "VF"}, {"improves", "VF"}, {"improved", "VF"},
    {"worsen", "VF"}, {"worsens", "VF"}, {"worsened", "VF"},
    {"increase", "VF"}, {"increases", "VF"}, {"increased", "VF,ADJ"},
    {"decrease", "VF"}, {"decreases", "VF"}, {"decreased", "VF,ADJ"},
    {"return", "VF"}, {"returns", "VF"}, {"returned", "VF"},
    {"begin", "VF"}, {"begins", "VF"}, {"began", "VF"},
    {"complain", "VF"}, {"complains", "VF"}, {"complained", "VF"},
    {"recover", "VF"}, {"recovers", "VF"}, {"recovered", "VF"},
    {"suffer", "VF"}, {"suffers", "VF"}, {"suffered", "VF"},
    {"develop", "VF"}, {"develops", "VF"}, {"developed", "VF"},
    {"occur", "VF"}, {"occurs", "VF"}, {"occurred", "VF"},
    {"lasts", "VF"}, {"lasted", "VF"},
    {"spread", "VF"}, {"spreads", "VF"},
    {"subside", "VF"}, {"subsides", "VF"}, {"subsided", "VF"},
    {"follow", "VF"}, {"follows", "VF"}, {"followed", "VF"},
    {"help", "VF"}, {"helps", "VF"}, {"helped", "VF"},
    {"require", "VF"}, {"requires", "VF"}, {"required", "VF"},
    {"throb", "VF"}, {"throbs", "VF"}, {"throbbed", "VF"},
    {"burn", "VF,NN"}, {"burns", "VF,NN"}, {"burned", "VF"},
    {"itch", "VF,NN"}, {"itches", "VF"}, {"itched", "VF"},
    {"form", "VF,NN"}, {"forms", "VF"}, {"formed", "VF"},
    {"continue", "VF"}, {"continues", "VF"}, {"continued", "VF"},
    {"take", "VF,VIS"}, {"takes", "VF"}, {"took", "VF"},
    {"give", "VF,VIS"}, {"gives", "VF"}, {"gave", "VF"},
    {"apply", "VF,VIS"}, {"applied", "VF"},
    {"avoid", "VF,VIS"}, {"avoids", "VF"},
    {"repeat", "VF,VIS"}, {"repeats", "VF"}, {"repeated", "ADJ,VF"},
    // clinical nouns
    {"pain", "NN"}, {"headache", "NN"}, {"head", "NN"}, {"joint", "NN"},
    {"limb", "NN"}, {"muscle", "NN"}, {"knee", "NN"}, {"shoulder", "NN"},
    {"neck", "NN"}, {"temple", "NN"}, {"forehead", "NN"}, {"eye", "NN"},
    {"skin", "NN"}, {"scar", "NN"}, {"tissue", "NN"}, {"blood", "NN"},
    {"anaemia", "NN"}, {"rheumatism", "NN"}, {"migraine", "NN"},
    {"keloid", "NN"}, {"patients", "NN"}, {"remedy", "NN"}, {"medicine", "NN"},
    {"potency", "NN"}, {"symptom", "NN"}, {"attack", "NN,VF"},
    {"nausea", "NN"}, {"vomiting", "NV,NN"}, {"appetite", "NN"},
    {"weakness", "NN"}, {"fatigue", "NN"}, {"pallor", "NN"}, {"pulse", "NN"},
    {"iron", "NN"}, {"deficiency", "NN"}, {"swelling", "NV,NN"},
    {"stiffness", "NN"}, {"relief", "NN"}, {"pressure", "NN"},
    {"motion", "NN"}, {"rest", "NN,VF"}, {"sleep", "NN,VF"}, {"noise", "NN"},
    {"light", "NN,ADJ"}, {"heat", "NN"}, {"warmth", "NN"},
    {"cold", "ADJ,NN"}, {"damp", "ADJ,NN"}, {"weather", "NN"}, {"air", "NN"},
    {"growth", "NN"}, {"woman", "NN"}, {"women", "NN"}, {"girl", "NN"},
    {"man", "NN"}, {"men", "NN"}, {"child", "NN"}, {"children", "NN"},
    {"side", "NN"}, {"part", "NN"}, {"body", "NN"}, {"case", "NN"},
    {"condition", "NN"}, {"disease", "NN"}, {"treatment", "NN"},
    {"prescription", "NN"}, {"course", "NN"}, {"water", "NN"}, {"food", "NN"},
    {"thirst", "NN"}, {"chill", "NN"}, {"fever", "NN"}, {"vertigo", "NN"},
    {"vision", "NN"}, {"ear", "NN"}, {"face", "NN"}, {"lip", "NN"},
    {"tongue", "NN"}, {"chest", "NN"}, {"spine", "NN"}, {"wound", "NN"},
    {"injury", "NN"}, {"bruise", "NN"}, {"bruises", "NN"},
    {"sensation", "NN"}, {"tendency", "NN"}, {"period", "NN"},
    {"onset", "NN"}, {"congestion", "NN"}, {"circulation", "NN"},
    {"complexion", "NN"}, {"membrane", "NN"}, {"gland", "NN"},
    {"breath", "NN"}, {"breathing", "NV,NN"}, {"palpitation", "NN"},
    {"exertion", "NN"}, {"emotion", "NN"}, {"excitement", "NN"},
    {"anxiety", "NN"}, {"restlessness", "NN"}, {"soreness", "NN"},
    {"numbness", "NN"}, {"heaviness", "NN"}, {"dizziness", "NN"},
    {"tenderness", "NN"}, {"dryness", "NN"}, {"redness", "NN"},
    {"hardness", "NN"}, {"shape", "NN"}, {"surface", "NN"}, {"area", "NN"},
    {"spot", "NN"}, {"mark", "NN,VF"}, {"night", "NN"}, {"morning", "NN"},
    {"evening", "NN"}, {"day", "NN"}, {"week", "NN"}, {"hour", "NN"},
    {"winter", "NN"}, {"summer", "NN"}, {"back", "NN,ADV"},
    // adjectives
    {"severe", "ADJ"}, {"sharp", "ADJ"}, {"dull", "ADJ"}, {"chronic", "ADJ"},
    {"acute", "ADJ"}, {"tender", "ADJ"}, {"hard", "ADJ"}, {"soft", "ADJ"},
    {"red", "ADJ"}, {"pale", "ADJ"}, {"weak", "ADJ"}, {"tired", "ADJ"},
    {"restless", "ADJ"}, {"anxious", "ADJ"}, {"irritable", "ADJ"},
    {"sensitive", "ADJ"}, {"swollen", "ADJ"}, {"sore", "ADJ"},
    {"itchy", "ADJ"}, {"raised", "ADJ,VN"}, {"dark", "ADJ"},
    {"white", "ADJ"}, {"smooth", "ADJ"}, {"rough", "ADJ"},
    {"painful", "ADJ"}, {"painless", "ADJ"}, {"frequent", "ADJ"},
    {"periodic", "ADJ"}, {"sudden", "ADJ"}, {"gradual", "ADJ"},
    {"slow", "ADJ"}, {"rapid", "ADJ"}, {"quick", "ADJ"}, {"gentle", "ADJ"},
    {"marked", "ADJ,VN"}, {"violent", "ADJ"}, {"intense", "ADJ"},
    {"constant", "ADJ"}, {"intermittent", "ADJ"}, {"shiny", "ADJ"},
    {"firm", "ADJ"}, {"thick", "ADJ"}, {"thin", "ADJ"}, {"large", "ADJ"},
    {"small", "ADJ"}, {"deep", "ADJ"}, {"slight", "ADJ"}, {"usual", "ADJ"},
    {"general", "ADJ"}, {"common", "ADJ"}, {"whole", "ADJ"}, {"old", "ADJ"},
    {"young", "ADJ"}, {"nervous", "ADJ"}, {"feverish", "ADJ"},
    {"dizzy", "ADJ"}, {"faint", "ADJ,VF"}, {"bitter", "ADJ"},
    {"sour", "ADJ"}, {"dry", "ADJ"}, {"moist", "ADJ"}, {"hot", "ADJ"},
    {"warm", "ADJ"}, {"cool", "ADJ"}, {"fresh", "ADJ"},
    {"well-marked", "ADJ"}, {"left", "ADJ"}, {"right", "ADJ"},
    {"upper", "ADJ"}, {"lower", "ADJ"},
    // participial noun-qualifying adjectives
    {"burning", "JJ,NV"}, {"throbbing", "JJ,NV"}, {"shooting", "JJ,NV"},
    {"stinging", "JJ,NV"}, {"tearing", "JJ,NV"}, {"pressing", "JJ,NV"},
    {"cutting", "JJ,NV"}, {"cramping", "JJ,NV"}, {"pulsating", "JJ,NV"},
    {"hammering", "JJ,NV"}, {"stitching", "JJ,NV"}, {"mountain", "JJ,NN"},
    // remedy names
    {"arnica", "NP"}, {"belladonna", "NP"}, {"pulsatilla", "NP"},
    {"silicea", "NP"}, {"sepia", "NP"}, {"bryonia", "NP"}, {"thuja", "NP"},
    {"graphites", "NP"}, {"calcarea", "NP"}, {"fluorica", "NP"},
    {"ferrum", "NP"}, {"phosphoricum", "NP"}, {"metallicum", "NP"},
    {"natrum", "NP"}, {"muriaticum", "NP"}, {"china", "NP"},
    {"cinchona", "NP"}, {"sanguinaria", "NP"}, {"spigelia", "NP"},
    {"iris", "NP"}, {"versicolor", "NP"}, {"nux", "NP"}, {"vomica", "NP"},
    {"rhus", "NP"}, {"toxicodendron", "NP"}, {"montana", "NP"},
    {"herb", "NN"},
    // foreign words (only assignable via the lexicon)
    {"materia", "FW"}, {"medica", "FW"},
};

inline std::vector<Tag> parse_tag_list(std::string_view text) {
    std::vector<Tag> tags;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto piece = text.substr(pos, comma == std::string_view::npos
                                          ? std::string_view::npos
                                          : comma - pos);
        Tag t = parse_tag(piece);
        if (std::find(tags.begin(), tags.end(), t) != tags.end())
            throw UnknownTagError(std::string(piece) + " (duplicate in entry)");
        tags.push_back(t);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return tags;
}

} // namespace detail

inline Lexicon seed_lexicon() {
    Lexicon lex;
    for (const auto& row : detail::kSeedRows)
        lex.add({std::string(row.form), detail::parse_tag_list(row.tags),
                 EntrySource::Seed});
    return lex;
}

/// Lexicon file: one entry per line, `form<TAB>TAG1,TAG2,...`, '#' comments.
/// File entries merge over the seed; later duplicates override with a warning.
inline Lexicon load_lexicon(
    const std::string& path,
    const std::function<void(const std::string&)>& warn = nullptr) {
    std::ifstream in(path);
    if (!in) throw FileError(path);
    Lexicon lex = seed_lexicon();
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size())
            throw MalformedLexiconLineError(line_no, line);
        std::string form = detail::lowercase(line.substr(0, tab));
        if (form.find(' ') != std::string::npos)
            throw MalformedLexiconLineError(line_no, line);
        std::vector<Tag> tags = detail::parse_tag_list(
            std::string_view(line).substr(tab + 1));
        lex.add({std::move(form), std::move(tags), EntrySource::UserFile}, warn);
    }
    return lex;
}

} // namespace clintag
