// clintag -- rule-based POS tagger for clinical English
//
// Sentence splitting and tokenization with lossless source spans.
#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace clintag {

struct CharRange {
    std::size_t begin = 0; // half-open
    std::size_t end = 0;
    bool operator==(const CharRange&) const = default;
};

struct RawSentence {
    std::string text;
    CharRange char_range; // offsets into the source document
};

enum class TokenKind { Word, Number, Punct, Symbol };

inline std::string_view token_kind_name(TokenKind k) {
    switch (k) {
        case TokenKind::Word: return "Word";
        case TokenKind::Number: return "Number";
        case TokenKind::Punct: return "Punct";
        case TokenKind::Symbol: return "Symbol";
    }
    return "?";
}

struct Token {
    std::string surface;    // verbatim slice of the sentence
    CharRange char_range;   // offsets within the sentence
    std::string normalized; // lowercased surface
    TokenKind kind = TokenKind::Word;
};

namespace detail {

inline bool is_letter(unsigned char c) {
    return std::isalpha(c) || c >= 0x80; // ASCII plus anything non-ASCII
}

inline bool is_punct_char(char c) {
    static constexpr std::string_view punct = ".,;:!?()\"'[]";
    return punct.find(c) != std::string_view::npos;
}

inline std::string lowercase(std::string_view s) {
    std::string out(s);
    for (auto& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

} // namespace detail

inline const std::vector<std::string>& default_abbreviations() {
    static const std::vector<std::string> abbrevs = {
        "Dr.", "Mr.", "Mrs.", "e.g.", "i.e.", "vs.",
    };
    return abbrevs;
}

/// The surface is a Number iff it starts with a digit and consists of digits,
/// at most one interior decimal point, and an optional trailing letter run
/// (potency suffixes such as "30C").
inline TokenKind classify_surface(std::string_view s) {
    if (s.empty()) return TokenKind::Symbol;
    unsigned char c0 = static_cast<unsigned char>(s[0]);
    if (std::isdigit(c0)) {
        std::size_t i = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i + 1 < s.size() && s[i] == '.' &&
            std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
            ++i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        }
        while (i < s.size() && detail::is_letter(static_cast<unsigned char>(s[i]))) ++i;
        if (i == s.size()) return TokenKind::Number;
        return TokenKind::Symbol;
    }
    if (detail::is_letter(c0)) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            unsigned char c = static_cast<unsigned char>(s[i]);
            if (detail::is_letter(c)) continue;
            if ((s[i] == '-' || s[i] == '\'') && i + 1 < s.size() &&
                detail::is_letter(static_cast<unsigned char>(s[i + 1])))
                continue;
            return TokenKind::Symbol;
        }
        return TokenKind::Word;
    }
    if (s.size() == 1 && detail::is_punct_char(s[0])) return TokenKind::Punct;
    return TokenKind::Symbol;
}

/// Sentences end at '.', '?' or '!' followed by whitespace and a capital (or
/// digit), or at end of text.  The abbreviation list suppresses false splits.
inline std::vector<RawSentence> split_sentences(
    std::string_view document,
    const std::vector<std::string>& abbreviations = default_abbreviations()) {
    std::vector<RawSentence> out;
    const std::size_t n = document.size();
    std::size_t start = 0;

    auto flush = [&](std::size_t end) {
        // trim surrounding whitespace
        std::size_t b = start, e = end;
        while (b < e && std::isspace(static_cast<unsigned char>(document[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(document[e - 1]))) --e;
        if (b < e)
            out.push_back({std::string(document.substr(b, e - b)), {b, e}});
        start = end;
    };

    auto ends_with_abbrev = [&](std::size_t dot_pos) {
        // token ending at dot_pos (inclusive of the '.')
        for (const auto& a : abbreviations) {
            if (a.size() > dot_pos + 1) continue;
            std::size_t b = dot_pos + 1 - a.size();
            if (document.substr(b, a.size()) != a) continue;
            // must be preceded by start or whitespace
            if (b == 0 || std::isspace(static_cast<unsigned char>(document[b - 1])))
                return true;
        }
        return false;
    };

    for (std::size_t i = 0; i < n; ++i) {
        char c = document[i];
        if (c != '.' && c != '?' && c != '!') continue;
        // consume a run of terminators
        std::size_t j = i;
        while (j + 1 < n &&
               (document[j + 1] == '.' || document[j + 1] == '?' || document[j + 1] == '!'))
            ++j;
        if (c == '.' && i == j && ends_with_abbrev(i)) continue;
        // boundary if end-of-text or whitespace followed by capital/digit
        std::size_t k = j + 1;
        while (k < n && std::isspace(static_cast<unsigned char>(document[k]))) ++k;
        bool boundary = false;
        if (k == n) {
            boundary = true;
        } else if (k > j + 1) {
            unsigned char nc = static_cast<unsigned char>(document[k]);
            if (std::isupper(nc) || std::isdigit(nc)) boundary = true;
        }
        if (boundary) {
            flush(j + 1);
            i = j;
        }
    }
    if (start < n) flush(n);
    return out;
}

/// Whitespace separates tokens; punctuation splits off as single Punct tokens;
/// hyphenated words and decimal/potency numbers stay whole.
inline std::vector<Token> tokenize(const RawSentence& sentence) {
    std::vector<Token> out;
    std::string_view s = sentence.text;
    const std::size_t n = s.size();
    std::size_t i = 0;
    auto emit = [&](std::size_t b, std::size_t e) {
        Token t;
        t.surface = std::string(s.substr(b, e - b));
        t.char_range = {b, e};
        t.normalized = detail::lowercase(t.surface);
        t.kind = classify_surface(t.surface);
        out.push_back(std::move(t));
    };
    while (i < n) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (std::isdigit(c)) {
            std::size_t b = i;
            while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i + 1 < n && s[i] == '.' &&
                std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
                ++i;
                while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            }
            while (i < n && detail::is_letter(static_cast<unsigned char>(s[i]))) ++i;
            emit(b, i);
            continue;
        }
        if (detail::is_letter(c)) {
            std::size_t b = i;
            while (i < n) {
                unsigned char cc = static_cast<unsigned char>(s[i]);
                if (detail::is_letter(cc)) {
                    ++i;
                } else if ((s[i] == '-' || s[i] == '\'') && i + 1 < n &&
                           detail::is_letter(static_cast<unsigned char>(s[i + 1]))) {
                    i += 2;
                } else {
                    break;
                }
            }
            emit(b, i);
            continue;
        }
        emit(i, i + 1);
        ++i;
    }
    return out;
}

inline std::vector<Token> tokenize(std::string_view sentence_text) {
    return tokenize(RawSentence{std::string(sentence_text), {0, sentence_text.size()}});
}

} // namespace clintag
