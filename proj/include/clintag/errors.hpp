// clintag -- rule-based POS tagger for clinical English
#pragma once

#include <stdexcept>
#include <string>

namespace clintag {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownTagError : Error {
    explicit UnknownTagError(const std::string& code)
        : Error("unknown tag code: '" + code + "'"), code(code) {}
    std::string code;
};

struct UnknownCategoryError : Error {
    explicit UnknownCategoryError(const std::string& name)
        : Error("unknown rule category: '" + name + "'"), name(name) {}
    std::string name;
};

struct SyntaxError : Error {
    SyntaxError(int line, const std::string& expected)
        : Error("syntax error at line " + std::to_string(line) + ": expected " + expected),
          line(line), expected(expected) {}
    int line;
    std::string expected;
};

struct DuplicateRuleIdError : Error {
    explicit DuplicateRuleIdError(const std::string& id)
        : Error("duplicate rule id: '" + id + "'"), id(id) {}
    std::string id;
};

struct MalformedLexiconLineError : Error {
    MalformedLexiconLineError(int line, const std::string& text)
        : Error("malformed lexicon line " + std::to_string(line) + ": '" + text + "'"),
          line(line), text(text) {}
    int line;
    std::string text;
};

struct MalformedGoldLineError : Error {
    MalformedGoldLineError(int line, const std::string& text)
        : Error("malformed gold line " + std::to_string(line) + ": '" + text + "'"),
          line(line), text(text) {}
    int line;
    std::string text;
};

struct EmptyGroupError : Error {
    explicit EmptyGroupError(const std::string& label)
        : Error("gold corpus group '" + label + "' has no sentences"), label(label) {}
    std::string label;
};

struct ZeroTotalError : Error {
    ZeroTotalError() : Error("accuracy undefined for total = 0") {}
};

struct AlignmentError : Error {
    AlignmentError(const std::string& group, int sentence, int position)
        : Error("token streams diverge in group '" + group + "', sentence " +
                std::to_string(sentence) + ", position " + std::to_string(position)),
          group(group), sentence(sentence), position(position) {}
    std::string group;
    int sentence;
    int position;
};

struct PackViolationError : Error {
    explicit PackViolationError(const std::string& report)
        : Error("rule pack has lint violations:\n" + report) {}
};

struct FileError : Error {
    explicit FileError(const std::string& path)
        : Error("cannot open file: " + path), path(path) {}
    std::string path;
};

} // namespace clintag
