#include "sbn/token.hpp"

#include <cctype>

#include "sbn/error.hpp"
#include "sbn/synset.hpp"

namespace sbn {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

bool all_upper_ascii(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < 'A' || c > 'Z') return false;
    return true;
}

// Initial-uppercase role-style word: Agent, AttributeOf, Co-Theme, Name.
bool initial_upper_word(const std::string& s) {
    if (s.empty() || s[0] < 'A' || s[0] > 'Z') return false;
    for (char c : s) {
        bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                  (c >= '0' && c <= '9') || c == '-' || c == '_';
        if (!ok) return false;
    }
    return !all_upper_ascii(s);
}

} // namespace

std::vector<Token> tokenize_sbn(const std::string& text) {
    std::vector<Token> tokens;
    int line = 1;
    int column = 1;
    size_t i = 0;
    const size_t n = text.size();

    auto advance = [&](char c) {
        if (c == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    };

    while (i < n) {
        char c = text[i];
        if (is_space(c)) {
            advance(c);
            ++i;
            continue;
        }
        if (c == '%') { // comment to end of line
            while (i < n && text[i] != '\n') {
                advance(text[i]);
                ++i;
            }
            continue;
        }
        if (c == '"') {
            Token tok;
            tok.quoted = true;
            tok.line = line;
            tok.column = column;
            advance(c);
            ++i;
            bool closed = false;
            while (i < n) {
                char d = text[i];
                advance(d);
                ++i;
                if (d == '"') {
                    closed = true;
                    break;
                }
                tok.text.push_back(d);
            }
            if (!closed)
                throw ParseError("UnterminatedLiteral", "literal opened but never closed",
                                 tok.line, tok.column);
            tokens.push_back(std::move(tok));
            continue;
        }
        Token tok;
        tok.line = line;
        tok.column = column;
        while (i < n && !is_space(text[i]) && text[i] != '"' && text[i] != '%') {
            tok.text.push_back(text[i]);
            advance(text[i]);
            ++i;
        }
        tokens.push_back(std::move(tok));
    }
    return tokens;
}

bool is_box_ref(const std::string& text, int* distance) {
    if (text.size() < 2 || text[0] != '<') return false;
    long value = 0;
    for (size_t i = 1; i < text.size(); ++i) {
        char c = text[i];
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        value = value * 10 + (c - '0');
        if (value > 1000000) return false;
    }
    if (value < 1) return false;
    if (distance) *distance = static_cast<int>(value);
    return true;
}

bool is_node_ref(const std::string& text, int* offset) {
    if (text.size() < 2 || (text[0] != '+' && text[0] != '-')) return false;
    long value = 0;
    for (size_t i = 1; i < text.size(); ++i) {
        char c = text[i];
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        value = value * 10 + (c - '0');
        if (value > 1000000) return false;
    }
    if (offset) *offset = static_cast<int>(text[0] == '-' ? -value : value);
    return true;
}

TokenClass classify_token(const Token& token, const ClassifyContext& context) {
    static const SbnConfig default_config;
    const SbnConfig& config = context.config ? *context.config : default_config;

    if (token.quoted) return TokenClass::Literal;
    if (is_synset_token(token.text)) return TokenClass::Synset;
    if (all_upper_ascii(token.text)) {
        bool next_is_box_ref = context.next && !context.next->quoted &&
                               is_box_ref(context.next->text);
        if (config.discourse.contains(token.text)) {
            if (next_is_box_ref) return TokenClass::DiscourseRelation;
            throw ParseError("UnknownToken",
                             "discourse relation `" + token.text +
                                 "` is not followed by a box reference",
                             token.line, token.column);
        }
        if (config.operators.contains(token.text)) return TokenClass::Operator;
        throw ParseError("UnknownToken",
                         "uppercase token `" + token.text +
                             "` is neither an operator nor a discourse relation",
                         token.line, token.column);
    }
    if (is_box_ref(token.text)) return TokenClass::BoxRef;
    if (is_node_ref(token.text)) return TokenClass::NodeRef;
    if (initial_upper_word(token.text) && context.edge_position)
        return TokenClass::EdgeLabel;
    if (context.target_position || !initial_upper_word(token.text))
        return TokenClass::Constant;
    throw ParseError("UnknownToken",
                     "token `" + token.text + "` has no reading in this context",
                     token.line, token.column);
}

} // namespace sbn
