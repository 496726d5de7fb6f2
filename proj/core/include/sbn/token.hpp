#pragma once

#include <string>
#include <vector>

#include "sbn/vocab.hpp"

namespace sbn {

struct Token {
    std::string text; // for quoted literals: the payload without quotes
    bool quoted = false;
    int line = 1;
    int column = 1;
};

enum class TokenClass {
    Synset,
    DiscourseRelation,
    EdgeLabel,
    Operator,
    NodeRef,
    Constant,
    Literal,
    BoxRef,
};

// Splits on whitespace; a double-quoted literal (possibly containing spaces
// or newlines) is one token; `%` outside a literal starts a comment running
// to end of line. Throws ParseError("UnterminatedLiteral") on an unclosed quote.
std::vector<Token> tokenize_sbn(const std::string& text);

struct ClassifyContext {
    bool edge_position = false;   // a concept is open, an edge label may follow
    bool target_position = false; // previous token was an edge label
    const Token* next = nullptr;  // lookahead, for discourse-relation detection
    const SbnConfig* config = nullptr;
};

// Assigns exactly one class or throws ParseError("UnknownToken").
TokenClass classify_token(const Token& token, const ClassifyContext& context);

// `<k` with k >= 1.
bool is_box_ref(const std::string& text, int* distance = nullptr);
// Signed integer with explicit sign; `+0`/`-0` parse as offset 0 and are
// rejected later during reference resolution.
bool is_node_ref(const std::string& text, int* offset = nullptr);

} // namespace sbn
