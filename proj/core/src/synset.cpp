#include "sbn/synset.hpp"

#include <cctype>
#include <cstdio>

namespace sbn {

namespace {

bool is_pos_char(char c) { return c == 'n' || c == 'v' || c == 'a' || c == 'r'; }

} // namespace

std::string SynsetId::str() const {
    char buf[8];
    std::snprintf(buf, sizeof(buf), ".%c.%02d", pos, sense);
    return lemma + buf;
}

std::string SynsetId::lemma_pos() const {
    std::string out = lemma;
    out.push_back('.');
    out.push_back(pos);
    return out;
}

std::optional<SynsetId> parse_synset(const std::string& token) {
    // lemma.p.NN read from the right: the tail is `.p.dd`, 5 bytes.
    if (token.size() < 6) return std::nullopt;
    size_t n = token.size();
    char d1 = token[n - 2];
    char d0 = token[n - 1];
    if (token[n - 5] != '.' || token[n - 3] != '.') return std::nullopt;
    if (!is_pos_char(token[n - 4])) return std::nullopt;
    if (!std::isdigit(static_cast<unsigned char>(d1)) ||
        !std::isdigit(static_cast<unsigned char>(d0)))
        return std::nullopt;
    int sense = (d1 - '0') * 10 + (d0 - '0');
    if (sense < 1 || sense > 99) return std::nullopt;
    std::string lemma = token.substr(0, n - 5);
    if (lemma.empty()) return std::nullopt;
    return SynsetId{std::move(lemma), token[n - 4], sense};
}

} // namespace sbn
