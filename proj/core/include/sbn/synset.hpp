#pragma once

#include <optional>
#include <string>

namespace sbn {

// WordNet concept label `lemma.pos.NN`, e.g. `read.v.01`. The lemma is an
// opaque non-empty string, pos is one of n/v/a/r, sense is 01..99. Labels
// are never looked up in a WordNet database; they are structured strings.
struct SynsetId {
    std::string lemma;
    char pos = 'n';
    int sense = 1;

    // Canonical text form `lemma.pos.NN`; parse_synset(str()) round-trips.
    std::string str() const;
    // Sense-stripped form `lemma.pos`.
    std::string lemma_pos() const;

    bool operator==(const SynsetId& other) const = default;
};

// Returns the parsed synset when `token` matches the canonical form,
// nullopt otherwise. The lemma may itself contain dots (`u.s.a.n.01`);
// pos and sense are taken from the last two dot-separated fields.
std::optional<SynsetId> parse_synset(const std::string& token);

inline bool is_synset_token(const std::string& token) {
    return parse_synset(token).has_value();
}

} // namespace sbn
