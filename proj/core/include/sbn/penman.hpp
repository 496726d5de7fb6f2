#pragma once

#include <string>
#include <vector>

#include "sbn/drg.hpp"
#include "sbn/vocab.hpp"

namespace sbn {

// Fine keeps the reference tool's expansion (synsets split into lemma/pos/
// sense facts, constants carried by their own variables); Coarse is the
// compressed form used for evaluation (one opaque synset label per concept,
// constants inlined as attributes).
enum class Granularity { Fine, Coarse };

struct Triple {
    enum class Form { Instance, Relation, Attribute };

    Form form = Form::Instance;
    std::string var;    // source variable
    std::string label;  // concept label for Instance, edge label otherwise
    std::string target; // second variable (Relation) or value (Attribute)

    bool operator==(const Triple& other) const = default;
};

struct TripleSet {
    std::vector<Triple> triples;
    std::vector<std::string> variables; // declaration order; one per Instance

    int var_count() const { return static_cast<int>(variables.size()); }
    size_t size() const { return triples.size(); }
};

// Variables are assigned deterministically: b0,b1,... for boxes and
// c0,c1,... for concepts in document order (x0,x1,... for the fresh
// constant/literal carriers of Fine mode).
TripleSet extract_triples(const Drg& drg, Granularity g, const SbnConfig& config = {});

// Nested parenthesized rendering rooted at box b0, children in document
// order, re-entrant nodes referenced by variable after first occurrence.
// One line per document; parse_penman(to_penman(d, g)) yields the same
// triples as extract_triples(d, g).
std::string to_penman(const Drg& drg, Granularity g, const SbnConfig& config = {});

// Reads this module's own output (not arbitrary third-party Penman files).
TripleSet parse_penman(const std::string& text);

enum class StripCategory { Roles, Discourse, Operators, Senses };

// Throws std::invalid_argument on an unknown name ("UnknownCategory").
StripCategory strip_category_from_string(const std::string& name);

// Graph-level ablations: Roles drops Relation triples with role labels
// (Name/member/discourse/operator labels kept), Discourse drops box-to-box
// relations (member kept), Operators drops operator-labelled triples,
// Senses rewrites `lemma.pos.NN` instance labels to `lemma.pos`.
// Idempotent for every category.
TripleSet strip_category(const TripleSet& ts, StripCategory category,
                         const SbnConfig& config = {});

// TSV dump `var<TAB>label<TAB>target<TAB>form`, one triple per line.
std::string triples_tsv(const TripleSet& ts);

} // namespace sbn
