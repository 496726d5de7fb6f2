#pragma once

#include <string>
#include <variant>
#include <vector>

#include "sbn/synset.hpp"

namespace sbn {

enum class EdgeKind { Role, Operator, Name, Member, Discourse };

struct NodeId {
    enum class Kind { Box, Concept };
    Kind kind = Kind::Concept;
    int index = 0;

    bool is_box() const { return kind == Kind::Box; }
    bool operator==(const NodeId& other) const = default;
};

inline NodeId box_node(int index) { return NodeId{NodeId::Kind::Box, index}; }
inline NodeId concept_node(int index) { return NodeId{NodeId::Kind::Concept, index}; }

// Bare token such as `speaker`, `now`, `?`, `1822`.
struct Constant {
    std::string value;
    bool operator==(const Constant& other) const = default;
};

// Double-quoted string; `value` holds the bytes between the quotes and
// round-trips exactly (CJK, spaces, empty string).
struct Literal {
    std::string value;
    bool operator==(const Literal& other) const = default;
};

using Target = std::variant<NodeId, Constant, Literal>;

struct Edge {
    NodeId source;
    std::string label;
    EdgeKind kind = EdgeKind::Role;
    Target target;
};

struct ConceptNode {
    SynsetId synset;
};

struct BoxNode {
    // Number of concepts introduced before this box; what interleaves boxes
    // with concepts when re-serializing. 0 for box 0.
    int intro_after_concept = 0;
};

// Discourse Representation Graph: box nodes, concept nodes and the typed
// edges between them. Values are immutable after construction by contract;
// parsing never mutates shared state and Drg is safe to share across threads.
struct Drg {
    std::vector<ConceptNode> concepts;
    std::vector<BoxNode> boxes;
    std::vector<Edge> edges; // document order, Member/Discourse edges included
    std::string origin;

    bool empty() const { return concepts.empty() && boxes.empty(); }

    // Box index per concept derived from Member edges; -1 when a concept has
    // no Member edge, -2 when it has several (validate reports both).
    std::vector<int> member_box_of_concepts() const;

    // The Discourse edge introducing `box_index`, nullptr for box 0 or when
    // no unique introducing edge exists.
    const Edge* discourse_parent(int box_index) const;
};

} // namespace sbn
