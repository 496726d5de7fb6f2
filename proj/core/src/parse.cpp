#include "sbn/parse.hpp"

#include <utility>

namespace sbn {

namespace {

// Node references are relative to the owning concept and may point forward,
// so they are resolved after the pass.
struct PendingRef {
    size_t edge_index;
    int owner;
    int offset;
    int line;
    int column;
};

} // namespace

Drg parse_sbn(const std::vector<Token>& tokens, const SbnConfig& config, std::string origin) {
    if (tokens.empty()) throw ParseError("EmptyDocument", "document contains no tokens");

    Drg drg;
    drg.origin = std::move(origin);
    std::vector<PendingRef> pending;
    int current_box = -1;
    int current_concept = -1;

    auto ensure_root_box = [&] {
        if (drg.boxes.empty()) {
            drg.boxes.push_back(BoxNode{0});
            current_box = 0;
        }
    };

    size_t i = 0;
    while (i < tokens.size()) {
        const Token& tok = tokens[i];
        ClassifyContext ctx;
        ctx.edge_position = current_concept >= 0;
        ctx.next = i + 1 < tokens.size() ? &tokens[i + 1] : nullptr;
        ctx.config = &config;
        const TokenClass cls = classify_token(tok, ctx);

        switch (cls) {
        case TokenClass::Synset: {
            ensure_root_box();
            int index = static_cast<int>(drg.concepts.size());
            drg.concepts.push_back(ConceptNode{*parse_synset(tok.text)});
            drg.edges.push_back(
                Edge{box_node(current_box), "member", EdgeKind::Member, concept_node(index)});
            current_concept = index;
            ++i;
            break;
        }
        case TokenClass::DiscourseRelation: {
            ensure_root_box();
            const Token& ref = tokens[i + 1]; // classify guarantees the lookahead
            int distance = 0;
            is_box_ref(ref.text, &distance);
            int introduced_so_far = static_cast<int>(drg.boxes.size());
            int parent = introduced_so_far - distance;
            if (parent < 0)
                throw ParseError("DanglingBoxRef",
                                 "box reference `" + ref.text + "` exceeds the " +
                                     std::to_string(introduced_so_far) + " box(es) so far",
                                 ref.line, ref.column);
            int index = introduced_so_far;
            drg.boxes.push_back(BoxNode{static_cast<int>(drg.concepts.size())});
            drg.edges.push_back(
                Edge{box_node(parent), tok.text, EdgeKind::Discourse, box_node(index)});
            current_box = index;
            current_concept = -1;
            i += 2;
            break;
        }
        case TokenClass::Operator:
        case TokenClass::EdgeLabel: {
            if (current_concept < 0)
                throw ParseError("UnknownToken",
                                 "edge label `" + tok.text + "` appears before any concept",
                                 tok.line, tok.column);
            if (i + 1 >= tokens.size())
                throw ParseError("OddEdgeTokens", "edge label `" + tok.text + "` has no target",
                                 tok.line, tok.column);
            const Token& target_tok = tokens[i + 1];
            ClassifyContext tctx;
            tctx.target_position = true;
            tctx.next = i + 2 < tokens.size() ? &tokens[i + 2] : nullptr;
            tctx.config = &config;

            Edge edge;
            edge.source = concept_node(current_concept);
            edge.label = tok.text;
            edge.kind = cls == TokenClass::Operator
                            ? EdgeKind::Operator
                            : (tok.text == "Name" ? EdgeKind::Name : EdgeKind::Role);

            switch (classify_token(target_tok, tctx)) {
            case TokenClass::NodeRef: {
                int offset = 0;
                is_node_ref(target_tok.text, &offset);
                pending.push_back({drg.edges.size(), current_concept, offset, target_tok.line,
                                   target_tok.column});
                edge.target = concept_node(-1); // patched below
                break;
            }
            case TokenClass::Constant:
                edge.target = Constant{target_tok.text};
                break;
            case TokenClass::Literal:
                edge.target = Literal{target_tok.text};
                break;
            default:
                throw ParseError("OddEdgeTokens",
                                 "edge label `" + tok.text +
                                     "` is not followed by a node reference, constant or literal",
                                 target_tok.line, target_tok.column);
            }
            drg.edges.push_back(std::move(edge));
            i += 2;
            break;
        }
        case TokenClass::BoxRef:
            throw ParseError("UnknownToken",
                             "box reference `" + tok.text + "` without a discourse relation",
                             tok.line, tok.column);
        case TokenClass::NodeRef:
            throw ParseError("UnknownToken",
                             "node reference `" + tok.text + "` outside target position",
                             tok.line, tok.column);
        case TokenClass::Constant:
            throw ParseError("UnknownToken",
                             "constant `" + tok.text + "` outside target position", tok.line,
                             tok.column);
        case TokenClass::Literal:
            throw ParseError("UnknownToken", "literal cannot start a node", tok.line, tok.column);
        }
    }

    for (const PendingRef& ref : pending) {
        int target = ref.owner + ref.offset;
        if (ref.offset == 0 || target < 0 || target >= static_cast<int>(drg.concepts.size()))
            throw ParseError("DanglingNodeRef",
                             "node reference " + std::to_string(ref.offset) + " from concept " +
                                 std::to_string(ref.owner) + " resolves outside the document",
                             ref.line, ref.column);
        drg.edges[ref.edge_index].target = concept_node(target);
    }
    return drg;
}

Drg parse_document(const std::string& text, const SbnConfig& config, std::string origin) {
    return parse_sbn(tokenize_sbn(text), config, std::move(origin));
}

std::vector<int> Drg::member_box_of_concepts() const {
    std::vector<int> box_of(concepts.size(), -1);
    for (const Edge& e : edges) {
        if (e.kind != EdgeKind::Member) continue;
        const NodeId* target = std::get_if<NodeId>(&e.target);
        if (!target || target->is_box()) continue;
        if (target->index < 0 || target->index >= static_cast<int>(concepts.size())) continue;
        if (!e.source.is_box()) continue;
        box_of[target->index] = box_of[target->index] == -1 ? e.source.index : -2;
    }
    return box_of;
}

const Edge* Drg::discourse_parent(int box_index) const {
    if (box_index == 0) return nullptr;
    const Edge* found = nullptr;
    for (const Edge& e : edges) {
        if (e.kind != EdgeKind::Discourse) continue;
        const NodeId* target = std::get_if<NodeId>(&e.target);
        if (!target || !target->is_box() || target->index != box_index) continue;
        if (found) return nullptr; // not unique
        found = &e;
    }
    return found;
}

} // namespace sbn
