#include "sbn/serialize.hpp"

#include <cstdio>
#include <variant>
#include <vector>

namespace sbn {

namespace {

std::string render_target(const Target& target, int source_position) {
    if (const NodeId* node = std::get_if<NodeId>(&target)) {
        if (node->is_box())
            throw NotSerializableError("role-style edge targets a box");
        int rel = node->index - source_position;
        if (rel == 0) throw NotSerializableError("self-referencing node offset");
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%+d", rel);
        return buf;
    }
    if (const Constant* constant = std::get_if<Constant>(&target)) return constant->value;
    return "\"" + std::get<Literal>(target).value + "\"";
}

} // namespace

std::string serialize_sbn(const Drg& drg) {
    const int concept_count = static_cast<int>(drg.concepts.size());

    std::vector<std::vector<const Edge*>> edges_of(drg.concepts.size());
    for (const Edge& e : drg.edges) {
        if (e.kind == EdgeKind::Member || e.kind == EdgeKind::Discourse) continue;
        if (e.source.is_box() || e.source.index < 0 || e.source.index >= concept_count)
            throw NotSerializableError("edge does not start at a concept");
        edges_of[e.source.index].push_back(&e);
    }

    std::vector<std::string> tokens;
    size_t next_box = 1; // box 0 is implicit
    for (int position = 0; position <= concept_count; ++position) {
        while (next_box < drg.boxes.size() &&
               drg.boxes[next_box].intro_after_concept <= position) {
            const Edge* intro = drg.discourse_parent(static_cast<int>(next_box));
            if (!intro || !intro->source.is_box())
                throw NotSerializableError("box " + std::to_string(next_box) +
                                           " has no unique introducing discourse edge");
            int distance = static_cast<int>(next_box) - intro->source.index;
            if (distance < 1)
                throw NotSerializableError("discourse edge points forward in box order");
            tokens.push_back(intro->label);
            tokens.push_back("<" + std::to_string(distance));
            ++next_box;
        }
        if (position == concept_count) break;
        tokens.push_back(drg.concepts[position].synset.str());
        for (const Edge* e : edges_of[position]) {
            tokens.push_back(e->label);
            tokens.push_back(render_target(e->target, position));
        }
    }

    std::string out;
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (i) out.push_back(' ');
        out += tokens[i];
    }
    return out;
}

} // namespace sbn
