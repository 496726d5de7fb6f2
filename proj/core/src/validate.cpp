#include "sbn/validate.hpp"

#include <set>
#include <variant>

namespace sbn {

namespace {

std::string edge_where(size_t index) { return "edge " + std::to_string(index); }

bool node_in_range(const Drg& drg, const NodeId& node) {
    int limit = node.is_box() ? static_cast<int>(drg.boxes.size())
                              : static_cast<int>(drg.concepts.size());
    return node.index >= 0 && node.index < limit;
}

} // namespace

WellFormedReport validate(const Drg& drg, const SbnConfig& config) {
    WellFormedReport report;
    auto error = [&report](std::string where, std::string code, std::string message) {
        report.errors.push_back({std::move(where), std::move(code), std::move(message)});
    };
    auto warning = [&report](std::string where, std::string code, std::string message) {
        report.warnings.push_back({std::move(where), std::move(code), std::move(message)});
    };

    if (drg.empty()) {
        report.well_formed = report.errors.empty();
        return report;
    }
    if (drg.boxes.empty())
        error("document", "MissingRootBox", "non-empty document has no box 0");

    // Edge endpoint sanity and kind/label coherence.
    for (size_t i = 0; i < drg.edges.size(); ++i) {
        const Edge& e = drg.edges[i];
        if (!node_in_range(drg, e.source)) {
            error(edge_where(i), "DanglingNodeRef", "edge source is out of range");
            continue;
        }
        const NodeId* target_node = std::get_if<NodeId>(&e.target);
        if (target_node && !node_in_range(drg, *target_node)) {
            error(edge_where(i), "DanglingNodeRef", "edge target is out of range");
            continue;
        }
        bool box_to_box = e.source.is_box() && target_node && target_node->is_box();
        bool box_to_concept = e.source.is_box() && target_node && !target_node->is_box();

        switch (e.kind) {
        case EdgeKind::Member:
            if (!box_to_concept)
                error(edge_where(i), "KindLabelMismatch",
                      "member edge must connect a box to a concept");
            break;
        case EdgeKind::Discourse:
            if (!box_to_box)
                error(edge_where(i), "KindLabelMismatch",
                      "discourse edge must connect two boxes");
            break;
        case EdgeKind::Role:
        case EdgeKind::Operator:
        case EdgeKind::Name:
            if (e.source.is_box())
                error(edge_where(i), "KindLabelMismatch",
                      "role/operator/name edge must start at a concept");
            if (box_to_box)
                error(edge_where(i), "KindLabelMismatch",
                      "only discourse edges may connect two boxes");
            if ((e.kind == EdgeKind::Name) != (e.label == "Name"))
                error(edge_where(i), "KindLabelMismatch",
                      "label `" + e.label + "` does not agree with the Name kind");
            if ((e.kind == EdgeKind::Operator) != config.operators.contains(e.label))
                error(edge_where(i), "KindLabelMismatch",
                      "label `" + e.label + "` does not agree with the Operator kind");
            break;
        }
    }

    // Member totality: every concept is the target of exactly one member edge.
    std::vector<int> box_of = drg.member_box_of_concepts();
    for (size_t c = 0; c < box_of.size(); ++c) {
        if (box_of[c] == -1)
            error("concept " + std::to_string(c), "MissingMember",
                  "concept has no member edge");
        else if (box_of[c] == -2)
            error("concept " + std::to_string(c), "DuplicateMember",
                  "concept is the target of several member edges");
    }

    // Box tree: box 0 has no parent, every other box exactly one, and the
    // parent precedes the child in introduction order.
    int root_parents = 0;
    std::vector<int> parents(drg.boxes.size(), 0);
    for (const Edge& e : drg.edges) {
        if (e.kind != EdgeKind::Discourse) continue;
        const NodeId* target = std::get_if<NodeId>(&e.target);
        if (!target || !target->is_box() || !node_in_range(drg, *target)) continue;
        if (target->index == 0) {
            ++root_parents;
            continue;
        }
        ++parents[target->index];
        if (e.source.is_box() && e.source.index >= target->index)
            error("box " + std::to_string(target->index), "BoxOrder",
                  "discourse edge does not point from an earlier box");
    }
    if (root_parents > 0)
        error("box 0", "RootBoxHasParent", "box 0 is the target of a discourse edge");
    for (size_t b = 1; b < drg.boxes.size(); ++b) {
        if (parents[b] == 0)
            error("box " + std::to_string(b), "OrphanBox",
                  "box has no incoming discourse edge");
        else if (parents[b] > 1)
            error("box " + std::to_string(b), "MultipleDiscourseParents",
                  "box has several incoming discourse edges");
    }
    for (size_t b = 1; b < drg.boxes.size(); ++b) {
        if (drg.boxes[b].intro_after_concept < drg.boxes[b - 1].intro_after_concept)
            error("box " + std::to_string(b), "BoxOrder",
                  "box introduction positions are not monotonic");
    }

    // Warnings: empty name literals and isolated concepts.
    std::set<int> has_role_or_operator;
    for (size_t i = 0; i < drg.edges.size(); ++i) {
        const Edge& e = drg.edges[i];
        if (e.kind == EdgeKind::Name) {
            const Literal* lit = std::get_if<Literal>(&e.target);
            if (lit && lit->value.empty())
                warning(edge_where(i), "EmptyNameLiteral", "Name edge carries an empty literal");
        }
        if (e.kind != EdgeKind::Role && e.kind != EdgeKind::Operator) continue;
        if (!e.source.is_box()) has_role_or_operator.insert(e.source.index);
        const NodeId* target = std::get_if<NodeId>(&e.target);
        if (target && !target->is_box()) has_role_or_operator.insert(target->index);
    }
    for (size_t c = 0; c < drg.concepts.size(); ++c) {
        if (!has_role_or_operator.count(static_cast<int>(c)))
            warning("concept " + std::to_string(c), "IsolatedConcept",
                    "concept has no role or operator edge");
    }

    report.well_formed = report.errors.empty();
    return report;
}

} // namespace sbn
