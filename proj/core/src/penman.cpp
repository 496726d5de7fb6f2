#include "sbn/penman.hpp"

#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>
#include <variant>

#include "sbn/synset.hpp"

namespace sbn {

namespace {

std::string box_var(int i) { return "b" + std::to_string(i); }
std::string concept_var(int i) { return "c" + std::to_string(i); }
std::string fresh_var(int i) { return "x" + std::to_string(i); }

std::string two_digit_sense(int sense) {
    char buf[4];
    std::snprintf(buf, sizeof(buf), "%02d", sense);
    return buf;
}

const std::string* constant_or_literal(const Target& target) {
    if (const Constant* c = std::get_if<Constant>(&target)) return &c->value;
    if (const Literal* l = std::get_if<Literal>(&target)) return &l->value;
    return nullptr;
}

bool bare_safe(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                  (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '~' ||
                  c == '+' || c == '-';
        if (!ok) return false;
    }
    return true;
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

std::string instance_label_text(const std::string& label) {
    return bare_safe(label) ? label : quote(label);
}

// Fresh variables for Fine-mode constant/literal carriers are assigned by
// global edge order so that extract_triples and to_penman agree on names.
std::map<size_t, std::string> fresh_vars_by_edge(const Drg& drg) {
    std::map<size_t, std::string> names;
    int counter = 0;
    for (size_t i = 0; i < drg.edges.size(); ++i) {
        const Edge& e = drg.edges[i];
        if (e.kind == EdgeKind::Member || e.kind == EdgeKind::Discourse) continue;
        if (constant_or_literal(e.target)) names[i] = fresh_var(counter++);
    }
    return names;
}

std::string node_var(const NodeId& node) {
    return node.is_box() ? box_var(node.index) : concept_var(node.index);
}

} // namespace

TripleSet extract_triples(const Drg& drg, Granularity g, const SbnConfig&) {
    TripleSet ts;
    if (drg.empty()) return ts;

    for (size_t b = 0; b < drg.boxes.size(); ++b) {
        ts.variables.push_back(box_var(static_cast<int>(b)));
        ts.triples.push_back({Triple::Form::Instance, box_var(static_cast<int>(b)), "box", ""});
    }
    for (size_t c = 0; c < drg.concepts.size(); ++c) {
        const SynsetId& synset = drg.concepts[c].synset;
        std::string var = concept_var(static_cast<int>(c));
        ts.variables.push_back(var);
        if (g == Granularity::Coarse) {
            ts.triples.push_back({Triple::Form::Instance, var, synset.str(), ""});
        } else {
            ts.triples.push_back({Triple::Form::Instance, var, synset.lemma, ""});
            ts.triples.push_back({Triple::Form::Attribute, var, "pos", std::string(1, synset.pos)});
            ts.triples.push_back({Triple::Form::Attribute, var, "sense", two_digit_sense(synset.sense)});
        }
    }

    std::map<size_t, std::string> fresh = fresh_vars_by_edge(drg);
    for (size_t i = 0; i < drg.edges.size(); ++i) {
        const Edge& e = drg.edges[i];
        std::string source = node_var(e.source);
        if (const NodeId* node = std::get_if<NodeId>(&e.target)) {
            ts.triples.push_back({Triple::Form::Relation, source, e.label, node_var(*node)});
            continue;
        }
        const std::string& value = *constant_or_literal(e.target);
        if (g == Granularity::Coarse) {
            ts.triples.push_back({Triple::Form::Attribute, source, e.label, value});
        } else {
            const std::string& var = fresh.at(i);
            ts.variables.push_back(var);
            ts.triples.push_back({Triple::Form::Instance, var, value, ""});
            ts.triples.push_back({Triple::Form::Relation, source, e.label, var});
        }
    }
    return ts;
}

std::string to_penman(const Drg& drg, Granularity g, const SbnConfig&) {
    if (drg.empty()) return "";

    // Children per node in document order.
    std::map<int, std::vector<const Edge*>> box_children;
    std::map<int, std::vector<const Edge*>> concept_children;
    std::map<const Edge*, std::string> fresh_of_edge;
    {
        std::map<size_t, std::string> fresh = fresh_vars_by_edge(drg);
        for (size_t i = 0; i < drg.edges.size(); ++i) {
            const Edge& e = drg.edges[i];
            if (e.source.is_box())
                box_children[e.source.index].push_back(&e);
            else
                concept_children[e.source.index].push_back(&e);
            auto it = fresh.find(i);
            if (it != fresh.end()) fresh_of_edge[&e] = it->second;
        }
    }

    std::set<std::string> printed;
    std::string out;

    auto render_node = [&](auto&& self, const NodeId& node) -> void {
        std::string var = node_var(node);
        if (printed.count(var)) { // re-entrant reference
            out += var;
            return;
        }
        printed.insert(var);
        out += "(" + var + " / ";
        const std::vector<const Edge*>* children = nullptr;
        if (node.is_box()) {
            out += "box";
            auto it = box_children.find(node.index);
            if (it != box_children.end()) children = &it->second;
        } else {
            const SynsetId& synset = drg.concepts[node.index].synset;
            if (g == Granularity::Coarse) {
                out += instance_label_text(synset.str());
            } else {
                out += instance_label_text(synset.lemma);
                out += " :pos " + quote(std::string(1, synset.pos));
                out += " :sense " + quote(two_digit_sense(synset.sense));
            }
            auto it = concept_children.find(node.index);
            if (it != concept_children.end()) children = &it->second;
        }
        if (children) {
            for (const Edge* e : *children) {
                out += " :" + e->label + " ";
                if (const NodeId* target = std::get_if<NodeId>(&e->target)) {
                    self(self, *target);
                } else {
                    const std::string& value = *constant_or_literal(e->target);
                    if (g == Granularity::Coarse) {
                        out += quote(value);
                    } else {
                        out += "(" + fresh_of_edge.at(e) + " / " + instance_label_text(value) + ")";
                    }
                }
            }
        }
        out += ")";
    };

    render_node(render_node, box_node(0));
    return out;
}

namespace {

struct PenmanReader {
    const std::string& text;
    size_t pos = 0;

    explicit PenmanReader(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() &&
               (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
            ++pos;
    }
    [[noreturn]] void fail(const std::string& message) const {
        throw std::runtime_error("penman: " + message + " at offset " + std::to_string(pos));
    }
    char peek() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        return text[pos];
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected `") + c + "`");
        ++pos;
    }
    std::string bare_token() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size()) {
            char c = text[pos];
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '(' || c == ')') break;
            ++pos;
        }
        if (pos == start) fail("expected a token");
        return text.substr(start, pos - start);
    }
    std::string quoted() {
        expect('"');
        size_t start = pos;
        while (pos < text.size() && text[pos] != '"') ++pos;
        if (pos >= text.size()) fail("unterminated quoted value");
        std::string value = text.substr(start, pos - start);
        ++pos;
        return value;
    }
    std::string label() { return peek() == '"' ? quoted() : bare_token(); }

    void node(TripleSet& ts) {
        expect('(');
        std::string var = bare_token();
        skip_ws();
        expect('/');
        std::string instance = label();
        ts.variables.push_back(var);
        ts.triples.push_back({Triple::Form::Instance, var, instance, ""});
        while (peek() != ')') {
            std::string edge = bare_token();
            if (edge.size() < 2 || edge[0] != ':') fail("expected an edge label");
            edge.erase(0, 1);
            char c = peek();
            if (c == '(') {
                size_t child_at = ts.variables.size();
                node(ts);
                ts.triples.push_back({Triple::Form::Relation, var, edge, ts.variables[child_at]});
            } else if (c == '"') {
                ts.triples.push_back({Triple::Form::Attribute, var, edge, quoted()});
            } else {
                ts.triples.push_back({Triple::Form::Relation, var, edge, bare_token()});
            }
        }
        expect(')');
    }
};

} // namespace

TripleSet parse_penman(const std::string& text) {
    TripleSet ts;
    PenmanReader reader(text);
    reader.skip_ws();
    if (reader.pos >= text.size()) return ts; // empty document
    reader.node(ts);
    reader.skip_ws();
    if (reader.pos < text.size())
        throw std::runtime_error("penman: trailing content after the root node");
    return ts;
}

StripCategory strip_category_from_string(const std::string& name) {
    if (name == "roles") return StripCategory::Roles;
    if (name == "discourse") return StripCategory::Discourse;
    if (name == "operators") return StripCategory::Operators;
    if (name == "senses") return StripCategory::Senses;
    throw std::invalid_argument("UnknownCategory: " + name);
}

TripleSet strip_category(const TripleSet& ts, StripCategory category, const SbnConfig& config) {
    TripleSet out;
    out.variables = ts.variables;

    std::set<std::string> box_vars;
    if (category == StripCategory::Discourse) {
        for (const Triple& t : ts.triples)
            if (t.form == Triple::Form::Instance && t.label == "box") box_vars.insert(t.var);
    }

    auto is_role_label = [&config](const std::string& label) {
        return label != "member" && label != "Name" && !config.operators.contains(label) &&
               !config.discourse.contains(label);
    };

    for (const Triple& t : ts.triples) {
        switch (category) {
        case StripCategory::Roles:
            if (t.form == Triple::Form::Relation && is_role_label(t.label)) continue;
            break;
        case StripCategory::Discourse:
            if (t.form == Triple::Form::Relation && box_vars.count(t.var) &&
                box_vars.count(t.target))
                continue;
            break;
        case StripCategory::Operators:
            if (t.form != Triple::Form::Instance && config.operators.contains(t.label)) continue;
            break;
        case StripCategory::Senses: {
            if (t.form == Triple::Form::Instance) {
                if (auto synset = parse_synset(t.label)) {
                    Triple rewritten = t;
                    rewritten.label = synset->lemma_pos();
                    out.triples.push_back(std::move(rewritten));
                    continue;
                }
            }
            break;
        }
        }
        out.triples.push_back(t);
    }
    return out;
}

std::string triples_tsv(const TripleSet& ts) {
    std::string out;
    for (const Triple& t : ts.triples) {
        out += t.var;
        out += '\t';
        out += t.label;
        out += '\t';
        out += t.target;
        out += '\t';
        switch (t.form) {
        case Triple::Form::Instance: out += "instance"; break;
        case Triple::Form::Relation: out += "relation"; break;
        case Triple::Form::Attribute: out += "attribute"; break;
        }
        out += '\n';
    }
    return out;
}

} // namespace sbn
