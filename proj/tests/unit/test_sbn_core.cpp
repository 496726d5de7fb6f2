#include <doctest.h>

#include <algorithm>
#include <set>

#include "sbn/parse.hpp"
#include "sbn/penman.hpp"
#include "sbn/serialize.hpp"
#include "sbn/smatch.hpp"
#include "sbn/validate.hpp"

#include "../fixtures.hpp"

using namespace sbn;

namespace {

// Whitespace-normalized form: tokens re-joined with single spaces.
std::string normalized(const std::string& text) {
    std::string out;
    for (const Token& tok : tokenize_sbn(text)) {
        if (!out.empty()) out.push_back(' ');
        if (tok.quoted)
            out += "\"" + tok.text + "\"";
        else
            out += tok.text;
    }
    return out;
}

const Edge& find_edge(const Drg& drg, EdgeKind kind, const std::string& label) {
    for (const Edge& e : drg.edges)
        if (e.kind == kind && e.label == label) return e;
    REQUIRE(false);
    static Edge dummy;
    return dummy;
}

} // namespace

TEST_CASE("synset tokens parse and round-trip") {
    auto synset = parse_synset("read.v.01");
    REQUIRE(synset.has_value());
    CHECK(synset->lemma == "read");
    CHECK(synset->pos == 'v');
    CHECK(synset->sense == 1);
    CHECK(synset->str() == "read.v.01");
    CHECK(synset->lemma_pos() == "read.v");

    CHECK(parse_synset("u.s.a.n.01")->lemma == "u.s.a");
    CHECK(parse_synset("time.n.08")->sense == 8);
    CHECK_FALSE(parse_synset("time.n.00").has_value());
    CHECK_FALSE(parse_synset("time.q.01").has_value());
    CHECK_FALSE(parse_synset(".n.01").has_value());
    CHECK_FALSE(parse_synset("now").has_value());
    CHECK_FALSE(parse_synset("time.n.1").has_value());
}

TEST_CASE("tokenizer splits on whitespace") {
    std::vector<Token> tokens = tokenize_sbn("time.n.08 EQU now");
    REQUIRE(tokens.size() == 3);
    CHECK(tokens[0].text == "time.n.08");
    CHECK(tokens[1].text == "EQU");
    CHECK(tokens[2].text == "now");
}

TEST_CASE("quoted literal keeps internal spaces as one token") {
    std::vector<Token> tokens = tokenize_sbn("music.n.01 Name \"快乐 在 一起\"");
    REQUIRE(tokens.size() == 3);
    CHECK(tokens[2].quoted);
    CHECK(tokens[2].text == "快乐 在 一起");
}

TEST_CASE("comments are stripped") {
    std::vector<Token> tokens = tokenize_sbn("song.n.01 % a comment");
    REQUIRE(tokens.size() == 1);
    CHECK(tokens[0].text == "song.n.01");

    CHECK(tokenize_sbn("a.n.01 % x\nb.n.01").size() == 2);
    // `%` inside a literal is payload, not a comment
    CHECK(tokenize_sbn("a.n.01 Name \"50%\"").size() == 3);
}

TEST_CASE("unterminated literal is an error") {
    CHECK_THROWS_WITH_AS(tokenize_sbn("music.n.01 Name \"oops"),
                         "literal opened but never closed", ParseError);
    try {
        tokenize_sbn("music.n.01 Name \"oops");
    } catch (const ParseError& e) {
        CHECK(e.code() == "UnterminatedLiteral");
        CHECK(e.line() == 1);
    }
}

TEST_CASE("token classification") {
    SbnConfig config;
    Token next{"<1", false, 1, 1};
    auto classify = [&config](const std::string& text, ClassifyContext ctx) {
        Token tok{text, false, 1, 1};
        ctx.config = &config;
        return classify_token(tok, ctx);
    };

    CHECK(classify("lure.v.01", {}) == TokenClass::Synset);
    CHECK(classify("NEGATION", {.next = &next}) == TokenClass::DiscourseRelation);
    CHECK(classify("TPR", {.edge_position = true}) == TokenClass::Operator);
    CHECK(classify("<1", {}) == TokenClass::BoxRef);
    CHECK(classify("-2", {.target_position = true}) == TokenClass::NodeRef);
    CHECK(classify("Agent", {.edge_position = true}) == TokenClass::EdgeLabel);
    CHECK(classify("?", {.target_position = true}) == TokenClass::Constant);
    CHECK(classify("1822", {.target_position = true}) == TokenClass::Constant);
    CHECK(classify("speaker", {.target_position = true}) == TokenClass::Constant);

    Token quoted{"x", true, 1, 1};
    CHECK(classify_token(quoted, {.config = &config}) == TokenClass::Literal);

    // unknown all-uppercase token, and a discourse relation with no box ref
    CHECK_THROWS_AS(classify("FOO", {.edge_position = true}), ParseError);
    CHECK_THROWS_AS(classify("NEGATION", {.edge_position = true}), ParseError);
    // role-style word where no concept is open
    CHECK_THROWS_AS(classify("Agent", {}), ParseError);
}

TEST_CASE("parse builds the expected graph for the negated gold document") {
    Drg drg = parse_document(fixtures::kLureGold);
    REQUIRE(drg.concepts.size() == 4);
    REQUIRE(drg.boxes.size() == 3);

    CHECK(drg.concepts[0].synset.str() == "music.n.01");
    CHECK(drg.concepts[1].synset.str() == "person.n.01");
    CHECK(drg.concepts[2].synset.str() == "lure.v.01");
    CHECK(drg.concepts[3].synset.str() == "time.n.08");

    std::vector<int> box_of = drg.member_box_of_concepts();
    CHECK(box_of == std::vector<int>{0, 1, 2, 2});

    long members = 0, discourse = 0, roles = 0, operators = 0;
    for (const Edge& e : drg.edges) {
        if (e.kind == EdgeKind::Member) ++members;
        if (e.kind == EdgeKind::Discourse) ++discourse;
        if (e.kind == EdgeKind::Role) ++roles;
        if (e.kind == EdgeKind::Operator) ++operators;
    }
    CHECK(members == 4);
    CHECK(discourse == 2);
    CHECK(roles == 3);
    CHECK(operators == 1);

    const Edge& agent = find_edge(drg, EdgeKind::Role, "Agent");
    CHECK(agent.source == concept_node(2));
    CHECK(std::get<NodeId>(agent.target) == concept_node(0));
    const Edge& patient = find_edge(drg, EdgeKind::Role, "Patient");
    CHECK(std::get<NodeId>(patient.target) == concept_node(1));
    const Edge& time = find_edge(drg, EdgeKind::Role, "Time");
    CHECK(std::get<NodeId>(time.target) == concept_node(3));
    const Edge& tpr = find_edge(drg, EdgeKind::Operator, "TPR");
    CHECK(tpr.source == concept_node(3));
    CHECK(std::get<Constant>(tpr.target).value == "now");

    // both discourse edges are NEGATION, b0->b1 and b1->b2
    const Edge* parent1 = drg.discourse_parent(1);
    const Edge* parent2 = drg.discourse_parent(2);
    REQUIRE(parent1 != nullptr);
    REQUIRE(parent2 != nullptr);
    CHECK(parent1->label == "NEGATION");
    CHECK(parent1->source == box_node(0));
    CHECK(parent2->source == box_node(1));
}

TEST_CASE("minimal document") {
    Drg drg = parse_document("time.n.08 EQU now");
    CHECK(drg.concepts.size() == 1);
    CHECK(drg.boxes.size() == 1);
    CHECK(drg.edges.size() == 2); // member + operator
}

TEST_CASE("parse error paths") {
    // forward reference out of range
    try {
        parse_document("male.n.02 Name \"尤努斯\" Agent +9");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.code() == "DanglingNodeRef");
    }
    try {
        parse_document("music.n.01 NEGATION <2");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.code() == "DanglingBoxRef");
    }
    try {
        parse_document("time.n.08 EQU");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.code() == "OddEdgeTokens");
    }
    try {
        parse_document("time.n.08 Agent time.n.08 EQU now");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.code() == "OddEdgeTokens");
    }
    try {
        parse_document("% nothing but a comment");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.code() == "EmptyDocument");
    }
    try {
        parse_document("-1 time.n.08");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.code() == "UnknownToken");
    }
    CHECK_THROWS_AS(parse_document("time.n.08 EQU now +0 -1"), ParseError);
}

TEST_CASE("zero node offset is rejected") {
    try {
        parse_document("a.n.01 b.n.01 Theme +0");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.code() == "DanglingNodeRef");
    }
}

TEST_CASE("validate accepts the corpus fixtures") {
    Drg gold = parse_document(fixtures::kLureGold);
    WellFormedReport report = validate(gold);
    CHECK(report.well_formed);
    CHECK(report.errors.empty());
    CHECK(report.warnings.empty());
}

TEST_CASE("empty name literal is a warning, not an error") {
    Drg drg = parse_document(fixtures::kNationalityWrong);
    WellFormedReport report = validate(drg);
    CHECK(report.well_formed);
    REQUIRE(report.warnings.size() == 1);
    CHECK(report.warnings[0].code == "EmptyNameLiteral");
}

TEST_CASE("isolated concept is a warning") {
    Drg drg = parse_document("entity.n.01");
    WellFormedReport report = validate(drg);
    CHECK(report.well_formed);
    REQUIRE(report.warnings.size() == 1);
    CHECK(report.warnings[0].code == "IsolatedConcept");
}

TEST_CASE("orphan box is an error") {
    Drg drg = parse_document(fixtures::kLureGold);
    drg.boxes.push_back(BoxNode{static_cast<int>(drg.concepts.size())});
    WellFormedReport report = validate(drg);
    CHECK_FALSE(report.well_formed);
    bool found = false;
    for (const ReportItem& item : report.errors) found = found || item.code == "OrphanBox";
    CHECK(found);
}

TEST_CASE("missing member edge is an error") {
    Drg drg = parse_document("time.n.08 EQU now");
    drg.edges.erase(drg.edges.begin()); // drop the member edge
    WellFormedReport report = validate(drg);
    CHECK_FALSE(report.well_formed);
    CHECK(report.errors[0].code == "MissingMember");
}

TEST_CASE("empty graph is trivially well-formed") {
    CHECK(validate(Drg{}).well_formed);
}

TEST_CASE("round trip over every corpus fixture") {
    for (const auto& [name, text] : fixtures::all()) {
        CAPTURE(name);
        Drg drg = parse_document(text);
        CHECK(validate(drg).well_formed);
        CHECK(serialize_sbn(drg) == normalized(text));
        // member totality
        long members = 0;
        for (const Edge& e : drg.edges)
            if (e.kind == EdgeKind::Member) ++members;
        CHECK(members == static_cast<long>(drg.concepts.size()));
    }
}

TEST_CASE("parsing is deterministic") {
    for (const auto& [name, text] : fixtures::all()) {
        CAPTURE(name);
        Drg a = parse_document(text);
        Drg b = parse_document(text);
        CHECK(a.concepts.size() == b.concepts.size());
        CHECK(a.boxes.size() == b.boxes.size());
        CHECK(a.edges.size() == b.edges.size());
        CHECK(serialize_sbn(a) == serialize_sbn(b));
    }
}

TEST_CASE("discourse relation may open the document") {
    Drg drg = parse_document("NEGATION <1 walk.v.01 Time +1 time.n.08 EQU now");
    CHECK(drg.boxes.size() == 2);
    CHECK(drg.member_box_of_concepts() == std::vector<int>{1, 1});
    CHECK(serialize_sbn(drg) == "NEGATION <1 walk.v.01 Time +1 time.n.08 EQU now");
}

TEST_CASE("back-to-back box introductions") {
    std::string text = "a.n.01 NEGATION <1 POSSIBILITY <1 b.n.01 Theme -1";
    Drg drg = parse_document(text);
    CHECK(drg.boxes.size() == 3);
    const Edge* parent2 = drg.discourse_parent(2);
    REQUIRE(parent2 != nullptr);
    CHECK(parent2->source == box_node(1)); // <1 counts back from the new box
    CHECK(serialize_sbn(drg) == text);
}

TEST_CASE("programmatic graph serializes and re-parses isomorphically") {
    // Built by hand rather than parsed, then pushed through the text form.
    Drg drg;
    drg.origin = "tom-boston";
    drg.boxes.push_back(BoxNode{0});
    drg.boxes.push_back(BoxNode{2}); // negation box introduced after 2 concepts
    auto add_concept = [&drg](const std::string& lemma, char pos, int sense, int box) {
        int index = static_cast<int>(drg.concepts.size());
        drg.concepts.push_back(ConceptNode{SynsetId{lemma, pos, sense}});
        drg.edges.push_back(Edge{box_node(box), "member", EdgeKind::Member, concept_node(index)});
        return index;
    };
    int tom = add_concept("male", 'n', 2, 0);
    drg.edges.push_back(Edge{concept_node(tom), "Name", EdgeKind::Name, Literal{"Tom"}});
    int now = add_concept("time", 'n', 8, 0);
    drg.edges.push_back(Edge{concept_node(now), "EQU", EdgeKind::Operator, Constant{"now"}});
    drg.edges.push_back(Edge{box_node(0), "NEGATION", EdgeKind::Discourse, box_node(1)});
    int spend = add_concept("spend", 'v', 2, 1);
    int much_time = add_concept("time", 'n', 8, 1);
    int much = add_concept("much", 'a', 1, 1);
    int boston = add_concept("city", 'n', 1, 1);
    drg.edges.push_back(Edge{concept_node(spend), "Agent", EdgeKind::Role, concept_node(tom)});
    drg.edges.push_back(Edge{concept_node(spend), "Time", EdgeKind::Role, concept_node(now)});
    drg.edges.push_back(Edge{concept_node(spend), "Theme", EdgeKind::Role, concept_node(much_time)});
    drg.edges.push_back(Edge{concept_node(spend), "Location", EdgeKind::Role, concept_node(boston)});
    drg.edges.push_back(Edge{concept_node(much_time), "Quantity", EdgeKind::Role, concept_node(much)});
    drg.edges.push_back(Edge{concept_node(boston), "Name", EdgeKind::Name, Literal{"Boston"}});

    REQUIRE(validate(drg).well_formed);
    std::string text = serialize_sbn(drg);
    Drg reparsed = parse_document(text);

    TripleSet a = extract_triples(drg, Granularity::Coarse);
    TripleSet b = extract_triples(reparsed, Granularity::Coarse);
    MatchResult match = exhaustive_match(a, b);
    CHECK(match.f1 == doctest::Approx(1.0));
    CHECK(match.matched == static_cast<long>(a.triples.size()));
}

TEST_CASE("graphs that cannot be expressed as text are rejected") {
    Drg drg = parse_document("time.n.08 EQU now");
    drg.edges.push_back(Edge{concept_node(0), "Theme", EdgeKind::Role, concept_node(0)});
    CHECK_THROWS_AS(serialize_sbn(drg), NotSerializableError);
}
