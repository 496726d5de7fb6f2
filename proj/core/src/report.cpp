#include "sbn/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace sbn {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string hex64(std::uint64_t value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "0x%016llx", static_cast<unsigned long long>(value));
    return buf;
}

std::string fixed4(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", value);
    return buf;
}

std::string fixed6(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

ordered_json scores_json(long matched, long pred_total, long gold_total, double precision,
                         double recall, double f1) {
    ordered_json j;
    j["precision"] = precision;
    j["recall"] = recall;
    j["f1"] = f1;
    j["matched"] = matched;
    j["pred_total"] = pred_total;
    j["gold_total"] = gold_total;
    return j;
}

ordered_json to_json(const MatchResult& r) {
    return scores_json(r.matched, r.pred_total, r.gold_total, r.precision, r.recall, r.f1);
}

ordered_json to_json(const Prf& r) {
    return scores_json(r.matched, r.pred_total, r.gold_total, r.precision, r.recall, r.f1);
}

struct Row {
    const char* level;
    const char* metric;
    double precision;
    double recall;
    double f1;
};

std::vector<Row> metric_rows(const FineGrainedReport& r) {
    auto row = [](const char* level, const char* metric, const auto& s) {
        return Row{level, metric, s.precision, s.recall, s.f1};
    };
    return {
        row("graph", "smatch_fine", r.graph_level.smatch_fine),
        row("graph", "smatch_coarse", r.graph_level.smatch_coarse),
        row("graph", "no_roles", r.graph_level.no_roles),
        row("graph", "no_discourse", r.graph_level.no_discourse),
        row("graph", "no_operators", r.graph_level.no_operators),
        row("graph", "no_senses", r.graph_level.no_senses),
        row("node", "names", r.node_level.names),
        row("node", "negation", r.node_level.negation),
        row("node", "discourse", r.node_level.discourse),
        row("node", "roles", r.node_level.roles),
        row("node", "members", r.node_level.members),
        row("node", "concepts", r.node_level.concepts),
        row("node", "concepts_noun", r.node_level.concepts_noun),
        row("node", "concepts_adj", r.node_level.concepts_adj),
        row("node", "concepts_adv", r.node_level.concepts_adv),
        row("node", "concepts_verb", r.node_level.concepts_verb),
        row("edge", "roles", r.edge_level.roles),
        row("edge", "names", r.edge_level.names),
        row("edge", "members", r.edge_level.members),
        row("edge", "operators", r.edge_level.operators),
        row("edge", "discourse", r.edge_level.discourse),
    };
}

} // namespace

std::string report_to_json(const FineGrainedReport& report, const ReportMeta& meta) {
    ordered_json j;
    j["tool"] = "sbntool";
    j["version"] = meta.version;
    j["seed"] = meta.seed;
    j["restarts"] = meta.restarts;
    j["operators_hash"] = hex64(meta.operators_hash);
    j["discourse_hash"] = hex64(meta.discourse_hash);
    j["matching"] = ordered_json{{"triples", "multiset"},
                                 {"aggregation", "micro"},
                                 {"node_roles_exclude", ordered_json::array({"Name", "operators"})}};
    j["documents"] = report.documents;
    j["unparsed_predictions"] = report.unparsed_predictions;
    j["well_formed_rate"] = report.well_formed_rate;

    ordered_json graph;
    graph["smatch_fine"] = to_json(report.graph_level.smatch_fine);
    graph["smatch_coarse"] = to_json(report.graph_level.smatch_coarse);
    graph["no_roles"] = to_json(report.graph_level.no_roles);
    graph["no_discourse"] = to_json(report.graph_level.no_discourse);
    graph["no_operators"] = to_json(report.graph_level.no_operators);
    graph["no_senses"] = to_json(report.graph_level.no_senses);
    j["graph_level"] = graph;

    ordered_json node;
    node["names"] = to_json(report.node_level.names);
    node["negation"] = to_json(report.node_level.negation);
    node["discourse"] = to_json(report.node_level.discourse);
    node["roles"] = to_json(report.node_level.roles);
    node["members"] = to_json(report.node_level.members);
    node["concepts"] = to_json(report.node_level.concepts);
    node["concepts_noun"] = to_json(report.node_level.concepts_noun);
    node["concepts_adj"] = to_json(report.node_level.concepts_adj);
    node["concepts_adv"] = to_json(report.node_level.concepts_adv);
    node["concepts_verb"] = to_json(report.node_level.concepts_verb);
    j["node_level"] = node;

    ordered_json edge;
    edge["roles"] = to_json(report.edge_level.roles);
    edge["names"] = to_json(report.edge_level.names);
    edge["members"] = to_json(report.edge_level.members);
    edge["operators"] = to_json(report.edge_level.operators);
    edge["discourse"] = to_json(report.edge_level.discourse);
    j["edge_level"] = edge;

    return j.dump(2) + "\n";
}

static std::string meta_line(const ReportMeta& meta) {
    return "sbntool " + meta.version + ", seed " + std::to_string(meta.seed) + ", restarts " +
           std::to_string(meta.restarts) + ", operators " + hex64(meta.operators_hash) +
           ", discourse " + hex64(meta.discourse_hash);
}

std::string report_to_tsv(const FineGrainedReport& report, const ReportMeta& meta) {
    std::string out = "# " + meta_line(meta) + "\n";
    out += "level\tmetric\tprecision\trecall\tf1\n";
    out += "corpus\twell_formed_rate\t\t\t" + fixed6(report.well_formed_rate) + "\n";
    for (const Row& row : metric_rows(report)) {
        out += row.level;
        out += '\t';
        out += row.metric;
        out += '\t';
        out += fixed6(row.precision) + "\t" + fixed6(row.recall) + "\t" + fixed6(row.f1) + "\n";
    }
    return out;
}

std::string report_to_markdown(const FineGrainedReport& report, const ReportMeta& meta) {
    const GraphLevelScores& g = report.graph_level;
    const NodeLevelScores& n = report.node_level;
    const EdgeLevelScores& e = report.edge_level;

    std::string out;
    out += "# DRS evaluation report\n\n";
    out += meta_line(meta) + "\n\n";
    out += "documents: " + std::to_string(report.documents) +
           ", well-formed rate: " + fixed4(report.well_formed_rate) + "\n\n";

    out += "## Overall\n\n";
    out += "| Metric | P | R | F1 |\n|---|---|---|---|\n";
    auto overall = [&out](const char* name, const MatchResult& r) {
        out += std::string("| ") + name + " | " + fixed4(r.precision) + " | " +
               fixed4(r.recall) + " | " + fixed4(r.f1) + " |\n";
    };
    overall("Smatch1 (fine)", g.smatch_fine);
    overall("Smatch2 (coarse)", g.smatch_coarse);
    out += "| Well-formed | | | " + fixed4(report.well_formed_rate) + " |\n";
    overall("No Roles", g.no_roles);
    overall("No Discourse", g.no_discourse);
    overall("No Operators", g.no_operators);
    overall("No Senses", g.no_senses);
    out += "\n";

    out += "## Fine-grained\n\n";
    out += "| Level | Metric | P | R | F1 |\n|---|---|---|---|---|\n";
    auto fine = [&out](const char* level, const char* name, const Prf& r) {
        out += std::string("| ") + level + " | " + name + " | " + fixed4(r.precision) + " | " +
               fixed4(r.recall) + " | " + fixed4(r.f1) + " |\n";
    };
    fine("Node", "Names", n.names);
    fine("", "Negation", n.negation);
    fine("", "Discourse", n.discourse);
    fine("", "Roles", n.roles);
    fine("", "Members", n.members);
    fine("", "Concepts", n.concepts);
    fine("", "&nbsp;&nbsp;*noun*", n.concepts_noun);
    fine("", "&nbsp;&nbsp;*adj*", n.concepts_adj);
    fine("", "&nbsp;&nbsp;*adv*", n.concepts_adv);
    fine("", "&nbsp;&nbsp;*verb*", n.concepts_verb);
    fine("Edge", "Roles", e.roles);
    fine("", "Names", e.names);
    fine("", "Members", e.members);
    fine("", "Operators", e.operators);
    fine("", "Discourse", e.discourse);
    return out;
}

} // namespace sbn
