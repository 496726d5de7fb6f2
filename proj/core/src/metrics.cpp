#include "sbn/metrics.hpp"

#include <algorithm>
#include <set>
#include <thread>
#include <variant>

#include "sbn/validate.hpp"

namespace sbn {

Prf prf_from_counts(long matched, long pred_total, long gold_total) {
    Prf r;
    r.matched = matched;
    r.pred_total = pred_total;
    r.gold_total = gold_total;
    if (pred_total == 0 && gold_total == 0) {
        r.f1 = 1.0;
        return r;
    }
    r.precision = pred_total > 0 ? static_cast<double>(matched) / pred_total : 0.0;
    r.recall = gold_total > 0 ? static_cast<double>(matched) / gold_total : 0.0;
    r.f1 = r.precision + r.recall > 0.0
               ? 2.0 * r.precision * r.recall / (r.precision + r.recall)
               : 0.0;
    return r;
}

Prf multiset_f1(const LabelBag& pred, const LabelBag& gold) {
    long matched = 0;
    long pred_total = 0;
    long gold_total = 0;
    for (const auto& [label, count] : pred) pred_total += count;
    for (const auto& [label, count] : gold) gold_total += count;
    for (const auto& [label, count] : pred) {
        auto it = gold.find(label);
        if (it != gold.end()) matched += std::min(count, it->second);
    }
    return prf_from_counts(matched, pred_total, gold_total);
}

namespace {

struct NodeBags {
    LabelBag names;
    long negation = 0;
    LabelBag discourse;
    LabelBag roles;
    long members = 0;
    LabelBag concepts;
    LabelBag concepts_noun;
    LabelBag concepts_adj;
    LabelBag concepts_adv;
    LabelBag concepts_verb;
};

NodeBags node_bags(const Drg& drg) {
    NodeBags bags;
    std::set<int> named;
    for (const Edge& e : drg.edges) {
        switch (e.kind) {
        case EdgeKind::Name:
            if (!e.source.is_box()) named.insert(e.source.index);
            break;
        case EdgeKind::Discourse:
            if (e.label == "NEGATION")
                ++bags.negation;
            else
                ++bags.discourse[e.label];
            break;
        case EdgeKind::Role:
            ++bags.roles[e.label];
            break;
        case EdgeKind::Member:
            ++bags.members;
            break;
        case EdgeKind::Operator:
            break;
        }
    }
    for (size_t c = 0; c < drg.concepts.size(); ++c) {
        const SynsetId& synset = drg.concepts[c].synset;
        std::string label = synset.str();
        ++bags.concepts[label];
        switch (synset.pos) {
        case 'n': ++bags.concepts_noun[label]; break;
        case 'a': ++bags.concepts_adj[label]; break;
        case 'r': ++bags.concepts_adv[label]; break;
        case 'v': ++bags.concepts_verb[label]; break;
        }
        if (named.count(static_cast<int>(c))) ++bags.names[label];
    }
    return bags;
}

struct EdgeBags {
    LabelBag roles;
    LabelBag names;
    LabelBag members;
    LabelBag operators;
    LabelBag discourse;
};

std::string node_label(const Drg& drg, const NodeId& node) {
    if (node.is_box()) return "box";
    if (node.index < 0 || node.index >= static_cast<int>(drg.concepts.size()))
        return "<invalid>";
    return drg.concepts[node.index].synset.str();
}

std::string target_label(const Drg& drg, const Target& target) {
    if (const NodeId* node = std::get_if<NodeId>(&target)) return node_label(drg, *node);
    if (const Constant* c = std::get_if<Constant>(&target)) return c->value;
    return std::get<Literal>(target).value;
}

EdgeBags edge_bags(const Drg& drg) {
    EdgeBags bags;
    for (const Edge& e : drg.edges) {
        std::string key =
            node_label(drg, e.source) + "\t" + e.label + "\t" + target_label(drg, e.target);
        switch (e.kind) {
        case EdgeKind::Role: ++bags.roles[key]; break;
        case EdgeKind::Name: ++bags.names[key]; break;
        case EdgeKind::Member: ++bags.members[key]; break;
        case EdgeKind::Operator: ++bags.operators[key]; break;
        case EdgeKind::Discourse: ++bags.discourse[key]; break;
        }
    }
    return bags;
}

} // namespace

NodeLevelScores node_level_report(const Drg& pred, const Drg& gold) {
    NodeBags p = node_bags(pred);
    NodeBags g = node_bags(gold);
    NodeLevelScores scores;
    scores.names = multiset_f1(p.names, g.names);
    scores.negation = prf_from_counts(std::min(p.negation, g.negation), p.negation, g.negation);
    scores.discourse = multiset_f1(p.discourse, g.discourse);
    scores.roles = multiset_f1(p.roles, g.roles);
    scores.members = prf_from_counts(std::min(p.members, g.members), p.members, g.members);
    scores.concepts = multiset_f1(p.concepts, g.concepts);
    scores.concepts_noun = multiset_f1(p.concepts_noun, g.concepts_noun);
    scores.concepts_adj = multiset_f1(p.concepts_adj, g.concepts_adj);
    scores.concepts_adv = multiset_f1(p.concepts_adv, g.concepts_adv);
    scores.concepts_verb = multiset_f1(p.concepts_verb, g.concepts_verb);
    return scores;
}

EdgeLevelScores edge_level_report(const Drg& pred, const Drg& gold, const SbnConfig&) {
    EdgeBags p = edge_bags(pred);
    EdgeBags g = edge_bags(gold);
    EdgeLevelScores scores;
    scores.roles = multiset_f1(p.roles, g.roles);
    scores.names = multiset_f1(p.names, g.names);
    scores.members = multiset_f1(p.members, g.members);
    scores.operators = multiset_f1(p.operators, g.operators);
    scores.discourse = multiset_f1(p.discourse, g.discourse);
    return scores;
}

GraphLevelScores graph_level_report(const Drg& pred, const Drg& gold, int restarts,
                                    std::uint64_t seed, const SbnConfig& config) {
    GraphLevelScores scores;
    TripleSet pred_fine = extract_triples(pred, Granularity::Fine, config);
    TripleSet gold_fine = extract_triples(gold, Granularity::Fine, config);
    TripleSet pred_coarse = extract_triples(pred, Granularity::Coarse, config);
    TripleSet gold_coarse = extract_triples(gold, Granularity::Coarse, config);

    scores.smatch_fine = smatch_score(pred_fine, gold_fine, restarts, seed);
    scores.smatch_coarse = smatch_score(pred_coarse, gold_coarse, restarts, seed);

    auto ablation = [&](StripCategory category) {
        return smatch_score(strip_category(pred_coarse, category, config),
                            strip_category(gold_coarse, category, config), restarts, seed);
    };
    scores.no_roles = ablation(StripCategory::Roles);
    scores.no_discourse = ablation(StripCategory::Discourse);
    scores.no_operators = ablation(StripCategory::Operators);
    scores.no_senses = ablation(StripCategory::Senses);
    return scores;
}

namespace {

struct DocScores {
    GraphLevelScores graph;
    NodeLevelScores node;
    EdgeLevelScores edge;
    bool well_formed = true;
};

void pool(Prf& total, const Prf& doc) {
    total.matched += doc.matched;
    total.pred_total += doc.pred_total;
    total.gold_total += doc.gold_total;
}

void pool(MatchResult& total, const MatchResult& doc) {
    total.matched += doc.matched;
    total.pred_total += doc.pred_total;
    total.gold_total += doc.gold_total;
}

Prf finalize(const Prf& counts) {
    return prf_from_counts(counts.matched, counts.pred_total, counts.gold_total);
}

MatchResult finalize(const MatchResult& counts) {
    return make_match_result(counts.matched, counts.pred_total, counts.gold_total);
}

} // namespace

FineGrainedReport corpus_report(const std::vector<std::optional<Drg>>& pred,
                                const std::vector<Drg>& gold, int restarts, std::uint64_t seed,
                                const SbnConfig& config, int jobs) {
    if (pred.size() != gold.size())
        throw LengthMismatchError("corpus_report: " + std::to_string(pred.size()) +
                                  " predictions vs " + std::to_string(gold.size()) +
                                  " gold documents");

    const size_t n = pred.size();
    std::vector<DocScores> scores(n);
    const Drg empty_graph;

    auto score_one = [&](size_t i) {
        const Drg& p = pred[i] ? *pred[i] : empty_graph;
        DocScores& out = scores[i];
        out.well_formed = pred[i].has_value() && validate(p, config).well_formed;
        std::uint64_t doc_seed = seed + static_cast<std::uint64_t>(i);
        out.graph = graph_level_report(p, gold[i], restarts, doc_seed, config);
        out.node = node_level_report(p, gold[i]);
        out.edge = edge_level_report(p, gold[i], config);
    };

    if (jobs <= 1 || n < 2) {
        for (size_t i = 0; i < n; ++i) score_one(i);
    } else {
        size_t workers = std::min<size_t>(static_cast<size_t>(jobs), n);
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (size_t w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                for (size_t i = w; i < n; i += workers) score_one(i);
            });
        }
        for (std::thread& t : threads) t.join();
    }

    FineGrainedReport report;
    report.documents = static_cast<long>(n);
    long well_formed = 0;
    for (const DocScores& doc : scores) {
        if (doc.well_formed) ++well_formed;
        pool(report.graph_level.smatch_fine, doc.graph.smatch_fine);
        pool(report.graph_level.smatch_coarse, doc.graph.smatch_coarse);
        pool(report.graph_level.no_roles, doc.graph.no_roles);
        pool(report.graph_level.no_discourse, doc.graph.no_discourse);
        pool(report.graph_level.no_operators, doc.graph.no_operators);
        pool(report.graph_level.no_senses, doc.graph.no_senses);
        pool(report.node_level.names, doc.node.names);
        pool(report.node_level.negation, doc.node.negation);
        pool(report.node_level.discourse, doc.node.discourse);
        pool(report.node_level.roles, doc.node.roles);
        pool(report.node_level.members, doc.node.members);
        pool(report.node_level.concepts, doc.node.concepts);
        pool(report.node_level.concepts_noun, doc.node.concepts_noun);
        pool(report.node_level.concepts_adj, doc.node.concepts_adj);
        pool(report.node_level.concepts_adv, doc.node.concepts_adv);
        pool(report.node_level.concepts_verb, doc.node.concepts_verb);
        pool(report.edge_level.roles, doc.edge.roles);
        pool(report.edge_level.names, doc.edge.names);
        pool(report.edge_level.members, doc.edge.members);
        pool(report.edge_level.operators, doc.edge.operators);
        pool(report.edge_level.discourse, doc.edge.discourse);
    }
    report.unparsed_predictions =
        static_cast<long>(std::count(pred.begin(), pred.end(), std::nullopt));
    report.well_formed_rate = n == 0 ? 1.0 : static_cast<double>(well_formed) / n;

    report.graph_level.smatch_fine = finalize(report.graph_level.smatch_fine);
    report.graph_level.smatch_coarse = finalize(report.graph_level.smatch_coarse);
    report.graph_level.no_roles = finalize(report.graph_level.no_roles);
    report.graph_level.no_discourse = finalize(report.graph_level.no_discourse);
    report.graph_level.no_operators = finalize(report.graph_level.no_operators);
    report.graph_level.no_senses = finalize(report.graph_level.no_senses);
    report.node_level.names = finalize(report.node_level.names);
    report.node_level.negation = finalize(report.node_level.negation);
    report.node_level.discourse = finalize(report.node_level.discourse);
    report.node_level.roles = finalize(report.node_level.roles);
    report.node_level.members = finalize(report.node_level.members);
    report.node_level.concepts = finalize(report.node_level.concepts);
    report.node_level.concepts_noun = finalize(report.node_level.concepts_noun);
    report.node_level.concepts_adj = finalize(report.node_level.concepts_adj);
    report.node_level.concepts_adv = finalize(report.node_level.concepts_adv);
    report.node_level.concepts_verb = finalize(report.node_level.concepts_verb);
    report.edge_level.roles = finalize(report.edge_level.roles);
    report.edge_level.names = finalize(report.edge_level.names);
    report.edge_level.members = finalize(report.edge_level.members);
    report.edge_level.operators = finalize(report.edge_level.operators);
    report.edge_level.discourse = finalize(report.edge_level.discourse);
    return report;
}

} // namespace sbn
