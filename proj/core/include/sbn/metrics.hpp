#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sbn/drg.hpp"
#include "sbn/smatch.hpp"

namespace sbn {

using LabelBag = std::map<std::string, long>;

struct Prf {
    long matched = 0;
    long pred_total = 0;
    long gold_total = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

Prf prf_from_counts(long matched, long pred_total, long gold_total);

// matched = sum over labels of min(pred count, gold count); same zero
// conventions as smatch.
Prf multiset_f1(const LabelBag& pred, const LabelBag& gold);

struct NodeLevelScores {
    Prf names;     // concepts carrying an outgoing Name edge (literal ignored)
    Prf negation;  // count of NEGATION discourse edges
    Prf discourse; // discourse labels except NEGATION
    Prf roles;     // Role-edge labels (Name and operators have own metrics)
    Prf members;   // count of Member edges
    Prf concepts;  // all synset labels, plus the four POS-restricted bags
    Prf concepts_noun;
    Prf concepts_adj;
    Prf concepts_adv;
    Prf concepts_verb;
};

struct EdgeLevelScores {
    // Label-anchored triples (source label, edge label, target label);
    // Names includes the literal value, which is what penalizes
    // untranslated entities.
    Prf roles;
    Prf names;
    Prf members;
    Prf operators;
    Prf discourse; // includes NEGATION
};

struct GraphLevelScores {
    MatchResult smatch_fine;
    MatchResult smatch_coarse;
    MatchResult no_roles;
    MatchResult no_discourse;
    MatchResult no_operators;
    MatchResult no_senses;
};

NodeLevelScores node_level_report(const Drg& pred, const Drg& gold);
EdgeLevelScores edge_level_report(const Drg& pred, const Drg& gold,
                                  const SbnConfig& config = {});
GraphLevelScores graph_level_report(const Drg& pred, const Drg& gold,
                                    int restarts, std::uint64_t seed,
                                    const SbnConfig& config = {});

struct FineGrainedReport {
    GraphLevelScores graph_level;
    NodeLevelScores node_level;
    EdgeLevelScores edge_level;
    double well_formed_rate = 1.0;
    long documents = 0;
    long unparsed_predictions = 0;
};

class LengthMismatchError : public std::runtime_error {
public:
    explicit LengthMismatchError(const std::string& message) : std::runtime_error(message) {}
};

// Micro-aggregates matched/pred/gold counts per metric across aligned
// document pairs, then computes P/R/F once per metric. Unparseable
// predictions (nullopt) are scored as empty graphs and reduce recall only.
// Per-document smatch seeds derive from `seed` + document index, so results
// are independent of `jobs`.
FineGrainedReport corpus_report(const std::vector<std::optional<Drg>>& pred,
                                const std::vector<Drg>& gold,
                                int restarts, std::uint64_t seed,
                                const SbnConfig& config = {}, int jobs = 1);

} // namespace sbn
