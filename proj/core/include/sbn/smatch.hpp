#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sbn/penman.hpp"

namespace sbn {

// Injective partial map from prediction variables to gold variables.
using VariableMapping = std::vector<std::pair<std::string, std::string>>;

struct MatchResult {
    long matched = 0;
    long pred_total = 0;
    long gold_total = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    VariableMapping mapping;
};

// Zero conventions: precision/recall are 0 when the corresponding total is
// 0 and f1 is 0 when P+R is 0, except that two empty graphs score f1 = 1.
MatchResult make_match_result(long matched, long pred_total, long gold_total);

// Number of prediction triples that, after substituting variables via `m`,
// equal a gold triple; multiset matching, each gold triple consumed once.
long matched_triples(const TripleSet& pred, const TripleSet& gold,
                     const VariableMapping& m);

// Hill-climbing over variable mappings with restarts: the first restart is
// seeded greedily from matching Instance labels, the rest are random from
// `seed`. Moves are single reassignment and pairwise swap, steepest ascent.
// Deterministic given (pred, gold, restarts, seed), on every platform.
MatchResult smatch_score(const TripleSet& pred, const TripleSet& gold,
                         int restarts = 4, std::uint64_t seed = 0);

class TooLargeError : public std::runtime_error {
public:
    explicit TooLargeError(const std::string& message) : std::runtime_error(message) {}
};

// Brute-force oracle: enumerates all injective mappings from the smaller
// variable set into the larger and returns the global optimum. Throws
// TooLargeError when min(var counts) exceeds max_vars.
MatchResult exhaustive_match(const TripleSet& pred, const TripleSet& gold,
                             int max_vars = 8);

} // namespace sbn
