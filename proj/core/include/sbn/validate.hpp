#pragma once

#include <string>
#include <vector>

#include "sbn/drg.hpp"
#include "sbn/vocab.hpp"

namespace sbn {

struct ReportItem {
    std::string where; // offending entity, e.g. "concept 3", "box 1", "edge 5"
    std::string code;
    std::string message;
};

struct WellFormedReport {
    bool well_formed = true;
    std::vector<ReportItem> errors;
    std::vector<ReportItem> warnings;
};

// Checks every Drg invariant and reports problems instead of throwing.
// Warnings (empty Name literals, isolated concepts) do not affect
// well_formed; well_formed is true iff errors is empty.
WellFormedReport validate(const Drg& drg, const SbnConfig& config = {});

} // namespace sbn
