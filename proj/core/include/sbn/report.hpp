#pragma once

#include <cstdint>
#include <string>

#include "sbn/metrics.hpp"

namespace sbn {

// Provenance block embedded in every rendered report so that identical
// configurations produce byte-identical output.
struct ReportMeta {
    std::string version;
    std::uint64_t seed = 0;
    int restarts = 4;
    std::uint64_t operators_hash = 0;
    std::uint64_t discourse_hash = 0;
};

std::string report_to_json(const FineGrainedReport& report, const ReportMeta& meta);
std::string report_to_tsv(const FineGrainedReport& report, const ReportMeta& meta);
std::string report_to_markdown(const FineGrainedReport& report, const ReportMeta& meta);

} // namespace sbn
