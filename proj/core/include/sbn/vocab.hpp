#pragma once

#include <cstdint>
#include <set>
#include <string>

namespace sbn {

// Closed label set driving token classification. PMB conventions evolve,
// so both the operator and the discourse vocabulary can be replaced from a
// line-delimited file.
class Vocabulary {
public:
    Vocabulary() = default;
    explicit Vocabulary(std::set<std::string> labels) : labels_(std::move(labels)) {}

    static Vocabulary default_operators();
    static Vocabulary default_discourse();
    // One label per line, blank lines and `#` comment lines skipped.
    static Vocabulary from_file(const std::string& path);

    bool contains(const std::string& label) const { return labels_.count(label) != 0; }
    const std::set<std::string>& labels() const { return labels_; }

    // FNV-1a over the sorted labels; embedded in reports for provenance.
    std::uint64_t hash() const;

private:
    std::set<std::string> labels_;
};

struct SbnConfig {
    Vocabulary operators = Vocabulary::default_operators();
    Vocabulary discourse = Vocabulary::default_discourse();
};

} // namespace sbn
