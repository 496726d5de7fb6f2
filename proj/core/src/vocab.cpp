#include "sbn/vocab.hpp"

#include <fstream>

#include "sbn/error.hpp"

namespace sbn {

Vocabulary Vocabulary::default_operators() {
    // Comparison operators as used in current PMB releases.
    return Vocabulary({
        "EQU", "NEQ", "APX", "LES", "LEQ", "TPR", "TAB", "TIN", "TSU", "TCT",
        "SXP", "SXN", "SXY", "SZP", "SZN",
    });
}

Vocabulary Vocabulary::default_discourse() {
    return Vocabulary({
        "NEGATION", "CONTINUATION", "CONTRAST", "ATTRIBUTION", "POSSIBILITY",
        "NECESSITY", "RESULT", "EXPLANATION", "CONDITION", "CONSEQUENCE",
        "ALTERNATION", "COMMENTARY",
    });
}

Vocabulary Vocabulary::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open vocabulary file: " + path);
    std::set<std::string> labels;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t begin = line.find_first_not_of(" \t");
        if (begin == std::string::npos) continue;
        size_t end = line.find_last_not_of(" \t");
        std::string label = line.substr(begin, end - begin + 1);
        if (label.empty() || label[0] == '#') continue;
        labels.insert(label);
    }
    return Vocabulary(std::move(labels));
}

std::uint64_t Vocabulary::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](unsigned char c) {
        h ^= c;
        h *= 1099511628211ull;
    };
    for (const std::string& label : labels_) {
        for (char c : label) mix(static_cast<unsigned char>(c));
        mix('\n');
    }
    return h;
}

} // namespace sbn
