#include "sbn/align.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "sbn/corpus.hpp"
#include "sbn/error.hpp"

namespace sbn {

const std::string TranslationTable::kNull = "<NULL>";

double TranslationTable::prob(const std::string& tgt, const std::string& src) const {
    auto row = t_.find(src);
    if (row == t_.end()) return 0.0;
    auto cell = row->second.find(tgt);
    return cell == row->second.end() ? 0.0 : cell->second;
}

void TranslationTable::set(const std::string& src, const std::string& tgt, double p) {
    t_[src][tgt] = p;
}

TranslationTable train_ibm1(const std::vector<ParallelSentence>& corpus, int iterations) {
    if (corpus.empty()) throw std::invalid_argument("train_ibm1: EmptyCorpus");
    if (iterations < 1) throw std::invalid_argument("train_ibm1: iterations must be >= 1");
    for (const ParallelSentence& s : corpus)
        if (s.src_tokens.empty() || s.tgt_tokens.empty())
            throw std::invalid_argument("train_ibm1: sentence " + s.id + " has an empty side");

    // Uniform initialization over co-occurring pairs; the NULL row covers
    // the whole target vocabulary.
    std::map<std::string, std::set<std::string>> cooc;
    std::set<std::string> tgt_vocab;
    for (const ParallelSentence& s : corpus) {
        for (const std::string& f : s.tgt_tokens) tgt_vocab.insert(f);
        for (const std::string& e : s.src_tokens)
            for (const std::string& f : s.tgt_tokens) cooc[e].insert(f);
    }

    TranslationTable table;
    for (const auto& [src, tgts] : cooc) {
        double p = 1.0 / static_cast<double>(tgts.size());
        for (const std::string& f : tgts) table.set(src, f, p);
    }
    {
        double p = 1.0 / static_cast<double>(tgt_vocab.size());
        for (const std::string& f : tgt_vocab) table.set(TranslationTable::kNull, f, p);
    }

    for (int iter = 0; iter < iterations; ++iter) {
        std::map<std::string, std::map<std::string, double>> counts;
        double log_likelihood = 0.0;

        for (const ParallelSentence& s : corpus) {
            for (const std::string& f : s.tgt_tokens) {
                double denom = table.prob_null(f);
                for (const std::string& e : s.src_tokens) denom += table.prob(f, e);
                if (denom <= 0.0) continue;
                log_likelihood +=
                    std::log(denom) - std::log(static_cast<double>(s.src_tokens.size()) + 1.0);
                counts[TranslationTable::kNull][f] += table.prob_null(f) / denom;
                for (const std::string& e : s.src_tokens)
                    counts[e][f] += table.prob(f, e) / denom;
            }
        }
        table.iteration_log_likelihood.push_back(log_likelihood);

        for (const auto& [src, row] : counts) {
            double total = 0.0;
            for (const auto& [f, c] : row) total += c;
            if (total <= 0.0) continue;
            for (const auto& [f, c] : row) table.set(src, f, c / total);
        }
    }
    return table;
}

std::vector<AlignmentLink> align_sentence(const TranslationTable& table,
                                          const ParallelSentence& s) {
    std::vector<AlignmentLink> links;
    links.reserve(s.tgt_tokens.size());
    for (size_t j = 0; j < s.tgt_tokens.size(); ++j) {
        const std::string& f = s.tgt_tokens[j];
        double best_p = 0.0;
        std::optional<int> best_i;
        for (size_t i = 0; i < s.src_tokens.size(); ++i) {
            double p = table.prob(f, s.src_tokens[i]);
            if (p > best_p) { // strict: ties stay with the leftmost source
                best_p = p;
                best_i = static_cast<int>(i);
            }
        }
        if (table.prob_null(f) > best_p) best_i.reset(); // NULL only when strictly better
        if (best_p <= 0.0) best_i.reset();
        links.push_back({static_cast<int>(j), best_i});
    }
    return links;
}

std::string to_string(NeFlag flag) {
    switch (flag) {
    case NeFlag::EmptyTarget: return "EmptyTarget";
    case NeFlag::ContainsDigitsNotInSource: return "ContainsDigitsNotInSource";
    case NeFlag::NotSubstringOfTarget: return "NotSubstringOfTarget";
    case NeFlag::DuplicateTarget: return "DuplicateTarget";
    }
    return "?";
}

std::optional<NeFlag> ne_flag_from_string(const std::string& name) {
    if (name == "EmptyTarget") return NeFlag::EmptyTarget;
    if (name == "ContainsDigitsNotInSource") return NeFlag::ContainsDigitsNotInSource;
    if (name == "NotSubstringOfTarget") return NeFlag::NotSubstringOfTarget;
    if (name == "DuplicateTarget") return NeFlag::DuplicateTarget;
    return std::nullopt;
}

std::string normalize_name(const std::string& literal) {
    std::string out;
    out.reserve(literal.size());
    bool pending_space = false;
    for (char c : literal) {
        if (c == '~' || c == '_' || c == ' ') {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
    }
    return out;
}

std::optional<SrcNameSpan> locate_name_span(const std::string& literal,
                                            const std::vector<std::string>& src_tokens) {
    std::string normalized = normalize_name(literal);
    if (normalized.empty()) return std::nullopt;
    std::vector<std::string> words;
    std::istringstream in(normalized);
    std::string word;
    while (in >> word) words.push_back(word);
    if (words.empty() || words.size() > src_tokens.size()) return std::nullopt;

    for (size_t start = 0; start + words.size() <= src_tokens.size(); ++start) {
        bool match = true;
        for (size_t k = 0; k < words.size(); ++k) {
            if (normalize_name(src_tokens[start + k]) != words[k]) {
                match = false;
                break;
            }
        }
        if (match)
            return SrcNameSpan{literal, static_cast<int>(start),
                               static_cast<int>(start + words.size())};
    }
    return std::nullopt;
}

std::vector<NeEntry> extract_ne_pairs(const ParallelSentence& s,
                                      const std::vector<AlignmentLink>& links,
                                      const std::vector<SrcNameSpan>& src_names,
                                      const std::string& separator) {
    std::string joined_target;
    for (size_t j = 0; j < s.tgt_tokens.size(); ++j) {
        if (j) joined_target += separator;
        joined_target += s.tgt_tokens[j];
    }

    std::vector<NeEntry> entries;
    for (const SrcNameSpan& name : src_names) {
        if (name.begin < 0 || name.end <= name.begin ||
            name.end > static_cast<int>(s.src_tokens.size()))
            throw std::out_of_range("extract_ne_pairs: SpanOutOfRange for `" + name.literal +
                                    "` in sentence " + s.id);

        NeEntry entry;
        entry.sentence_id = s.id;
        entry.src_literal = name.literal;
        bool first = true;
        for (const AlignmentLink& link : links) {
            if (!link.src_index) continue;
            if (*link.src_index < name.begin || *link.src_index >= name.end) continue;
            if (link.tgt_index < 0 || link.tgt_index >= static_cast<int>(s.tgt_tokens.size()))
                continue;
            if (!first) entry.tgt_literal += separator;
            entry.tgt_literal += s.tgt_tokens[link.tgt_index];
            first = false;
        }

        if (entry.tgt_literal.empty()) {
            entry.flags.insert(NeFlag::EmptyTarget);
        } else {
            for (char c : entry.tgt_literal) {
                if (std::isdigit(static_cast<unsigned char>(c)) &&
                    entry.src_literal.find(c) == std::string::npos) {
                    entry.flags.insert(NeFlag::ContainsDigitsNotInSource);
                    break;
                }
            }
            if (joined_target.find(entry.tgt_literal) == std::string::npos)
                entry.flags.insert(NeFlag::NotSubstringOfTarget);
        }
        entries.push_back(std::move(entry));
    }

    for (size_t a = 0; a < entries.size(); ++a) {
        for (size_t b = a + 1; b < entries.size(); ++b) {
            if (entries[a].tgt_literal.empty()) continue;
            if (entries[a].src_literal == entries[b].src_literal) continue;
            if (entries[a].tgt_literal == entries[b].tgt_literal) {
                entries[a].flags.insert(NeFlag::DuplicateTarget);
                entries[b].flags.insert(NeFlag::DuplicateTarget);
            }
        }
    }
    return entries;
}

namespace {

std::string flags_text(const std::set<NeFlag>& flags) {
    std::string out;
    for (NeFlag flag : flags) {
        if (!out.empty()) out += ",";
        out += to_string(flag);
    }
    return out;
}

// Concepts whose Name must not be replaced under skip_nationality:
// country.n.02 reached through a Source role.
std::set<int> nationality_concepts(const Drg& drg) {
    std::set<int> out;
    for (const Edge& e : drg.edges) {
        if (e.kind != EdgeKind::Role || e.label != "Source") continue;
        const NodeId* target = std::get_if<NodeId>(&e.target);
        if (!target || target->is_box()) continue;
        if (target->index < 0 || target->index >= static_cast<int>(drg.concepts.size())) continue;
        if (drg.concepts[target->index].synset.str() == "country.n.02")
            out.insert(target->index);
    }
    return out;
}

} // namespace

std::pair<Drg, ReplacementReport> replace_names(const Drg& drg,
                                                const std::vector<NeEntry>& entries,
                                                bool skip_nationality) {
    std::map<std::string, const NeEntry*> by_src;
    for (const NeEntry& entry : entries) by_src.emplace(normalize_name(entry.src_literal), &entry);

    Drg out = drg;
    ReplacementReport report;
    std::set<int> nationality = skip_nationality ? nationality_concepts(drg) : std::set<int>{};

    for (Edge& e : out.edges) {
        if (e.kind != EdgeKind::Name) continue;
        Literal* literal = std::get_if<Literal>(&e.target);
        if (!literal) continue; // `Name ?` and friends are not replaceable

        if (!e.source.is_box() && nationality.count(e.source.index)) {
            report.actions.push_back({ReplacementAction::Kind::SkippedNationality,
                                      literal->value, ""});
            ++report.skipped;
            continue;
        }
        auto it = by_src.find(normalize_name(literal->value));
        if (it == by_src.end()) {
            report.actions.push_back({ReplacementAction::Kind::Unmatched, literal->value, ""});
            ++report.unmatched;
            continue;
        }
        const NeEntry& entry = *it->second;
        if (entry.suspicious()) {
            report.actions.push_back({ReplacementAction::Kind::SkippedFlagged, literal->value,
                                      flags_text(entry.flags)});
            ++report.skipped;
            continue;
        }
        report.actions.push_back({ReplacementAction::Kind::Replaced, literal->value,
                                  entry.tgt_literal});
        ++report.replaced;
        literal->value = entry.tgt_literal;
    }
    return {std::move(out), std::move(report)};
}

namespace {

std::vector<std::string> split_tab(const std::string& line) {
    std::vector<std::string> fields;
    size_t start = 0;
    for (;;) {
        size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

std::vector<std::string> split_space(const std::string& text) {
    std::vector<std::string> tokens;
    std::istringstream in(text);
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

std::vector<std::string> tsv_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

} // namespace

std::vector<ParallelSentence> load_parallel_tsv(const std::string& path) {
    std::vector<ParallelSentence> corpus;
    for (const std::string& line : tsv_lines(read_text_file(path))) {
        std::vector<std::string> fields = split_tab(line);
        if (fields.size() != 3)
            throw IoError("parallel corpus line needs 3 tab-separated fields: " + line);
        corpus.push_back({fields[0], split_space(fields[1]), split_space(fields[2])});
    }
    return corpus;
}

std::string table_to_tsv(const TranslationTable& table) {
    std::string out;
    char buf[64];
    for (const auto& [src, row] : table.rows()) {
        for (const auto& [tgt, p] : row) {
            std::snprintf(buf, sizeof(buf), "%.17g", p);
            out += src + "\t" + tgt + "\t" + buf + "\n";
        }
    }
    return out;
}

TranslationTable table_from_tsv(const std::string& text) {
    TranslationTable table;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields = split_tab(line);
        if (fields.size() != 3) throw IoError("translation table line needs 3 fields: " + line);
        table.set(fields[0], fields[1], std::stod(fields[2]));
    }
    return table;
}

std::string dictionary_to_tsv(const std::vector<NeEntry>& entries) {
    std::string out;
    for (const NeEntry& entry : entries)
        out += entry.sentence_id + "\t" + entry.src_literal + "\t" + entry.tgt_literal + "\t" +
               flags_text(entry.flags) + "\n";
    return out;
}

std::vector<NeEntry> dictionary_from_tsv(const std::string& text) {
    std::vector<NeEntry> entries;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields = split_tab(line);
        if (fields.size() < 3 || fields.size() > 4)
            throw IoError("dictionary line needs 3 or 4 fields: " + line);
        NeEntry entry;
        entry.sentence_id = fields[0];
        entry.src_literal = fields[1];
        entry.tgt_literal = fields[2];
        if (fields.size() == 4 && !fields[3].empty()) {
            std::istringstream flags(fields[3]);
            std::string name;
            while (std::getline(flags, name, ',')) {
                std::optional<NeFlag> flag = ne_flag_from_string(name);
                if (!flag) throw IoError("unknown dictionary flag: " + name);
                entry.flags.insert(*flag);
            }
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<NePatch> load_patch_tsv(const std::string& path) {
    std::vector<NePatch> patches;
    for (const std::string& line : tsv_lines(read_text_file(path))) {
        std::vector<std::string> fields = split_tab(line);
        if (fields.size() != 3) throw IoError("patch line needs 3 fields: " + line);
        patches.push_back({fields[0], fields[1], fields[2]});
    }
    return patches;
}

PipelineResult run_pipeline(const std::vector<ParallelSentence>& sentences,
                            const std::vector<Drg>& documents, const PipelineOptions& options) {
    if (sentences.size() != documents.size())
        throw std::invalid_argument("run_pipeline: " + std::to_string(sentences.size()) +
                                    " sentences vs " + std::to_string(documents.size()) +
                                    " documents");

    PipelineResult result;
    result.table = options.pretrained ? *options.pretrained
                                      : train_ibm1(sentences, options.iterations);

    for (size_t i = 0; i < documents.size(); ++i) {
        const ParallelSentence& sentence = sentences[i];
        const Drg& document = documents[i];

        // Name literals of this document, deduplicated, in first appearance
        // order; names whose tokens are missing from the source sentence get
        // no dictionary entry and stay unmatched.
        std::vector<SrcNameSpan> spans;
        std::set<std::string> seen;
        for (const Edge& e : document.edges) {
            if (e.kind != EdgeKind::Name) continue;
            const Literal* literal = std::get_if<Literal>(&e.target);
            if (!literal || literal->value.empty()) continue;
            std::string normalized = normalize_name(literal->value);
            if (normalized.empty() || !seen.insert(normalized).second) continue;
            if (auto span = locate_name_span(literal->value, sentence.src_tokens))
                spans.push_back(*span);
        }

        std::vector<AlignmentLink> links = align_sentence(result.table, sentence);
        std::vector<NeEntry> entries =
            extract_ne_pairs(sentence, links, spans, options.separator);

        auto [rewritten, report] = replace_names(document, entries, options.skip_nationality);

        // Manual corrections, matched against the pre-replacement literals.
        for (const NePatch& patch : options.patches) {
            if (patch.doc_id != sentence.id) continue;
            std::string wanted = normalize_name(patch.src_literal);
            for (size_t ei = 0; ei < document.edges.size(); ++ei) {
                const Edge& original_edge = document.edges[ei];
                if (original_edge.kind != EdgeKind::Name) continue;
                const Literal* original = std::get_if<Literal>(&original_edge.target);
                if (!original || normalize_name(original->value) != wanted) continue;
                Literal* current = std::get_if<Literal>(&rewritten.edges[ei].target);
                if (!current) continue;
                report.actions.push_back({ReplacementAction::Kind::Patched, original->value,
                                          patch.tgt_literal});
                current->value = patch.tgt_literal;
            }
        }

        rewritten.origin = sentence.id;
        result.documents.push_back(std::move(rewritten));
        result.reports.push_back(std::move(report));
        for (NeEntry& entry : entries) result.dictionary.push_back(std::move(entry));
    }
    return result;
}

} // namespace sbn
