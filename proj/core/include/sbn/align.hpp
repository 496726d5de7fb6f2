#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sbn/drg.hpp"

namespace sbn {

struct ParallelSentence {
    std::string id;
    std::vector<std::string> src_tokens;
    std::vector<std::string> tgt_tokens;
};

// IBM Model 1 lexical table t(tgt|src), including the special NULL source.
// Every source row sums to 1 within 1e-9 after each EM iteration.
class TranslationTable {
public:
    static const std::string kNull;

    double prob(const std::string& tgt, const std::string& src) const;
    double prob_null(const std::string& tgt) const { return prob(tgt, kNull); }
    void set(const std::string& src, const std::string& tgt, double p);

    const std::map<std::string, std::map<std::string, double>>& rows() const { return t_; }

    // Corpus log-likelihood measured at the start of each EM iteration.
    std::vector<double> iteration_log_likelihood;

private:
    std::map<std::string, std::map<std::string, double>> t_;
};

// EM training, deterministic. Initialization is uniform over co-occurring
// pairs (the NULL row covers the whole target vocabulary). Throws
// std::invalid_argument on an empty corpus or iterations < 1.
TranslationTable train_ibm1(const std::vector<ParallelSentence>& corpus,
                            int iterations = 20);

struct AlignmentLink {
    int tgt_index = 0;
    std::optional<int> src_index; // nullopt = NULL alignment
};

// Per-target argmax over the sentence's source tokens plus NULL. Ties go to
// the leftmost source token; NULL wins only when no source has positive
// probability or NULL is strictly better.
std::vector<AlignmentLink> align_sentence(const TranslationTable& table,
                                          const ParallelSentence& s);

enum class NeFlag { EmptyTarget, ContainsDigitsNotInSource, NotSubstringOfTarget, DuplicateTarget };

std::string to_string(NeFlag flag);
std::optional<NeFlag> ne_flag_from_string(const std::string& name);

struct NeEntry {
    std::string sentence_id;
    std::string src_literal;
    std::string tgt_literal;
    std::set<NeFlag> flags;

    bool suspicious() const { return !flags.empty(); }
};

struct SrcNameSpan {
    std::string literal; // the Name-edge literal, original form
    int begin = 0;       // token span [begin, end)
    int end = 0;
};

// Lowercases and maps `~`/`_` to single spaces; used both for span lookup
// and for matching dictionary entries against Name-edge literals.
std::string normalize_name(const std::string& literal);

// First contiguous run of src_tokens matching the literal's words
// case-insensitively; nullopt when the name does not occur.
std::optional<SrcNameSpan> locate_name_span(const std::string& literal,
                                            const std::vector<std::string>& src_tokens);

// Collects, for each source name span, the target tokens linked into the
// span (in target order, concatenated with `separator`; empty for CJK) and
// flags the known alignment-error symptoms: EmptyTarget,
// ContainsDigitsNotInSource, NotSubstringOfTarget, DuplicateTarget.
// Throws std::out_of_range when a span exceeds the sentence
// ("SpanOutOfRange").
std::vector<NeEntry> extract_ne_pairs(const ParallelSentence& s,
                                      const std::vector<AlignmentLink>& links,
                                      const std::vector<SrcNameSpan>& src_names,
                                      const std::string& separator = "");

struct ReplacementAction {
    enum class Kind { Replaced, SkippedFlagged, SkippedNationality, Unmatched, Patched };
    Kind kind = Kind::Unmatched;
    std::string original; // Name literal before the action
    std::string value;    // new literal, or comma-joined flags for skips
};

struct ReplacementReport {
    std::vector<ReplacementAction> actions;
    long replaced = 0;
    long skipped = 0;
    long unmatched = 0;
};

// Rewrites Name-edge literals from unflagged dictionary entries; flagged
// entries are left as-is and reported. With skip_nationality, names on a
// country.n.02 concept that is the target of a Source role are never
// replaced. Only Name-edge literals change; the graph is otherwise intact.
std::pair<Drg, ReplacementReport> replace_names(const Drg& drg,
                                                const std::vector<NeEntry>& entries,
                                                bool skip_nationality = true);

struct NePatch {
    std::string doc_id;
    std::string src_literal; // matched against the pre-replacement literal
    std::string tgt_literal;
};

// TSV persistence. Formats:
//   parallel corpus: id<TAB>src tokens space-joined<TAB>tgt tokens space-joined
//   table:           src<TAB>tgt<TAB>prob
//   dictionary:      id<TAB>src<TAB>tgt<TAB>flags(comma-joined)
//   patch:           id<TAB>src<TAB>tgt
std::vector<ParallelSentence> load_parallel_tsv(const std::string& path);
std::string table_to_tsv(const TranslationTable& table);
TranslationTable table_from_tsv(const std::string& text);
std::string dictionary_to_tsv(const std::vector<NeEntry>& entries);
std::vector<NeEntry> dictionary_from_tsv(const std::string& text);
std::vector<NePatch> load_patch_tsv(const std::string& path);

struct PipelineOptions {
    int iterations = 20;
    bool skip_nationality = true;
    std::string separator;
    std::vector<NePatch> patches;
    const TranslationTable* pretrained = nullptr; // skips training when set
};

struct PipelineResult {
    std::vector<Drg> documents;
    std::vector<NeEntry> dictionary;
    std::vector<ReplacementReport> reports;
    TranslationTable table;
};

// The silver-data pipeline: train (or reuse) a table, align each sentence,
// extract named-entity pairs from the documents' Name edges, rewrite the
// literals, then apply manual patches. Documents pair with sentences by
// index; throws std::invalid_argument on a length mismatch.
PipelineResult run_pipeline(const std::vector<ParallelSentence>& sentences,
                            const std::vector<Drg>& documents,
                            const PipelineOptions& options = {});

} // namespace sbn
