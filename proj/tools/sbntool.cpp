// Command-line front end for the SBN/DRG toolkit: validation, Penman
// conversion, fine-grained scoring and the word-alignment based
// named-entity projection pipeline.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sbn/align.hpp"
#include "sbn/corpus.hpp"
#include "sbn/error.hpp"
#include "sbn/metrics.hpp"
#include "sbn/parse.hpp"
#include "sbn/penman.hpp"
#include "sbn/report.hpp"
#include "sbn/serialize.hpp"
#include "sbn/validate.hpp"
#include "sbn/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 1;
constexpr int kExitIo = 2;

struct CommonOptions {
    std::string operators_file;
    std::string discourse_file;
    std::uint64_t seed = 0;
    int restarts = 4;
    int jobs = 1;
};

sbn::SbnConfig make_config(const CommonOptions& options) {
    sbn::SbnConfig config;
    if (!options.operators_file.empty())
        config.operators = sbn::Vocabulary::from_file(options.operators_file);
    if (!options.discourse_file.empty())
        config.discourse = sbn::Vocabulary::from_file(options.discourse_file);
    return config;
}

std::uint64_t default_seed() {
    const char* env = std::getenv("DRG_EVAL_SEED");
    if (!env || !*env) return 0;
    return std::strtoull(env, nullptr, 10);
}

void emit(const std::string& output_path, const std::string& content) {
    if (output_path.empty() || output_path == "-")
        std::cout << content;
    else
        sbn::write_text_file(output_path, content);
}

std::vector<sbn::Drg> parse_all_strict(const std::vector<std::string>& documents,
                                       const sbn::SbnConfig& config, const std::string& what) {
    std::vector<sbn::Drg> parsed;
    parsed.reserve(documents.size());
    for (size_t i = 0; i < documents.size(); ++i) {
        try {
            parsed.push_back(sbn::parse_document(documents[i], config, std::to_string(i)));
        } catch (const sbn::ParseError& e) {
            throw std::runtime_error(what + " document " + std::to_string(i) +
                                     " does not parse: " + e.what());
        }
    }
    return parsed;
}

int cmd_validate(const std::string& corpus_path, const CommonOptions& options) {
    sbn::SbnConfig config = make_config(options);
    std::vector<std::string> documents = sbn::read_corpus_file(corpus_path);

    long well_formed = 0;
    for (size_t i = 0; i < documents.size(); ++i) {
        try {
            sbn::Drg drg = sbn::parse_document(documents[i], config, std::to_string(i));
            sbn::WellFormedReport report = sbn::validate(drg, config);
            if (report.well_formed) {
                ++well_formed;
                std::cout << "doc " << i << ": well-formed";
                if (!report.warnings.empty())
                    std::cout << " (" << report.warnings.size() << " warning"
                              << (report.warnings.size() == 1 ? "" : "s") << ")";
                std::cout << "\n";
                for (const sbn::ReportItem& w : report.warnings)
                    std::cout << "  warning " << w.code << " at " << w.where << ": " << w.message
                              << "\n";
            } else {
                std::cout << "doc " << i << ": INVALID\n";
                for (const sbn::ReportItem& e : report.errors)
                    std::cout << "  error " << e.code << " at " << e.where << ": " << e.message
                              << "\n";
            }
        } catch (const sbn::ParseError& e) {
            std::cout << "doc " << i << ": PARSE ERROR " << e.code() << " (line " << e.line()
                      << ", column " << e.column() << "): " << e.what() << "\n";
        }
    }
    char rate[32];
    std::snprintf(rate, sizeof(rate), "%.6f",
                  documents.empty() ? 1.0
                                    : static_cast<double>(well_formed) /
                                          static_cast<double>(documents.size()));
    std::cout << "well-formed rate: " << rate << " (" << well_formed << "/" << documents.size()
              << ")\n";
    return well_formed == static_cast<long>(documents.size()) ? kExitOk : kExitPrecondition;
}

int cmd_convert(const std::string& input_path, const std::string& to,
                const std::string& granularity, const std::string& output_path,
                const CommonOptions& options) {
    sbn::SbnConfig config = make_config(options);
    sbn::Granularity g =
        granularity == "fine" ? sbn::Granularity::Fine : sbn::Granularity::Coarse;
    std::vector<sbn::Drg> documents =
        parse_all_strict(sbn::read_corpus_file(input_path), config, "input");

    std::string out;
    for (size_t i = 0; i < documents.size(); ++i) {
        if (i) out += "\n";
        if (to == "triples")
            out += sbn::triples_tsv(sbn::extract_triples(documents[i], g, config));
        else
            out += sbn::to_penman(documents[i], g, config) + "\n";
    }
    emit(output_path, out);
    return kExitOk;
}

int cmd_score(const std::string& pred_path, const std::string& gold_path,
              const std::string& format, const std::string& output_path,
              const CommonOptions& options) {
    sbn::SbnConfig config = make_config(options);
    std::vector<std::string> pred_docs = sbn::read_corpus_file(pred_path);
    std::vector<std::string> gold_docs = sbn::read_corpus_file(gold_path);
    if (pred_docs.size() != gold_docs.size())
        throw sbn::LengthMismatchError("corpus length mismatch: " +
                                       std::to_string(pred_docs.size()) + " predictions vs " +
                                       std::to_string(gold_docs.size()) + " gold documents");

    std::vector<sbn::Drg> gold = parse_all_strict(gold_docs, config, "gold");
    std::vector<std::optional<sbn::Drg>> pred;
    pred.reserve(pred_docs.size());
    for (size_t i = 0; i < pred_docs.size(); ++i) {
        try {
            pred.push_back(sbn::parse_document(pred_docs[i], config, std::to_string(i)));
        } catch (const sbn::ParseError&) {
            pred.push_back(std::nullopt);
        }
    }

    sbn::FineGrainedReport report = sbn::corpus_report(pred, gold, options.restarts,
                                                       options.seed, config, options.jobs);
    sbn::ReportMeta meta;
    meta.version = sbn::kVersion;
    meta.seed = options.seed;
    meta.restarts = options.restarts;
    meta.operators_hash = config.operators.hash();
    meta.discourse_hash = config.discourse.hash();

    if (format == "json")
        emit(output_path, sbn::report_to_json(report, meta));
    else if (format == "tsv")
        emit(output_path, sbn::report_to_tsv(report, meta));
    else
        emit(output_path, sbn::report_to_markdown(report, meta));
    return kExitOk;
}

std::string action_name(sbn::ReplacementAction::Kind kind) {
    switch (kind) {
    case sbn::ReplacementAction::Kind::Replaced: return "replaced";
    case sbn::ReplacementAction::Kind::SkippedFlagged: return "skipped_flagged";
    case sbn::ReplacementAction::Kind::SkippedNationality: return "skipped_nationality";
    case sbn::ReplacementAction::Kind::Unmatched: return "unmatched";
    case sbn::ReplacementAction::Kind::Patched: return "patched";
    }
    return "?";
}

std::string flags_column(const std::set<sbn::NeFlag>& flags) {
    std::string out;
    for (sbn::NeFlag flag : flags) {
        if (!out.empty()) out += ",";
        out += sbn::to_string(flag);
    }
    return out;
}

// One row per dictionary entry with the action taken for that literal, plus
// rows for Name edges that never produced an entry.
std::string audit_tsv(const sbn::PipelineResult& result,
                      const std::vector<sbn::ParallelSentence>& sentences) {
    std::string out =
        "# sbntool pipeline audit\n"
        "# alignment: IBM Model 1 (EM), per-target argmax, no symmetrization\n"
        "# names matched case-insensitively, `~`/`_` treated as spaces\n"
        "id\tsrc\ttgt\tflags\taction\n";

    std::map<std::string, std::vector<const sbn::NeEntry*>> entries_by_id;
    for (const sbn::NeEntry& entry : result.dictionary)
        entries_by_id[entry.sentence_id].push_back(&entry);

    long replaced = 0, skipped = 0, unmatched = 0, patched = 0;
    for (size_t i = 0; i < result.reports.size(); ++i) {
        const std::string& id = sentences[i].id;
        std::map<std::string, const sbn::ReplacementAction*> action_of;
        for (const sbn::ReplacementAction& action : result.reports[i].actions) {
            action_of.emplace(sbn::normalize_name(action.original), &action);
            switch (action.kind) {
            case sbn::ReplacementAction::Kind::Replaced: ++replaced; break;
            case sbn::ReplacementAction::Kind::Patched: ++patched; break;
            case sbn::ReplacementAction::Kind::Unmatched: ++unmatched; break;
            default: ++skipped; break;
            }
        }
        std::set<std::string> covered;
        auto it = entries_by_id.find(id);
        if (it != entries_by_id.end()) {
            for (const sbn::NeEntry* entry : it->second) {
                std::string key = sbn::normalize_name(entry->src_literal);
                covered.insert(key);
                auto action = action_of.find(key);
                out += id + "\t" + entry->src_literal + "\t" + entry->tgt_literal + "\t" +
                       flags_column(entry->flags) + "\t" +
                       (action == action_of.end() ? "no_edge" : action_name(action->second->kind)) +
                       "\n";
            }
        }
        for (const sbn::ReplacementAction& action : result.reports[i].actions) {
            if (covered.count(sbn::normalize_name(action.original))) continue;
            out += id + "\t" + action.original + "\t\t\t" + action_name(action.kind) + "\n";
        }
    }
    out += "# replaced=" + std::to_string(replaced) + " skipped=" + std::to_string(skipped) +
           " unmatched=" + std::to_string(unmatched) + " patched=" + std::to_string(patched) +
           "\n";
    return out;
}

struct PipelinePaths {
    std::string parallel;
    std::string sbn;
    std::string out;
    std::string audit;
    std::string dict_out;
    std::string table_in;
    std::string table_out;
    std::string patch;
    int iterations = 20;
    bool skip_nationality = true;
    std::string separator;
};

int cmd_pipeline(const PipelinePaths& paths, const CommonOptions& options) {
    sbn::SbnConfig config = make_config(options);
    std::vector<sbn::ParallelSentence> sentences = sbn::load_parallel_tsv(paths.parallel);
    std::vector<sbn::Drg> documents =
        parse_all_strict(sbn::read_corpus_file(paths.sbn), config, "sbn");
    if (sentences.size() != documents.size())
        throw sbn::LengthMismatchError("id mismatch: " + std::to_string(sentences.size()) +
                                       " sentences vs " + std::to_string(documents.size()) +
                                       " documents");

    sbn::PipelineOptions pipeline;
    pipeline.iterations = paths.iterations;
    pipeline.skip_nationality = paths.skip_nationality;
    pipeline.separator = paths.separator;
    if (!paths.patch.empty()) pipeline.patches = sbn::load_patch_tsv(paths.patch);
    sbn::TranslationTable pretrained;
    if (!paths.table_in.empty()) {
        pretrained = sbn::table_from_tsv(sbn::read_text_file(paths.table_in));
        pipeline.pretrained = &pretrained;
    }

    sbn::PipelineResult result = sbn::run_pipeline(sentences, documents, pipeline);

    std::vector<std::string> rewritten;
    rewritten.reserve(result.documents.size());
    for (const sbn::Drg& drg : result.documents) rewritten.push_back(sbn::serialize_sbn(drg));
    emit(paths.out, sbn::join_documents(rewritten));

    if (!paths.audit.empty()) sbn::write_text_file(paths.audit, audit_tsv(result, sentences));
    if (!paths.dict_out.empty())
        sbn::write_text_file(paths.dict_out, sbn::dictionary_to_tsv(result.dictionary));
    if (!paths.table_out.empty())
        sbn::write_text_file(paths.table_out, sbn::table_to_tsv(result.table));
    return kExitOk;
}

int cmd_align_train(const std::string& parallel_path, const std::string& out_path,
                    int iterations) {
    sbn::TranslationTable table =
        sbn::train_ibm1(sbn::load_parallel_tsv(parallel_path), iterations);
    emit(out_path, sbn::table_to_tsv(table));
    std::cerr << "trained " << table.iteration_log_likelihood.size()
              << " iterations, final log-likelihood "
              << (table.iteration_log_likelihood.empty()
                      ? 0.0
                      : table.iteration_log_likelihood.back())
              << "\n";
    return kExitOk;
}

int cmd_align(const std::string& parallel_path, const std::string& table_path,
              const std::string& out_path) {
    sbn::TranslationTable table = sbn::table_from_tsv(sbn::read_text_file(table_path));
    std::string out;
    for (const sbn::ParallelSentence& s : sbn::load_parallel_tsv(parallel_path)) {
        out += s.id;
        out += '\t';
        std::vector<sbn::AlignmentLink> links = sbn::align_sentence(table, s);
        for (size_t j = 0; j < links.size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(links[j].tgt_index);
            out += '-';
            out += links[j].src_index ? std::to_string(*links[j].src_index) : std::string("*");
        }
        out += '\n';
    }
    emit(out_path, out);
    return kExitOk;
}

struct ReplacePaths {
    std::string sbn;
    std::string dict;
    std::string parallel; // optional, provides sentence ids
    std::string patch;
    std::string out;
    std::string audit;
    bool skip_nationality = true;
};

int cmd_replace_ne(const ReplacePaths& paths, const CommonOptions& options) {
    sbn::SbnConfig config = make_config(options);
    std::vector<sbn::Drg> documents =
        parse_all_strict(sbn::read_corpus_file(paths.sbn), config, "sbn");
    std::vector<sbn::NeEntry> entries =
        sbn::dictionary_from_tsv(sbn::read_text_file(paths.dict));

    std::vector<std::string> ids(documents.size());
    if (!paths.parallel.empty()) {
        std::vector<sbn::ParallelSentence> sentences = sbn::load_parallel_tsv(paths.parallel);
        if (sentences.size() != documents.size())
            throw sbn::LengthMismatchError("id mismatch between --parallel and the sbn corpus");
        for (size_t i = 0; i < ids.size(); ++i) ids[i] = sentences[i].id;
    } else {
        for (size_t i = 0; i < ids.size(); ++i) ids[i] = std::to_string(i);
    }

    std::map<std::string, std::vector<sbn::NeEntry>> entries_by_id;
    for (sbn::NeEntry& entry : entries) entries_by_id[entry.sentence_id].push_back(entry);
    std::vector<sbn::NePatch> patches;
    if (!paths.patch.empty()) patches = sbn::load_patch_tsv(paths.patch);

    std::string audit =
        "# sbntool replace-ne audit\nid\tsrc\ttgt\tflags\taction\n";
    std::vector<std::string> rewritten;
    rewritten.reserve(documents.size());
    for (size_t i = 0; i < documents.size(); ++i) {
        auto it = entries_by_id.find(ids[i]);
        static const std::vector<sbn::NeEntry> none;
        const std::vector<sbn::NeEntry>& doc_entries = it == entries_by_id.end() ? none : it->second;
        auto [drg, report] = sbn::replace_names(documents[i], doc_entries,
                                                paths.skip_nationality);
        for (const sbn::NePatch& patch : patches) {
            if (patch.doc_id != ids[i]) continue;
            std::string wanted = sbn::normalize_name(patch.src_literal);
            for (size_t ei = 0; ei < documents[i].edges.size(); ++ei) {
                if (documents[i].edges[ei].kind != sbn::EdgeKind::Name) continue;
                const sbn::Literal* original =
                    std::get_if<sbn::Literal>(&documents[i].edges[ei].target);
                if (!original || sbn::normalize_name(original->value) != wanted) continue;
                if (sbn::Literal* current = std::get_if<sbn::Literal>(&drg.edges[ei].target)) {
                    current->value = patch.tgt_literal;
                    report.actions.push_back({sbn::ReplacementAction::Kind::Patched,
                                              original->value, patch.tgt_literal});
                }
            }
        }
        for (const sbn::ReplacementAction& action : report.actions)
            audit += ids[i] + "\t" + action.original + "\t" + action.value + "\t\t" +
                     action_name(action.kind) + "\n";
        rewritten.push_back(sbn::serialize_sbn(drg));
    }
    emit(paths.out, sbn::join_documents(rewritten));
    if (!paths.audit.empty()) sbn::write_text_file(paths.audit, audit);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SBN/DRG toolkit: parse, convert, score and project named entities"};
    app.set_version_flag("--version", std::string("sbntool ") + sbn::kVersion);
    app.require_subcommand(1);

    CommonOptions common;
    common.seed = default_seed();

    std::string corpus_path, pred_path, gold_path, input_path, output_path;
    std::string format = "json";
    std::string to = "penman";
    std::string granularity = "coarse";
    PipelinePaths pipeline;
    ReplacePaths replace;
    std::string table_path;
    int train_iterations = 20;

    auto add_vocab_flags = [&common](CLI::App* cmd) {
        cmd->add_option("--operators", common.operators_file,
                        "operator vocabulary file, one label per line");
        cmd->add_option("--discourse", common.discourse_file,
                        "discourse vocabulary file, one label per line");
    };

    CLI::App* validate = app.add_subcommand("validate", "check SBN documents for well-formedness");
    validate->add_option("corpus", corpus_path, "SBN corpus file")->required();
    add_vocab_flags(validate);

    CLI::App* convert = app.add_subcommand("convert", "convert SBN to Penman or triples");
    convert->add_option("input", input_path, "SBN corpus file")->required();
    convert->add_option("--granularity", granularity, "fine|coarse")
        ->check(CLI::IsMember({"fine", "coarse"}));
    convert->add_option("--to", to, "penman|triples")->check(CLI::IsMember({"penman", "triples"}));
    convert->add_option("-o,--output", output_path, "output file (stdout by default)");
    add_vocab_flags(convert);

    CLI::App* score = app.add_subcommand("score", "score predictions against gold");
    score->add_option("pred", pred_path, "predicted SBN corpus")->required();
    score->add_option("gold", gold_path, "gold SBN corpus")->required();
    score->add_option("--format", format, "json|tsv|md")
        ->check(CLI::IsMember({"json", "tsv", "md"}));
    score->add_option("--restarts", common.restarts, "smatch hill-climbing restarts");
    score->add_option("--seed", common.seed, "random seed (DRG_EVAL_SEED overrides the default)");
    score->add_option("--jobs", common.jobs, "parallel scoring jobs");
    score->add_option("-o,--output", output_path, "output file (stdout by default)");
    add_vocab_flags(score);

    CLI::App* pipe = app.add_subcommand("pipeline",
                                        "align, extract a NE dictionary and rewrite names");
    pipe->add_option("parallel", pipeline.parallel, "parallel corpus TSV")->required();
    pipe->add_option("sbn", pipeline.sbn, "SBN corpus aligned with the TSV")->required();
    pipe->add_option("--out", pipeline.out, "rewritten SBN corpus (stdout by default)");
    pipe->add_option("--audit", pipeline.audit, "audit TSV path");
    pipe->add_option("--dict-out", pipeline.dict_out, "NE dictionary TSV path");
    pipe->add_option("--table-in", pipeline.table_in, "load a translation table instead of training");
    pipe->add_option("--table-out", pipeline.table_out, "save the translation table");
    pipe->add_option("--patch", pipeline.patch, "manual corrections TSV (id, src, tgt)");
    pipe->add_option("--iterations", pipeline.iterations, "EM iterations");
    pipe->add_option("--separator", pipeline.separator, "separator for concatenated targets");
    pipe->add_flag("--skip-nationality,!--no-skip-nationality", pipeline.skip_nationality,
                   "keep nationality names untouched (default on)");
    add_vocab_flags(pipe);

    CLI::App* train = app.add_subcommand("align-train", "train an IBM Model 1 table");
    train->add_option("parallel", pipeline.parallel, "parallel corpus TSV")->required();
    train->add_option("--out", output_path, "table TSV (stdout by default)");
    train->add_option("--iterations", train_iterations, "EM iterations");

    CLI::App* align = app.add_subcommand("align", "align a corpus with a trained table");
    align->add_option("parallel", pipeline.parallel, "parallel corpus TSV")->required();
    align->add_option("--table", table_path, "trained table TSV")->required();
    align->add_option("--out", output_path, "links output (stdout by default)");

    CLI::App* rep = app.add_subcommand("replace-ne", "apply a NE dictionary to SBN documents");
    rep->add_option("sbn", replace.sbn, "SBN corpus file")->required();
    rep->add_option("--dict", replace.dict, "NE dictionary TSV")->required();
    rep->add_option("--parallel", replace.parallel, "parallel TSV providing sentence ids");
    rep->add_option("--patch", replace.patch, "manual corrections TSV");
    rep->add_option("--out", replace.out, "rewritten SBN corpus (stdout by default)");
    rep->add_option("--audit", replace.audit, "audit TSV path");
    rep->add_flag("--skip-nationality,!--no-skip-nationality", replace.skip_nationality,
                  "keep nationality names untouched (default on)");
    add_vocab_flags(rep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitIo;
    }

    try {
        if (*validate) return cmd_validate(corpus_path, common);
        if (*convert) return cmd_convert(input_path, to, granularity, output_path, common);
        if (*score) return cmd_score(pred_path, gold_path, format, output_path, common);
        if (*pipe) return cmd_pipeline(pipeline, common);
        if (*train) return cmd_align_train(pipeline.parallel, output_path, train_iterations);
        if (*align) return cmd_align(pipeline.parallel, table_path, output_path);
        if (*rep) return cmd_replace_ne(replace, common);
    } catch (const sbn::IoError& e) {
        std::cerr << "sbntool: " << e.what() << "\n";
        return kExitIo;
    } catch (const sbn::LengthMismatchError& e) {
        std::cerr << "sbntool: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "sbntool: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitOk;
}
