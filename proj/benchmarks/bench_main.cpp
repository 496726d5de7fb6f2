#include <benchmark/benchmark.h>

#include <optional>
#include <vector>

#include "sbn/align.hpp"
#include "sbn/metrics.hpp"
#include "sbn/parse.hpp"
#include "sbn/penman.hpp"
#include "sbn/serialize.hpp"
#include "sbn/smatch.hpp"

namespace {

const std::string kGold =
    "music.n.01 NEGATION <1 person.n.01 NEGATION <1 lure.v.01 Agent -2 Patient -1 "
    "Time +1 time.n.08 TPR now";
const std::string kPred =
    "music.n.01 NEGATION <1 person.n.01 NEGATION <1 appeal.v.01 Agent -2 Theme -1 "
    "Time +1 time.n.08 TPR now";

std::vector<sbn::ParallelSentence> synthetic_corpus(int sentences) {
    std::vector<sbn::ParallelSentence> corpus;
    for (int i = 0; i < sentences; ++i) {
        int a = i % 7, b = i % 5;
        corpus.push_back({std::to_string(i),
                          {"src" + std::to_string(a), "x", "src" + std::to_string(b)},
                          {"tgt" + std::to_string(a), "tgt" + std::to_string(b), "y"}});
    }
    return corpus;
}

void BM_ParseDocument(benchmark::State& state) {
    for (auto _ : state) {
        sbn::Drg drg = sbn::parse_document(kGold);
        benchmark::DoNotOptimize(drg);
    }
}
BENCHMARK(BM_ParseDocument);

void BM_SerializeRoundTrip(benchmark::State& state) {
    sbn::Drg drg = sbn::parse_document(kGold);
    for (auto _ : state) {
        std::string text = sbn::serialize_sbn(drg);
        benchmark::DoNotOptimize(text);
    }
}
BENCHMARK(BM_SerializeRoundTrip);

void BM_ExtractTriples(benchmark::State& state) {
    sbn::Drg drg = sbn::parse_document(kGold);
    sbn::Granularity g = state.range(0) ? sbn::Granularity::Fine : sbn::Granularity::Coarse;
    for (auto _ : state) {
        sbn::TripleSet ts = sbn::extract_triples(drg, g);
        benchmark::DoNotOptimize(ts);
    }
}
BENCHMARK(BM_ExtractTriples)->Arg(0)->Arg(1);

void BM_SmatchHillClimb(benchmark::State& state) {
    sbn::TripleSet pred =
        sbn::extract_triples(sbn::parse_document(kPred), sbn::Granularity::Coarse);
    sbn::TripleSet gold =
        sbn::extract_triples(sbn::parse_document(kGold), sbn::Granularity::Coarse);
    for (auto _ : state) {
        sbn::MatchResult r = sbn::smatch_score(pred, gold, static_cast<int>(state.range(0)), 0);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_SmatchHillClimb)->Arg(4)->Arg(16);

void BM_SmatchExhaustive(benchmark::State& state) {
    sbn::TripleSet pred =
        sbn::extract_triples(sbn::parse_document(kPred), sbn::Granularity::Coarse);
    sbn::TripleSet gold =
        sbn::extract_triples(sbn::parse_document(kGold), sbn::Granularity::Coarse);
    for (auto _ : state) {
        sbn::MatchResult r = sbn::exhaustive_match(pred, gold);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_SmatchExhaustive);

void BM_GraphLevelReport(benchmark::State& state) {
    sbn::Drg pred = sbn::parse_document(kPred);
    sbn::Drg gold = sbn::parse_document(kGold);
    for (auto _ : state) {
        sbn::GraphLevelScores scores = sbn::graph_level_report(pred, gold, 4, 0);
        benchmark::DoNotOptimize(scores);
    }
}
BENCHMARK(BM_GraphLevelReport);

void BM_TrainIbm1(benchmark::State& state) {
    std::vector<sbn::ParallelSentence> corpus =
        synthetic_corpus(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        sbn::TranslationTable table = sbn::train_ibm1(corpus, 10);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_TrainIbm1)->Arg(50)->Arg(500);

} // namespace

BENCHMARK_MAIN();
