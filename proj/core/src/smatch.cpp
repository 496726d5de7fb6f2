#include "sbn/smatch.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <unordered_map>

namespace sbn {

MatchResult make_match_result(long matched, long pred_total, long gold_total) {
    MatchResult r;
    r.matched = matched;
    r.pred_total = pred_total;
    r.gold_total = gold_total;
    if (pred_total == 0 && gold_total == 0) {
        r.f1 = 1.0; // two empty graphs agree
        return r;
    }
    r.precision = pred_total > 0 ? static_cast<double>(matched) / pred_total : 0.0;
    r.recall = gold_total > 0 ? static_cast<double>(matched) / gold_total : 0.0;
    r.f1 = r.precision + r.recall > 0.0
               ? 2.0 * r.precision * r.recall / (r.precision + r.recall)
               : 0.0;
    return r;
}

namespace {

// Interned view of a triple pair. Labels and values share one symbol table
// across both sides so equality is id equality; variables are per-side ids
// in declaration order, which keeps every tie-break platform-independent.
struct Engine {
    struct InternedTriple {
        Triple::Form form;
        int label = -1;
        int v1 = -1;
        int second = -1; // var id for relations, value id for attributes
    };
    struct Side {
        std::vector<std::string> vars;
        std::map<std::string, int> var_id;
        std::vector<InternedTriple> triples;
        std::vector<int> instance_label; // per var id, -1 when absent

        int var(const std::string& name) {
            auto it = var_id.find(name);
            if (it != var_id.end()) return it->second;
            int id = static_cast<int>(vars.size());
            vars.push_back(name);
            var_id.emplace(name, id);
            return id;
        }
    };

    std::map<std::string, int> symbols;
    Side pred;
    Side gold;
    std::unordered_map<std::uint64_t, int> gold_slot;
    std::vector<int> gold_slot_count;

    int sym(const std::string& s) {
        auto [it, inserted] = symbols.emplace(s, static_cast<int>(symbols.size()));
        return it->second;
    }

    static std::uint64_t pack(Triple::Form form, int label, int v1, int second) {
        return (static_cast<std::uint64_t>(form) << 61) |
               (static_cast<std::uint64_t>(label & 0xFFFFF) << 41) |
               (static_cast<std::uint64_t>((v1 + 1) & 0x1FFFFF) << 20) |
               static_cast<std::uint64_t>((second + 2) & 0xFFFFF);
    }

    void load(Side& side, const TripleSet& ts) {
        for (const std::string& v : ts.variables) side.var(v);
        for (const Triple& t : ts.triples) {
            InternedTriple it;
            it.form = t.form;
            it.label = sym(t.label);
            it.v1 = side.var(t.var);
            if (t.form == Triple::Form::Relation)
                it.second = side.var(t.target);
            else if (t.form == Triple::Form::Attribute)
                it.second = sym(t.target);
            side.triples.push_back(it);
        }
        side.instance_label.assign(side.vars.size(), -1);
        for (const InternedTriple& it : side.triples)
            if (it.form == Triple::Form::Instance && side.instance_label[it.v1] == -1)
                side.instance_label[it.v1] = it.label;
    }

    Engine(const TripleSet& pred_ts, const TripleSet& gold_ts) {
        load(pred, pred_ts);
        load(gold, gold_ts);
        for (const InternedTriple& t : gold.triples) {
            std::uint64_t key = pack(t.form, t.label, t.v1, t.second);
            auto [it, inserted] = gold_slot.emplace(key, static_cast<int>(gold_slot_count.size()));
            if (inserted)
                gold_slot_count.push_back(1);
            else
                ++gold_slot_count[it->second];
        }
    }

    // Multiset-matched count of prediction triples under `m` (pred var id ->
    // gold var id, -1 unmapped).
    long eval(const std::vector<int>& m, std::vector<int>& scratch) const {
        scratch = gold_slot_count;
        long matched = 0;
        for (const InternedTriple& t : pred.triples) {
            int v1 = m[t.v1];
            if (v1 < 0) continue;
            int second = t.second;
            if (t.form == Triple::Form::Relation) {
                second = m[t.second];
                if (second < 0) continue;
            }
            auto it = gold_slot.find(pack(t.form, t.label, v1, second));
            if (it == gold_slot.end()) continue;
            if (scratch[it->second] > 0) {
                --scratch[it->second];
                ++matched;
            }
        }
        return matched;
    }

    VariableMapping to_mapping(const std::vector<int>& m) const {
        VariableMapping out;
        for (size_t p = 0; p < m.size(); ++p)
            if (m[p] >= 0) out.emplace_back(pred.vars[p], gold.vars[m[p]]);
        return out;
    }
};

void hill_climb(const Engine& engine, std::vector<int>& m, std::vector<bool>& used,
                std::vector<int>& scratch) {
    const int pred_vars = static_cast<int>(engine.pred.vars.size());
    const int gold_vars = static_cast<int>(engine.gold.vars.size());

    long current = engine.eval(m, scratch);
    for (;;) {
        long best = current;
        int best_p = -1, best_g = 0, best_p2 = -1;

        for (int p = 0; p < pred_vars; ++p) {
            int original = m[p];
            for (int g = -1; g < gold_vars; ++g) {
                if (g == original) continue;
                if (g >= 0 && used[g]) continue;
                m[p] = g;
                long score = engine.eval(m, scratch);
                if (score > best) {
                    best = score;
                    best_p = p;
                    best_g = g;
                    best_p2 = -1;
                }
                m[p] = original;
            }
        }
        for (int p1 = 0; p1 + 1 < pred_vars; ++p1) {
            for (int p2 = p1 + 1; p2 < pred_vars; ++p2) {
                if (m[p1] == m[p2]) continue; // both unmapped
                std::swap(m[p1], m[p2]);
                long score = engine.eval(m, scratch);
                if (score > best) {
                    best = score;
                    best_p = p1;
                    best_p2 = p2;
                }
                std::swap(m[p1], m[p2]);
            }
        }

        if (best_p < 0) return; // local optimum
        if (best_p2 >= 0) {
            std::swap(m[best_p], m[best_p2]);
        } else {
            if (m[best_p] >= 0) used[m[best_p]] = false;
            m[best_p] = best_g;
            if (best_g >= 0) used[best_g] = true;
        }
        current = best;
    }
}

std::vector<int> greedy_seed(const Engine& engine, std::vector<bool>& used) {
    const int pred_vars = static_cast<int>(engine.pred.vars.size());
    const int gold_vars = static_cast<int>(engine.gold.vars.size());
    std::vector<int> m(pred_vars, -1);
    used.assign(gold_vars, false);
    for (int p = 0; p < pred_vars; ++p) {
        int want = engine.pred.instance_label[p];
        if (want < 0) continue;
        for (int g = 0; g < gold_vars; ++g) {
            if (!used[g] && engine.gold.instance_label[g] == want) {
                m[p] = g;
                used[g] = true;
                break;
            }
        }
    }
    for (int p = 0; p < pred_vars; ++p) {
        if (m[p] >= 0) continue;
        for (int g = 0; g < gold_vars; ++g) {
            if (!used[g]) {
                m[p] = g;
                used[g] = true;
                break;
            }
        }
    }
    return m;
}

// Hand-rolled Fisher-Yates; std::shuffle is not pinned by the standard and
// results must match across platforms.
void shuffle_indices(std::vector<int>& indices, std::mt19937_64& rng) {
    for (size_t i = indices.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(rng() % i);
        std::swap(indices[i - 1], indices[j]);
    }
}

std::vector<int> random_seed(const Engine& engine, std::uint64_t seed, int restart,
                             std::vector<bool>& used) {
    const int pred_vars = static_cast<int>(engine.pred.vars.size());
    const int gold_vars = static_cast<int>(engine.gold.vars.size());
    std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(restart));

    std::vector<int> pred_order(pred_vars);
    std::vector<int> gold_order(gold_vars);
    for (int i = 0; i < pred_vars; ++i) pred_order[i] = i;
    for (int i = 0; i < gold_vars; ++i) gold_order[i] = i;
    shuffle_indices(pred_order, rng);
    shuffle_indices(gold_order, rng);

    std::vector<int> m(pred_vars, -1);
    used.assign(gold_vars, false);
    int k = std::min(pred_vars, gold_vars);
    for (int i = 0; i < k; ++i) {
        m[pred_order[i]] = gold_order[i];
        used[gold_order[i]] = true;
    }
    return m;
}

} // namespace

long matched_triples(const TripleSet& pred, const TripleSet& gold, const VariableMapping& m) {
    Engine engine(pred, gold);
    std::vector<int> mapping(engine.pred.vars.size(), -1);
    std::vector<bool> range_used(engine.gold.vars.size(), false);
    for (const auto& [from, to] : m) {
        auto p = engine.pred.var_id.find(from);
        if (p == engine.pred.var_id.end()) continue;
        if (mapping[p->second] != -1)
            throw std::invalid_argument("matched_triples: variable mapped twice: " + from);
        auto g = engine.gold.var_id.find(to);
        int gold_id = g == engine.gold.var_id.end() ? -2 : g->second;
        if (gold_id >= 0) {
            if (range_used[gold_id])
                throw std::invalid_argument("matched_triples: mapping is not injective at " + to);
            range_used[gold_id] = true;
        }
        mapping[p->second] = gold_id;
    }
    // A pred var mapped onto an unknown gold var can never produce a match;
    // treating it as unmapped gives the same count.
    std::vector<int> scratch;
    for (int& v : mapping)
        if (v == -2) v = -1;
    return engine.eval(mapping, scratch);
}

MatchResult smatch_score(const TripleSet& pred, const TripleSet& gold, int restarts,
                         std::uint64_t seed) {
    if (restarts < 1) throw std::invalid_argument("smatch_score: restarts must be >= 1");
    Engine engine(pred, gold);

    long best = -1;
    std::vector<int> best_mapping;
    std::vector<int> scratch;
    std::vector<bool> used;
    for (int r = 0; r < restarts; ++r) {
        std::vector<int> m = r == 0 ? greedy_seed(engine, used)
                                    : random_seed(engine, seed, r, used);
        hill_climb(engine, m, used, scratch);
        long score = engine.eval(m, scratch);
        if (score > best) {
            best = score;
            best_mapping = m;
        }
    }

    MatchResult result = make_match_result(best, static_cast<long>(pred.triples.size()),
                                           static_cast<long>(gold.triples.size()));
    result.mapping = engine.to_mapping(best_mapping);
    return result;
}

namespace {

// Depth-first enumeration of injective mappings from the smaller variable
// set into the larger one, with incremental multiset consumption and a
// simple remaining-triples bound.
struct ExhaustiveSearch {
    const Engine& engine;
    bool flipped; // true when gold is the small side
    int small_vars = 0;
    int large_vars = 0;
    std::vector<std::vector<Engine::InternedTriple>> at_depth;
    std::vector<long> suffix_total;
    std::unordered_map<std::uint64_t, int> large_slot;
    std::vector<int> counts;
    std::vector<int> assignment;
    std::vector<bool> used;
    long best = -1;
    std::vector<int> best_assignment;

    ExhaustiveSearch(const Engine& e, bool flip) : engine(e), flipped(flip) {
        const Engine::Side& small = flipped ? engine.gold : engine.pred;
        const Engine::Side& large = flipped ? engine.pred : engine.gold;
        small_vars = static_cast<int>(small.vars.size());
        large_vars = static_cast<int>(large.vars.size());

        at_depth.assign(static_cast<size_t>(small_vars) + 1, {});
        for (const Engine::InternedTriple& t : small.triples) {
            int depth = t.v1;
            if (t.form == Triple::Form::Relation) depth = std::max(depth, t.second);
            at_depth[depth].push_back(t);
        }
        suffix_total.assign(static_cast<size_t>(small_vars) + 1, 0);
        for (int d = small_vars - 1; d >= 0; --d)
            suffix_total[d] = suffix_total[d + 1] + static_cast<long>(at_depth[d].size());

        for (const Engine::InternedTriple& t : large.triples) {
            std::uint64_t key = Engine::pack(t.form, t.label, t.v1, t.second);
            auto [it, inserted] = large_slot.emplace(key, static_cast<int>(counts.size()));
            if (inserted)
                counts.push_back(1);
            else
                ++counts[it->second];
        }
        assignment.assign(small_vars, -1);
        used.assign(large_vars, false);
    }

    void run() { descend(0, 0); }

    void descend(int depth, long matched) {
        if (matched + suffix_total[depth] <= best) return;
        if (depth == small_vars) {
            if (matched > best) {
                best = matched;
                best_assignment = assignment;
            }
            return;
        }
        for (int g = 0; g < large_vars; ++g) {
            if (used[g]) continue;
            used[g] = true;
            assignment[depth] = g;

            long delta = 0;
            std::vector<int> consumed;
            for (const Engine::InternedTriple& t : at_depth[depth]) {
                int v1 = assignment[t.v1];
                int second = t.second;
                if (t.form == Triple::Form::Relation) second = assignment[t.second];
                auto it = large_slot.find(Engine::pack(t.form, t.label, v1, second));
                if (it == large_slot.end()) continue;
                if (counts[it->second] > 0) {
                    --counts[it->second];
                    ++delta;
                    consumed.push_back(it->second);
                }
            }
            descend(depth + 1, matched + delta);
            for (int slot : consumed) ++counts[slot];

            assignment[depth] = -1;
            used[g] = false;
        }
    }
};

} // namespace

MatchResult exhaustive_match(const TripleSet& pred, const TripleSet& gold, int max_vars) {
    int small = std::min(pred.var_count(), gold.var_count());
    if (small > max_vars)
        throw TooLargeError("exhaustive_match: " + std::to_string(small) +
                            " variables exceed the limit of " + std::to_string(max_vars));

    Engine engine(pred, gold);
    bool flip = engine.pred.vars.size() > engine.gold.vars.size();
    ExhaustiveSearch search(engine, flip);
    search.run();

    MatchResult result = make_match_result(search.best, static_cast<long>(pred.triples.size()),
                                           static_cast<long>(gold.triples.size()));
    for (size_t s = 0; s < search.best_assignment.size(); ++s) {
        int large = search.best_assignment[s];
        if (large < 0) continue;
        if (flip)
            result.mapping.emplace_back(engine.pred.vars[large], engine.gold.vars[s]);
        else
            result.mapping.emplace_back(engine.pred.vars[s], engine.gold.vars[large]);
    }
    return result;
}

} // namespace sbn
