#ifndef TURAN_SEARCH_HPP
#define TURAN_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

struct Budget {
    std::uint64_t max_nodes = 50'000'000;
    double max_ms = 0; // 0 = no time limit
};

// "Inconclusive" (budget exhausted) is a first-class result, distinct from
// Absent: a timeout must never be recorded as a refutation.
enum class Outcome { Found, Absent, Inconclusive };

inline std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Found: return "found";
        case Outcome::Absent: return "absent";
        default: return "inconclusive";
    }
}

struct EmbedQuery {
    bool induced = false;
    bool respect_sides = true;
    std::optional<BodyTarget> body_target; // only meaningful with a marked pattern
    Budget budget;
};

struct EmbedResult {
    Outcome outcome = Outcome::Absent;
    std::optional<Embedding> embedding;
    std::uint64_t nodes = 0;
};

// Backtracking embedding search. Pattern vertices are matched in descending
// degree order (ties broken by connectivity to already-placed vertices, then
// index); candidate sets are bitset intersections of placed neighbors' rows,
// and the induced check is applied incrementally per placement. Root branches
// run in parallel; the result is deterministic regardless of thread count
// (the success with the smallest root candidate wins).
EmbedResult find_embedding(const BipartiteGraph& host, const BipartiteGraph& pattern,
                           const EmbedQuery& q);
EmbedResult find_embedding(const BipartiteGraph& host, const MarkedGraph& pattern,
                           const EmbedQuery& q);

struct VerifyResult {
    bool ok = false;
    std::string reason;   // empty when ok
    int pattern_u = -1;   // first violated pattern pair, when applicable
    int pattern_v = -1;
};

// Total check of an embedding certificate: injectivity, ranges, side and body
// constraints, edge preservation, and (when e.induced) non-edge reflection.
VerifyResult verify_embedding(const BipartiteGraph& host, const BipartiteGraph& pattern,
                              const Embedding& e);
VerifyResult verify_embedding(const BipartiteGraph& host, const MarkedGraph& pattern,
                              const Embedding& e);

struct BicliqueResult {
    bool found = false;
    std::vector<int> a_set, b_set;
};

// Complete-bipartite K_{t1,t2} detection with t1 vertices in A and t2 in B.
// Exhaustive over t1-subsets of A with common-neighborhood pruning; the
// returned A-set is the lexicographically least one.
BicliqueResult find_biclique(const BipartiteGraph& g, int t1, int t2);

struct CountResult {
    Outcome outcome = Outcome::Found;
    std::uint64_t count = 0;
    std::uint64_t nodes = 0;
};

// Exact number of embeddings (vertex maps, not images). With respect_sides
// false, both global part assignments of the pattern are counted. Budget
// exhaustion is an explicit failure; a truncated count is never returned.
CountResult count_copies(const BipartiteGraph& host, const BipartiteGraph& pattern,
                         bool respect_sides, bool induced, const Budget& budget = {});

// Serial enumeration of every embedding under one fixed orientation of the
// pattern (swapped: pattern A into host B). The callback may return false to
// stop early. Returns Inconclusive only on budget exhaustion.
Outcome for_each_embedding(const BipartiteGraph& host, const BipartiteGraph& pattern,
                           bool swapped, bool induced, const Budget& budget,
                           const std::function<bool(const std::vector<int>&, const std::vector<int>&)>& cb);

struct VCReport {
    Outcome outcome = Outcome::Found; // Inconclusive: dimension is only a lower bound
    int dimension = -1;               // -1 when not even the empty set is traced
    std::vector<int> witness;         // shattered subset of the chosen part
    std::vector<int> realizers;       // realizers[mask] = opposite-part vertex tracing that subset
    std::uint64_t sets_checked = 0;
};

// VC-dimension of the neighborhood set system of the part opposite to
// `part`, over ground set `part`. Ascends level by level; a level is only
// declared empty after exhausting it, which is sound because shattering is
// hereditary (subsets of a shattered set are shattered).
VCReport vc_dimension(const BipartiteGraph& g, Side part, const Budget& budget = {});

// True iff all 2^|s| traces of s are realized by opposite-part neighborhoods.
bool shatter_check(const BipartiteGraph& g, const std::vector<int>& s, Side part);

} // namespace turan

#endif
