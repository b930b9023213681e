#ifndef TURAN_GENERATORS_HPP
#define TURAN_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan/combinatorics.hpp"
#include "turan/graph.hpp"
#include "turan/search.hpp"

namespace turan {

// Hedgehog: body of k A-vertices; for every d-subset E of the body a private
// block U_E of j B-vertices joined completely to E and to nothing else.
// B-side blocks are laid out in colexicographic order of E, so the block of a
// given d-set starts at colex_rank(E) * j.
MarkedGraph hedgehog(int k, int d, int j);

// Hedgehog H(k, d, d-r-1) plus r extra B-vertices ("Y") adjacent to the whole
// body; Y vertices occupy the last r B-indices. With r = 0 the result is
// structurally equal to hedgehog(k, d, d-1).
MarkedGraph w_graph(int k, int d, int r);

// A-part [m] (marked as body), B-part all 2^m subsets indexed by bitmask;
// edge (i, S) iff i is in S.
MarkedGraph powerset_incidence(int m);

// Complete r-partite graph on n vertices with balanced parts.
GeneralGraph turan_graph(int n, int r);

BipartiteGraph complete_bipartite(int a, int b);

// Deletion-method exponent (|V| - 2) / (|E| - 1), exact.
Rational gamma_value(const BipartiteGraph& g);
Rational gamma_value(const GeneralGraph& g);

// Each of the n^2 edges present independently with probability p; identical
// output for identical seeds on every platform.
BipartiteGraph random_bipartite(int n, double p, std::uint64_t seed);

struct DeletionReport {
    int n = 0;
    double p = 0;
    Rational gamma_exponent;
    long long sampled_edges = 0;
    long long copies_found = 0; // embeddings seen across rounds (maps, not images)
    long long edges_deleted = 0;
    long long final_edges = 0;
    int rounds = 0;
    bool verified_free = false;
    std::string status; // "ok" or "budget-exceeded"
};

struct DeletionResult {
    std::optional<BipartiteGraph> graph; // withheld on budget failure
    DeletionReport report;
};

// Random construction avoiding every family member as a side-respecting
// subgraph in either part assignment: sample at p = margin * n^(-gamma),
// then delete the first-indexed edge of every discovered copy and re-verify,
// looping until clean. The output is exhaustively verified free.
DeletionResult deletion_construct(int n, const std::vector<BipartiteGraph>& family,
                                  std::uint64_t seed, double margin = 0.5,
                                  const Budget& budget = {});

} // namespace turan

#endif
