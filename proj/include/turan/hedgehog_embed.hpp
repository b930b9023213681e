#ifndef TURAN_HEDGEHOG_EMBED_HPP
#define TURAN_HEDGEHOG_EMBED_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "turan/generators.hpp"
#include "turan/graph.hpp"
#include "turan/search.hpp"

namespace turan {

// Per-pair record of the goodness inequality |N(y) & N(X)| < (|N(X)|-s)/(k-d).
struct NeighborhoodCondition {
    int k = 0, d = 0, s = 0;

    struct Pair {
        std::vector<int> x; // the d-set, host A indices
        int y = -1;         // the offending body vertex
        long long lhs = 0;  // |N(y) & N(X)|
        long long rhs_num = 0; // |N(X)| - s
        int rhs_den = 1;       // k - d
    };

    std::vector<Pair> violations; // lhs * (k-d) >= |N(X)| - s
    std::vector<Pair> boundary;   // pairs with |N(X)| == s (rhs exactly zero)

    bool holds() const { return violations.empty(); }
};

struct ConditionError : std::invalid_argument {
    NeighborhoodCondition report;
    explicit ConditionError(NeighborhoodCondition r)
        : std::invalid_argument("neighborhood condition fails with " +
                                std::to_string(r.violations.size()) + " violating pair(s)"),
          report(std::move(r)) {}
};

// Enumerates all (X, y) pairs over the k-set `body`; exact integer
// comparison throughout. Requires k > d >= 1.
NeighborhoodCondition check_neighborhood_condition(const BipartiteGraph& g,
                                                   const std::vector<int>& body, int d, int s);

struct HedgehogExtraction {
    MarkedGraph pattern; // hedgehog(k, d, s)
    Embedding embedding; // into g, induced, body mapped onto `body`
};

// Greedy disjoint U_X selection: for each d-set X of the body, take the s
// lowest-indexed vertices of N(X) minus already-assigned vertices minus all
// N(y) for body y outside X. Succeeds whenever the neighborhood condition
// holds (throws ConditionError otherwise).
std::optional<HedgehogExtraction> extract_hedgehog(const BipartiteGraph& g,
                                                   const std::vector<int>& body, int d, int s);

struct BoundedEmbedResult {
    Outcome outcome = Outcome::Found; // Inconclusive: capacity overflow at max_k
    int k_used = 0;
    MarkedGraph host;    // the W graph the pattern was embedded into
    Embedding embedding; // pattern vertices -> host, induced, V' in the body
};

// Embeds a bipartite pattern (V', U') with all U'-degrees <= d and no
// complete bipartite subgraph having d vertices in V' and d-r in U' into
// w_graph(k, d, r), with V' in the body. Full-degree U' vertices land in
// their own neighborhood blocks; lower-degree ones are padded with disjoint
// d-sets of fresh body vertices, with the padding multiplicity chosen
// minimal per neighborhood. k is auto-raised to the smallest value that
// makes the disjointness bookkeeping succeed and reported back.
BoundedEmbedResult embed_bounded_degree(const BipartiteGraph& g_prime, int d, int r,
                                        int max_k = 64);

// Induced copy of powerset_incidence(d+1) inside w_graph(k, d, d-2): the
// full-subset vertex is deleted, the remainder goes through
// embed_bounded_degree, and the full subset lands on a Y-vertex. d >= 3.
BoundedEmbedResult embed_powerset(int d, int max_k = 64);

} // namespace turan

#endif
