#ifndef TURAN_DSET_HPP
#define TURAN_DSET_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "turan/graph.hpp"
#include "turan/search.hpp"

namespace turan {

// d-uniform hypergraph on the A side of a host graph: edges are the d-sets
// whose common neighborhood has size >= s, colored red when the size also
// reaches q and blue otherwise.
struct DSetEdge {
    std::vector<int> verts; // sorted
    int n_size = 0;         // |N(verts)| in the host graph
    bool red = false;
};

struct DSetHypergraph {
    int ground_size = 0; // |A| of the host; ground vertices are 0..ground_size-1
    int d = 0, s = 0, q = 0;
    std::vector<DSetEdge> edges; // colex order
    std::map<std::vector<int>, int> index;

    const DSetEdge* edge(const std::vector<int>& sorted_dset) const {
        auto it = index.find(sorted_dset);
        return it == index.end() ? nullptr : &edges[it->second];
    }
};

struct DSetBuildResult {
    Outcome outcome = Outcome::Found; // Inconclusive when the d-set budget ran out
    DSetHypergraph hypergraph;
    std::uint64_t sets_enumerated = 0;
};

DSetBuildResult build_dset_hypergraph(const BipartiteGraph& g, int d, int s, int q,
                                      const Budget& budget = {});

struct CliqueSearchResult {
    Outcome outcome = Outcome::Absent;
    std::vector<int> clique;
    std::uint64_t nodes = 0;
};

// q_size-set all of whose d-subsets are edges of the stated color.
// Exhaustive backtracking; lexicographically least result.
CliqueSearchResult find_monochromatic_clique(const DSetHypergraph& h, int q_size, bool red,
                                             const Budget& budget = {},
                                             const std::optional<Bitset>& candidates = {});

// Enumerates monochromatic cliques in lexicographic order until the callback
// returns false. Returns Inconclusive only on budget exhaustion.
Outcome for_each_monochromatic_clique(const DSetHypergraph& h, int q_size, bool red,
                                      const Budget& budget, const std::optional<Bitset>& candidates,
                                      const std::function<bool(const std::vector<int>&)>& cb);

struct CliqueCollection {
    struct Entry {
        std::vector<int> clique;
        std::vector<int> provenance; // the s-set S of B whose N(S) hosted the extraction
    };
    std::vector<Entry> cliques;
    bool capped = false;              // s-set enumeration hit its cap; partial collection
    std::uint64_t s_sets_scanned = 0;
    long long star_sum = 0;           // sum of |N(S)| over scanned S
    double harvest_lower_estimate = 0; // star_sum / (q * C(q-1, s)), no Ramsey cutoff term
};

// For each s-subset S of B, greedily extracts pairwise disjoint blue q-cliques
// from the hypergraph restricted to N(S) until none remain (exhaustive search
// replaces the Ramsey threshold at desk scale).
CliqueCollection harvest_blue_cliques(const BipartiteGraph& g, const DSetHypergraph& h, int s,
                                      int q_size, const Budget& budget = {},
                                      std::uint64_t max_s_sets = 2'000'000);

struct CliqueCountLedger {
    long long star_sum_pairs = 0;   // sum over s-subsets S of B of |N(S)| (direct enumeration)
    long long star_sum_degrees = 0; // sum over a in A of C(deg(a), s); equal by star counting
    double jensen_lower = 0;        // |A| * C(||G||/|A|, s), real-argument binomial
    double c_qd = 0;                // C(q-1, d) * (q-1)
    int max_deg_b = 0;
    double upper_bound = 0;         // C(|A|, q-1) * c_qd * max_deg_b
    long long collection_size = 0;
};

// Both sides of the clique-counting chain, with every intermediate quantity
// exposed; nothing asymptotic is asserted.
CliqueCountLedger count_cliques_vs_bounds(const CliqueCollection& col, const BipartiteGraph& g,
                                          int s, int q, int d);

// Parallel kernel for the pair side of the star-count identity.
long long star_sum_over_pairs(const BipartiteGraph& g, int s);

} // namespace turan

#endif
