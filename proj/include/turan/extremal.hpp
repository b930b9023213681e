#ifndef TURAN_EXTREMAL_HPP
#define TURAN_EXTREMAL_HPP

#include <cstdint>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

struct ExtremalQuery {
    int n = 2; // part size; subgraphs of K_{n,n}
    std::vector<BipartiteGraph> forbidden_sub;     // forbidden as subgraphs
    std::vector<BipartiteGraph> forbidden_induced; // forbidden as induced subgraphs
    // Patterns are forbidden under both part assignments by default; with
    // false, only the as-given orientation is checked. Reported back in the
    // result so consumers know which convention produced the value.
    bool both_orientations = true;
    std::uint64_t node_budget = 4'000'000'000ull;
};

struct ExtremalResult {
    int n = 0;
    int max_edges = -1;
    BipartiteGraph witness;
    std::uint64_t nodes_explored = 0;
    bool exhaustive = false;
    bool both_orientations = true;
};

// Branch and bound over edge inclusion in lexicographic edge order with
// incremental forbidden-subgraph checks anchored at the newly included edge
// and a row-canonicity symmetry prune (part-respecting row permutations).
// Induced-forbidden checks run at leaves only: induced containment is not
// monotone under edge addition, so internal-node pruning on induced patterns
// would be unsound and is not performed. Subtrees run in parallel without a
// shared incumbent; the merge is deterministic, so the optimum and witness
// do not depend on the thread count. n is capped at 7.
ExtremalResult exact_ex(const ExtremalQuery& q);

struct ExTableRow {
    int n = 0;
    int max_edges = -1;
    bool exhaustive = false;
    double ms = 0;
    BipartiteGraph witness;
};

std::vector<ExTableRow> ex_table(int n_lo, int n_hi, const ExtremalQuery& proto);

} // namespace turan

#endif
