#ifndef TURAN_REGULARIZE_HPP
#define TURAN_REGULARIZE_HPP

#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

struct DegreeStats {
    int min_all = 0, max_all = 0;
    double mean_all = 0;
    int min_a = 0, max_a = 0;
    double mean_a = 0;
    int min_b = 0, max_b = 0;
    double mean_b = 0;
};

// Exact degree statistics; isolated vertices included.
DegreeStats degree_stats(const BipartiteGraph& g);

struct RegularizeReport {
    bool hypothesis_met = false; // input had >= c * n^(1+eps) edges
    int m = 0;                   // surviving vertex count
    long long edges = 0;
    double K_achieved = 0;       // max degree / min degree of the output (inf -> huge)
    int rounds = 0;              // vertices deleted in total
    bool ratio_ok = false;       // K_achieved <= K_target
    bool density_ok = false;     // edges >= (2c/5) * m^(1+eps)
    bool met_contract = false;   // both of the above
    std::string status;          // "ok", "hypothesis-unmet", "empty-survivor"
};

struct RegularizeResult {
    BipartiteGraph graph;
    std::vector<int> a_keep, b_keep; // output indices -> input indices
    RegularizeReport report;
};

// Iterative low-degree deletion: while some vertex has degree below half the
// current average, delete the lowest-indexed such vertex (A side first) and
// recompute. Among the visited stages that satisfy max/min <= K_target, the
// one with the most edges is returned; when none qualifies, the stage with
// the smallest degree ratio is returned with met_contract false. The
// guarantee is a checked postcondition, not an assumption: callers must
// branch on met_contract. Deterministic given g.
RegularizeResult almost_regularize(const BipartiteGraph& g, double eps, double c,
                                   double K_target = 32.0);

} // namespace turan

#endif
