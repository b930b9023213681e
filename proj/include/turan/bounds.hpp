#ifndef TURAN_BOUNDS_HPP
#define TURAN_BOUNDS_HPP

#include <string>
#include <vector>

#include "turan/combinatorics.hpp"
#include "turan/graph.hpp"

namespace turan {

struct KstInput {
    int y1 = 1, y2 = 1;       // forbidden biclique side sizes (y1 in Y1)
    long long Y1 = 1, Y2 = 1; // part sizes
};

// Edge-count ceiling for a bipartite graph on parts (Y1, Y2) with no complete
// bipartite subgraph having y1 vertices in Y1 and y2 in Y2:
//   (y2-1)^(1/y1) * (|Y1|-y1+1) * |Y2|^(1-1/y1) + (y1-1)*|Y2|
double kst_bound(const KstInput& in);

// eps * n^(2 - 1/d)
double density_threshold(long long n, int d, double eps);

Rational gamma_family(const std::vector<Rational>& gammas);
Rational gamma_family(const std::vector<BipartiteGraph>& family);

enum class KstCheckStatus { BoundHolds, Violation, HypothesisNotMet };

struct KstCheckReport {
    KstCheckStatus status = KstCheckStatus::BoundHolds;
    double bound = 0;
    long long edges = 0;
    double margin = 0; // bound - edges, when the hypothesis is met
    std::vector<int> biclique_a, biclique_b; // witness when hypothesis not met
};

// If g has no K_{y1,y2} (y1 in A), confirm |E(g)| <= kst_bound and report the
// slack; otherwise report the witness. A Violation outcome indicates an
// implementation bug somewhere, never a property of the graph.
KstCheckReport kst_validity_check(const BipartiteGraph& g, int y1, int y2);

inline std::string kst_status_name(KstCheckStatus s) {
    switch (s) {
        case KstCheckStatus::BoundHolds: return "bound-holds";
        case KstCheckStatus::Violation: return "violation";
        default: return "hypothesis-not-met";
    }
}

} // namespace turan

#endif
