#ifndef TURAN_PIPELINE_HPP
#define TURAN_PIPELINE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "turan/dset.hpp"
#include "turan/graph.hpp"
#include "turan/search.hpp"

namespace turan {

// Constant bundle for the staged searches. Defaults are configuration, not
// sharp constants: q is the smallest clique size compatible with the s < q/2
// requirement that can still carry a k-body, and gamma stays below both 1/t
// and 1 - 1/d.
struct SearchConfig {
    int t = 3;              // forbidden biclique size
    int k = 3, d = 2, s = 1;
    int r = -1;             // -1: hedgehog-only config; >= 0 requires s == d-r-1
    int q = 4;              // red threshold = monochromatic clique size
    double gamma_exp = 0;   // bad-vertex degree exponent, in [0, 1/t)
    double eps = 0.5;       // density coefficient of the host
    double eta = 0.125;
    double xi = 1.0;
    double kappa = 1.0;
    Budget budget;
    std::uint64_t max_s_sets = 200'000;
    std::uint64_t max_cliques = 500;    // cliques inspected per color path
    std::uint64_t max_k_subsets = 5'000;

    static SearchConfig for_hedgehog(int k, int d, int s, int t);
    static SearchConfig for_w(int k, int d, int r, int t);
    void validate() const;
};

struct StageNote {
    std::string name;
    bool ok = false;
    std::string note;
    std::map<std::string, double> quantities;
};

struct HedgehogSearchResult {
    Outcome outcome = Outcome::Inconclusive;
    std::optional<Embedding> embedding; // verified induced, body in A
    MarkedGraph pattern;                // hedgehog(k, d, s)
    std::string path;                   // "red-clique", "blue-clique", "direct"
    std::vector<StageNote> stages;
};

// Staged search for an induced hedgehog with body in A:
//   (i)   build the d-set hypergraph and its red/blue coloring;
//   (ii)  red path: scan k-subsets of red q-cliques for one passing the
//         neighborhood condition, then greedy extraction;
//   (iii) blue path: blue q-cliques whose internal d-sets have pairwise
//         disjoint common neighborhoods assemble the hedgehog directly;
//   (iv)  fallback: direct exhaustive embedding search.
// "Absent" is only reported when the fallback completed exhaustively.
HedgehogSearchResult find_induced_hedgehog(const BipartiteGraph& g, const SearchConfig& cfg);

struct WSearchResult {
    enum class Kind { Biclique, Embedding, Absent, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> biclique; // K_{t,t} certificate
    std::optional<Embedding> embedding; // verified induced W, body in A
    MarkedGraph pattern;                // w_graph(k, d, r)
    std::string failed_stage;
    std::vector<StageNote> stages;
};

// Staged search mirroring the dense-graph argument: biclique scan,
// almost-regularization, densest r-set selection, bad-vertex removal,
// hedgehog search on the cleaned subgraph, and assembly with the r-set.
// Every stage emits its quantities; stage failures fall through to a direct
// exhaustive search, so Absent is only reported after that completes.
WSearchResult find_induced_w(const BipartiteGraph& g, const SearchConfig& cfg);

inline std::string w_kind_name(WSearchResult::Kind k) {
    switch (k) {
        case WSearchResult::Kind::Biclique: return "biclique";
        case WSearchResult::Kind::Embedding: return "embedding";
        case WSearchResult::Kind::Absent: return "absent";
        default: return "inconclusive";
    }
}

} // namespace turan

#endif
