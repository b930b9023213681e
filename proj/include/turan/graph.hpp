#ifndef TURAN_GRAPH_HPP
#define TURAN_GRAPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "turan/bitset.hpp"

namespace turan {

enum class Side { A, B };

inline Side opposite(Side s) { return s == Side::A ? Side::B : Side::A; }

inline std::string side_name(Side s) { return s == Side::A ? "A" : "B"; }

// Bipartite graph with bitset adjacency rows stored in both orientations.
// Vertices are dense 0-based indices per part; part membership is positional.
// Graphs are immutable after construction: all mutation happens through
// add_edge during a single-owner builder phase, after which instances are
// safely shareable across concurrent readers.
class BipartiteGraph {
  public:
    BipartiteGraph() = default;

    BipartiteGraph(int n_a, int n_b)
        : n_a_(n_a), n_b_(n_b),
          rows_a_(n_a, Bitset(n_b)), rows_b_(n_b, Bitset(n_a)) {
        if (n_a < 0 || n_b < 0) throw std::invalid_argument("negative part size");
    }

    int n_a() const { return n_a_; }
    int n_b() const { return n_b_; }
    int n_side(Side s) const { return s == Side::A ? n_a_ : n_b_; }

    void add_edge(int a, int b) {
        check_a(a);
        check_b(b);
        if (!rows_a_[a].test(b)) {
            rows_a_[a].set(b);
            rows_b_[b].set(a);
            ++m_;
        }
    }

    bool has_edge(int a, int b) const { return rows_a_[a].test(b); }

    void remove_edge(int a, int b) {
        check_a(a);
        check_b(b);
        if (rows_a_[a].test(b)) {
            rows_a_[a].reset(b);
            rows_b_[b].reset(a);
            --m_;
        }
    }

    long long edge_count() const { return m_; }

    const Bitset& row_a(int a) const { check_a(a); return rows_a_[a]; }
    const Bitset& row_b(int b) const { check_b(b); return rows_b_[b]; }
    const Bitset& row(Side s, int v) const { return s == Side::A ? row_a(v) : row_b(v); }

    int deg_a(int a) const { return row_a(a).count(); }
    int deg_b(int b) const { return row_b(b).count(); }
    int deg(Side s, int v) const { return row(s, v).count(); }

    bool operator==(const BipartiteGraph& o) const {
        return n_a_ == o.n_a_ && n_b_ == o.n_b_ && rows_a_ == o.rows_a_;
    }

  private:
    void check_a(int a) const {
        if (a < 0 || a >= n_a_) throw std::invalid_argument("A-vertex index out of range");
    }
    void check_b(int b) const {
        if (b < 0 || b >= n_b_) throw std::invalid_argument("B-vertex index out of range");
    }

    int n_a_ = 0, n_b_ = 0;
    long long m_ = 0;
    std::vector<Bitset> rows_a_, rows_b_;
};

// Simple undirected graph (no self-loops), used for the complete-multipartite
// constructions on the K_n side of the problem.
class GeneralGraph {
  public:
    GeneralGraph() = default;

    explicit GeneralGraph(int n) : n_(n), rows_(n, Bitset(n)) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }

    int n() const { return n_; }

    void add_edge(int u, int v) {
        check(u);
        check(v);
        if (u == v) throw std::invalid_argument("self-loop");
        if (!rows_[u].test(v)) {
            rows_[u].set(v);
            rows_[v].set(u);
            ++m_;
        }
    }

    bool has_edge(int u, int v) const { return rows_[u].test(v); }
    long long edge_count() const { return m_; }
    const Bitset& row(int u) const { check(u); return rows_[u]; }
    int deg(int u) const { return row(u).count(); }

  private:
    void check(int u) const {
        if (u < 0 || u >= n_) throw std::invalid_argument("vertex index out of range");
    }

    int n_ = 0;
    long long m_ = 0;
    std::vector<Bitset> rows_;
};

// A bipartite graph with a designated body: a distinguished subset of part A
// (the spine-carrying side of hedgehogs and their relatives).
struct MarkedGraph {
    BipartiteGraph graph;
    std::vector<int> body; // sorted A-vertex indices

    void validate() const {
        int prev = -1;
        for (int v : body) {
            if (v < 0 || v >= graph.n_a()) throw std::invalid_argument("body vertex out of range");
            if (v <= prev) throw std::invalid_argument("body must be sorted and duplicate-free");
            prev = v;
        }
    }
};

// Optional landing constraint for a pattern body: the host part it must map
// into and, optionally, an allowed subset of that part.
struct BodyTarget {
    Side side = Side::A;
    std::optional<std::vector<int>> allowed;
};

// Injective vertex map from a pattern into a host. Pattern A-vertex i maps to
// host vertex a_image[i]; that vertex lives in host part A when swapped is
// false, in host part B when true (and symmetrically for b_image).
struct Embedding {
    std::vector<int> a_image;
    std::vector<int> b_image;
    bool swapped = false;
    bool induced = false;
    std::optional<BodyTarget> body_target;

    Side host_side_of_pattern_a() const { return swapped ? Side::B : Side::A; }
    Side host_side_of_pattern_b() const { return swapped ? Side::A : Side::B; }
};

// Common neighborhood N(S): vertices of the opposite part adjacent to every
// vertex of S. N(empty) is the whole opposite part (empty intersection).
Bitset common_neighborhood(const BipartiteGraph& g, Side part, const std::vector<int>& s);
Bitset common_neighborhood(const BipartiteGraph& g, Side part, const Bitset& s);

// Induced subgraph together with maps from its dense indices back to g.
struct IndexedSubgraph {
    BipartiteGraph graph;
    std::vector<int> a_map; // subgraph A index -> g A index
    std::vector<int> b_map;
};

IndexedSubgraph induced_subgraph(const BipartiteGraph& g,
                                 const std::vector<int>& a_sub,
                                 const std::vector<int>& b_sub);

enum class IsoStatus { Isomorphic, NonIsomorphic, Inconclusive };

struct IsoResult {
    IsoStatus status = IsoStatus::NonIsomorphic;
    std::optional<Embedding> map;
    std::uint64_t nodes = 0;
};

// Bijective adjacency-preserving-and-reflecting map between g and h.
// With respect_sides false the map may swap the two parts (globally).
// Plain backtracking with degree pruning; desk scale only. Budget exhaustion
// yields Inconclusive, which is distinct from NonIsomorphic.
IsoResult are_isomorphic(const BipartiteGraph& g, const BipartiteGraph& h,
                         bool respect_sides, std::uint64_t node_budget = 20'000'000);

} // namespace turan

#endif
