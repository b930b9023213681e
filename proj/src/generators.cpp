#include "turan/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "turan/rng.hpp"

namespace turan {

namespace {

void fill_hedgehog_edges(BipartiteGraph& g, int k, int d, int j) {
    std::uint64_t block = 0;
    for_each_colex_subset(k, d, [&](const std::vector<int>& e) {
        for (int t = 0; t < j; ++t) {
            int b = static_cast<int>(block) * j + t;
            for (int a : e) g.add_edge(a, b);
        }
        ++block;
    });
}

} // namespace

MarkedGraph hedgehog(int k, int d, int j) {
    if (!(k >= d && d >= 1 && j >= 1))
        throw std::invalid_argument("hedgehog requires k >= d >= 1 and j >= 1");
    std::uint64_t blocks = binomial(k, d);
    std::uint64_t nb = blocks * static_cast<std::uint64_t>(j);
    if (nb > 5'000'000) throw std::invalid_argument("hedgehog too large");
    MarkedGraph out;
    out.graph = BipartiteGraph(k, static_cast<int>(nb));
    fill_hedgehog_edges(out.graph, k, d, j);
    out.body.resize(k);
    for (int i = 0; i < k; ++i) out.body[i] = i;
    return out;
}

MarkedGraph w_graph(int k, int d, int r) {
    if (!(0 <= r && r <= d - 2 && d <= k))
        throw std::invalid_argument("w_graph requires 0 <= r <= d-2 <= k-2");
    int j = d - r - 1;
    std::uint64_t blocks = binomial(k, d);
    std::uint64_t nb = blocks * static_cast<std::uint64_t>(j) + static_cast<std::uint64_t>(r);
    if (nb > 5'000'000) throw std::invalid_argument("w_graph too large");
    MarkedGraph out;
    out.graph = BipartiteGraph(k, static_cast<int>(nb));
    fill_hedgehog_edges(out.graph, k, d, j);
    int y0 = static_cast<int>(blocks) * j;
    for (int t = 0; t < r; ++t)
        for (int a = 0; a < k; ++a) out.graph.add_edge(a, y0 + t);
    out.body.resize(k);
    for (int i = 0; i < k; ++i) out.body[i] = i;
    return out;
}

MarkedGraph powerset_incidence(int m) {
    if (m < 1) throw std::invalid_argument("powerset_incidence requires m >= 1");
    if (m > 20) throw std::invalid_argument("powerset_incidence: m too large for bitset width");
    int nb = 1 << m;
    MarkedGraph out;
    out.graph = BipartiteGraph(m, nb);
    for (int s = 0; s < nb; ++s)
        for (int i = 0; i < m; ++i)
            if (s & (1 << i)) out.graph.add_edge(i, s);
    out.body.resize(m);
    for (int i = 0; i < m; ++i) out.body[i] = i;
    return out;
}

GeneralGraph turan_graph(int n, int r) {
    if (r < 1 || r > n) throw std::invalid_argument("turan_graph requires 1 <= r <= n");
    GeneralGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u % r != v % r) g.add_edge(u, v);
    return g;
}

BipartiteGraph complete_bipartite(int a, int b) {
    BipartiteGraph g(a, b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, j);
    return g;
}

namespace {

Rational gamma_of(long long vertices, long long edges) {
    if (edges < 2) throw std::invalid_argument("gamma requires at least 2 edges");
    return Rational(vertices - 2, edges - 1);
}

} // namespace

Rational gamma_value(const BipartiteGraph& g) {
    return gamma_of(g.n_a() + g.n_b(), g.edge_count());
}

Rational gamma_value(const GeneralGraph& g) { return gamma_of(g.n(), g.edge_count()); }

BipartiteGraph random_bipartite(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("negative size");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");
    Rng rng(seed);
    BipartiteGraph g(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (rng.bernoulli(p)) g.add_edge(a, b);
    return g;
}

DeletionResult deletion_construct(int n, const std::vector<BipartiteGraph>& family,
                                  std::uint64_t seed, double margin, const Budget& budget) {
    if (family.empty()) throw std::invalid_argument("deletion_construct: empty family");
    Rational gmax = gamma_value(family.front());
    for (const auto& h : family) {
        Rational g = gamma_value(h); // throws when a member has < 2 edges
        if (gmax < g) gmax = g;
    }

    DeletionResult out;
    out.report.n = n;
    out.report.gamma_exponent = gmax;
    double p = margin * std::pow(static_cast<double>(n), -gmax.value());
    p = std::min(1.0, std::max(0.0, p));
    out.report.p = p;

    BipartiteGraph g = random_bipartite(n, p, seed);
    out.report.sampled_edges = g.edge_count();

    // First pattern edge in (a, b) lexicographic order; its image is the
    // edge removed for each discovered copy.
    auto first_edge = [](const BipartiteGraph& h) -> std::pair<int, int> {
        for (int a = 0; a < h.n_a(); ++a) {
            int b = h.row_a(a).next(0);
            if (b >= 0) return {a, b};
        }
        return {-1, -1};
    };

    while (true) {
        std::set<std::pair<int, int>> to_delete;
        long long copies_this_round = 0;
        bool exhausted = true;
        for (const auto& h : family) {
            auto [pa, pb] = first_edge(h);
            for (bool swapped : {false, true}) {
                Outcome oc = for_each_embedding(
                    g, h, swapped, false, budget,
                    [&](const std::vector<int>& ia, const std::vector<int>& ib) {
                        ++copies_this_round;
                        int ha = swapped ? ib[pb] : ia[pa];
                        int hb = swapped ? ia[pa] : ib[pb];
                        to_delete.insert({ha, hb});
                        return true;
                    });
                if (oc == Outcome::Inconclusive) exhausted = false;
            }
        }
        if (!exhausted) {
            out.report.status = "budget-exceeded";
            out.report.final_edges = g.edge_count();
            return out; // output withheld
        }
        out.report.copies_found += copies_this_round;
        if (to_delete.empty()) break;
        for (auto [a, b] : to_delete) g.remove_edge(a, b);
        out.report.edges_deleted += static_cast<long long>(to_delete.size());
        ++out.report.rounds;
    }

    // Independent re-verification of the postcondition.
    bool free = true;
    for (const auto& h : family) {
        CountResult c = count_copies(g, h, false, false, budget);
        if (c.outcome != Outcome::Found || c.count != 0) {
            free = false;
            break;
        }
    }
    out.report.verified_free = free;
    out.report.final_edges = g.edge_count();
    out.report.status = free ? "ok" : "verification-failed";
    if (free) out.graph = std::move(g);
    return out;
}

} // namespace turan
