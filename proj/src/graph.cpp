#include "turan/graph.hpp"

#include <algorithm>

namespace turan {

Bitset common_neighborhood(const BipartiteGraph& g, Side part, const std::vector<int>& s) {
    Bitset acc(g.n_side(opposite(part)));
    acc.set_all();
    for (int v : s) {
        if (v < 0 || v >= g.n_side(part))
            throw std::invalid_argument("common_neighborhood: vertex outside the named part");
        acc &= g.row(part, v);
    }
    return acc;
}

Bitset common_neighborhood(const BipartiteGraph& g, Side part, const Bitset& s) {
    if (s.size() != g.n_side(part))
        throw std::invalid_argument("common_neighborhood: set width does not match part");
    Bitset acc(g.n_side(opposite(part)));
    acc.set_all();
    s.for_each([&](int v) { acc &= g.row(part, v); });
    return acc;
}

IndexedSubgraph induced_subgraph(const BipartiteGraph& g,
                                 const std::vector<int>& a_sub,
                                 const std::vector<int>& b_sub) {
    for (int a : a_sub)
        if (a < 0 || a >= g.n_a()) throw std::invalid_argument("induced_subgraph: A index out of range");
    for (int b : b_sub)
        if (b < 0 || b >= g.n_b()) throw std::invalid_argument("induced_subgraph: B index out of range");

    IndexedSubgraph out;
    out.a_map = a_sub;
    out.b_map = b_sub;
    out.graph = BipartiteGraph(static_cast<int>(a_sub.size()), static_cast<int>(b_sub.size()));
    for (std::size_t i = 0; i < a_sub.size(); ++i) {
        const Bitset& row = g.row_a(a_sub[i]);
        for (std::size_t j = 0; j < b_sub.size(); ++j)
            if (row.test(b_sub[j])) out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return out;
}

namespace {

// Backtracking bijection search for isomorphism under a fixed orientation.
// Pattern vertices are matched in a static order (A side then B side,
// descending degree); candidates filtered by degree equality and
// adjacency consistency with everything already placed.
struct IsoSearch {
    const BipartiteGraph& g;
    const BipartiteGraph& h;
    bool swapped;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    std::vector<int> order;      // unified g indices: a in [0,n_a), b in [n_a, n_a+n_b)
    std::vector<int> img_a, img_b;
    Bitset used_host_a, used_host_b;

    IsoSearch(const BipartiteGraph& g_, const BipartiteGraph& h_, bool swapped_, std::uint64_t budget_)
        : g(g_), h(h_), swapped(swapped_), budget(budget_),
          img_a(g_.n_a(), -1), img_b(g_.n_b(), -1),
          used_host_a(h_.n_a()), used_host_b(h_.n_b()) {
        order.reserve(g.n_a() + g.n_b());
        for (int a = 0; a < g.n_a(); ++a) order.push_back(a);
        for (int b = 0; b < g.n_b(); ++b) order.push_back(g.n_a() + b);
        std::stable_sort(order.begin(), order.end(), [&](int u, int v) {
            return unified_deg(u) > unified_deg(v);
        });
    }

    int unified_deg(int u) const {
        return u < g.n_a() ? g.deg_a(u) : g.deg_b(u - g.n_a());
    }

    bool run() { return place(0); }

    bool place(std::size_t pos) {
        if (pos == order.size()) return true;
        int u = order[pos];
        bool u_in_a = u < g.n_a();
        int ui = u_in_a ? u : u - g.n_a();
        // Host side this pattern vertex maps into.
        bool host_a_side = u_in_a != swapped;
        int host_n = host_a_side ? h.n_a() : h.n_b();
        Bitset& used = host_a_side ? used_host_a : used_host_b;
        int want_deg = u_in_a ? g.deg_a(ui) : g.deg_b(ui);

        for (int c = 0; c < host_n; ++c) {
            if (used.test(c)) continue;
            if (++nodes > budget) {
                out_of_budget = true;
                return false;
            }
            int host_deg = host_a_side ? h.deg_a(c) : h.deg_b(c);
            if (host_deg != want_deg) continue;
            if (!consistent(u_in_a, ui, c)) continue;
            (u_in_a ? img_a[ui] : img_b[ui]) = c;
            used.set(c);
            if (place(pos + 1)) return true;
            used.reset(c);
            (u_in_a ? img_a[ui] : img_b[ui]) = -1;
            if (out_of_budget) return false;
        }
        return false;
    }

    // Edge and non-edge agreement against already-placed opposite-part vertices.
    bool consistent(bool u_in_a, int ui, int c) const {
        if (u_in_a) {
            for (int b = 0; b < g.n_b(); ++b) {
                if (img_b[b] < 0) continue;
                bool pe = g.has_edge(ui, b);
                bool he = swapped ? h.has_edge(img_b[b], c) : h.has_edge(c, img_b[b]);
                if (pe != he) return false;
            }
        } else {
            for (int a = 0; a < g.n_a(); ++a) {
                if (img_a[a] < 0) continue;
                bool pe = g.has_edge(a, ui);
                bool he = swapped ? h.has_edge(c, img_a[a]) : h.has_edge(img_a[a], c);
                if (pe != he) return false;
            }
        }
        return true;
    }
};

bool degree_multisets_match(const BipartiteGraph& g, const BipartiteGraph& h, bool swapped) {
    auto degs = [](const BipartiteGraph& x, Side s) {
        std::vector<int> d;
        d.reserve(x.n_side(s));
        for (int v = 0; v < x.n_side(s); ++v) d.push_back(x.deg(s, v));
        std::sort(d.begin(), d.end());
        return d;
    };
    Side ha = swapped ? Side::B : Side::A;
    return degs(g, Side::A) == degs(h, ha) && degs(g, Side::B) == degs(h, opposite(ha));
}

} // namespace

IsoResult are_isomorphic(const BipartiteGraph& g, const BipartiteGraph& h,
                         bool respect_sides, std::uint64_t node_budget) {
    IsoResult res;
    bool any_budget_hit = false;
    for (int sw = 0; sw <= (respect_sides ? 0 : 1); ++sw) {
        bool swapped = sw == 1;
        int ha = swapped ? h.n_b() : h.n_a();
        int hb = swapped ? h.n_a() : h.n_b();
        if (g.n_a() != ha || g.n_b() != hb) continue;
        if (g.edge_count() != h.edge_count()) continue;
        if (!degree_multisets_match(g, h, swapped)) continue;
        IsoSearch s(g, h, swapped, node_budget);
        bool found = s.run();
        res.nodes += s.nodes;
        if (found) {
            Embedding e;
            e.a_image = s.img_a;
            e.b_image = s.img_b;
            e.swapped = swapped;
            e.induced = true;
            res.status = IsoStatus::Isomorphic;
            res.map = e;
            return res;
        }
        if (s.out_of_budget) any_budget_hit = true;
    }
    res.status = any_budget_hit ? IsoStatus::Inconclusive : IsoStatus::NonIsomorphic;
    return res;
}

} // namespace turan
