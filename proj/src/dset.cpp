#include "turan/dset.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "turan/combinatorics.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace turan {

DSetBuildResult build_dset_hypergraph(const BipartiteGraph& g, int d, int s, int q,
                                      const Budget& budget) {
    if (d < 1 || s < 1 || q <= s)
        throw std::invalid_argument("hypergraph build requires d >= 1, s >= 1, q > s");
    DSetBuildResult out;
    out.hypergraph.ground_size = g.n_a();
    out.hypergraph.d = d;
    out.hypergraph.s = s;
    out.hypergraph.q = q;

    int na = g.n_a();
    if (na < d) return out;

    // Partition by largest element: d-sets with maximum ell are the
    // (d-1)-subsets of [0, ell) extended by ell; concatenating over ascending
    // ell reproduces global colex order, so the parallel merge is
    // deterministic.
    int n_last = na - (d - 1);
    std::vector<std::vector<DSetEdge>> chunks(n_last);
    std::atomic<std::uint64_t> enumerated{0};
    std::atomic<bool> over{false};

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int li = 0; li < n_last; ++li) {
        if (over.load(std::memory_order_relaxed)) continue;
        int last = d - 1 + li;
        std::vector<DSetEdge> local;
        std::uint64_t here = 0;
        for_each_colex_subset(last, d - 1, [&](const std::vector<int>& head) {
            ++here;
            Bitset acc = g.row_a(last);
            for (int v : head) acc &= g.row_a(v);
            int nsz = acc.count();
            if (nsz >= s) {
                DSetEdge e;
                e.verts = head;
                e.verts.push_back(last);
                e.n_size = nsz;
                e.red = nsz >= q;
                local.push_back(std::move(e));
            }
        });
        std::uint64_t tot = enumerated.fetch_add(here, std::memory_order_relaxed) + here;
        if (tot > budget.max_nodes) over.store(true, std::memory_order_relaxed);
        chunks[li] = std::move(local);
    }

    out.sets_enumerated = enumerated.load();
    if (over.load()) {
        out.outcome = Outcome::Inconclusive;
        return out;
    }
    for (auto& ch : chunks)
        for (auto& e : ch) {
            out.hypergraph.index.emplace(e.verts, static_cast<int>(out.hypergraph.edges.size()));
            out.hypergraph.edges.push_back(std::move(e));
        }
    out.outcome = Outcome::Found;
    return out;
}

namespace {

struct CliqueEnum {
    const DSetHypergraph& h;
    int q_size;
    bool red;
    const Bitset* cand;
    const std::function<bool(const std::vector<int>&)>& cb;
    std::uint64_t budget_nodes;
    std::uint64_t nodes = 0;
    bool stopped = false;
    bool aborted = false;
    std::vector<int> chosen;
    std::vector<int> scratch;

    CliqueEnum(const DSetHypergraph& h_, int q_, bool red_, const Bitset* cand_,
               std::uint64_t budget_, const std::function<bool(const std::vector<int>&)>& cb_)
        : h(h_), q_size(q_), red(red_), cand(cand_), cb(cb_), budget_nodes(budget_) {}

    bool vertex_ok(int v) const { return !cand || cand->test(v); }

    // All d-subsets of chosen+{v} that include v must be edges of the color.
    bool compatible(int v) {
        int have = static_cast<int>(chosen.size());
        if (have < h.d - 1) return true;
        bool ok = true;
        for_each_colex_subset(have, h.d - 1, [&](const std::vector<int>& idx) {
            if (!ok) return;
            scratch.clear();
            for (int i : idx) scratch.push_back(chosen[i]);
            scratch.push_back(v);
            std::sort(scratch.begin(), scratch.end());
            const DSetEdge* e = h.edge(scratch);
            if (!e || e->red != red) ok = false;
        });
        return ok;
    }

    void rec(int next) {
        if (stopped || aborted) return;
        if (static_cast<int>(chosen.size()) == q_size) {
            if (!cb(chosen)) stopped = true;
            return;
        }
        int need = q_size - static_cast<int>(chosen.size());
        for (int v = next; v <= h.ground_size - need; ++v) {
            if (!vertex_ok(v)) continue;
            if (++nodes > budget_nodes) {
                aborted = true;
                return;
            }
            if (!compatible(v)) continue;
            chosen.push_back(v);
            rec(v + 1);
            chosen.pop_back();
            if (stopped || aborted) return;
        }
    }
};

} // namespace

Outcome for_each_monochromatic_clique(const DSetHypergraph& h, int q_size, bool red,
                                      const Budget& budget, const std::optional<Bitset>& candidates,
                                      const std::function<bool(const std::vector<int>&)>& cb) {
    if (q_size < h.d) throw std::invalid_argument("clique size must be at least d");
    CliqueEnum e(h, q_size, red, candidates ? &*candidates : nullptr, budget.max_nodes, cb);
    e.rec(0);
    return e.aborted ? Outcome::Inconclusive : Outcome::Found;
}

CliqueSearchResult find_monochromatic_clique(const DSetHypergraph& h, int q_size, bool red,
                                             const Budget& budget,
                                             const std::optional<Bitset>& candidates) {
    CliqueSearchResult out;
    Outcome oc = for_each_monochromatic_clique(h, q_size, red, budget, candidates,
                                               [&](const std::vector<int>& c) {
                                                   out.clique = c;
                                                   out.outcome = Outcome::Found;
                                                   return false; // first hit suffices
                                               });
    if (out.outcome != Outcome::Found)
        out.outcome = (oc == Outcome::Inconclusive) ? Outcome::Inconclusive : Outcome::Absent;
    return out;
}

CliqueCollection harvest_blue_cliques(const BipartiteGraph& g, const DSetHypergraph& h, int s,
                                      int q_size, const Budget& budget, std::uint64_t max_s_sets) {
    if (s < 1) throw std::invalid_argument("s must be >= 1");
    CliqueCollection out;
    int nb = g.n_b();
    if (nb < s) return out;

    bool over = false;
    for_each_colex_subset(nb, s, [&](const std::vector<int>& S) {
        if (over) return;
        if (++out.s_sets_scanned > max_s_sets) {
            over = true;
            out.capped = true;
            return;
        }
        Bitset ns = common_neighborhood(g, Side::B, S);
        int avail = ns.count();
        out.star_sum += avail;
        if (avail < q_size) return;
        // Greedy maximal set of pairwise disjoint blue q-cliques inside N(S).
        Bitset remaining = ns;
        while (true) {
            CliqueSearchResult c = find_monochromatic_clique(h, q_size, false, budget, remaining);
            if (c.outcome != Outcome::Found) {
                if (c.outcome == Outcome::Inconclusive) out.capped = true;
                break;
            }
            for (int v : c.clique) remaining.reset(v);
            out.cliques.push_back({c.clique, S});
        }
    });
    double denom = static_cast<double>(q_size) * static_cast<double>(binomial(q_size - 1, s));
    if (denom > 0) out.harvest_lower_estimate = static_cast<double>(out.star_sum) / denom;
    return out;
}

long long star_sum_over_pairs(const BipartiteGraph& g, int s) {
    int nb = g.n_b();
    if (nb < s) return 0;
    int n_last = nb - (s - 1);
    long long total = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
#endif
    for (int li = 0; li < n_last; ++li) {
        int last = s - 1 + li;
        long long local = 0;
        for_each_colex_subset(last, s - 1, [&](const std::vector<int>& head) {
            Bitset acc = g.row_b(last);
            for (int v : head) acc &= g.row_b(v);
            local += acc.count();
        });
        total += local;
    }
    return total;
}

CliqueCountLedger count_cliques_vs_bounds(const CliqueCollection& col, const BipartiteGraph& g,
                                          int s, int q, int d) {
    CliqueCountLedger led;
    led.star_sum_pairs = star_sum_over_pairs(g, s);
    for (int a = 0; a < g.n_a(); ++a)
        led.star_sum_degrees += static_cast<long long>(binomial(g.deg_a(a), s));
    double na = static_cast<double>(g.n_a());
    if (g.n_a() > 0) {
        double avg = static_cast<double>(g.edge_count()) / na;
        led.jensen_lower = na * binomial_real(avg, s);
    }
    led.c_qd = static_cast<double>(binomial(q - 1, d)) * (q - 1);
    for (int b = 0; b < g.n_b(); ++b) led.max_deg_b = std::max(led.max_deg_b, g.deg_b(b));
    double choose = 1.0;
    for (int i = 0; i < q - 1; ++i) choose *= (na - i) / (i + 1);
    led.upper_bound = std::max(choose, 0.0) * led.c_qd * led.max_deg_b;
    led.collection_size = static_cast<long long>(col.cliques.size());
    return led;
}

} // namespace turan
