#include "turan/hedgehog_embed.hpp"

#include <algorithm>
#include <map>

namespace turan {

NeighborhoodCondition check_neighborhood_condition(const BipartiteGraph& g,
                                                   const std::vector<int>& body, int d, int s) {
    int k = static_cast<int>(body.size());
    if (k <= d || d < 1) throw std::invalid_argument("condition check requires k > d >= 1");
    if (s < 0) throw std::invalid_argument("s must be non-negative");
    std::vector<int> sorted = body;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= g.n_a())
            throw std::invalid_argument("body vertex out of range");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw std::invalid_argument("duplicate body vertex");
    }

    NeighborhoodCondition out;
    out.k = k;
    out.d = d;
    out.s = s;
    for_each_colex_subset(k, d, [&](const std::vector<int>& idx) {
        std::vector<int> x(d);
        for (int i = 0; i < d; ++i) x[i] = sorted[idx[i]];
        Bitset nx = common_neighborhood(g, Side::A, x);
        long long nx_size = nx.count();
        Bitset in_x(k);
        for (int i : idx) in_x.set(i);
        for (int i = 0; i < k; ++i) {
            if (in_x.test(i)) continue;
            int y = sorted[i];
            long long lhs = g.row_a(y).intersection_count(nx);
            NeighborhoodCondition::Pair pr;
            pr.x = x;
            pr.y = y;
            pr.lhs = lhs;
            pr.rhs_num = nx_size - s;
            pr.rhs_den = k - d;
            if (nx_size == s) out.boundary.push_back(pr);
            if (lhs * (k - d) >= nx_size - s) out.violations.push_back(pr);
        }
    });
    return out;
}

std::optional<HedgehogExtraction> extract_hedgehog(const BipartiteGraph& g,
                                                   const std::vector<int>& body, int d, int s) {
    NeighborhoodCondition cond = check_neighborhood_condition(g, body, d, s);
    if (!cond.holds()) throw ConditionError(std::move(cond));
    if (s < 1) throw std::invalid_argument("extraction requires s >= 1");

    int k = static_cast<int>(body.size());
    std::vector<int> sorted = body;
    std::sort(sorted.begin(), sorted.end());

    MarkedGraph pattern = hedgehog(k, d, s);
    Embedding emb;
    emb.a_image = sorted;
    emb.b_image.assign(pattern.graph.n_b(), -1);
    emb.induced = true;
    emb.body_target = BodyTarget{Side::A, sorted};

    Bitset assigned(g.n_b());
    std::uint64_t block = 0;
    bool ok = true;
    for_each_colex_subset(k, d, [&](const std::vector<int>& idx) {
        if (!ok) return;
        std::vector<int> x(d);
        for (int i = 0; i < d; ++i) x[i] = sorted[idx[i]];
        Bitset cand = common_neighborhood(g, Side::A, x);
        cand.and_not(assigned);
        Bitset in_x(k);
        for (int i : idx) in_x.set(i);
        for (int i = 0; i < k; ++i)
            if (!in_x.test(i)) cand.and_not(g.row_a(sorted[i]));
        int base = static_cast<int>(block) * s;
        int got = 0;
        for (int b = cand.next(0); b >= 0 && got < s; b = cand.next(b + 1)) {
            emb.b_image[base + got] = b;
            assigned.set(b);
            ++got;
        }
        if (got < s) ok = false; // cannot happen when the condition holds
        ++block;
    });
    if (!ok) return std::nullopt;

    HedgehogExtraction out;
    out.pattern = std::move(pattern);
    out.embedding = std::move(emb);
    return out;
}

namespace {

struct Group {
    std::vector<int> nbhd;     // sorted pattern V' indices
    std::vector<int> members;  // pattern U' indices with exactly this neighborhood
};

} // namespace

BoundedEmbedResult embed_bounded_degree(const BipartiteGraph& g_prime, int d, int r, int max_k) {
    if (d < 2 || r < 0 || r > d - 2)
        throw std::invalid_argument("embed_bounded_degree requires d >= 2 and 0 <= r <= d-2");
    int nv = g_prime.n_a(), nu = g_prime.n_b();
    for (int u = 0; u < nu; ++u)
        if (g_prime.deg_b(u) > d)
            throw std::invalid_argument("U'-vertex " + std::to_string(u) + " has degree " +
                                        std::to_string(g_prime.deg_b(u)) + " > d");
    BicliqueResult bad = find_biclique(g_prime, d, d - r);
    if (bad.found) {
        std::string msg = "forbidden complete bipartite subgraph: V'={";
        for (std::size_t i = 0; i < bad.a_set.size(); ++i)
            msg += (i ? "," : "") + std::to_string(bad.a_set[i]);
        msg += "} U'={";
        for (std::size_t i = 0; i < bad.b_set.size(); ++i)
            msg += (i ? "," : "") + std::to_string(bad.b_set[i]);
        msg += "}";
        throw std::invalid_argument(msg);
    }

    int j = d - r - 1;

    // Canonical form: U' vertices grouped by exact neighborhood.
    std::map<std::vector<int>, std::vector<int>> by_nbhd;
    for (int u = 0; u < nu; ++u) by_nbhd[g_prime.row_b(u).to_vector()].push_back(u);
    std::vector<Group> full, low;
    for (auto& [nb, members] : by_nbhd) {
        Group grp{nb, members};
        if (static_cast<int>(nb.size()) == d)
            full.push_back(std::move(grp));
        else
            low.push_back(std::move(grp));
    }

    // Padding multiplicity per low group: smallest s with
    // s * j * C(d, |A|) >= |group|; each padding set consumes d fresh body
    // vertices, allocated disjointly.
    long long pad_sets_total = 0;
    std::vector<int> pad_sets(low.size());
    for (std::size_t i = 0; i < low.size(); ++i) {
        long long cap_per_set =
            static_cast<long long>(j) * static_cast<long long>(binomial(d, static_cast<int>(low[i].nbhd.size())));
        pad_sets[i] = static_cast<int>((static_cast<long long>(low[i].members.size()) + cap_per_set - 1) / cap_per_set);
        pad_sets_total += pad_sets[i];
    }
    long long k_needed = std::max<long long>(d, nv + pad_sets_total * d);

    BoundedEmbedResult out;
    out.k_used = static_cast<int>(k_needed);
    if (k_needed > max_k) {
        out.outcome = Outcome::Inconclusive;
        return out;
    }
    int k = static_cast<int>(k_needed);
    out.host = w_graph(k, d, r);

    Embedding emb;
    emb.induced = true;
    emb.a_image.resize(nv);
    for (int i = 0; i < nv; ++i) emb.a_image[i] = i;
    emb.b_image.assign(nu, -1);

    // Slot cursor per block of the host hedgehog.
    std::map<std::uint64_t, int> used_in_block;
    auto assign_to_block = [&](const std::vector<int>& block_set, int pattern_u) {
        std::uint64_t rank = colex_rank(block_set);
        int& used = used_in_block[rank];
        int host_b = static_cast<int>(rank) * j + used;
        ++used;
        emb.b_image[pattern_u] = host_b;
    };

    for (const Group& grp : full) {
        // capacity j per block is exactly what the biclique precondition allows
        for (int u : grp.members) assign_to_block(grp.nbhd, u);
    }

    int next_pad = nv;
    for (std::size_t gi = 0; gi < low.size(); ++gi) {
        const Group& grp = low[gi];
        int take = static_cast<int>(grp.nbhd.size());
        std::size_t placed = 0;
        for (int setno = 0; setno < pad_sets[gi] && placed < grp.members.size(); ++setno) {
            std::vector<int> pad(d);
            for (int i = 0; i < d; ++i) pad[i] = next_pad + i;
            next_pad += d;
            // all (d - |A|)-subsets of this padding set
            for_each_colex_subset(d, d - take, [&](const std::vector<int>& sel) {
                if (placed >= grp.members.size()) return;
                std::vector<int> block = grp.nbhd;
                for (int i : sel) block.push_back(pad[i]);
                std::sort(block.begin(), block.end());
                for (int t = 0; t < j && placed < grp.members.size(); ++t)
                    assign_to_block(block, grp.members[placed++]);
            });
        }
    }

    out.embedding = std::move(emb);
    out.outcome = Outcome::Found;
    return out;
}

BoundedEmbedResult embed_powerset(int d, int max_k) {
    if (d < 3) throw std::invalid_argument("embed_powerset requires d >= 3");
    MarkedGraph inc = powerset_incidence(d + 1);
    int full_set = inc.graph.n_b() - 1; // bitmask 2^(d+1)-1 sorts last

    std::vector<int> all_a(inc.graph.n_a());
    for (int i = 0; i < inc.graph.n_a(); ++i) all_a[i] = i;
    std::vector<int> b_rest;
    for (int b = 0; b < inc.graph.n_b(); ++b)
        if (b != full_set) b_rest.push_back(b);
    IndexedSubgraph rest = induced_subgraph(inc.graph, all_a, b_rest);

    BoundedEmbedResult sub = embed_bounded_degree(rest.graph, d, d - 2, max_k);
    if (sub.outcome != Outcome::Found) return sub;

    // Y vertices occupy the last r B-indices of the host W graph.
    int blocks_end = sub.host.graph.n_b() - (d - 2);
    BoundedEmbedResult out;
    out.k_used = sub.k_used;
    out.host = std::move(sub.host);
    out.embedding.induced = true;
    out.embedding.a_image = sub.embedding.a_image;
    out.embedding.b_image.assign(inc.graph.n_b(), -1);
    for (std::size_t i = 0; i < b_rest.size(); ++i)
        out.embedding.b_image[b_rest[i]] = sub.embedding.b_image[i];
    out.embedding.b_image[full_set] = blocks_end; // first Y vertex
    out.outcome = Outcome::Found;
    return out;
}

} // namespace turan
