#include "turan/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "turan/generators.hpp"
#include "turan/hedgehog_embed.hpp"
#include "turan/regularize.hpp"

namespace turan {

SearchConfig SearchConfig::for_hedgehog(int k, int d, int s, int t) {
    SearchConfig c;
    c.k = k;
    c.d = d;
    c.s = s;
    c.t = t;
    c.q = std::max(2 * s + 2, k);
    c.gamma_exp = std::min(1.0 / (2 * t), (1.0 - 1.0 / d) / 2.0);
    c.validate();
    return c;
}

SearchConfig SearchConfig::for_w(int k, int d, int r, int t) {
    SearchConfig c = for_hedgehog(k, d, d - r - 1, t);
    c.r = r;
    c.validate();
    return c;
}

void SearchConfig::validate() const {
    if (t < 1) throw std::invalid_argument("config: t must be >= 1");
    if (!(gamma_exp >= 0 && gamma_exp < 1.0 / t))
        throw std::invalid_argument("config: gamma must lie in [0, 1/t)");
    if (!(q > 2 * s)) throw std::invalid_argument("config: q must exceed 2s");
    if (!(d >= 1 && d <= k)) throw std::invalid_argument("config: need 1 <= d <= k");
    if (s < 1) throw std::invalid_argument("config: s must be >= 1");
    if (r >= 0) {
        if (!(r + 2 <= d)) throw std::invalid_argument("config: need r+2 <= d");
        if (s != d - r - 1) throw std::invalid_argument("config: s must equal d-r-1");
    }
}

namespace {

StageNote note(const std::string& name, bool ok, const std::string& text = "") {
    StageNote n;
    n.name = name;
    n.ok = ok;
    n.note = text;
    return n;
}

// Assembly for the blue path: body d-sets with pairwise disjoint common
// neighborhoods yield the hedgehog by taking any s vertices per d-set;
// disjointness plus clique membership make the copy induced.
std::optional<Embedding> assemble_from_body(const BipartiteGraph& g, const std::vector<int>& body,
                                            int d, int s) {
    int k = static_cast<int>(body.size());
    Embedding emb;
    emb.a_image = body;
    emb.induced = true;
    emb.body_target = BodyTarget{Side::A, body};
    emb.b_image.assign(static_cast<std::size_t>(binomial(k, d)) * s, -1);
    std::uint64_t block = 0;
    bool ok = true;
    for_each_colex_subset(k, d, [&](const std::vector<int>& idx) {
        if (!ok) return;
        std::vector<int> x(d);
        for (int i = 0; i < d; ++i) x[i] = body[idx[i]];
        Bitset nx = common_neighborhood(g, Side::A, x);
        int base = static_cast<int>(block) * s;
        int got = 0;
        for (int b = nx.next(0); b >= 0 && got < s; b = nx.next(b + 1))
            emb.b_image[base + got++] = b;
        if (got < s) ok = false;
        ++block;
    });
    if (!ok) return std::nullopt;
    return emb;
}

bool disjoint_neighborhoods(const BipartiteGraph& g, const std::vector<int>& verts, int d) {
    std::vector<Bitset> hoods;
    bool ok = true;
    for_each_colex_subset(static_cast<int>(verts.size()), d, [&](const std::vector<int>& idx) {
        if (!ok) return;
        std::vector<int> x(d);
        for (int i = 0; i < d; ++i) x[i] = verts[idx[i]];
        hoods.push_back(common_neighborhood(g, Side::A, x));
    });
    for (std::size_t i = 0; i < hoods.size() && ok; ++i)
        for (std::size_t j = i + 1; j < hoods.size(); ++j)
            if (hoods[i].intersects(hoods[j])) {
                ok = false;
                break;
            }
    return ok;
}

} // namespace

HedgehogSearchResult find_induced_hedgehog(const BipartiteGraph& g, const SearchConfig& cfg) {
    cfg.validate();
    HedgehogSearchResult res;
    res.pattern = hedgehog(cfg.k, cfg.d, cfg.s);

    // (i) hypergraph and coloring
    DSetBuildResult built = build_dset_hypergraph(g, cfg.d, cfg.s, cfg.q, cfg.budget);
    {
        StageNote n = note("hypergraph", built.outcome == Outcome::Found);
        n.quantities["edges"] = static_cast<double>(built.hypergraph.edges.size());
        n.quantities["sets_enumerated"] = static_cast<double>(built.sets_enumerated);
        long long reds = 0;
        for (const auto& e : built.hypergraph.edges) reds += e.red;
        n.quantities["red_edges"] = static_cast<double>(reds);
        n.quantities["blue_edges"] = static_cast<double>(built.hypergraph.edges.size()) - reds;
        res.stages.push_back(std::move(n));
    }

    auto try_return = [&](Embedding emb, const std::string& path) -> bool {
        VerifyResult v = verify_embedding(g, res.pattern, emb);
        if (!v.ok) {
            res.stages.push_back(note("internal-verify", false, v.reason));
            return false;
        }
        res.outcome = Outcome::Found;
        res.embedding = std::move(emb);
        res.path = path;
        return true;
    };

    if (built.outcome == Outcome::Found) {
        const DSetHypergraph& h = built.hypergraph;

        // (ii) red path
        {
            StageNote n = note("red-clique", false);
            std::uint64_t cliques_seen = 0, subsets_seen = 0;
            bool done = false;
            for_each_monochromatic_clique(h, cfg.q, true, cfg.budget, std::nullopt,
                                          [&](const std::vector<int>& clique) {
                ++cliques_seen;
                for_each_colex_subset(cfg.q, cfg.k, [&](const std::vector<int>& idx) {
                    if (done || subsets_seen >= cfg.max_k_subsets) return;
                    ++subsets_seen;
                    std::vector<int> body(cfg.k);
                    for (int i = 0; i < cfg.k; ++i) body[i] = clique[idx[i]];
                    NeighborhoodCondition cond =
                        check_neighborhood_condition(g, body, cfg.d, cfg.s);
                    if (!cond.holds()) return;
                    auto ext = extract_hedgehog(g, body, cfg.d, cfg.s);
                    if (ext && try_return(ext->embedding, "red-clique")) done = true;
                });
                return !done && cliques_seen < cfg.max_cliques && subsets_seen < cfg.max_k_subsets;
            });
            n.ok = done;
            n.quantities["cliques_seen"] = static_cast<double>(cliques_seen);
            n.quantities["k_subsets_checked"] = static_cast<double>(subsets_seen);
            res.stages.push_back(std::move(n));
            if (done) return res;
        }

        // (iii) blue path
        {
            StageNote n = note("blue-clique", false);
            std::uint64_t cliques_seen = 0;
            bool done = false;
            for_each_monochromatic_clique(h, cfg.q, false, cfg.budget, std::nullopt,
                                          [&](const std::vector<int>& clique) {
                ++cliques_seen;
                if (disjoint_neighborhoods(g, clique, cfg.d)) {
                    std::vector<int> body(clique.begin(), clique.begin() + cfg.k);
                    auto emb = assemble_from_body(g, body, cfg.d, cfg.s);
                    if (emb && try_return(*emb, "blue-clique")) done = true;
                }
                return !done && cliques_seen < cfg.max_cliques;
            });
            n.ok = done;
            n.quantities["cliques_seen"] = static_cast<double>(cliques_seen);
            res.stages.push_back(std::move(n));
            if (done) return res;
        }
    }

    // (iv) direct exhaustive fallback
    {
        EmbedQuery q;
        q.induced = true;
        q.respect_sides = true;
        q.body_target = BodyTarget{Side::A, std::nullopt};
        q.budget = cfg.budget;
        EmbedResult direct = find_embedding(g, res.pattern, q);
        StageNote n = note("direct", direct.outcome == Outcome::Found, outcome_name(direct.outcome));
        n.quantities["nodes"] = static_cast<double>(direct.nodes);
        res.stages.push_back(std::move(n));
        if (direct.outcome == Outcome::Found) {
            if (try_return(*direct.embedding, "direct")) return res;
            res.outcome = Outcome::Inconclusive;
            return res;
        }
        res.outcome = direct.outcome;
    }
    return res;
}

namespace {

double safe_pow(double x, double e) { return std::pow(std::max(x, 0.0), e); }

} // namespace

WSearchResult find_induced_w(const BipartiteGraph& g, const SearchConfig& cfg) {
    cfg.validate();
    if (cfg.r < 0) throw std::invalid_argument("find_induced_w requires a config with r >= 0");
    WSearchResult res;
    res.pattern = w_graph(cfg.k, cfg.d, cfg.r);

    // (0) biclique scan: a K_{t,t} certificate preempts the search
    {
        BicliqueResult bc = find_biclique(g, cfg.t, cfg.t);
        StageNote n = note("biclique-scan", true, bc.found ? "found" : "absent");
        res.stages.push_back(std::move(n));
        if (bc.found) {
            res.kind = WSearchResult::Kind::Biclique;
            res.biclique = {bc.a_set, bc.b_set};
            return res;
        }
    }

    auto fallback = [&](const std::string& failed) {
        res.failed_stage = failed;
        EmbedQuery q;
        q.induced = true;
        q.respect_sides = true;
        q.body_target = BodyTarget{Side::A, std::nullopt};
        q.budget = cfg.budget;
        EmbedResult direct = find_embedding(g, res.pattern, q);
        StageNote n = note("direct", direct.outcome == Outcome::Found, outcome_name(direct.outcome));
        n.quantities["nodes"] = static_cast<double>(direct.nodes);
        res.stages.push_back(std::move(n));
        if (direct.outcome == Outcome::Found) {
            VerifyResult v = verify_embedding(g, res.pattern, *direct.embedding);
            if (v.ok) {
                res.kind = WSearchResult::Kind::Embedding;
                res.embedding = direct.embedding;
            } else {
                res.stages.push_back(note("internal-verify", false, v.reason));
                res.kind = WSearchResult::Kind::Inconclusive;
            }
        } else {
            res.kind = direct.outcome == Outcome::Absent ? WSearchResult::Kind::Absent
                                                         : WSearchResult::Kind::Inconclusive;
        }
        return res;
    };

    // (1) almost-regularization with exponent 1 - 1/d
    double eps_red = 1.0 - 1.0 / cfg.d;
    RegularizeResult reg = almost_regularize(g, eps_red, cfg.eps);
    {
        StageNote n = note("regularize", reg.report.met_contract, reg.report.status);
        n.quantities["m"] = reg.report.m;
        n.quantities["edges"] = static_cast<double>(reg.report.edges);
        n.quantities["K_achieved"] = reg.report.K_achieved;
        n.quantities["hypothesis_met"] = reg.report.hypothesis_met;
        res.stages.push_back(std::move(n));
    }
    const BipartiteGraph& gp = reg.report.hypothesis_met ? reg.graph : g;
    const std::vector<int>* a_back = reg.report.hypothesis_met ? &reg.a_keep : nullptr;
    const std::vector<int>* b_back = reg.report.hypothesis_met ? &reg.b_keep : nullptr;
    double K = std::max(reg.report.K_achieved, 1.0);
    int nb_prime = gp.n_b();
    if (nb_prime == 0 || gp.n_a() == 0) return fallback("regularize");

    // (2) densest r-set X and the dense-set target |A|
    std::vector<int> x_set; // indices in gp's B side
    Bitset a_mask(gp.n_a());
    double target =
        std::ceil(cfg.xi / 2.0 * safe_pow(nb_prime, 1.0 - double(cfg.r) / cfg.d - 1.0 / cfg.d));
    int target_sz = std::max(cfg.k, static_cast<int>(target));
    {
        StageNote n = note("dense-set", false);
        if (cfg.r > 0) {
            int best = -1;
            std::vector<int> best_set;
            std::uint64_t scanned = 0;
            bool over = false;
            for_each_colex_subset(nb_prime, cfg.r, [&](const std::vector<int>& S) {
                if (over) return;
                if (++scanned > cfg.max_s_sets) {
                    over = true;
                    return;
                }
                int c = common_neighborhood(gp, Side::B, S).count();
                if (c > best) {
                    best = c;
                    best_set = S;
                }
            });
            n.quantities["r_sets_scanned"] = static_cast<double>(scanned);
            n.quantities["best_common"] = best;
            if (best < cfg.k) {
                res.stages.push_back(std::move(n));
                return fallback("dense-set");
            }
            x_set = best_set;
            Bitset nx = common_neighborhood(gp, Side::B, x_set);
            int kept = 0;
            for (int a = nx.next(0); a >= 0 && kept < target_sz; a = nx.next(a + 1)) {
                a_mask.set(a);
                ++kept;
            }
            // diagnostic: the contradiction margin of the dense-set existence bound
            if (cfg.r >= 1) {
                double rhs = 2.0 * safe_pow(cfg.xi, 1.0 / cfg.r) * safe_pow(K, 1.0 - 1.0 / cfg.r) *
                             safe_pow(nb_prime, 2.0 - 1.0 / cfg.d - 1.0 / (double(cfg.r) * cfg.d));
                n.quantities["kst_margin_rhs"] = rhs;
                n.quantities["kst_margin_lhs"] = static_cast<double>(gp.edge_count());
            }
        } else {
            int kept = 0;
            for (int a = 0; a < gp.n_a() && kept < target_sz; ++a) {
                a_mask.set(a);
                ++kept;
            }
        }
        n.ok = a_mask.count() >= cfg.k;
        n.quantities["target"] = target_sz;
        n.quantities["A_size"] = a_mask.count();
        bool ok = n.ok;
        res.stages.push_back(std::move(n));
        if (!ok) return fallback("dense-set");
    }

    // (3) bad-vertex removal
    std::vector<int> a_sub = a_mask.to_vector();
    std::vector<int> b_sub;
    double bad_threshold = safe_pow(a_mask.count(), 1.0 - cfg.gamma_exp);
    {
        Bitset in_x(nb_prime);
        for (int b : x_set) in_x.set(b);
        int n_bad = 0;
        for (int b = 0; b < nb_prime; ++b) {
            int deg_in_a = gp.row_b(b).intersection_count(a_mask);
            bool bad = static_cast<double>(deg_in_a) >= bad_threshold;
            if (bad || in_x.test(b))
                ++n_bad;
            else
                b_sub.push_back(b);
        }
        StageNote n = note("bad-vertices", true);
        n.quantities["threshold"] = bad_threshold;
        n.quantities["V_bad"] = n_bad;
        n.quantities["A_pow_gamma"] = safe_pow(a_mask.count(), cfg.gamma_exp);
        res.stages.push_back(std::move(n));
    }
    if (b_sub.empty()) return fallback("bad-vertices");

    // (4) hedgehog search on G[A, B]
    IndexedSubgraph sub = induced_subgraph(gp, a_sub, b_sub);
    {
        StageNote n = note("proposition-hypotheses", true);
        double nb_d = static_cast<double>(sub.graph.n_b());
        double lhs_a = sub.graph.n_a();
        double rhs_a = cfg.xi * safe_pow(nb_d, double(cfg.s) / cfg.d);
        int max_deg_b = 0;
        for (int b = 0; b < sub.graph.n_b(); ++b)
            max_deg_b = std::max(max_deg_b, sub.graph.deg_b(b));
        double rhs_deg = cfg.kappa * sub.graph.n_a();
        double lhs_e = static_cast<double>(sub.graph.edge_count());
        double rhs_e = cfg.xi * cfg.eta * safe_pow(nb_d, (cfg.d + cfg.s - 1.0) / cfg.d);
        n.quantities["A_le_xi_B_sd"] = lhs_a <= rhs_a;
        n.quantities["A_size"] = lhs_a;
        n.quantities["A_bound"] = rhs_a;
        n.quantities["max_deg_B"] = max_deg_b;
        n.quantities["deg_bound"] = rhs_deg;
        n.quantities["deg_ok"] = max_deg_b <= rhs_deg;
        n.quantities["edges"] = lhs_e;
        n.quantities["edges_needed"] = rhs_e;
        n.quantities["edges_ok"] = lhs_e >= rhs_e;
        res.stages.push_back(std::move(n));
    }
    SearchConfig hcfg = cfg;
    HedgehogSearchResult hres = find_induced_hedgehog(sub.graph, hcfg);
    {
        StageNote n = note("hedgehog", hres.outcome == Outcome::Found, hres.path);
        res.stages.push_back(std::move(n));
    }
    if (hres.outcome != Outcome::Found) return fallback("hedgehog");

    // (5) assemble W = hedgehog + X and verify against the original graph
    Embedding w_emb;
    w_emb.induced = true;
    w_emb.body_target = BodyTarget{Side::A, std::nullopt};
    const Embedding& he = *hres.embedding;
    auto lift_a = [&](int v) {
        int in_gp = sub.a_map[v];
        return a_back ? (*a_back)[in_gp] : in_gp;
    };
    auto lift_b = [&](int v) {
        int in_gp = sub.b_map[v];
        return b_back ? (*b_back)[in_gp] : in_gp;
    };
    for (int v : he.a_image) w_emb.a_image.push_back(lift_a(v));
    for (int v : he.b_image) w_emb.b_image.push_back(lift_b(v));
    for (int b : x_set) w_emb.b_image.push_back(b_back ? (*b_back)[b] : b); // Y vertices last
    VerifyResult v = verify_embedding(g, res.pattern, w_emb);
    {
        StageNote n = note("assemble", v.ok, v.ok ? "" : v.reason);
        res.stages.push_back(std::move(n));
    }
    if (!v.ok) return fallback("assemble");
    res.kind = WSearchResult::Kind::Embedding;
    res.embedding = std::move(w_emb);
    return res;
}

} // namespace turan
