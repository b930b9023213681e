#include "turan/regularize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace turan {

DegreeStats degree_stats(const BipartiteGraph& g) {
    DegreeStats s;
    auto scan = [](auto deg_fn, int n, int& mn, int& mx, double& mean) {
        mn = n > 0 ? std::numeric_limits<int>::max() : 0;
        mx = 0;
        long long sum = 0;
        for (int v = 0; v < n; ++v) {
            int d = deg_fn(v);
            mn = std::min(mn, d);
            mx = std::max(mx, d);
            sum += d;
        }
        mean = n > 0 ? static_cast<double>(sum) / n : 0.0;
    };
    scan([&](int a) { return g.deg_a(a); }, g.n_a(), s.min_a, s.max_a, s.mean_a);
    scan([&](int b) { return g.deg_b(b); }, g.n_b(), s.min_b, s.max_b, s.mean_b);
    int n = g.n_a() + g.n_b();
    if (n == 0) return s;
    s.min_all = g.n_a() == 0 ? s.min_b : (g.n_b() == 0 ? s.min_a : std::min(s.min_a, s.min_b));
    s.max_all = std::max(s.max_a, s.max_b);
    s.mean_all = 2.0 * static_cast<double>(g.edge_count()) / n;
    return s;
}

namespace {

struct StageMetrics {
    int survivors = 0;
    long long edges = 0;
    int min_deg = 0, max_deg = 0;

    double ratio() const {
        if (survivors == 0) return std::numeric_limits<double>::infinity();
        if (max_deg == min_deg) return 1.0; // includes the all-isolated case
        if (min_deg == 0) return std::numeric_limits<double>::infinity();
        return static_cast<double>(max_deg) / min_deg;
    }
};

} // namespace

RegularizeResult almost_regularize(const BipartiteGraph& g, double eps, double c,
                                   double K_target) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0,1)");
    if (!(c > 0.0)) throw std::invalid_argument("c must be positive");
    if (!(K_target >= 1.0)) throw std::invalid_argument("K_target must be >= 1");

    RegularizeResult out;
    int na = g.n_a(), nb = g.n_b(), n = na + nb;
    out.report.hypothesis_met =
        static_cast<double>(g.edge_count()) >= c * std::pow(static_cast<double>(n), 1.0 + eps);
    if (!out.report.hypothesis_met) {
        out.graph = g;
        out.a_keep.resize(na);
        out.b_keep.resize(nb);
        for (int a = 0; a < na; ++a) out.a_keep[a] = a;
        for (int b = 0; b < nb; ++b) out.b_keep[b] = b;
        out.report.status = "hypothesis-unmet";
        out.report.m = n;
        out.report.edges = g.edge_count();
        return out;
    }

    // Degrees maintained incrementally; global index a in [0,na), b in [na,n).
    std::vector<int> deg(n, 0);
    std::vector<char> alive(n, 1);
    for (int a = 0; a < na; ++a) deg[a] = g.deg_a(a);
    for (int b = 0; b < nb; ++b) deg[na + b] = g.deg_b(b);
    long long edges = g.edge_count();
    int survivors = n;

    auto metrics = [&]() {
        StageMetrics m;
        m.survivors = survivors;
        m.edges = edges;
        int mn = std::numeric_limits<int>::max(), mx = 0;
        for (int v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            mn = std::min(mn, deg[v]);
            mx = std::max(mx, deg[v]);
        }
        m.min_deg = survivors > 0 ? mn : 0;
        m.max_deg = mx;
        return m;
    };

    std::vector<StageMetrics> stages{metrics()};
    std::vector<int> deleted_order;

    while (survivors > 0) {
        // lowest-indexed vertex with degree strictly below half the average,
        // i.e. deg * survivors < edges
        int victim = -1;
        for (int v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            if (static_cast<long long>(deg[v]) * survivors < edges) {
                victim = v;
                break;
            }
        }
        if (victim < 0) break;
        alive[victim] = 0;
        --survivors;
        edges -= deg[victim];
        if (victim < na) {
            g.row_a(victim).for_each([&](int b) {
                if (alive[na + b]) --deg[na + b];
            });
        } else {
            g.row_b(victim - na).for_each([&](int a) {
                if (alive[a]) --deg[a];
            });
        }
        deg[victim] = 0;
        deleted_order.push_back(victim);
        stages.push_back(metrics());
    }
    out.report.rounds = static_cast<int>(deleted_order.size());

    // Select the stage: densest among those meeting the ratio target; if none
    // does, the one closest to regular.
    int chosen = -1;
    for (std::size_t i = 0; i < stages.size(); ++i) {
        if (stages[i].survivors == 0) continue;
        if (stages[i].ratio() <= K_target) {
            if (chosen < 0 || stages[i].edges > stages[chosen].edges)
                chosen = static_cast<int>(i);
        }
    }
    bool ratio_met = chosen >= 0;
    if (!ratio_met) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < stages.size(); ++i) {
            if (stages[i].survivors == 0) continue;
            if (stages[i].ratio() < best) {
                best = stages[i].ratio();
                chosen = static_cast<int>(i);
            }
        }
    }
    if (chosen < 0) {
        out.report.status = "empty-survivor";
        out.graph = BipartiteGraph(0, 0);
        return out;
    }

    // Rebuild the chosen stage from the deletion prefix.
    std::vector<char> keep(n, 1);
    for (int i = 0; i < chosen; ++i) keep[deleted_order[i]] = 0;
    std::vector<int> a_sub, b_sub;
    for (int a = 0; a < na; ++a)
        if (keep[a]) a_sub.push_back(a);
    for (int b = 0; b < nb; ++b)
        if (keep[na + b]) b_sub.push_back(b);
    IndexedSubgraph sub = induced_subgraph(g, a_sub, b_sub);
    out.graph = std::move(sub.graph);
    out.a_keep = std::move(sub.a_map);
    out.b_keep = std::move(sub.b_map);

    // Re-measure independently of the stage bookkeeping.
    DegreeStats ds = degree_stats(out.graph);
    out.report.m = out.graph.n_a() + out.graph.n_b();
    out.report.edges = out.graph.edge_count();
    if (ds.max_all == ds.min_all)
        out.report.K_achieved = 1.0;
    else if (ds.min_all == 0)
        out.report.K_achieved = std::numeric_limits<double>::infinity();
    else
        out.report.K_achieved = static_cast<double>(ds.max_all) / ds.min_all;
    out.report.ratio_ok = out.report.K_achieved <= K_target;
    out.report.density_ok =
        static_cast<double>(out.report.edges) >=
        (2.0 * c / 5.0) * std::pow(static_cast<double>(out.report.m), 1.0 + eps);
    out.report.met_contract = out.report.ratio_ok && out.report.density_ok;
    out.report.status = "ok";
    return out;
}

} // namespace turan
