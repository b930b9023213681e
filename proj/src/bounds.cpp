#include "turan/bounds.hpp"

#include <cmath>

#include "turan/generators.hpp"
#include "turan/search.hpp"

namespace turan {

double kst_bound(const KstInput& in) {
    if (in.y1 < 1 || in.y2 < 1 || in.Y1 < in.y1 || in.Y2 < in.y2)
        throw std::invalid_argument("kst_bound requires 1 <= y1 <= Y1 and 1 <= y2 <= Y2");
    double y1 = in.y1, y2 = in.y2, Y1 = static_cast<double>(in.Y1), Y2 = static_cast<double>(in.Y2);
    return std::pow(y2 - 1.0, 1.0 / y1) * (Y1 - y1 + 1.0) * std::pow(Y2, 1.0 - 1.0 / y1) +
           (y1 - 1.0) * Y2;
}

double density_threshold(long long n, int d, double eps) {
    if (n < 1 || d < 2 || eps <= 0)
        throw std::invalid_argument("density_threshold requires n >= 1, d >= 2, eps > 0");
    return eps * std::pow(static_cast<double>(n), 2.0 - 1.0 / d);
}

Rational gamma_family(const std::vector<Rational>& gammas) {
    if (gammas.empty()) throw std::invalid_argument("gamma_family: empty family");
    Rational best = gammas.front();
    for (const Rational& g : gammas)
        if (best < g) best = g;
    return best;
}

Rational gamma_family(const std::vector<BipartiteGraph>& family) {
    if (family.empty()) throw std::invalid_argument("gamma_family: empty family");
    std::vector<Rational> gs;
    gs.reserve(family.size());
    for (const auto& g : family) gs.push_back(gamma_value(g));
    return gamma_family(gs);
}

KstCheckReport kst_validity_check(const BipartiteGraph& g, int y1, int y2) {
    KstCheckReport rep;
    BicliqueResult bc = find_biclique(g, y1, y2);
    if (bc.found) {
        rep.status = KstCheckStatus::HypothesisNotMet;
        rep.biclique_a = bc.a_set;
        rep.biclique_b = bc.b_set;
        return rep;
    }
    KstInput in;
    in.y1 = y1;
    in.y2 = y2;
    in.Y1 = std::max<long long>(g.n_a(), y1);
    in.Y2 = std::max<long long>(g.n_b(), y2);
    rep.bound = kst_bound(in);
    rep.edges = g.edge_count();
    rep.margin = rep.bound - static_cast<double>(rep.edges);
    // relative slack guards against rounding at the boundary
    double tol = 1e-9 * std::max(1.0, rep.bound);
    rep.status = (static_cast<double>(rep.edges) <= rep.bound + tol) ? KstCheckStatus::BoundHolds
                                                                     : KstCheckStatus::Violation;
    return rep;
}

} // namespace turan
