#include "turan/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>

#include "turan/combinatorics.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace turan {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point start = Clock::now();
    double max_ms = 0;

    bool expired() const {
        if (max_ms <= 0) return false;
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count() > max_ms;
    }
};

// Static matching order: descending degree, ties broken by number of
// already-ordered neighbors, then lowest index.
std::vector<int> matching_order(const BipartiteGraph& pat) {
    int pa = pat.n_a(), n = pa + pat.n_b();
    std::vector<char> placed(n, 0);
    std::vector<int> order;
    order.reserve(n);
    auto deg = [&](int u) { return u < pa ? pat.deg_a(u) : pat.deg_b(u - pa); };
    auto conn = [&](int u) {
        int c = 0;
        if (u < pa)
            pat.row_a(u).for_each([&](int b) { c += placed[pa + b]; });
        else
            pat.row_b(u - pa).for_each([&](int a) { c += placed[a]; });
        return c;
    };
    for (int pos = 0; pos < n; ++pos) {
        int best = -1, bd = -1, bc = -1;
        for (int u = 0; u < n; ++u) {
            if (placed[u]) continue;
            int d = deg(u);
            if (d < bd) continue;
            int c = conn(u);
            if (d > bd || c > bc) {
                best = u;
                bd = d;
                bc = c;
            }
        }
        placed[best] = 1;
        order.push_back(best);
    }
    return order;
}

struct SharedLimits {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<int> best_root{INT_MAX};
    std::atomic<bool> budget_hit{false};
    std::uint64_t max_nodes = 0;
    Deadline deadline;
};

// One orientation, one root subtree. Owns all mutable state, so subtrees are
// independent and can run on separate threads.
struct Matcher {
    const BipartiteGraph& host;
    const BipartiteGraph& pat;
    const std::vector<int>& order;
    bool induced;
    bool swapped;
    bool counting;
    const std::vector<char>* body_flag = nullptr; // pattern A flags
    const Bitset* body_allowed = nullptr;         // width = host side of pattern A
    SharedLimits* lim;

    std::vector<int> img_a, img_b;
    Bitset used_a, used_b;
    std::uint64_t local_nodes = 0;
    std::uint64_t count = 0;
    bool aborted = false;
    bool stopped = false; // sink asked to stop; not a budget failure
    const std::function<bool(const std::vector<int>&, const std::vector<int>&)>* sink = nullptr;

    Matcher(const BipartiteGraph& host_, const BipartiteGraph& pat_, const std::vector<int>& order_,
            bool induced_, bool swapped_, bool counting_, SharedLimits* lim_)
        : host(host_), pat(pat_), order(order_), induced(induced_), swapped(swapped_),
          counting(counting_), lim(lim_),
          img_a(pat_.n_a(), -1), img_b(pat_.n_b(), -1),
          used_a(host_.n_a()), used_b(host_.n_b()) {}

    bool tick() {
        if ((++local_nodes & 1023) == 0) {
            std::uint64_t tot = lim->nodes.fetch_add(1024, std::memory_order_relaxed) + 1024;
            if (tot > lim->max_nodes || lim->deadline.expired()) {
                lim->budget_hit.store(true, std::memory_order_relaxed);
                aborted = true;
            }
        }
        return !aborted;
    }

    // Candidate host vertices for the pattern vertex at `pos`, given current
    // placements: unused, adjacent to all placed pattern-neighbors' images,
    // and (induced mode) non-adjacent to all placed pattern-non-neighbors'.
    Bitset candidates(int u) const {
        int pa = pat.n_a();
        bool in_a = u < pa;
        int ui = in_a ? u : u - pa;
        bool host_is_a = (in_a != swapped);
        Bitset cand(host_is_a ? host.n_a() : host.n_b());
        cand.set_all();
        cand.and_not(host_is_a ? used_a : used_b);
        if (in_a && body_flag && (*body_flag)[ui] && body_allowed) cand &= *body_allowed;

        auto opp_row = [&](int host_idx) -> const Bitset& {
            // Row of an opposite-side image, viewed toward u's host side.
            return host_is_a ? host.row_b(host_idx) : host.row_a(host_idx);
        };
        if (in_a) {
            const Bitset& nbr = pat.row_a(ui);
            for (int b = 0; b < pat.n_b(); ++b) {
                if (img_b[b] < 0) continue;
                if (nbr.test(b))
                    cand &= opp_row(img_b[b]);
                else if (induced)
                    cand.and_not(opp_row(img_b[b]));
            }
        } else {
            const Bitset& nbr = pat.row_b(ui);
            for (int a = 0; a < pat.n_a(); ++a) {
                if (img_a[a] < 0) continue;
                if (nbr.test(a))
                    cand &= opp_row(img_a[a]);
                else if (induced)
                    cand.and_not(opp_row(img_a[a]));
            }
        }
        return cand;
    }

    void place(int u, int c) {
        int pa = pat.n_a();
        bool in_a = u < pa;
        bool host_is_a = (in_a != swapped);
        (in_a ? img_a[u] : img_b[u - pa]) = c;
        (host_is_a ? used_a : used_b).set(c);
    }

    void unplace(int u, int c) {
        int pa = pat.n_a();
        bool in_a = u < pa;
        bool host_is_a = (in_a != swapped);
        (in_a ? img_a[u] : img_b[u - pa]) = -1;
        (host_is_a ? used_a : used_b).reset(c);
    }

    int pat_deg(int u) const {
        return u < pat.n_a() ? pat.deg_a(u) : pat.deg_b(u - pat.n_a());
    }

    int host_deg(int u, int c) const {
        bool host_is_a = ((u < pat.n_a()) != swapped);
        return host_is_a ? host.deg_a(c) : host.deg_b(c);
    }

    // Find mode: returns true as soon as one embedding completes.
    // Count mode: always exhausts, accumulating into `count`.
    bool extend(std::size_t pos) {
        if (pos == order.size()) {
            if (counting) {
                ++count;
                if (sink && !(*sink)(img_a, img_b)) stopped = true;
                return false;
            }
            return true;
        }
        int u = order[pos];
        int want = pat_deg(u);
        Bitset cand = candidates(u);
        for (int c = cand.next(0); c >= 0; c = cand.next(c + 1)) {
            if (!tick()) return false;
            if (host_deg(u, c) < want) continue;
            place(u, c);
            if (extend(pos + 1) && !counting) return true; // keep placements on success
            unplace(u, c);
            if (aborted || stopped) return false;
        }
        return false;
    }
};

struct OrientationResult {
    Outcome outcome = Outcome::Absent;
    std::optional<Embedding> emb;
    std::uint64_t count = 0;
    std::uint64_t nodes = 0;
};

OrientationResult run_orientation(const BipartiteGraph& host, const BipartiteGraph& pat,
                                  bool induced, bool swapped, bool counting,
                                  const std::vector<char>* body_flag, const Bitset* body_allowed,
                                  const Budget& budget) {
    OrientationResult res;
    int need_a = swapped ? pat.n_b() : pat.n_a();
    int need_b = swapped ? pat.n_a() : pat.n_b();
    if (need_a > host.n_a() || need_b > host.n_b()) {
        res.outcome = counting ? Outcome::Found : Outcome::Absent;
        return res;
    }

    std::vector<int> order = matching_order(pat);
    if (order.empty()) {
        // empty pattern: the empty map
        res.outcome = Outcome::Found;
        res.count = 1;
        if (!counting) {
            Embedding e;
            e.swapped = swapped;
            e.induced = induced;
            res.emb = e;
        }
        return res;
    }

    SharedLimits lim;
    lim.max_nodes = budget.max_nodes;
    lim.deadline.max_ms = budget.max_ms;

    Matcher probe(host, pat, order, induced, swapped, counting, &lim);
    probe.body_flag = body_flag;
    probe.body_allowed = body_allowed;
    int u0 = order[0];
    int want0 = probe.pat_deg(u0);
    std::vector<int> roots;
    {
        Bitset cand = probe.candidates(u0);
        for (int c = cand.next(0); c >= 0; c = cand.next(c + 1))
            if (probe.host_deg(u0, c) >= want0) roots.push_back(c);
    }

    int nr = static_cast<int>(roots.size());
    std::vector<Embedding> found(nr);
    std::vector<char> ok(nr, 0);
    std::vector<std::uint64_t> counts(nr, 0);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < nr; ++i) {
        if (!counting && i > lim.best_root.load(std::memory_order_relaxed)) continue;
        Matcher m(host, pat, order, induced, swapped, counting, &lim);
        m.body_flag = body_flag;
        m.body_allowed = body_allowed;
        m.place(u0, roots[i]);
        bool hit = m.extend(1);
        lim.nodes.fetch_add(m.local_nodes & 1023, std::memory_order_relaxed);
        if (counting) {
            counts[i] = m.count;
        } else if (hit) {
            Embedding e;
            e.a_image = m.img_a;
            e.b_image = m.img_b;
            e.swapped = swapped;
            e.induced = induced;
            found[i] = e;
            ok[i] = 1;
            int prev = lim.best_root.load(std::memory_order_relaxed);
            while (i < prev && !lim.best_root.compare_exchange_weak(prev, i)) {
            }
        }
    }

    res.nodes = lim.nodes.load();
    bool budget_hit = lim.budget_hit.load();
    if (counting) {
        if (budget_hit) {
            res.outcome = Outcome::Inconclusive;
            return res;
        }
        for (std::uint64_t c : counts) res.count += c;
        res.outcome = Outcome::Found;
        return res;
    }
    for (int i = 0; i < nr; ++i) {
        if (ok[i]) {
            res.outcome = Outcome::Found;
            res.emb = found[i];
            return res;
        }
    }
    res.outcome = budget_hit ? Outcome::Inconclusive : Outcome::Absent;
    return res;
}

EmbedResult find_impl(const BipartiteGraph& host, const BipartiteGraph& pat,
                      const std::vector<int>* body, const EmbedQuery& q) {
    std::vector<char> body_flag;
    std::optional<Bitset> allowed;
    bool orientation_forced = false;
    bool forced_swapped = false;

    if (q.body_target) {
        if (!body) throw std::invalid_argument("body target given but pattern carries no body");
        forced_swapped = (q.body_target->side == Side::B);
        orientation_forced = true;
        if (q.respect_sides && forced_swapped)
            throw std::invalid_argument("body target part conflicts with respect_sides");
        body_flag.assign(pat.n_a(), 0);
        for (int v : *body) {
            if (v < 0 || v >= pat.n_a()) throw std::invalid_argument("body vertex out of range");
            body_flag[v] = 1;
        }
        if (q.body_target->allowed) {
            int width = host.n_side(q.body_target->side);
            allowed = Bitset::from_indices(width, *q.body_target->allowed);
        }
    }

    EmbedResult out;
    bool any_inconclusive = false;
    std::vector<bool> orientations;
    if (orientation_forced)
        orientations = {forced_swapped};
    else if (q.respect_sides)
        orientations = {false};
    else
        orientations = {false, true};

    for (bool sw : orientations) {
        OrientationResult r = run_orientation(host, pat, q.induced, sw, false,
                                              body_flag.empty() ? nullptr : &body_flag,
                                              allowed ? &*allowed : nullptr, q.budget);
        out.nodes += r.nodes;
        if (r.outcome == Outcome::Found) {
            Embedding e = *r.emb;
            e.body_target = q.body_target;
            out.outcome = Outcome::Found;
            out.embedding = e;
            return out;
        }
        if (r.outcome == Outcome::Inconclusive) any_inconclusive = true;
    }
    out.outcome = any_inconclusive ? Outcome::Inconclusive : Outcome::Absent;
    return out;
}

} // namespace

EmbedResult find_embedding(const BipartiteGraph& host, const BipartiteGraph& pattern,
                           const EmbedQuery& q) {
    if (q.body_target) throw std::invalid_argument("body target requires a marked pattern");
    return find_impl(host, pattern, nullptr, q);
}

Outcome for_each_embedding(const BipartiteGraph& host, const BipartiteGraph& pattern,
                           bool swapped, bool induced, const Budget& budget,
                           const std::function<bool(const std::vector<int>&, const std::vector<int>&)>& cb) {
    int need_a = swapped ? pattern.n_b() : pattern.n_a();
    int need_b = swapped ? pattern.n_a() : pattern.n_b();
    if (need_a > host.n_a() || need_b > host.n_b()) return Outcome::Found;

    std::vector<int> order = matching_order(pattern);
    SharedLimits lim;
    lim.max_nodes = budget.max_nodes;
    lim.deadline.max_ms = budget.max_ms;
    Matcher m(host, pattern, order, induced, swapped, true, &lim);
    m.sink = &cb;
    m.extend(0);
    return m.aborted ? Outcome::Inconclusive : Outcome::Found;
}

EmbedResult find_embedding(const BipartiteGraph& host, const MarkedGraph& pattern,
                           const EmbedQuery& q) {
    return find_impl(host, pattern.graph, &pattern.body, q);
}

namespace {

VerifyResult fail(const std::string& why, int u = -1, int v = -1) {
    VerifyResult r;
    r.ok = false;
    r.reason = why;
    r.pattern_u = u;
    r.pattern_v = v;
    return r;
}

} // namespace

VerifyResult verify_embedding(const BipartiteGraph& host, const BipartiteGraph& pattern,
                              const Embedding& e) {
    MarkedGraph m;
    m.graph = pattern;
    return verify_embedding(host, m, e);
}

VerifyResult verify_embedding(const BipartiteGraph& host, const MarkedGraph& pattern,
                              const Embedding& e) {
    const BipartiteGraph& pat = pattern.graph;
    if (static_cast<int>(e.a_image.size()) != pat.n_a() ||
        static_cast<int>(e.b_image.size()) != pat.n_b())
        return fail("image arrays do not cover the pattern");

    int host_of_a = e.swapped ? host.n_b() : host.n_a();
    int host_of_b = e.swapped ? host.n_a() : host.n_b();
    Bitset seen_a(std::max(host_of_a, 1)), seen_b(std::max(host_of_b, 1));
    for (int a = 0; a < pat.n_a(); ++a) {
        int im = e.a_image[a];
        if (im < 0 || im >= host_of_a) return fail("A-image out of range", a);
        if (seen_a.test(im)) return fail("not injective on part A images", a);
        seen_a.set(im);
    }
    for (int b = 0; b < pat.n_b(); ++b) {
        int im = e.b_image[b];
        if (im < 0 || im >= host_of_b) return fail("B-image out of range", -1, b);
        if (seen_b.test(im)) return fail("not injective on part B images", -1, b);
        seen_b.set(im);
    }

    if (e.body_target) {
        Side want = e.body_target->side;
        Side got = e.host_side_of_pattern_a();
        if (want != got) return fail("body landed in host part " + side_name(got) +
                                     ", target was " + side_name(want));
        if (e.body_target->allowed) {
            Bitset ok = Bitset::from_indices(host.n_side(want), *e.body_target->allowed);
            for (int v : pattern.body)
                if (!ok.test(e.a_image[v]))
                    return fail("body vertex mapped outside the allowed set", v);
        }
    }

    for (int a = 0; a < pat.n_a(); ++a) {
        for (int b = 0; b < pat.n_b(); ++b) {
            bool pe = pat.has_edge(a, b);
            bool he = e.swapped ? host.has_edge(e.b_image[b], e.a_image[a])
                                : host.has_edge(e.a_image[a], e.b_image[b]);
            if (pe && !he) return fail("pattern edge maps to a host non-edge", a, b);
            if (!pe && he && e.induced) return fail("pattern non-edge maps to a host edge", a, b);
        }
    }
    VerifyResult ok;
    ok.ok = true;
    return ok;
}

namespace {

struct BicliqueShared {
    std::atomic<int> best_root{INT_MAX};
};

bool biclique_rec(const BipartiteGraph& g, int t1, int t2, int next, const Bitset& cand,
                  std::vector<int>& acc, std::vector<int>& b_out) {
    if (static_cast<int>(acc.size()) == t1) {
        b_out.clear();
        for (int b = cand.next(0); b >= 0 && static_cast<int>(b_out.size()) < t2; b = cand.next(b + 1))
            b_out.push_back(b);
        return true;
    }
    int need = t1 - static_cast<int>(acc.size());
    for (int a = next; a <= g.n_a() - need; ++a) {
        if (g.deg_a(a) < t2) continue;
        Bitset nc = cand & g.row_a(a);
        if (nc.count() < t2) continue;
        acc.push_back(a);
        if (biclique_rec(g, t1, t2, a + 1, nc, acc, b_out)) return true;
        acc.pop_back();
    }
    return false;
}

} // namespace

BicliqueResult find_biclique(const BipartiteGraph& g, int t1, int t2) {
    if (t1 < 1 || t2 < 1) throw std::invalid_argument("biclique sides must be >= 1");
    BicliqueResult res;
    if (t1 > g.n_a() || t2 > g.n_b()) return res;

    std::vector<int> roots;
    for (int a = 0; a <= g.n_a() - t1; ++a)
        if (g.deg_a(a) >= t2) roots.push_back(a);
    int nr = static_cast<int>(roots.size());
    std::vector<std::vector<int>> a_sets(nr), b_sets(nr);
    std::vector<char> ok(nr, 0);
    BicliqueShared shared;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < nr; ++i) {
        if (i > shared.best_root.load(std::memory_order_relaxed)) continue;
        int a = roots[i];
        std::vector<int> acc{a};
        std::vector<int> bs;
        Bitset cand = g.row_a(a);
        if (cand.count() < t2) continue;
        if (biclique_rec(g, t1, t2, a + 1, cand, acc, bs)) {
            a_sets[i] = acc;
            b_sets[i] = bs;
            ok[i] = 1;
            int prev = shared.best_root.load(std::memory_order_relaxed);
            while (i < prev && !shared.best_root.compare_exchange_weak(prev, i)) {
            }
        }
    }
    for (int i = 0; i < nr; ++i) {
        if (ok[i]) {
            res.found = true;
            res.a_set = a_sets[i];
            res.b_set = b_sets[i];
            return res;
        }
    }
    return res;
}

CountResult count_copies(const BipartiteGraph& host, const BipartiteGraph& pattern,
                         bool respect_sides, bool induced, const Budget& budget) {
    CountResult out;
    std::vector<bool> orientations = respect_sides ? std::vector<bool>{false}
                                                   : std::vector<bool>{false, true};
    for (bool sw : orientations) {
        OrientationResult r =
            run_orientation(host, pattern, induced, sw, true, nullptr, nullptr, budget);
        out.nodes += r.nodes;
        if (r.outcome == Outcome::Inconclusive) {
            out.outcome = Outcome::Inconclusive;
            out.count = 0;
            return out;
        }
        out.count += r.count;
    }
    out.outcome = Outcome::Found;
    return out;
}

bool shatter_check(const BipartiteGraph& g, const std::vector<int>& s, Side part) {
    if (s.size() > 25) throw std::invalid_argument("shatter_check: set too wide to enumerate traces");
    int n_part = g.n_side(part);
    for (int v : s)
        if (v < 0 || v >= n_part) throw std::invalid_argument("shatter_check: vertex outside part");
    int l = static_cast<int>(s.size());
    int opp = g.n_side(opposite(part));
    std::vector<char> seen(std::size_t{1} << l, 0);
    int remaining = 1 << l;
    for (int b = 0; b < opp && remaining > 0; ++b) {
        const Bitset& row = g.row(opposite(part), b);
        unsigned mask = 0;
        for (int i = 0; i < l; ++i)
            if (row.test(s[i])) mask |= 1u << i;
        if (!seen[mask]) {
            seen[mask] = 1;
            --remaining;
        }
    }
    return remaining == 0;
}

VCReport vc_dimension(const BipartiteGraph& g, Side part, const Budget& budget) {
    VCReport rep;
    int n = g.n_side(part);
    int opp = g.n_side(opposite(part));
    Deadline deadline;
    deadline.max_ms = budget.max_ms;
    std::uint64_t checked = 0;

    for (int level = 0; level <= n; ++level) {
        bool found_at_level = false;
        bool aborted = false;
        std::vector<int> witness;
        for_each_colex_subset(n, level, [&](const std::vector<int>& s) {
            if (found_at_level || aborted) return;
            if (++checked > budget.max_nodes || deadline.expired()) {
                aborted = true;
                return;
            }
            if (shatter_check(g, s, part)) {
                found_at_level = true;
                witness = s;
            }
        });
        rep.sets_checked = checked;
        if (found_at_level) {
            rep.dimension = level;
            rep.witness = witness;
            rep.realizers.assign(std::size_t{1} << level, -1);
            for (int b = 0; b < opp; ++b) {
                const Bitset& row = g.row(opposite(part), b);
                unsigned mask = 0;
                for (int i = 0; i < level; ++i)
                    if (row.test(witness[i])) mask |= 1u << i;
                if (rep.realizers[mask] < 0) rep.realizers[mask] = b;
            }
            continue;
        }
        if (aborted) {
            rep.outcome = Outcome::Inconclusive;
            return rep;
        }
        // level exhausted with no shattered set: done (shattering is hereditary)
        rep.outcome = Outcome::Found;
        return rep;
    }
    rep.outcome = Outcome::Found;
    return rep;
}

} // namespace turan
