#include "turan/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace turan {

namespace {

// Mask-based pattern for the tiny hosts this oracle works on.
struct MaskPattern {
    int pa = 0, pb = 0;
    std::vector<std::uint32_t> rows; // rows[pa] over pb bits
};

MaskPattern to_mask(const BipartiteGraph& g, bool transpose) {
    MaskPattern p;
    p.pa = transpose ? g.n_b() : g.n_a();
    p.pb = transpose ? g.n_a() : g.n_b();
    p.rows.assign(p.pa, 0);
    for (int a = 0; a < g.n_a(); ++a)
        g.row_a(a).for_each([&](int b) {
            if (transpose)
                p.rows[b] |= 1u << a;
            else
                p.rows[a] |= 1u << b;
        });
    return p;
}

// Backtracking pattern matcher over mask rows. induced: mapped pairs must
// agree exactly; otherwise host edges must cover pattern edges. anchor_a/b
// (when >= 0) force some pattern edge onto that host edge.
struct MaskMatch {
    const std::vector<std::uint32_t>& host; // host rows, n of them over n bits
    int n;
    const MaskPattern& pat;
    bool induced;
    std::vector<int> img_a, img_b;
    std::uint32_t used_a = 0, used_b = 0;

    MaskMatch(const std::vector<std::uint32_t>& host_, int n_, const MaskPattern& pat_, bool induced_)
        : host(host_), n(n_), pat(pat_), induced(induced_),
          img_a(pat_.pa, -1), img_b(pat_.pb, -1) {}

    bool ok_pair(int pa_i, int pb_j) const {
        bool pe = (pat.rows[pa_i] >> pb_j) & 1;
        bool he = (host[img_a[pa_i]] >> img_b[pb_j]) & 1;
        if (pe && !he) return false;
        if (!pe && he && induced) return false;
        return true;
    }

    bool consistent_a(int i) const {
        for (int j = 0; j < pat.pb; ++j)
            if (img_b[j] >= 0 && !ok_pair(i, j)) return false;
        return true;
    }

    bool consistent_b(int j) const {
        for (int i = 0; i < pat.pa; ++i)
            if (img_a[i] >= 0 && !ok_pair(i, j)) return false;
        return true;
    }

    bool extend(int pos) {
        if (pos == pat.pa + pat.pb) return true;
        if (pos < pat.pa) {
            for (int c = 0; c < n; ++c) {
                if ((used_a >> c) & 1) continue;
                img_a[pos] = c;
                if (consistent_a(pos)) {
                    used_a |= 1u << c;
                    if (extend(pos + 1)) return true;
                    used_a &= ~(1u << c);
                }
                img_a[pos] = -1;
            }
        } else {
            int j = pos - pat.pa;
            for (int c = 0; c < n; ++c) {
                if ((used_b >> c) & 1) continue;
                img_b[j] = c;
                if (consistent_b(j)) {
                    used_b |= 1u << c;
                    if (extend(pos + 1)) return true;
                    used_b &= ~(1u << c);
                }
                img_b[j] = -1;
            }
        }
        return false;
    }
};

bool contains(const std::vector<std::uint32_t>& host, int n, const MaskPattern& pat, bool induced) {
    if (pat.pa > n || pat.pb > n) return false;
    MaskMatch m(host, n, pat, induced);
    return m.extend(0);
}

bool extend_list(MaskMatch& m, const std::vector<int>& todo, std::size_t pos);

// Is there a copy of pat (as subgraph) using the host edge (a, b)?
bool contains_through(const std::vector<std::uint32_t>& host, int n, const MaskPattern& pat,
                      int a, int b) {
    if (pat.pa > n || pat.pb > n) return false;
    for (int i = 0; i < pat.pa; ++i) {
        std::uint32_t row = pat.rows[i];
        while (row) {
            int j = std::countr_zero(row);
            row &= row - 1;
            MaskMatch m(host, n, pat, false);
            m.img_a[i] = a;
            m.used_a = 1u << a;
            m.img_b[j] = b;
            m.used_b = 1u << b;
            if (!m.ok_pair(i, j)) continue;
            // match remaining positions; order: all A then all B, skipping fixed
            std::vector<int> todo;
            for (int x = 0; x < pat.pa; ++x)
                if (x != i) todo.push_back(x);
            for (int y = 0; y < pat.pb; ++y)
                if (y != j) todo.push_back(pat.pa + y);
            if (extend_list(m, todo, 0)) return true;
        }
    }
    return false;
}

bool extend_list(MaskMatch& m, const std::vector<int>& todo, std::size_t pos) {
    if (pos == todo.size()) return true;
    int u = todo[pos];
    if (u < m.pat.pa) {
        for (int c = 0; c < m.n; ++c) {
            if ((m.used_a >> c) & 1) continue;
            m.img_a[u] = c;
            if (m.consistent_a(u)) {
                m.used_a |= 1u << c;
                if (extend_list(m, todo, pos + 1)) return true;
                m.used_a &= ~(1u << c);
            }
            m.img_a[u] = -1;
        }
    } else {
        int j = u - m.pat.pa;
        for (int c = 0; c < m.n; ++c) {
            if ((m.used_b >> c) & 1) continue;
            m.img_b[j] = c;
            if (m.consistent_b(j)) {
                m.used_b |= 1u << c;
                if (extend_list(m, todo, pos + 1)) return true;
                m.used_b &= ~(1u << c);
            }
            m.img_b[j] = -1;
        }
    }
    return false;
}

struct TaskResult {
    int best = -1;
    std::vector<std::uint32_t> witness;
    std::uint64_t nodes = 0;
    bool budget_hit = false;
};

struct Searcher {
    int n;
    const std::vector<MaskPattern>& subs;
    const std::vector<MaskPattern>& inds;
    std::atomic<std::uint64_t>* global_nodes;
    std::uint64_t node_budget;

    std::vector<std::uint32_t> rows;
    TaskResult result;

    Searcher(int n_, const std::vector<MaskPattern>& subs_, const std::vector<MaskPattern>& inds_,
             std::atomic<std::uint64_t>* gn, std::uint64_t budget)
        : n(n_), subs(subs_), inds(inds_), global_nodes(gn), node_budget(budget), rows(n_, 0) {}

    bool over_budget() {
        if ((++result.nodes & 255) == 0) {
            std::uint64_t tot =
                global_nodes->fetch_add(256, std::memory_order_relaxed) + 256;
            if (tot > node_budget) {
                result.budget_hit = true;
                return true;
            }
        }
        return result.budget_hit;
    }

    void leaf(int edges) {
        if (edges <= result.best) return;
        for (const MaskPattern& p : inds)
            if (contains(rows, n, p, true)) return;
        result.best = edges;
        result.witness = rows;
    }

    // idx = a * n + b in row-major order; include-first.
    void dfs(int idx, int edges) {
        if (result.budget_hit || over_budget()) return;
        if (edges + (n * n - idx) <= result.best) return;
        if (idx == n * n) {
            leaf(edges);
            return;
        }
        int a = idx / n, b = idx % n;

        // include branch
        rows[a] |= 1u << b;
        bool violates = false;
        for (const MaskPattern& p : subs)
            if (contains_through(rows, n, p, a, b)) {
                violates = true;
                break;
            }
        if (!violates && row_canonical(idx)) dfs(idx + 1, edges + 1);
        rows[a] &= ~(1u << b);

        // exclude branch
        if (row_canonical(idx)) dfs(idx + 1, edges);
    }

    // Enforced when the edge just decided completes row a: non-increasing
    // row values keep exactly one representative per A-permutation class.
    bool row_canonical(int idx) const {
        int a = idx / n, b = idx % n;
        if (b != n - 1 || a == 0) return true;
        return rows[a - 1] >= rows[a];
    }
};

BipartiteGraph from_rows(const std::vector<std::uint32_t>& rows, int n) {
    BipartiteGraph g(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if ((rows[a] >> b) & 1) g.add_edge(a, b);
    return g;
}

} // namespace

ExtremalResult exact_ex(const ExtremalQuery& q) {
    if (q.n < 1 || q.n > 7) throw std::invalid_argument("exact_ex supports 1 <= n <= 7");
    int n = q.n;

    std::vector<MaskPattern> subs, inds;
    for (const auto& g : q.forbidden_sub) {
        subs.push_back(to_mask(g, false));
        if (q.both_orientations && g.n_a() + g.n_b() > 0) subs.push_back(to_mask(g, true));
    }
    for (const auto& g : q.forbidden_induced) {
        inds.push_back(to_mask(g, false));
        if (q.both_orientations && g.n_a() + g.n_b() > 0) inds.push_back(to_mask(g, true));
    }

    // Tasks: assignments of row 0, in the order global include-first DFS
    // would visit them (descending mask). No incumbent is shared between
    // tasks, so the merged optimum and witness are thread-count independent.
    std::vector<std::uint32_t> tasks;
    std::uint32_t full = n >= 32 ? ~0u : ((1u << n) - 1);
    for (std::uint32_t m = full;; --m) {
        tasks.push_back(m);
        if (m == 0) break;
    }

    std::atomic<std::uint64_t> global_nodes{0};
    int nt = static_cast<int>(tasks.size());
    std::vector<TaskResult> results(nt);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < nt; ++i) {
        Searcher s(n, subs, inds, &global_nodes, q.node_budget);
        s.rows[0] = tasks[i];
        bool feasible = true;
        for (const MaskPattern& p : subs)
            if (contains(s.rows, n, p, false)) {
                feasible = false;
                break;
            }
        if (feasible) s.dfs(n, std::popcount(tasks[i]));
        results[i] = std::move(s.result);
    }

    ExtremalResult out;
    out.n = n;
    out.both_orientations = q.both_orientations;
    bool budget_hit = false;
    int best_task = -1;
    for (int i = 0; i < nt; ++i) {
        budget_hit = budget_hit || results[i].budget_hit;
        out.nodes_explored += results[i].nodes;
        if (results[i].best > (best_task < 0 ? -1 : results[best_task].best)) best_task = i;
    }
    if (best_task >= 0) {
        out.max_edges = results[best_task].best;
        out.witness = from_rows(results[best_task].witness, n);
    }
    out.exhaustive = !budget_hit;
    return out;
}

std::vector<ExTableRow> ex_table(int n_lo, int n_hi, const ExtremalQuery& proto) {
    if (n_lo > n_hi) throw std::invalid_argument("empty n range");
    std::vector<ExTableRow> rows;
    for (int n = n_lo; n <= n_hi; ++n) {
        ExtremalQuery q = proto;
        q.n = n;
        auto t0 = std::chrono::steady_clock::now();
        ExtremalResult r = exact_ex(q);
        auto t1 = std::chrono::steady_clock::now();
        ExTableRow row;
        row.n = n;
        row.max_edges = r.max_edges;
        row.exhaustive = r.exhaustive;
        row.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        row.witness = r.witness;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace turan
