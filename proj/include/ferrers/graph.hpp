// Finite simple graphs with optional loops, their edge ideals, and the
// vertex-ordering / shape-extraction pipeline for degree-two ideals,
// including threshold-graph recognition.
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "ferrers/ideal.hpp"
#include "ferrers/monomial.hpp"
#include "ferrers/shape.hpp"

namespace ferrers {

struct Graph {
    int m = 0;                            // vertices 1..m
    std::set<std::pair<int, int>> edges;  // stored with i < j
    std::set<int> loops;

    static Graph on(int m) {
        if (m < 1) throw error(errc::bad_input, "graph needs at least one vertex");
        Graph g;
        g.m = m;
        return g;
    }

    void add_edge(int i, int j) {
        if (i < 1 || j < 1 || i > m || j > m) throw error(errc::bad_input, "vertex out of range");
        if (i == j)
            loops.insert(i);
        else
            edges.insert({std::min(i, j), std::max(i, j)});
    }

    bool has_edge(int i, int j) const {
        if (i == j) return loops.count(i) > 0;
        return edges.count({std::min(i, j), std::max(i, j)}) > 0;
    }

    // Loops count once toward the degree.
    int degree(int v) const {
        int d = loops.count(v) ? 1 : 0;
        for (const auto& [i, j] : edges)
            if (i == v || j == v) ++d;
        return d;
    }

    bool has_isolated_vertex() const {
        for (int v = 1; v <= m; ++v)
            if (degree(v) == 0) return true;
        return false;
    }

    std::vector<int> degree_sequence() const {  // sorted descending
        std::vector<int> d;
        for (int v = 1; v <= m; ++v) d.push_back(degree(v));
        std::sort(d.rbegin(), d.rend());
        return d;
    }

    bool operator==(const Graph&) const = default;
};

// The ideal generated by x_i x_j over edges and x_i^2 over loops.
inline MonomialIdeal edge_ideal(const Graph& g) {
    VariableContext ctx = VariableContext::xonly(g.m);
    std::vector<Monomial> gens;
    for (const auto& [i, j] : g.edges) {
        std::vector<int> e(g.m, 0);
        e[i - 1] = 1;
        e[j - 1] = 1;
        gens.push_back(Monomial(std::move(e)));
    }
    for (int v : g.loops) {
        std::vector<int> e(g.m, 0);
        e[v - 1] = 2;
        gens.push_back(Monomial(std::move(e)));
    }
    return MonomialIdeal(ctx, std::move(gens));
}

// Inverse of edge_ideal on ideals generated in degree two.
inline Graph graph_of(const MonomialIdeal& ideal) {
    Graph g = Graph::on(ideal.context().size());
    for (const Monomial& mono : ideal.generators()) {
        if (mono.degree() != 2) throw error(errc::not_degree_two, "generator of degree != 2");
        int a = -1, b = -1;
        for (int t = 0; t < mono.nvars(); ++t) {
            if (mono[t] == 2) a = b = t + 1;
            if (mono[t] == 1) (a < 0 ? a : b) = t + 1;
        }
        g.add_edge(a, b);
    }
    return g;
}

/**
 * Orders the vertices by iteratively selecting a vertex of maximum
 * degree in the subgraph induced on the not-yet-chosen vertices, ties
 * broken by smallest original label.  Returns the original labels in
 * their new order.
 */
inline std::vector<int> order_vertices(const Graph& g) {
    if (g.has_isolated_vertex()) throw error(errc::isolated_vertex, "graph has an isolated vertex");
    std::vector<int> remaining;
    for (int v = 1; v <= g.m; ++v) remaining.push_back(v);
    std::vector<int> order;
    while (!remaining.empty()) {
        int best = -1, best_deg = -1;
        for (int v : remaining) {
            int d = g.loops.count(v) ? 1 : 0;
            for (int u : remaining)
                if (u != v && g.has_edge(u, v)) ++d;
            if (d > best_deg) {
                best_deg = d;
                best = v;
            }
        }
        order.push_back(best);
        remaining.erase(std::find(remaining.begin(), remaining.end(), best));
    }
    return order;
}

// Relabels so that new vertex k is order[k-1] in the input graph.
inline Graph relabel(const Graph& g, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.m) throw error(errc::bad_input, "ordering size mismatch");
    std::vector<int> new_label(g.m + 1, 0);
    for (int k = 0; k < g.m; ++k) new_label[order[k]] = k + 1;
    Graph h = Graph::on(g.m);
    for (const auto& [i, j] : g.edges) h.add_edge(new_label[i], new_label[j]);
    for (int v : g.loops) h.add_edge(new_label[v], new_label[v]);
    return h;
}

struct ShapeDerivation {
    int n = 0;
    std::vector<int> lambda;
    std::vector<int> mu;
};

/**
 * Reads (n, lambda, mu) off an ordered graph:
 *   n        = max i with an edge (i, j), j >= i,
 *   lambda_i = largest neighbor of i,
 *   mu_i     = -1 + smallest neighbor j >= i.
 * Fails when some row i <= n has no neighbor j >= i, when lambda_1 < m,
 * or when lambda is not weakly decreasing.
 */
inline std::optional<ShapeDerivation> derive_shape(const Graph& g) {
    int n = 0;
    for (int i = 1; i <= g.m; ++i)
        for (int j = i; j <= g.m; ++j)
            if (g.has_edge(i, j)) {
                n = i;
                break;
            }
    if (n == 0) return std::nullopt;  // no edges at all
    ShapeDerivation der;
    der.n = n;
    for (int i = 1; i <= n; ++i) {
        int lam = 0, mu_min = 0;
        for (int j = 1; j <= g.m; ++j)
            if (g.has_edge(i, j)) lam = std::max(lam, j);
        for (int j = i; j <= g.m; ++j)
            if (g.has_edge(i, j)) {
                mu_min = j;
                break;
            }
        if (mu_min == 0) return std::nullopt;  // row with no cell on or after the diagonal
        der.lambda.push_back(lam);
        der.mu.push_back(mu_min - 1);
    }
    if (der.lambda[0] != g.m) return std::nullopt;
    for (int i = 0; i + 1 < n; ++i)
        if (der.lambda[i] < der.lambda[i + 1]) return std::nullopt;
    return der;
}

/**
 * The hypothesis of the closed-form invariants: every diagram cell is an
 * edge, mu is weakly increasing, and mu_i >= i-1.
 */
inline bool check_condition(const Graph& g, const ShapeDerivation& der) {
    for (int i = 0; i + 1 < der.n; ++i)
        if (der.mu[i] > der.mu[i + 1]) return false;
    for (int i = 1; i <= der.n; ++i) {
        if (der.mu[i - 1] < i - 1) return false;
        for (int j = der.mu[i - 1] + 1; j <= der.lambda[i - 1]; ++j)
            if (!g.has_edge(i, j)) return false;
    }
    return true;
}

struct ClosedFormReport {
    int n = 0;
    std::vector<int> lambda;
    std::vector<int> mu;
    int height = 0;
    int depth = 0;
    int dim = 0;
    int reg = 2;
    bool cohen_macaulay = false;
    std::vector<long long> betti;  // totals, betti[i-1] = beta_i of the quotient
};

namespace detail {

inline ClosedFormReport closed_form_report(int m, const ShapeDerivation& der) {
    ClosedFormReport rep;
    rep.n = der.n;
    rep.lambda = der.lambda;
    rep.mu = der.mu;
    int lo = der.lambda[0] - der.mu[0];
    int hi = lo;
    for (int j = 1; j <= der.n; ++j) {
        const int v = der.lambda[j - 1] - der.mu[j - 1] + j - 1;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    rep.height = std::min(lo, der.n);
    rep.depth = m - hi;
    rep.dim = m - rep.height;
    rep.reg = 2;
    rep.cohen_macaulay = (lo == hi && hi <= der.n);
    for (int i = 1;; ++i) {
        long long b = 0;
        for (int j = 1; j <= der.n; ++j)
            b += binomial(der.lambda[j - 1] - der.mu[j - 1] + j - 1, i);
        b -= binomial(der.n, i + 1);
        if (b == 0) break;
        rep.betti.push_back(b);
    }
    return rep;
}

}  // namespace detail

struct GraphAnalysis {
    std::vector<int> ordering;                 // original labels in new order
    std::optional<ShapeDerivation> derivation;  // on the reordered graph
    bool condition = false;
    std::optional<ClosedFormReport> report;    // set when the condition holds
};

/**
 * The full pipeline: order the vertices, derive (n, lambda, mu), check
 * the covering condition, and evaluate the closed-form invariants.  The
 * caller falls back to the brute-force oracle when the condition fails.
 */
inline GraphAnalysis analyze(const Graph& g) {
    GraphAnalysis out;
    out.ordering = order_vertices(g);
    const Graph h = relabel(g, out.ordering);
    out.derivation = derive_shape(h);
    if (!out.derivation) return out;
    out.condition = check_condition(h, *out.derivation);
    if (!out.condition) return out;
    // The derived shape must reproduce the edge ideal exactly.
    const Shape shape = validate_shape(out.derivation->lambda, out.derivation->mu);
    const MonomialIdeal expected = specialize(generators(shape), Substitution::identity(shape.cols()));
    if (!(expected == minimize(edge_ideal(h)))) {
        out.condition = false;
        return out;
    }
    out.report = detail::closed_form_report(g.m, *out.derivation);
    return out;
}

struct ThresholdCertificate {
    std::vector<char> creation;      // 'I' or 'D' per creation step
    std::vector<long long> weights;  // per original vertex, 1-based offset 0
};

/**
 * Threshold recognition by iteratively removing an isolated or a
 * dominating vertex.  On success the creation sequence is the reverse
 * removal order and integer weights realizing the adjacency rule
 * (edge iff w_i + w_j > 0) are reconstructed and verified.
 */
inline std::optional<ThresholdCertificate> is_threshold(const Graph& g) {
    if (!g.loops.empty()) throw error(errc::bad_input, "threshold recognition requires a loop-free graph");
    std::vector<int> remaining;
    for (int v = 1; v <= g.m; ++v) remaining.push_back(v);
    std::vector<std::pair<int, char>> peel;  // (vertex, type at removal)
    while (!remaining.empty()) {
        int chosen = -1;
        char type = 0;
        for (int v : remaining) {  // isolated first, smallest label
            bool iso = true;
            for (int u : remaining)
                if (u != v && g.has_edge(u, v)) {
                    iso = false;
                    break;
                }
            if (iso) {
                chosen = v;
                type = 'I';
                break;
            }
        }
        if (chosen < 0)
            for (int v : remaining) {
                bool dom = true;
                for (int u : remaining)
                    if (u != v && !g.has_edge(u, v)) {
                        dom = false;
                        break;
                    }
                if (dom) {
                    chosen = v;
                    type = 'D';
                    break;
                }
            }
        if (chosen < 0) return std::nullopt;
        peel.push_back({chosen, type});
        remaining.erase(std::find(remaining.begin(), remaining.end(), chosen));
    }

    ThresholdCertificate cert;
    cert.weights.assign(g.m, 0);
    for (size_t k = 0; k < peel.size(); ++k) {
        const auto& [v, type] = peel[peel.size() - 1 - k];  // creation order
        cert.creation.push_back(type);
        cert.weights[v - 1] = (type == 'D') ? static_cast<long long>(k + 1)
                                            : -static_cast<long long>(k + 1);
    }
    for (int i = 1; i <= g.m; ++i)
        for (int j = i + 1; j <= g.m; ++j)
            if (g.has_edge(i, j) != (cert.weights[i - 1] + cert.weights[j - 1] > 0))
                return std::nullopt;
    return cert;
}

struct ThresholdShape {
    std::vector<int> ordering;  // by weakly decreasing degree
    ShapeDerivation derivation;
    ClosedFormReport report;
};

/**
 * The shape of a threshold graph: order by weakly decreasing degree,
 * then n = max{ i : d_i >= i }, lambda_i = d_i + 1 and mu = (1, ..., n).
 * The same data is recomputed with the largest-neighbor definitions and
 * both readings must agree; a disagreement is reported as an error
 * rather than silently resolved.
 */
inline ThresholdShape threshold_shape(const Graph& g) {
    if (!g.loops.empty()) throw error(errc::bad_input, "threshold shapes require a loop-free graph");
    if (g.has_isolated_vertex()) throw error(errc::isolated_vertex, "graph has an isolated vertex");
    if (!is_threshold(g)) throw error(errc::not_shape_representable, "graph is not threshold");

    ThresholdShape out;
    std::vector<int> verts;
    for (int v = 1; v <= g.m; ++v) verts.push_back(v);
    std::sort(verts.begin(), verts.end(), [&](int a, int b) {
        const int da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });
    out.ordering = verts;
    const Graph h = relabel(g, verts);

    std::vector<int> deg(g.m);
    for (int v = 1; v <= g.m; ++v) deg[v - 1] = h.degree(v);
    int n = 0;
    for (int i = 1; i <= g.m; ++i)
        if (deg[i - 1] >= i) n = i;
    ShapeDerivation from_degrees;
    from_degrees.n = n;
    for (int i = 1; i <= n; ++i) {
        from_degrees.lambda.push_back(deg[i - 1] + 1);
        from_degrees.mu.push_back(i);
    }

    const std::optional<ShapeDerivation> general = derive_shape(h);
    if (!general || general->n != n || general->lambda != from_degrees.lambda ||
        general->mu != from_degrees.mu)
        throw error(errc::not_shape_representable,
                    "degree-based and largest-neighbor shape readings disagree");

    out.derivation = from_degrees;
    out.report = detail::closed_form_report(g.m, from_degrees);
    return out;
}

// Strongly stable in degree two: every generator x_i x_j (i <= j)
// admits all exchanges lowering one index.
inline bool is_strongly_stable_deg2(const MonomialIdeal& ideal) {
    for (const Monomial& mono : ideal.generators())
        if (mono.degree() != 2) throw error(errc::not_degree_two, "generator of degree != 2");
    auto pair_member = [&](int a, int b) {  // x_a x_b with multiplicity
        std::vector<int> e(ideal.context().size(), 0);
        e[a - 1] += 1;
        e[b - 1] += 1;
        return ideal.contains(Monomial(std::move(e)));
    };
    for (const Monomial& mono : ideal.generators()) {
        int a = -1, b = -1;
        for (int t = 0; t < mono.nvars(); ++t) {
            if (mono[t] == 2) a = b = t + 1;
            if (mono[t] == 1) (a < 0 ? a : b) = t + 1;
        }
        for (int k = 1; k < b; ++k)
            if (!pair_member(a, k)) return false;
        for (int k = 1; k < a; ++k)
            if (!pair_member(k, b)) return false;
    }
    return true;
}

// The squarefree variant skips exchanges that would repeat a variable.
inline bool is_squarefree_strongly_stable_deg2(const MonomialIdeal& ideal) {
    for (const Monomial& mono : ideal.generators()) {
        if (mono.degree() != 2) throw error(errc::not_degree_two, "generator of degree != 2");
        for (int t = 0; t < mono.nvars(); ++t)
            if (mono[t] > 1) return false;  // not squarefree
    }
    auto pair_member = [&](int a, int b) {
        std::vector<int> e(ideal.context().size(), 0);
        e[a - 1] += 1;
        e[b - 1] += 1;
        return ideal.contains(Monomial(std::move(e)));
    };
    for (const Monomial& mono : ideal.generators()) {
        int a = -1, b = -1;
        for (int t = 0; t < mono.nvars(); ++t)
            if (mono[t] == 1) (a < 0 ? a : b) = t + 1;
        for (int k = 1; k < b; ++k)
            if (k != a && !pair_member(std::min(a, k), std::max(a, k))) return false;
        for (int k = 1; k < a; ++k)
            if (!pair_member(k, b)) return false;
    }
    return true;
}

}  // namespace ferrers
