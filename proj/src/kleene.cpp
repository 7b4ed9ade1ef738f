#include "polytrope/kleene.hpp"

namespace polytrope {

WeightMatrix kleene_star(const WeightMatrix& c) {
    const int n = c.n();
    std::vector<Rational> d(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[i * n + j] = c.at(i, j);

    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            const Rational& dik = d[i * n + k];
            for (int j = 0; j < n; ++j) {
                Rational via = dik + d[k * n + j];
                if (via < d[i * n + j]) d[i * n + j] = std::move(via);
            }
        }

    for (int i = 0; i < n; ++i)
        if (d[i * n + i] < 0) throw NegativeCycleError();
    for (int i = 0; i < n; ++i) d[i * n + i] = 0;
    return WeightMatrix(n, std::move(d));
}

Rational min_mean_cycle(const WeightMatrix& c) {
    const int n = c.n();
    // Karp: walks of length k from a fixed source. The complete graph is
    // strongly connected, so one source sees every cycle.
    const int rows = n + 1;
    std::vector<Rational> dist(static_cast<std::size_t>(rows) * n);
    std::vector<char> reach(static_cast<std::size_t>(rows) * n, 0);
    dist[0 * n + 0] = 0;
    reach[0 * n + 0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int v = 0; v < n; ++v) {
            bool any = false;
            Rational best;
            for (int u = 0; u < n; ++u) {
                if (u == v || !reach[(k - 1) * n + u]) continue;
                Rational cand = dist[(k - 1) * n + u] + c.at(u, v);
                if (!any || cand < best) {
                    best = std::move(cand);
                    any = true;
                }
            }
            if (any) {
                dist[k * n + v] = std::move(best);
                reach[k * n + v] = 1;
            }
        }

    bool have = false;
    Rational lambda;
    for (int v = 0; v < n; ++v) {
        if (!reach[n * n + v]) continue;
        bool any = false;
        Rational inner;
        for (int k = 0; k < n; ++k) {
            if (!reach[k * n + v]) continue;
            Rational cand = (dist[n * n + v] - dist[k * n + v]) / (n - k);
            if (!any || cand > inner) {
                inner = std::move(cand);
                any = true;
            }
        }
        if (any && (!have || inner < lambda)) {
            lambda = std::move(inner);
            have = true;
        }
    }
    return lambda;
}

RegionReport membership(const WeightMatrix& c) {
    RegionReport r;
    Rational lambda = min_mean_cycle(c);
    r.in_Rn = lambda >= 0;
    r.in_Rn_interior = lambda > 0;
    if (r.in_Rn) {
        r.in_Pn = kleene_star(c) == c;
        if (r.in_Pn) {
            r.in_Pn_interior = true;
            for (const auto& t : triangle_functionals(c.n()))
                if (triangle_value(c, t) <= 0) {
                    r.in_Pn_interior = false;
                    break;
                }
        }
    }
    return r;
}

std::vector<TriangleFunctional> triangle_functionals(int n) {
    std::vector<TriangleFunctional> out;
    out.reserve(static_cast<std::size_t>(n) * (n - 1) * (n - 2));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                out.push_back({i, j, k});
            }
        }
    return out;
}

Rational triangle_value(const WeightMatrix& c, const TriangleFunctional& t) {
    return c.at(t.i, t.k) + c.at(t.k, t.j) - c.at(t.i, t.j);
}

std::vector<int> triangle_sign_vector(const WeightMatrix& c) {
    std::vector<int> out;
    for (const auto& t : triangle_functionals(c.n()))
        out.push_back(sign_of(triangle_value(c, t)));
    return out;
}

std::vector<int> triangle_normal(int n, const TriangleFunctional& t) {
    std::vector<int> v(edge_count(n), 0);
    v[edge_index(n, t.i, t.k)] += 1;
    v[edge_index(n, t.k, t.j)] += 1;
    v[edge_index(n, t.i, t.j)] -= 1;
    return v;
}

} // namespace polytrope
