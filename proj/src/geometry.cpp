#include "polytrope/geometry.hpp"

#include "polytrope/lp.hpp"
#include "polytrope/trees.hpp"
#include "polytrope/util.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace polytrope {

std::pair<Rational, HPolytope> polytrope_of(const WeightMatrix& c) {
    const int n = c.n();
    const Rational lambda = min_mean_cycle(c);
    // The cycle-mean shift extends the polytope below the no-negative-cycle
    // region; inside it the halfspaces use c itself.
    const WeightMatrix star = kleene_star(lambda < 0 ? c.shifted(lambda) : c);
    HPolytope p;
    p.dim = n - 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            std::vector<Rational> row(n - 1, Rational(0));
            if (i < n - 1) row[i] += 1;
            if (j < n - 1) row[j] -= 1;
            p.normals.push_back(std::move(row));
            p.offsets.push_back(star.at(i, j));
        }
    return {lambda, p};
}

std::vector<std::vector<Rational>> tropical_vertices(const WeightMatrix& c) {
    const int n = c.n();
    const WeightMatrix star = kleene_star(c.shifted(min_mean_cycle(c)));
    std::vector<std::vector<Rational>> out;
    for (int j = 0; j < n; ++j) {
        std::vector<Rational> v(n - 1);
        for (int i = 0; i < n - 1; ++i) v[i] = star.at(i, j) - star.at(n - 1, j);
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

struct DDVertex {
    std::vector<Rational> point;
    std::vector<char> active; // over box facets + inserted constraints
};

// rank of the active constraint normals shared by two vertices
int common_active_rank(const DDVertex& u, const DDVertex& v, const RationalMatrix& all_normals) {
    RationalMatrix rows;
    for (std::size_t k = 0; k < u.active.size(); ++k)
        if (u.active[k] && v.active[k]) rows.push_back(all_normals[k]);
    if (rows.empty()) return 0;
    return rank_of(std::move(rows));
}

std::vector<std::vector<Rational>> cut_box(const HPolytope& p, const Rational& box,
                                           const std::vector<int>& order, bool& touched_box) {
    const int d = p.dim;
    const int nbox = 2 * d;
    RationalMatrix all_normals;
    std::vector<Rational> all_offsets;
    for (int i = 0; i < d; ++i) {
        std::vector<Rational> up(d, Rational(0)), down(d, Rational(0));
        up[i] = 1;
        down[i] = -1;
        all_normals.push_back(std::move(up));
        all_offsets.push_back(box);
        all_normals.push_back(std::move(down));
        all_offsets.push_back(box);
    }
    for (int k : order) {
        all_normals.push_back(p.normals[k]);
        all_offsets.push_back(p.offsets[k]);
    }

    // box vertices
    std::vector<DDVertex> verts;
    for (int mask = 0; mask < (1 << d); ++mask) {
        DDVertex v;
        v.point.resize(d);
        v.active.assign(all_normals.size(), 0);
        for (int i = 0; i < d; ++i) {
            const bool plus = (mask >> i) & 1;
            v.point[i] = plus ? box : -box;
            v.active[2 * i + (plus ? 0 : 1)] = 1;
        }
        verts.push_back(std::move(v));
    }

    for (std::size_t c = 0; c < order.size(); ++c) {
        const std::size_t row = nbox + c;
        const auto& normal = all_normals[row];
        const Rational& offset = all_offsets[row];
        std::vector<Rational> slack(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i)
            slack[i] = offset - dot(normal, verts[i].point);

        std::vector<DDVertex> next;
        std::vector<std::size_t> kept, dropped;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (slack[i] > 0) {
                kept.push_back(i);
                next.push_back(verts[i]);
            } else if (slack[i] == 0) {
                kept.push_back(i);
                DDVertex v = verts[i];
                v.active[row] = 1;
                next.push_back(std::move(v));
            } else {
                dropped.push_back(i);
            }
        }
        // crossing points of edges between the two sides
        for (std::size_t ui : kept) {
            if (slack[ui] == 0) continue;
            for (std::size_t vi : dropped) {
                if (common_active_rank(verts[ui], verts[vi], all_normals) != p.dim - 1) continue;
                const Rational t = slack[ui] / (slack[ui] - slack[vi]);
                DDVertex w;
                w.point.resize(d);
                for (int x = 0; x < d; ++x)
                    w.point[x] = verts[ui].point[x] + t * (verts[vi].point[x] - verts[ui].point[x]);
                w.active.assign(all_normals.size(), 0);
                for (std::size_t k = 0; k < all_normals.size(); ++k)
                    w.active[k] = verts[ui].active[k] && verts[vi].active[k];
                w.active[row] = 1;
                next.push_back(std::move(w));
            }
        }
        // merge duplicates (degenerate intersections), pooling active sets
        std::sort(next.begin(), next.end(),
                  [](const DDVertex& a, const DDVertex& b) { return a.point < b.point; });
        std::vector<DDVertex> merged;
        for (auto& v : next) {
            if (!merged.empty() && merged.back().point == v.point) {
                for (std::size_t k = 0; k < v.active.size(); ++k)
                    merged.back().active[k] = merged.back().active[k] || v.active[k];
            } else {
                merged.push_back(std::move(v));
            }
        }
        verts = std::move(merged);
    }

    touched_box = false;
    std::vector<std::vector<Rational>> out;
    for (auto& v : verts) {
        for (int k = 0; k < nbox; ++k) touched_box = touched_box || v.active[k];
        out.push_back(std::move(v.point));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<std::vector<Rational>> vertices(const HPolytope& p,
                                            const std::vector<Rational>& interior_hint) {
    // exact unboundedness test on the recession cone {a . y <= 0}
    ConeSystem recession{p.dim, {}};
    for (const auto& normal : p.normals) {
        std::vector<Rational> neg(normal.size());
        for (std::size_t i = 0; i < normal.size(); ++i) neg[i] = -normal[i];
        recession.add(std::move(neg), Relation::Ge);
    }
    if (relative_interior(recession).dimension > 0) throw UnboundedError();

    // tightest-first insertion around the hint keeps intermediate counts low
    std::vector<int> order(p.normals.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<Rational> slack(p.normals.size());
    for (std::size_t k = 0; k < p.normals.size(); ++k)
        slack[k] = interior_hint.empty() ? p.offsets[k] : p.offsets[k] - dot(p.normals[k], interior_hint);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return slack[a] < slack[b]; });

    Rational box(1);
    for (const auto& b : p.offsets) box += abs(b);
    for (int attempt = 0; attempt < 64; ++attempt) {
        bool touched = false;
        auto verts = cut_box(p, box, order, touched);
        if (!touched) return verts;
        box *= 4;
    }
    throw std::logic_error("bounding box failed to stabilize on a bounded polytope");
}

std::vector<std::vector<Rational>> brute_force_vertices(const HPolytope& p) {
    const int d = p.dim;
    std::vector<std::vector<Rational>> out;
    for (const auto& pick : combinations(static_cast<int>(p.normals.size()), d)) {
        RationalMatrix a;
        std::vector<Rational> b;
        for (int k : pick) {
            a.push_back(p.normals[k]);
            b.push_back(p.offsets[k]);
        }
        const auto y = solve_square(std::move(a), std::move(b));
        if (!y) continue;
        bool inside = true;
        for (std::size_t k = 0; k < p.normals.size() && inside; ++k)
            inside = dot(p.normals[k], *y) <= p.offsets[k];
        if (inside) out.push_back(*y);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PolytropeShape polytrope_shape(const WeightMatrix& c) {
    PolytropeShape shape;
    auto [lambda, poly] = polytrope_of(c);
    shape.lambda = lambda;
    shape.tropical = tropical_vertices(c);
    std::vector<Rational> hint(poly.dim, Rational(0));
    for (const auto& v : shape.tropical)
        for (int i = 0; i < poly.dim; ++i) hint[i] += v[i];
    for (auto& x : hint) x /= static_cast<int>(shape.tropical.size());
    shape.ordinary = vertices(poly, hint);
    shape.vertex_count = static_cast<int>(shape.ordinary.size());
    const int n = c.n();
    shape.is_maximal = shape.vertex_count == binomial_coefficient(2 * n - 2, n - 1);
    return shape;
}

std::vector<int> classify_counts(const std::vector<ConeRecord>& records, bool parallel) {
    std::vector<int> counts(records.size(), 0);
    const int size = static_cast<int>(records.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int i = 0; i < size; ++i) counts[i] = polytrope_shape(records[i].witness).vertex_count;
    return counts;
}

std::map<int, long long> classify(const std::vector<ConeRecord>& records) {
    std::map<int, long long> hist;
    for (int c : classify_counts(records, true)) ++hist[c];
    return hist;
}

std::map<int, long long> classify_serial(const std::vector<ConeRecord>& records) {
    std::map<int, long long> hist;
    for (int c : classify_counts(records, false)) ++hist[c];
    return hist;
}

std::string combinatorial_type_hash(const InducedAction& action, const WeightMatrix& c) {
    const int n = c.n();
    auto [lambda, poly] = polytrope_of(c);
    const auto verts = vertices(poly);
    // vertex-facet incidence over the N constraint slots (edge-indexed)
    std::vector<std::vector<char>> incidence;
    for (const auto& v : verts) {
        std::vector<char> row(edge_count(n), 0);
        for (int k = 0; k < edge_count(n); ++k)
            row[k] = dot(poly.normals[k], v) == poly.offsets[k];
        incidence.push_back(std::move(row));
    }
    std::string best;
    for (int s = 0; s < action.perm_count(); ++s) {
        std::vector<std::string> rows;
        for (const auto& row : incidence) {
            std::string r(edge_count(n), '0');
            for (int k = 0; k < edge_count(n); ++k)
                if (row[k]) r[action.edge_image(s, k)] = '1';
            rows.push_back(std::move(r));
        }
        std::sort(rows.begin(), rows.end());
        std::string cand;
        for (auto& r : rows) {
            cand += r;
            cand += ';';
        }
        if (best.empty() || cand < best) best = std::move(cand);
    }
    return hex64(fnv1a(best));
}

StandardMonomials standard_monomials(const FanContext& ctx, const ConeRecord& record) {
    const int n = ctx.n();
    if (record.dim != ctx.num_edges()) throw NotOpenCone();
    const WeightMatrix& c = record.witness;
    const auto trees_or = shortest_path_trees(c);
    if (!std::holds_alternative<TreeTuple>(trees_or))
        throw std::logic_error("open-cone witness has tied shortest paths");
    const auto& trees = std::get<TreeTuple>(trees_or);

    StandardMonomials out;
    auto path_vector = [&](int from, int root) {
        std::vector<int> g(ctx.num_edges(), 0);
        const auto path = trees.path_to_root(root, from);
        for (std::size_t k = 0; k + 1 < path.size(); ++k) g[edge_index(n, path[k], path[k + 1])] += 1;
        return g;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) out.tree_paths.push_back(path_vector(i, j));

    const EdgeVector point = c.to_edge_vector();
    auto reroute = [&](const std::vector<int>& incidence) {
        std::vector<int> g(ctx.num_edges(), 0);
        for (int e = 0; e < ctx.num_edges(); ++e) {
            if (!incidence[e]) continue;
            auto [i, j] = edge_at(n, e);
            const auto part = path_vector(i, j);
            for (int x = 0; x < ctx.num_edges(); ++x) g[x] += part[x];
        }
        return g;
    };
    // m = 2: the cheaper side of each binomial is the standard monomial
    for (std::size_t b = 0; b < ctx.m2().size(); ++b) {
        const auto& bin = ctx.m2()[b];
        Rational v = 0;
        for (int e = 0; e < ctx.num_edges(); ++e)
            if (bin.normal[e] != 0) v += bin.normal[e] * point[e];
        const int rot = v > 0 ? bin.rot_minus : bin.rot_plus;
        BipartiteMonomial argmin{bin.m, bin.sources, bin.sinks, rot};
        out.modified_monomials.push_back(reroute(argmin.incidence(n)));
    }
    // m = 3 blocks: one winner per parity class
    for (const auto& blk : ctx.blocks())
        for (int parity = 0; parity < 2; ++parity) {
            int arg = -1;
            Rational best;
            for (std::size_t idx = 0; idx < blk.incidence[parity].size(); ++idx) {
                Rational v = 0;
                for (int e = 0; e < ctx.num_edges(); ++e)
                    if (blk.incidence[parity][idx][e]) v += point[e];
                if (arg < 0 || v < best) {
                    best = std::move(v);
                    arg = static_cast<int>(idx);
                }
            }
            out.modified_monomials.push_back(reroute(blk.incidence[parity][arg]));
        }
    return out;
}

} // namespace polytrope
