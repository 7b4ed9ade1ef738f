#include "polytrope/fans.hpp"

#include "polytrope/linalg.hpp"
#include "polytrope/util.hpp"

#include <json.hpp>

#include <algorithm>
#include <cassert>
#include <set>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polytrope {

FanContext::FanContext(int n)
    : n_(n), action_(n), triangles_(triangle_functionals(n)),
      m2_(n >= 4 ? enumerate_binomials(n, 2) : std::vector<BipartiteBinomial>{}) {
    if (n < 3) throw std::invalid_argument("fan context needs n >= 3");
    for (const auto& t : triangles_) tri_normals_.push_back(triangle_normal(n, t));

    // Wall-crossing completeness needs pairwise non-proportional hyperplane
    // normals (every chamber facet then lies on exactly one hyperplane).
    // Entries are in {-1,0,1}, so proportional means equal up to sign.
    {
        std::set<std::vector<int>> seen;
        auto oriented = [](std::vector<int> v) {
            for (int x : v) {
                if (x > 0) break;
                if (x < 0) {
                    for (int& y : v) y = -y;
                    break;
                }
            }
            return v;
        };
        auto insert_checked = [&](const std::vector<int>& v) {
            if (!seen.insert(oriented(v)).second)
                throw std::logic_error("proportional hyperplane normals in the fan context");
        };
        for (const auto& b : m2_) insert_checked(b.normal);
        for (const auto& blk : action_.blocks())
            for (int parity = 0; parity < 2; ++parity)
                for (int a = 0; a < static_cast<int>(blk.matchings[parity].size()); ++a)
                    for (int b = a + 1; b < static_cast<int>(blk.matchings[parity].size()); ++b)
                        insert_checked(blk.hyperplane(parity, a, b));
    }
    if (n <= 5) {
        // Small circuits as fast infeasibility certificates; the LP remains
        // the decider for candidates that pass.
        CircuitReport report = relation_circuits(action_, true);
        CircuitReport small;
        small.n = n;
        small.num_binomials = report.num_binomials;
        for (auto& cls : report.classes)
            if (cls[0].support.size() <= 6) small.classes.push_back(std::move(cls));
        filter_ = std::make_unique<CircuitFilter>(static_cast<int>(m2_.size()), small);
    }
}

SignVector evaluate_signs(const FanContext& ctx, const WeightMatrix& c, EnumMode mode,
                          WinnerRule rule) {
    return sign_vector_of(ctx.action(), c, mode == EnumMode::Maximal, rule == WinnerRule::Min);
}

namespace {

Rational min_triangle_slack(const FanContext& ctx, const EdgeVector& x) {
    Rational best;
    bool first = true;
    for (const auto& normal : ctx.triangle_normals()) {
        Rational v = 0;
        for (int e = 0; e < ctx.num_edges(); ++e)
            if (normal[e] != 0) v += normal[e] * x[e];
        if (first || v < best) {
            best = std::move(v);
            first = false;
        }
    }
    return best;
}

std::vector<Rational> int_normal_to_rational(const std::vector<int>& v, int sign) {
    std::vector<Rational> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = sign * v[i];
    return out;
}

} // namespace

ConeSystem chamber_system(const FanContext& ctx, const SignVector& sv, WinnerRule rule) {
    ConeSystem sys{ctx.num_edges(), {}};
    for (std::size_t b = 0; b < ctx.m2().size(); ++b)
        sys.add(int_normal_to_rational(ctx.m2()[b].normal, sv.bin[b]), Relation::Gt);
    const auto& blocks = ctx.blocks();
    for (std::size_t blk = 0; blk < blocks.size(); ++blk)
        for (int parity = 0; parity < 2; ++parity) {
            const int w = sv.winners[blk][parity];
            for (int other = 0; other < static_cast<int>(blocks[blk].matchings[parity].size()); ++other) {
                if (other == w) continue;
                // winner strictly below (Min) or above (Max) the rest
                std::vector<int> h = blocks[blk].hyperplane(parity, other, w);
                if (rule == WinnerRule::Max)
                    for (int& v : h) v = -v;
                sys.add(std::vector<Rational>(h.begin(), h.end()), Relation::Gt);
            }
        }
    return sys;
}

WeightMatrix chamber_witness(const FanContext& ctx, const SignVector& sv, WinnerRule rule) {
    const auto w = feasible(chamber_system(ctx, sv, rule));
    if (!w) throw InfeasibleSystem();
    EdgeVector x = w->point;
    // Every tracked functional is orthogonal to the all-ones direction, so a
    // uniform shift lands in the strict triangle region without moving the
    // chamber data.
    const Rational slack = min_triangle_slack(ctx, x);
    const Rational shift = slack >= 1 ? Rational(0) : Rational(1) - slack;
    for (auto& v : x) v += shift;
    WeightMatrix witness = WeightMatrix::from_edge_vector(ctx.n(), x);
    SignVector check = evaluate_signs(ctx, witness, EnumMode::Maximal, rule);
    if (!(check == sv)) throw std::logic_error("chamber witness does not reproduce its sign vector");
    return witness;
}

namespace {

// ---------- sign-vector neighborhood in maximal mode ----------

std::vector<SignVector> chamber_neighbors(const SignVector& sv) {
    std::vector<SignVector> out;
    for (std::size_t b = 0; b < sv.bin.size(); ++b) {
        SignVector next = sv;
        next.bin[b] = static_cast<std::int8_t>(-next.bin[b]);
        out.push_back(std::move(next));
    }
    for (std::size_t blk = 0; blk < sv.winners.size(); ++blk)
        for (int parity = 0; parity < 2; ++parity)
            for (int alt = 0; alt < 3; ++alt) {
                if (alt == sv.winners[blk][parity]) continue;
                SignVector next = sv;
                next.winners[blk][parity] = static_cast<std::int8_t>(alt);
                out.push_back(std::move(next));
            }
    return out;
}

bool chamber_feasible(const FanContext& ctx, const SignVector& sv, WinnerRule rule,
                      EnumerationStats& stats) {
    if (ctx.filter() && !ctx.filter()->admits(sv.bin)) {
        ++stats.filter_rejects;
        return false;
    }
    ++stats.lp_calls;
    return feasible(chamber_system(ctx, sv, rule)).has_value();
}

SignVector seed_chamber(const FanContext& ctx, const EnumerateOptions& opt) {
    SplitMix64 rng(opt.seed);
    for (int attempt = 0; attempt < opt.max_seed_attempts; ++attempt) {
        WeightMatrix c(ctx.n());
        for (int i = 0; i < ctx.n(); ++i)
            for (int j = 0; j < ctx.n(); ++j)
                if (i != j) c.set(i, j, make_rational(10000 + rng.range(-999, 999), 10000));
        SignVector sv = evaluate_signs(ctx, c, EnumMode::Maximal, opt.winner);
        bool generic = true;
        for (auto v : sv.bin) generic = generic && v != 0;
        for (const auto& w : sv.winners) generic = generic && w[0] >= 0 && w[1] >= 0;
        if (generic) return sv;
    }
    throw SeedFailure("no generic seed after " + std::to_string(opt.max_seed_attempts) + " attempts");
}

ConeRecord make_chamber_record(const FanContext& ctx, const SignVector& canon, WinnerRule rule) {
    ConeRecord rec;
    rec.n = ctx.n();
    rec.mode = EnumMode::Maximal;
    rec.winner = rule;
    rec.sign = canon;
    rec.witness = chamber_witness(ctx, canon, rule);
    rec.dim = ctx.num_edges(); // open chambers are full-dimensional
    rec.orbit_size = ctx.action().canonical_full(canon).orbit_size;
    rec.boundary_Rn = min_mean_cycle(rec.witness) == 0;
    rec.id = hex64(fnv1a(std::to_string(ctx.n()) + ":maximal:" +
                         (rule == WinnerRule::Min ? "min:" : "max:") + encode_sign_vector(canon)));
    return rec;
}

EnumerationResult finish_maximal(const FanContext& ctx, const EnumerateOptions& opt,
                                 const std::vector<std::string>& visited_sorted,
                                 EnumerationStats stats) {
    EnumerationResult result;
    result.records.resize(visited_sorted.size());
    const int count = static_cast<int>(visited_sorted.size());
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
    for (int i = 0; i < count; ++i)
        result.records[i] = make_chamber_record(ctx, decode_sign_vector(visited_sorted[i]), opt.winner);
    stats.classes = count;
    for (const auto& r : result.records) stats.raw_cones += r.orbit_size;
    result.stats = stats;
    return result;
}

} // namespace

EnumerationResult enumerate_maximal(const FanContext& ctx, const EnumerateOptions& opt,
                                    BfsState* state) {
    if (ctx.n() < 3 || ctx.n() > 6)
        throw std::invalid_argument("enumerate_maximal covers 3 <= n <= 6");
    const InducedAction& action = ctx.action();

    std::unordered_set<std::string> visited;
    std::unordered_set<std::string> rejected; // infeasible canonical candidates
    std::vector<SignVector> frontier;
    EnumerationStats stats;
    long long since_checkpoint = 0;
    int wave = 0;

    if (state && !state->visited.empty()) {
        for (const auto& k : state->visited) visited.insert(k);
        for (const auto& k : state->frontier) frontier.push_back(decode_sign_vector(k));
        stats.expanded = state->expanded;
        wave = state->wave;
    } else {
        SignVector canon = action.canonicalize(seed_chamber(ctx, opt));
        visited.insert(encode_sign_vector(canon));
        frontier.push_back(std::move(canon));
    }

    const auto snapshot = [&]() {
        BfsState snap;
        snap.visited.assign(visited.begin(), visited.end());
        std::sort(snap.visited.begin(), snap.visited.end());
        for (const auto& sv : frontier) snap.frontier.push_back(encode_sign_vector(sv));
        std::sort(snap.frontier.begin(), snap.frontier.end());
        snap.expanded = stats.expanded;
        snap.wave = wave;
        return snap;
    };

    while (!frontier.empty()) {
        if (opt.max_waves >= 0 && wave >= opt.max_waves) {
            stats.completed = false;
            break;
        }

        // Expand the whole wave, canonicalize candidates, keep the unseen.
        std::map<std::string, SignVector> fresh;
        const int fsize = static_cast<int>(frontier.size());
#pragma omp parallel if (opt.parallel)
        {
            std::map<std::string, SignVector> local;
#pragma omp for schedule(dynamic) nowait
            for (int i = 0; i < fsize; ++i)
                for (SignVector& nb : chamber_neighbors(frontier[i])) {
                    SignVector canon = action.canonicalize(nb);
                    std::string key = encode_sign_vector(canon);
                    if (!visited.contains(key) && !rejected.contains(key))
                        local.emplace(std::move(key), std::move(canon));
                }
#pragma omp critical
            for (auto& [k, v] : local) fresh.emplace(std::move(k), std::move(v));
        }

        std::vector<std::pair<std::string, SignVector>> candidates(
            std::make_move_iterator(fresh.begin()), std::make_move_iterator(fresh.end()));
        std::vector<char> accepted(candidates.size(), 0);
        const int csize = static_cast<int>(candidates.size());
        EnumerationStats wave_stats;
#pragma omp parallel if (opt.parallel)
        {
            EnumerationStats local;
#pragma omp for schedule(dynamic) nowait
            for (int i = 0; i < csize; ++i)
                accepted[i] = chamber_feasible(ctx, candidates[i].second, opt.winner, local);
#pragma omp critical
            {
                wave_stats.lp_calls += local.lp_calls;
                wave_stats.filter_rejects += local.filter_rejects;
            }
        }
        stats.lp_calls += wave_stats.lp_calls;
        stats.filter_rejects += wave_stats.filter_rejects;
        stats.expanded += fsize;
        since_checkpoint += fsize;
        ++wave;

        frontier.clear();
        for (int i = 0; i < csize; ++i)
            if (accepted[i]) {
                visited.insert(candidates[i].first);
                frontier.push_back(std::move(candidates[i].second));
            } else {
                rejected.insert(std::move(candidates[i].first));
            }

        if (opt.on_checkpoint && since_checkpoint >= opt.checkpoint_cadence) {
            opt.on_checkpoint(snapshot());
            since_checkpoint = 0;
        }
    }
    stats.waves = wave;

    if (state) *state = snapshot();
    if (!stats.completed) {
        EnumerationResult partial;
        partial.stats = stats;
        partial.stats.classes = static_cast<long long>(visited.size());
        return partial;
    }

    std::vector<std::string> keys(visited.begin(), visited.end());
    std::sort(keys.begin(), keys.end(), [](const std::string& a, const std::string& b) {
        return decode_sign_vector(a).key() < decode_sign_vector(b).key();
    });
    return finish_maximal(ctx, opt, keys, stats);
}

EnumerationResult enumerate_maximal_serial(const FanContext& ctx, const EnumerateOptions& opt) {
    // Straight worklist reference: no waves, no threads.
    const InducedAction& action = ctx.action();
    EnumerationStats stats;
    std::unordered_set<std::string> visited;
    std::vector<SignVector> todo;

    SignVector canon = action.canonicalize(seed_chamber(ctx, opt));
    visited.insert(encode_sign_vector(canon));
    todo.push_back(std::move(canon));

    while (!todo.empty()) {
        SignVector sv = std::move(todo.back());
        todo.pop_back();
        ++stats.expanded;
        for (SignVector& nb : chamber_neighbors(sv)) {
            SignVector cand = action.canonicalize(nb);
            std::string key = encode_sign_vector(cand);
            if (visited.contains(key)) continue;
            if (!chamber_feasible(ctx, cand, opt.winner, stats)) continue;
            visited.insert(std::move(key));
            todo.push_back(std::move(cand));
        }
    }

    std::vector<std::string> keys(visited.begin(), visited.end());
    std::sort(keys.begin(), keys.end(), [](const std::string& a, const std::string& b) {
        return decode_sign_vector(a).key() < decode_sign_vector(b).key();
    });
    EnumerateOptions serial = opt;
    serial.parallel = false;
    return finish_maximal(ctx, serial, keys, stats);
}

std::vector<SignVector> brute_force_chambers_serial(const FanContext& ctx) {
    if (ctx.n() != 4) throw std::invalid_argument("brute force scan is defined for n = 4");
    std::vector<SignVector> feasible_vectors;
    for (int mask = 0; mask < 64; ++mask) {
        SignVector sv;
        sv.bin.resize(6);
        for (int b = 0; b < 6; ++b) sv.bin[b] = (mask >> b) & 1 ? 1 : -1;
        ConeSystem sys = chamber_system(ctx, sv, WinnerRule::Min);
        for (const auto& normal : ctx.triangle_normals())
            sys.add(std::vector<Rational>(normal.begin(), normal.end()), Relation::Gt);
        if (feasible(sys)) feasible_vectors.push_back(std::move(sv));
    }
    return feasible_vectors;
}

std::vector<SignVector> brute_force_chambers(const FanContext& ctx) {
    if (ctx.n() != 4) throw std::invalid_argument("brute force scan is defined for n = 4");
    std::vector<char> ok(64, 0);
#pragma omp parallel for schedule(dynamic)
    for (int mask = 0; mask < 64; ++mask) {
        SignVector sv;
        sv.bin.resize(6);
        for (int b = 0; b < 6; ++b) sv.bin[b] = (mask >> b) & 1 ? 1 : -1;
        ConeSystem sys = chamber_system(ctx, sv, WinnerRule::Min);
        for (const auto& normal : ctx.triangle_normals())
            sys.add(std::vector<Rational>(normal.begin(), normal.end()), Relation::Gt);
        ok[mask] = feasible(sys).has_value();
    }
    std::vector<SignVector> feasible_vectors;
    for (int mask = 0; mask < 64; ++mask)
        if (ok[mask]) {
            SignVector sv;
            sv.bin.resize(6);
            for (int b = 0; b < 6; ++b) sv.bin[b] = (mask >> b) & 1 ? 1 : -1;
            feasible_vectors.push_back(std::move(sv));
        }
    return feasible_vectors;
}

namespace {

// ---------- closure descent (all cones, n = 4) ----------

struct FaceSolve {
    SignVector sign;
    EdgeVector witness;
    int dim = 0;
};

// Relative interior of the face obtained by forcing one strict functional of
// the parent cone to zero. Equalities are eliminated by projecting onto
// their nullspace first; rows vanishing under the projection are zeros of the
// face as well.
FaceSolve solve_face(const FanContext& ctx, const SignVector& parent, int strict_tri,
                     int strict_bin) {
    const int nedges = ctx.num_edges();
    SignVector target = parent;
    if (strict_tri >= 0) target.tri[strict_tri] = 0;
    if (strict_bin >= 0) target.bin[strict_bin] = 0;

    RationalMatrix eq_rows;
    for (std::size_t t = 0; t < target.tri.size(); ++t)
        if (target.tri[t] == 0)
            eq_rows.push_back(
                std::vector<Rational>(ctx.triangle_normals()[t].begin(), ctx.triangle_normals()[t].end()));
    for (std::size_t b = 0; b < target.bin.size(); ++b)
        if (target.bin[b] == 0)
            eq_rows.push_back(std::vector<Rational>(ctx.m2()[b].normal.begin(), ctx.m2()[b].normal.end()));

    const RationalMatrix basis = eq_rows.empty()
                                     ? [&] {
                                           RationalMatrix id(nedges, std::vector<Rational>(nedges, Rational(0)));
                                           for (int e = 0; e < nedges; ++e) id[e][e] = 1;
                                           return id;
                                       }()
                                     : kernel_basis(eq_rows, nedges);
    const int k = static_cast<int>(basis.size());

    // Project the strict rows; vanishing projections are forced zeros.
    struct Row {
        bool is_tri;
        int index;
        std::vector<Rational> proj;
    };
    std::vector<Row> rows;
    auto project = [&](const std::vector<int>& normal, int sign) {
        std::vector<Rational> p(k);
        bool nonzero = false;
        for (int j = 0; j < k; ++j) {
            Rational v = 0;
            for (int e = 0; e < nedges; ++e)
                if (normal[e] != 0) v += sign * normal[e] * basis[j][e];
            nonzero = nonzero || v != 0;
            p[j] = std::move(v);
        }
        return std::make_pair(std::move(p), nonzero);
    };
    for (std::size_t t = 0; t < target.tri.size(); ++t) {
        if (target.tri[t] == 0) continue;
        auto [p, nonzero] = project(ctx.triangle_normals()[t], 1);
        if (!nonzero)
            target.tri[t] = 0;
        else
            rows.push_back({true, static_cast<int>(t), std::move(p)});
    }
    for (std::size_t b = 0; b < target.bin.size(); ++b) {
        if (target.bin[b] == 0) continue;
        auto [p, nonzero] = project(ctx.m2()[b].normal, target.bin[b]);
        if (!nonzero)
            target.bin[b] = 0;
        else
            rows.push_back({false, static_cast<int>(b), std::move(p)});
    }

    ConeSystem sys{k, {}};
    for (auto& r : rows) sys.add(r.proj, Relation::Ge);
    const RelativeInterior ri = relative_interior(sys);

    for (std::size_t i = 0; i < rows.size(); ++i)
        if (ri.forced_zero[i]) {
            if (rows[i].is_tri)
                target.tri[rows[i].index] = 0;
            else
                target.bin[rows[i].index] = 0;
        }

    FaceSolve out;
    out.sign = std::move(target);
    out.dim = ri.dimension;
    out.witness.assign(nedges, Rational(0));
    for (int j = 0; j < k; ++j) {
        if (ri.witness.point[j] == 0) continue;
        for (int e = 0; e < nedges; ++e) out.witness[e] += ri.witness.point[j] * basis[j][e];
    }
    return out;
}

ConeRecord make_face_record(const FanContext& ctx, const FaceSolve& face) {
    const auto canon = ctx.action().canonical_full(face.sign);
    ConeRecord rec;
    rec.n = ctx.n();
    rec.mode = EnumMode::All;
    rec.winner = WinnerRule::Min;
    rec.sign = canon.canon;
    rec.orbit_size = canon.orbit_size;
    rec.dim = face.dim;
    EdgeVector moved = ctx.action().permute_point(canon.perm, face.witness);
    rec.witness = WeightMatrix::from_edge_vector(ctx.n(), moved);
    SignVector check = evaluate_signs(ctx, rec.witness, EnumMode::All, WinnerRule::Min);
    if (!(check == rec.sign)) throw std::logic_error("face witness does not reproduce its sign vector");
    rec.boundary_Rn = min_mean_cycle(rec.witness) == 0;
    rec.id = hex64(fnv1a(std::to_string(ctx.n()) + ":all:" + encode_sign_vector(rec.sign)));
    return rec;
}

} // namespace

EnumerationResult enumerate_all_cones(const FanContext& ctx, const EnumerateOptions& opt) {
    if (ctx.n() != 4)
        throw std::invalid_argument("all-cones enumeration is validated for n = 4 only");
    const InducedAction& action = ctx.action();

    EnumerationResult chambers = enumerate_maximal(ctx, opt);
    EnumerationStats stats = chambers.stats;

    std::map<std::string, ConeRecord> records; // canonical key -> record
    std::vector<SignVector> frontier;
    const std::size_t tri_count = ctx.triangles().size();
    for (const auto& chamber : chambers.records) {
        SignVector sv;
        sv.tri.assign(tri_count, 1);
        sv.bin = chamber.sign.bin;
        const auto canon = action.canonical_full(sv);
        ConeRecord rec;
        rec.n = ctx.n();
        rec.mode = EnumMode::All;
        rec.winner = WinnerRule::Min;
        rec.sign = canon.canon;
        rec.orbit_size = canon.orbit_size;
        rec.dim = ctx.num_edges();
        rec.witness = chamber.witness;
        rec.boundary_Rn = chamber.boundary_Rn;
        rec.id = hex64(fnv1a(std::to_string(ctx.n()) + ":all:" + encode_sign_vector(rec.sign)));
        if (records.emplace(rec.sign.key(), rec).second) frontier.push_back(rec.sign);
    }

    while (!frontier.empty()) {
        // candidate faces of this wave
        std::vector<std::pair<const SignVector*, std::pair<int, int>>> tasks;
        for (const auto& sv : frontier) {
            for (std::size_t t = 0; t < sv.tri.size(); ++t)
                if (sv.tri[t] == 1) tasks.push_back({&sv, {static_cast<int>(t), -1}});
            for (std::size_t b = 0; b < sv.bin.size(); ++b)
                if (sv.bin[b] != 0) tasks.push_back({&sv, {-1, static_cast<int>(b)}});
        }
        const int tsize = static_cast<int>(tasks.size());
        std::vector<ConeRecord> solved(tsize);
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
        for (int i = 0; i < tsize; ++i) {
            FaceSolve face =
                solve_face(ctx, *tasks[i].first, tasks[i].second.first, tasks[i].second.second);
            solved[i] = make_face_record(ctx, face);
        }
        stats.lp_calls += tsize;
        stats.expanded += static_cast<long long>(frontier.size());
        ++stats.waves;

        frontier.clear();
        for (auto& rec : solved)
            if (records.emplace(rec.sign.key(), rec).second) frontier.push_back(rec.sign);
    }

    EnumerationResult result;
    for (auto& [key, rec] : records) result.records.push_back(std::move(rec));
    stats.classes = static_cast<long long>(result.records.size());
    stats.raw_cones = 0;
    for (const auto& r : result.records) stats.raw_cones += r.orbit_size;
    result.stats = stats;
    return result;
}

namespace {

Rational min_total_cycle_undirected(const WeightMatrix& c) {
    const int n = c.n();
    std::optional<Rational> best;
    std::vector<char> used(n, 0);
    // directed simple cycles cover both orientations of every undirected cycle
    std::function<void(int, int, int, Rational)> dfs = [&](int anchor, int node, int len,
                                                           Rational weight) {
        for (int v = anchor; v < n; ++v) {
            if (v == node || (v != anchor && used[v])) continue;
            if (v == anchor) {
                if (len >= 1) {
                    Rational total = weight + c.at(node, anchor);
                    if (!best || total < *best) best = total;
                }
                continue;
            }
            used[v] = 1;
            dfs(anchor, v, len + 1, weight + c.at(node, v));
            used[v] = 0;
        }
    };
    for (int anchor = 0; anchor < n; ++anchor) {
        used.assign(n, 0);
        used[anchor] = 1;
        dfs(anchor, anchor, 0, Rational(0));
    }
    return *best;
}

} // namespace

BoundaryPartition filter_boundary(const std::vector<ConeRecord>& records, bool undirected) {
    BoundaryPartition out;
    for (const auto& r : records) {
        const bool boundary =
            undirected ? min_total_cycle_undirected(r.witness) == 0 : min_mean_cycle(r.witness) == 0;
        (boundary ? out.removed : out.kept).push_back(r);
    }
    return out;
}

LinearityGroups group_by_linearity(const FanContext& ctx, const std::vector<ConeRecord>& kept) {
    LinearityGroups out;
    for (const auto& r : kept) {
        SignVector tri_only;
        tri_only.tri = r.sign.tri;
        tri_only.bin.assign(r.sign.bin.size(), 0);
        const SignVector canon = ctx.action().canonicalize(tri_only);
        std::string key;
        for (auto v : canon.tri) key.push_back(v ? '+' : '0');
        out.groups[key].push_back(r.id);
    }
    for (const auto& [key, ids] : out.groups) out.size_histogram[static_cast<int>(ids.size())]++;
    return out;
}

// ---------- serialization ----------

namespace {

char sign_char(int v) { return v < 0 ? '-' : v == 0 ? '0' : '+'; }

std::int8_t sign_of_char(char c) {
    switch (c) {
    case '-':
        return -1;
    case '0':
        return 0;
    case '+':
        return 1;
    default:
        throw ParseError(std::string("bad sign character '") + c + "'");
    }
}

} // namespace

std::string encode_sign_vector(const SignVector& sv) {
    std::string out;
    for (auto v : sv.tri) out.push_back(sign_char(v));
    out.push_back('|');
    for (auto v : sv.bin) out.push_back(sign_char(v));
    out.push_back('|');
    for (std::size_t i = 0; i < sv.winners.size(); ++i) {
        if (i) out.push_back(',');
        out.push_back(static_cast<char>('0' + sv.winners[i][0]));
        out.push_back(static_cast<char>('0' + sv.winners[i][1]));
    }
    return out;
}

SignVector decode_sign_vector(const std::string& text) {
    const auto bar1 = text.find('|');
    const auto bar2 = text.find('|', bar1 + 1);
    if (bar1 == std::string::npos || bar2 == std::string::npos)
        throw ParseError("malformed sign vector: " + text);
    SignVector sv;
    for (std::size_t i = 0; i < bar1; ++i) sv.tri.push_back(sign_of_char(text[i]));
    for (std::size_t i = bar1 + 1; i < bar2; ++i) sv.bin.push_back(sign_of_char(text[i]));
    std::size_t i = bar2 + 1;
    while (i < text.size()) {
        if (i + 1 >= text.size()) throw ParseError("malformed winner section: " + text);
        sv.winners.push_back({static_cast<std::int8_t>(text[i] - '0'),
                              static_cast<std::int8_t>(text[i + 1] - '0')});
        i += 2;
        if (i < text.size()) {
            if (text[i] != ',') throw ParseError("malformed winner section: " + text);
            ++i;
        }
    }
    return sv;
}

std::string record_to_json(const ConeRecord& r) {
    nlohmann::json j{{"id", r.id},
                     {"n", r.n},
                     {"mode", r.mode == EnumMode::Maximal ? "maximal" : "all"},
                     {"winner", r.winner == WinnerRule::Min ? "min" : "max"},
                     {"dim", r.dim},
                     {"orbit_size", r.orbit_size},
                     {"boundary", r.boundary_Rn},
                     {"sign", encode_sign_vector(r.sign)},
                     {"witness", nlohmann::json::parse(r.witness.to_json_text())}};
    return j.dump();
}

ConeRecord record_from_json(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad record JSON: ") + e.what());
    }
    ConeRecord r;
    r.id = j.at("id").get<std::string>();
    r.n = j.at("n").get<int>();
    r.mode = j.at("mode").get<std::string>() == "maximal" ? EnumMode::Maximal : EnumMode::All;
    r.winner = j.at("winner").get<std::string>() == "min" ? WinnerRule::Min : WinnerRule::Max;
    r.dim = j.at("dim").get<int>();
    r.orbit_size = j.at("orbit_size").get<long long>();
    r.boundary_Rn = j.at("boundary").get<bool>();
    r.sign = decode_sign_vector(j.at("sign").get<std::string>());
    r.witness = WeightMatrix::from_json_text(j.at("witness").dump());
    return r;
}

} // namespace polytrope
