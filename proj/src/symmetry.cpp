#include "polytrope/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace polytrope {

std::vector<NodePermutation> NodePermutation::all(int n) {
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<NodePermutation> out;
    do {
        out.push_back({base});
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

NodePermutation NodePermutation::inverse() const {
    NodePermutation inv;
    inv.image.resize(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) inv.image[image[i]] = static_cast<int>(i);
    return inv;
}

std::string SignVector::key() const {
    std::string k;
    k.reserve(tri.size() + bin.size() + 2 * winners.size());
    for (auto v : tri) k.push_back(static_cast<char>(v + 1));
    for (auto v : bin) k.push_back(static_cast<char>(v + 1));
    for (const auto& w : winners) {
        k.push_back(static_cast<char>(w[0]));
        k.push_back(static_cast<char>(w[1]));
    }
    return k;
}

InducedAction::InducedAction(int n) : n_(n), perms_(NodePermutation::all(n)) {
    const int np = perm_count();
    const int nedge = edge_count(n);

    edge_map_.assign(np, std::vector<int>(nedge));
    for (int s = 0; s < np; ++s) {
        const auto& im = perms_[s].image;
        for (int e = 0; e < nedge; ++e) {
            auto [i, j] = edge_at(n, e);
            edge_map_[s][e] = edge_index(n, im[i], im[j]);
        }
    }

    const auto tris = triangle_functionals(n);
    std::vector<int> tri_lookup(static_cast<std::size_t>(n) * n * n, -1);
    for (std::size_t t = 0; t < tris.size(); ++t)
        tri_lookup[(tris[t].i * n + tris[t].j) * n + tris[t].k] = static_cast<int>(t);
    tri_map_.assign(np, std::vector<int>(tris.size()));
    for (int s = 0; s < np; ++s) {
        const auto& im = perms_[s].image;
        for (std::size_t t = 0; t < tris.size(); ++t)
            tri_map_[s][t] = tri_lookup[(im[tris[t].i] * n + im[tris[t].j]) * n + im[tris[t].k]];
    }

    // m = 2 catalog: map a permuted normal back to a catalog index and an
    // orientation sign.
    const auto m2 = n >= 4 ? enumerate_binomials(n, 2) : std::vector<BipartiteBinomial>{};
    num_m2_ = static_cast<int>(m2.size());
    std::map<std::vector<int>, int> normal_lookup;
    for (int b = 0; b < num_m2_; ++b) normal_lookup[m2[b].normal] = b;
    bin_map_.assign(np, std::vector<int>(num_m2_));
    bin_sign_.assign(np, std::vector<int>(num_m2_));
    for (int s = 0; s < np; ++s)
        for (int b = 0; b < num_m2_; ++b) {
            std::vector<int> permuted(nedge, 0);
            for (int e = 0; e < nedge; ++e)
                if (m2[b].normal[e] != 0) permuted[edge_map_[s][e]] = m2[b].normal[e];
            auto it = normal_lookup.find(permuted);
            int sign = 1;
            if (it == normal_lookup.end()) {
                for (int& x : permuted) x = -x;
                it = normal_lookup.find(permuted);
                sign = -1;
            }
            if (it == normal_lookup.end()) throw std::logic_error("binomial image missing from catalog");
            bin_map_[s][b] = it->second;
            bin_sign_[s][b] = sign;
        }

    // m = 3 blocks.
    if (n >= 6) {
        blocks_ = matching_blocks(n, 3);
        per_parity_ = static_cast<int>(blocks_[0].matchings[0].size());
        std::map<std::pair<std::vector<int>, std::vector<int>>, int> block_lookup;
        for (std::size_t blk = 0; blk < blocks_.size(); ++blk)
            block_lookup[{blocks_[blk].sources, blocks_[blk].sinks}] = static_cast<int>(blk);
        // incidence -> (parity, index) per block
        std::vector<std::map<std::vector<int>, std::array<std::int8_t, 2>>> match_lookup(blocks_.size());
        for (std::size_t blk = 0; blk < blocks_.size(); ++blk)
            for (int parity = 0; parity < 2; ++parity)
                for (std::size_t idx = 0; idx < blocks_[blk].incidence[parity].size(); ++idx)
                    match_lookup[blk][blocks_[blk].incidence[parity][idx]] = {
                        static_cast<std::int8_t>(parity), static_cast<std::int8_t>(idx)};

        block_map_.assign(np, std::vector<int>(blocks_.size()));
        match_map_.assign(np, {});
        for (int s = 0; s < np; ++s) {
            const auto& im = perms_[s].image;
            match_map_[s].assign(blocks_.size(), std::vector<std::array<std::int8_t, 2>>(2 * per_parity_));
            for (std::size_t blk = 0; blk < blocks_.size(); ++blk) {
                std::vector<int> src, dst;
                for (int v : blocks_[blk].sources) src.push_back(im[v]);
                for (int v : blocks_[blk].sinks) dst.push_back(im[v]);
                std::sort(src.begin(), src.end());
                std::sort(dst.begin(), dst.end());
                const int target = block_lookup.at({src, dst});
                block_map_[s][blk] = target;
                for (int parity = 0; parity < 2; ++parity)
                    for (int idx = 0; idx < per_parity_; ++idx) {
                        std::vector<int> permuted(nedge, 0);
                        const auto& inc = blocks_[blk].incidence[parity][idx];
                        for (int e = 0; e < nedge; ++e)
                            if (inc[e]) permuted[edge_map_[s][e]] = 1;
                        match_map_[s][blk][parity * per_parity_ + idx] = match_lookup[target].at(permuted);
                    }
            }
        }
    }
}

void InducedAction::build_inverse_tables() {
    const int np = perm_count();
    tri_pre_.assign(np, {});
    bin_pre_.assign(np, {});
    bin_pre_sign_.assign(np, {});
    block_pre_.assign(np, {});
    parity_swap_.assign(np, {});
    for (int s = 0; s < np; ++s) {
        tri_pre_[s].resize(tri_map_[s].size());
        for (std::size_t t = 0; t < tri_map_[s].size(); ++t) tri_pre_[s][tri_map_[s][t]] = static_cast<int>(t);
        bin_pre_[s].resize(num_m2_);
        bin_pre_sign_[s].resize(num_m2_);
        for (int b = 0; b < num_m2_; ++b) {
            bin_pre_[s][bin_map_[s][b]] = b;
            bin_pre_sign_[s][bin_map_[s][b]] = bin_sign_[s][b];
        }
        block_pre_[s].resize(blocks_.size());
        parity_swap_[s].resize(blocks_.size());
        for (std::size_t blk = 0; blk < blocks_.size(); ++blk) {
            block_pre_[s][block_map_[s][blk]] = static_cast<int>(blk);
            parity_swap_[s][blk] = match_map_[s][blk][0][0] != 0; // even class lands odd
        }
    }
}

SignVector InducedAction::canonicalize_fast(const SignVector& sv) const {
    SignVector best = sv;
    for (int s = 1; s < perm_count(); ++s) {
        // lazy image-vs-best comparison in key order, aborting on the first
        // position where the image is larger
        int cmp = 0; // -1 smaller, +1 larger
        for (std::size_t t = 0; t < sv.tri.size() && cmp == 0; ++t) {
            const std::int8_t v = sv.tri[tri_pre_[s][t]];
            cmp = v < best.tri[t] ? -1 : v > best.tri[t] ? 1 : 0;
        }
        for (std::size_t b = 0; b < sv.bin.size() && cmp == 0; ++b) {
            const std::int8_t v =
                static_cast<std::int8_t>(sv.bin[bin_pre_[s][b]] * bin_pre_sign_[s][b]);
            cmp = v < best.bin[b] ? -1 : v > best.bin[b] ? 1 : 0;
        }
        for (std::size_t blk = 0; blk < sv.winners.size() && cmp == 0; ++blk) {
            const int src = block_pre_[s][blk];
            const bool swap = parity_swap_[s][src];
            for (int q = 0; q < 2 && cmp == 0; ++q) {
                const int parity = swap ? 1 - q : q;
                const std::int8_t v =
                    match_map_[s][src][parity * per_parity_ + sv.winners[src][parity]][1];
                cmp = v < best.winners[blk][q] ? -1 : v > best.winners[blk][q] ? 1 : 0;
            }
        }
        if (cmp < 0) best = act(s, sv);
    }
    return best;
}

EdgeVector InducedAction::permute_point(int s, const EdgeVector& c) const {
    EdgeVector out(c.size());
    for (std::size_t e = 0; e < c.size(); ++e) out[edge_map_[s][e]] = c[e];
    return out;
}

SignVector InducedAction::act(int s, const SignVector& sv) const {
    SignVector out;
    out.tri.resize(sv.tri.size());
    for (std::size_t t = 0; t < sv.tri.size(); ++t) out.tri[tri_map_[s][t]] = sv.tri[t];
    out.bin.resize(sv.bin.size());
    for (std::size_t b = 0; b < sv.bin.size(); ++b)
        out.bin[bin_map_[s][b]] = static_cast<std::int8_t>(sv.bin[b] * bin_sign_[s][b]);
    out.winners.resize(sv.winners.size());
    for (std::size_t blk = 0; blk < sv.winners.size(); ++blk) {
        const auto [p0, i0] = matching_image(s, static_cast<int>(blk), 0, sv.winners[blk][0]);
        const auto [p1, i1] = matching_image(s, static_cast<int>(blk), 1, sv.winners[blk][1]);
        // The two parity classes swap together or not at all.
        auto& w = out.winners[block_map_[s][blk]];
        w[p0] = static_cast<std::int8_t>(i0);
        w[p1] = static_cast<std::int8_t>(i1);
    }
    return out;
}

SignVector InducedAction::canonicalize(const SignVector& sv) const {
    SignVector best = sv;
    std::string best_key = sv.key();
    for (int s = 1; s < perm_count(); ++s) {
        SignVector cand = act(s, sv);
        std::string k = cand.key();
        if (k < best_key) {
            best = std::move(cand);
            best_key = std::move(k);
        }
    }
    return best;
}

std::pair<SignVector, long long> InducedAction::canonical_with_orbit(const SignVector& sv) const {
    auto full = canonical_full(sv);
    return {std::move(full.canon), full.orbit_size};
}

InducedAction::CanonicalForm InducedAction::canonical_full(const SignVector& sv) const {
    CanonicalForm out;
    out.canon = sv;
    std::string best_key = sv.key();
    const std::string own_key = best_key;
    long long stabilizer = 0;
    for (int s = 0; s < perm_count(); ++s) {
        SignVector cand = act(s, sv);
        std::string k = cand.key();
        if (k == own_key) ++stabilizer;
        if (k < best_key) {
            out.canon = std::move(cand);
            out.perm = s;
            best_key = std::move(k);
        }
    }
    out.orbit_size = perm_count() / stabilizer;
    return out;
}

SignVector sign_vector_of(const InducedAction& action, const WeightMatrix& c, bool maximal_mode,
                          bool winner_is_min) {
    const int n = action.n();
    SignVector sv;
    if (!maximal_mode) {
        for (const auto& t : triangle_functionals(n))
            sv.tri.push_back(static_cast<std::int8_t>(sign_of(triangle_value(c, t))));
    }
    const auto m2 = n >= 4 ? enumerate_binomials(n, 2) : std::vector<BipartiteBinomial>{};
    const EdgeVector point = c.to_edge_vector();
    for (const auto& b : m2) {
        Rational v = 0;
        for (int e = 0; e < edge_count(n); ++e)
            if (b.normal[e] != 0) v += b.normal[e] * point[e];
        sv.bin.push_back(static_cast<std::int8_t>(sign_of(v)));
    }
    for (const auto& blk : action.blocks()) {
        std::array<std::int8_t, 2> w{-1, -1};
        for (int parity = 0; parity < 2; ++parity) {
            int arg = -1;
            bool strict = true;
            Rational best;
            for (std::size_t idx = 0; idx < blk.incidence[parity].size(); ++idx) {
                Rational v = 0;
                for (int e = 0; e < edge_count(n); ++e)
                    if (blk.incidence[parity][idx][e]) v += point[e];
                if (arg < 0 || (winner_is_min ? v < best : v > best)) {
                    best = v;
                    arg = static_cast<int>(idx);
                    strict = true;
                } else if (v == best) {
                    strict = false;
                }
            }
            if (!strict) arg = -1; // tie: no chamber label
            w[parity] = static_cast<std::int8_t>(arg);
        }
        sv.winners.push_back(w);
    }
    return sv;
}

} // namespace polytrope
