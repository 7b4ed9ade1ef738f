#include "polytrope/binomials.hpp"

#include "polytrope/util.hpp"

#include <algorithm>
#include <numeric>

namespace polytrope {

std::vector<int> BipartiteMonomial::edges() const {
    std::vector<int> out;
    out.reserve(2 * m);
    for (int t = 0; t < m; ++t) {
        out.push_back(sources[t]);
        out.push_back(sinks[(t + rotation) % m]);
    }
    return out;
}

std::vector<int> BipartiteMonomial::incidence(int n) const {
    std::vector<int> v(edge_count(n), 0);
    for (int t = 0; t < m; ++t) v[edge_index(n, sources[t], sinks[(t + rotation) % m])] = 1;
    return v;
}

namespace {

void check_block_size(int n, int m) {
    if (m < 2 || m > n / 2)
        throw BadBlockSize("block size " + std::to_string(m) + " out of range [2," +
                           std::to_string(n / 2) + "] for n=" + std::to_string(n));
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> source_sink_pairs(int n, int m) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (const auto& k_idx : combinations(n, m)) {
        std::vector<char> in_k(n, 0);
        for (int v : k_idx) in_k[v] = 1;
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (!in_k[v]) rest.push_back(v);
        for (const auto& l_pick : combinations(static_cast<int>(rest.size()), m)) {
            std::vector<int> l_idx(m);
            for (int t = 0; t < m; ++t) l_idx[t] = rest[l_pick[t]];
            out.emplace_back(k_idx, l_idx);
        }
    }
    return out;
}

} // namespace

std::vector<BipartiteMonomial> enumerate_monomials(int n, int m) {
    check_block_size(n, m);
    std::vector<BipartiteMonomial> out;
    for (const auto& [k_idx, l_idx] : source_sink_pairs(n, m))
        for (int r = 0; r < m; ++r) out.push_back({m, k_idx, l_idx, r});
    return out;
}

std::vector<BipartiteBinomial> enumerate_binomials(int n, int m) {
    check_block_size(n, m);
    std::vector<BipartiteBinomial> out;
    for (const auto& [k_idx, l_idx] : source_sink_pairs(n, m))
        for (int r = 0; r < m; ++r)
            for (int r2 = r + 1; r2 < m; ++r2) {
                BipartiteMonomial plus{m, k_idx, l_idx, r};
                BipartiteMonomial minus{m, k_idx, l_idx, r2};
                std::vector<int> normal = plus.incidence(n);
                const std::vector<int> neg = minus.incidence(n);
                for (int e = 0; e < edge_count(n); ++e) normal[e] -= neg[e];
                int lead = 0;
                while (normal[lead] == 0) ++lead;
                BipartiteBinomial b{m, k_idx, l_idx, r, r2, {}};
                if (normal[lead] < 0) {
                    for (int& x : normal) x = -x;
                    std::swap(b.rot_plus, b.rot_minus);
                }
                b.normal = std::move(normal);
                out.push_back(std::move(b));
            }
    return out;
}

std::vector<BipartiteBinomial> binomial_catalog(int n) {
    std::vector<BipartiteBinomial> out;
    for (int m = 2; m <= n / 2; ++m) {
        auto part = enumerate_binomials(n, m);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

std::vector<std::vector<int>> flow_matrix(int n) {
    std::vector<std::vector<int>> a(n, std::vector<int>(edge_count(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            a[i][edge_index(n, i, j)] += 1;
            a[j][edge_index(n, i, j)] -= 1;
        }
    return a;
}

std::vector<int> apply_flow(int n, const std::vector<int>& edge_vector) {
    std::vector<int> out(n, 0);
    for (int e = 0; e < edge_count(n); ++e) {
        if (edge_vector[e] == 0) continue;
        auto [i, j] = edge_at(n, e);
        out[i] += edge_vector[e];
        out[j] -= edge_vector[e];
    }
    return out;
}

std::vector<int> MatchingBlock::hyperplane(int parity, int a, int b) const {
    std::vector<int> v = incidence[parity][a];
    const auto& w = incidence[parity][b];
    for (std::size_t e = 0; e < v.size(); ++e) v[e] -= w[e];
    return v;
}

std::vector<MatchingBlock> matching_blocks(int n, int m) {
    check_block_size(n, m);
    std::vector<MatchingBlock> out;
    for (const auto& [k_idx, l_idx] : source_sink_pairs(n, m)) {
        MatchingBlock blk;
        blk.m = m;
        blk.sources = k_idx;
        blk.sinks = l_idx;
        blk.matchings.assign(2, {});

        std::vector<int> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::vector<int>> evens, odds;
        do {
            int inversions = 0;
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b)
                    if (perm[a] > perm[b]) ++inversions;
            (inversions % 2 == 0 ? evens : odds).push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));

        // For m = 3 the even class is the rotation family and lexicographic
        // order lists it by rotation offset.
        std::sort(evens.begin(), evens.end());
        std::sort(odds.begin(), odds.end());
        blk.matchings[0] = std::move(evens);
        blk.matchings[1] = std::move(odds);

        blk.incidence.assign(2, {});
        for (int parity = 0; parity < 2; ++parity)
            for (const auto& p : blk.matchings[parity]) {
                std::vector<int> inc(edge_count(n), 0);
                for (int t = 0; t < m; ++t) inc[edge_index(n, k_idx[t], l_idx[p[t]])] = 1;
                blk.incidence[parity].push_back(std::move(inc));
            }
        out.push_back(std::move(blk));
    }
    return out;
}

} // namespace polytrope
