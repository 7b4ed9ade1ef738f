#pragma once

// Test-only oracles, independent of the library code paths they check:
// exhaustive path/cycle enumeration and Fourier-Motzkin feasibility.

#include "polytrope/rational.hpp"
#include "polytrope/weight_matrix.hpp"

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace polytrope::oracle {

/// Minimum weight over all simple directed paths src -> dst (length >= 1).
inline Rational min_simple_path(const WeightMatrix& c, int src, int dst) {
    const int n = c.n();
    std::optional<Rational> best;
    std::vector<char> used(n, 0);
    used[src] = 1;
    std::function<void(int, Rational)> dfs = [&](int node, Rational weight) {
        for (int v = 0; v < n; ++v) {
            if (v == node || used[v]) continue;
            Rational w2 = weight + c.at(node, v);
            if (v == dst) {
                if (!best || w2 < *best) best = w2;
                continue;
            }
            used[v] = 1;
            dfs(v, w2);
            used[v] = 0;
        }
    };
    used[dst] = 0; // dst may be revisited only as the endpoint
    dfs(src, Rational(0));
    return *best;
}

/// Minimum mean over all simple directed cycles.
inline Rational min_cycle_mean(const WeightMatrix& c) {
    const int n = c.n();
    std::optional<Rational> best;
    std::vector<char> used(n, 0);
    std::function<void(int, int, int, Rational)> dfs = [&](int anchor, int node, int len, Rational weight) {
        for (int v = anchor; v < n; ++v) {
            if (v == node || (v != anchor && used[v])) continue;
            if (v == anchor) {
                if (len >= 1) {
                    Rational mean = (weight + c.at(node, anchor)) / (len + 1);
                    if (!best || mean < *best) best = mean;
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

/// Strict/weak homogeneous feasibility by Fourier-Motzkin elimination.
/// Rows are (normal, strict). Exponential, for small test systems only.
inline bool fm_feasible(std::vector<std::pair<std::vector<Rational>, bool>> rows, int dim) {
    auto normalize = [](std::vector<Rational>& v) {
        for (const auto& x : v)
            if (x != 0) {
                Rational s = abs(x);
                for (auto& y : v) y /= s;
                return;
            }
    };
    for (int var = 0; var < dim; ++var) {
        std::vector<std::pair<std::vector<Rational>, bool>> pos, neg, zero;
        for (auto& r : rows) {
            const Rational& coeff = r.first[var];
            if (coeff > 0)
                pos.push_back(std::move(r));
            else if (coeff < 0)
                neg.push_back(std::move(r));
            else
                zero.push_back(std::move(r));
        }
        rows = std::move(zero);
        std::map<std::vector<Rational>, bool> seen; // combined normal -> any-strict
        for (const auto& p : pos)
            for (const auto& q : neg) {
                std::vector<Rational> combo(dim);
                for (int i = 0; i < dim; ++i) combo[i] = p.first[i] * (-q.first[var]) + q.first[i] * p.first[var];
                normalize(combo);
                const bool strict = p.second || q.second;
                auto [it, inserted] = seen.emplace(std::move(combo), strict);
                if (!inserted) it->second = it->second || strict;
            }
        for (auto& [normal, strict] : seen) rows.push_back({normal, strict});
    }
    for (const auto& [normal, strict] : rows) {
        bool all_zero = true;
        for (const auto& x : normal)
            if (x != 0) all_zero = false;
        if (all_zero && strict) return false; // derived 0 > 0
    }
    return true;
}

} // namespace polytrope::oracle
