#include "polytrope/trees.hpp"

#include "polytrope/kleene.hpp"

#include <stdexcept>

namespace polytrope {

std::vector<int> TreeTuple::path_to_root(int r, int from) const {
    std::vector<int> path{from};
    int v = from;
    while (v != r) {
        v = next_hop[r][v];
        path.push_back(v);
    }
    return path;
}

namespace {

// Paths u -> r inside the tight graph toward r. The graph is acyclic because
// every directed cycle has strictly positive weight here.
long long count_paths(int u, int r, const WeightMatrix& c, const WeightMatrix& star,
                      std::vector<long long>& memo, std::vector<int>& first_hop) {
    if (u == r) return 1;
    if (memo[u] >= 0) return memo[u];
    long long total = 0;
    for (int v = 0; v < c.n(); ++v) {
        if (v == u) continue;
        const Rational tail = v == r ? Rational(0) : star.at(v, r);
        if (c.at(u, v) + tail == star.at(u, r)) {
            total += count_paths(v, r, c, star, memo, first_hop);
            if (first_hop[u] == -1) first_hop[u] = v;
        }
    }
    memo[u] = total;
    return total;
}

} // namespace

std::variant<TreeTuple, AmbiguityReport> shortest_path_trees(const WeightMatrix& c) {
    const int n = c.n();
    const Rational lambda = min_mean_cycle(c);
    if (lambda < 0) throw NegativeCycleError();
    if (lambda == 0) throw std::invalid_argument("shortest_path_trees needs a strictly positive cycle mean");
    const WeightMatrix star = kleene_star(c);

    AmbiguityReport ties;
    TreeTuple trees;
    trees.n = n;
    trees.next_hop.assign(n, std::vector<int>(n, -1));

    for (int r = 0; r < n; ++r) {
        std::vector<long long> memo(n, -1);
        std::vector<int> hop(n, -1);
        for (int u = 0; u < n; ++u) {
            if (u == r) continue;
            if (count_paths(u, r, c, star, memo, hop) > 1) ties.tied_pairs.emplace_back(u, r);
        }
        trees.next_hop[r] = hop;
    }

    if (!ties.tied_pairs.empty()) return ties;
    return trees;
}

bool trees_compatible(const TreeTuple& t) {
    const int n = t.n;
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            if (s == r) continue;
            for (int v = 0; v < n; ++v) {
                if (v == r || v == s) continue;
                bool passes_s = false;
                int w = v;
                while (w != r) {
                    w = t.next_hop[r][w];
                    if (w == s) {
                        passes_s = true;
                        break;
                    }
                }
                if (!passes_s) continue;
                // The segment of T_r from v down to s must match T_s edge for edge.
                int a = v;
                while (a != s) {
                    if (t.next_hop[r][a] != t.next_hop[s][a]) return false;
                    a = t.next_hop[r][a];
                }
            }
        }
    return true;
}

} // namespace polytrope
