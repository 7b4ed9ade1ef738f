#pragma once

#include "polytrope/weight_matrix.hpp"

#include <variant>
#include <vector>

namespace polytrope {

/// One spanning arborescence per root: next_hop[r][v] is the successor of v on
/// its unique shortest path toward root r (and -1 at v == r).
struct TreeTuple {
    int n = 0;
    std::vector<std::vector<int>> next_hop;

    /// Node sequence of the tree path from `from` to root `r`, inclusive.
    std::vector<int> path_to_root(int r, int from) const;
};

/// Ordered pairs (i, j) whose shortest path is not unique.
struct AmbiguityReport {
    std::vector<std::pair<int, int>> tied_pairs;
};

/// Shortest-path arborescences of c, one per root, when all n(n-1) shortest
/// paths are unique; otherwise the list of tied pairs. Requires a strictly
/// positive minimum cycle mean (ties run through zero-weight cycles otherwise).
std::variant<TreeTuple, AmbiguityReport> shortest_path_trees(const WeightMatrix& c);

/// Subtree agreement: for every pair of roots (r, s), the subtree of T_r
/// hanging below s routes exactly as T_s does.
bool trees_compatible(const TreeTuple& t);

} // namespace polytrope
