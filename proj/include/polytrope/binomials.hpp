#pragma once

#include "polytrope/weight_matrix.hpp"

#include <stdexcept>
#include <vector>

namespace polytrope {

struct BadBlockSize : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A perfect matching from m sources to m sinks, encoded as a rotation of the
/// sorted sink list: edge sources[t] -> sinks[(t + rotation) mod m].
struct BipartiteMonomial {
    int m = 0;
    std::vector<int> sources; // sorted
    std::vector<int> sinks;   // sorted, disjoint from sources
    int rotation = 0;

    std::vector<int> edges() const;              // edge (src, dst) flattened pairs
    std::vector<int> incidence(int n) const;     // 0/1 over the N edge coordinates
};

/// Difference of two rotation matchings on the same (K, L), stored with the
/// canonical orientation: the lexicographically smallest support edge gets +1.
struct BipartiteBinomial {
    int m = 0;
    std::vector<int> sources;
    std::vector<int> sinks;
    int rot_plus = 0;  // rotation of the +1 side
    int rot_minus = 0; // rotation of the -1 side
    std::vector<int> normal; // over the N edges, entries in {-1,0,+1}
};

/// All (K, r, L) in lexicographic (K, L, r) order;
/// count = C(n,m) * C(n-m,m) * m.
std::vector<BipartiteMonomial> enumerate_monomials(int n, int m);

/// One binomial per (K, L, unordered rotation pair), canonically oriented;
/// count = C(n,m) * C(n-m,m) * C(m,2).
std::vector<BipartiteBinomial> enumerate_binomials(int n, int m);

/// Concatenation over m = 2..floor(n/2); the global index order used by sign
/// vectors and the symmetry tables.
std::vector<BipartiteBinomial> binomial_catalog(int n);

/// Net-flow operator of the transport program: row i sums outgoing minus
/// incoming edge coordinates at node i.
std::vector<std::vector<int>> flow_matrix(int n);

/// A u over the edge coordinates; zero for every binomial normal.
std::vector<int> apply_flow(int n, const std::vector<int>& edge_vector);

/// One block of the m >= 3 structure: all m! matchings K -> L grouped by the
/// parity of their position permutation. Binomial hyperplanes connect
/// matchings within a parity class (their relative permutation is a
/// fixed-point-free m-cycle); the even class is exactly the rotation family.
struct MatchingBlock {
    int m = 0;
    std::vector<int> sources;
    std::vector<int> sinks;
    // matchings[parity][index] = position permutation p, edge sources[t] -> sinks[p[t]];
    // even-class index equals the rotation r, odd class is sorted lexicographically.
    std::vector<std::vector<std::vector<int>>> matchings;
    std::vector<std::vector<std::vector<int>>> incidence; // per parity, per matching

    std::vector<int> hyperplane(int parity, int a, int b) const; // incidence a - incidence b
};

std::vector<MatchingBlock> matching_blocks(int n, int m);

} // namespace polytrope
