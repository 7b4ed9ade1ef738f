#pragma once

#include "polytrope/weight_matrix.hpp"

#include <stdexcept>
#include <vector>

namespace polytrope {

struct NegativeCycleError : std::runtime_error {
    NegativeCycleError() : std::runtime_error("negative directed cycle") {}
};

/// All-pairs shortest-path closure: result(i,j) is the minimum weight of a
/// directed path i -> j of length >= 1 for i != j; the diagonal is zero.
/// Throws NegativeCycleError when the relaxation detects a negative cycle.
WeightMatrix kleene_star(const WeightMatrix& c);

/// Minimum cycle mean over directed simple cycles (Karp's recurrence with
/// exact rationals). The graph is complete, so every node lies on a cycle.
Rational min_mean_cycle(const WeightMatrix& c);

struct RegionReport {
    bool in_Rn = false;          // no negative directed cycle
    bool in_Rn_interior = false; // every directed cycle strictly positive
    bool in_Pn = false;          // in R_n and c equals its Kleene star
    bool in_Pn_interior = false; // in P_n with all triangle slacks strict
};

RegionReport membership(const WeightMatrix& c);

/// The linear form c_ik + c_kj - c_ij for distinct i, k, j: source i, sink j,
/// intermediate k. Functionals are kept in lexicographic (i, j, k) order so
/// sign vectors are reproducible.
struct TriangleFunctional {
    int i, j, k;
};

std::vector<TriangleFunctional> triangle_functionals(int n);

Rational triangle_value(const WeightMatrix& c, const TriangleFunctional& t);

/// Exact signs (-1, 0, +1) in canonical order.
std::vector<int> triangle_sign_vector(const WeightMatrix& c);

/// Triangle functional as an integer vector over the N edge coordinates.
std::vector<int> triangle_normal(int n, const TriangleFunctional& t);

} // namespace polytrope
