#pragma once

#include "polytrope/rational.hpp"

#include <optional>
#include <vector>

namespace polytrope {

using RationalMatrix = std::vector<std::vector<Rational>>;

int rank_of(RationalMatrix rows);

/// Basis of {x : M x = 0} where M is given by rows of width `ncols`.
RationalMatrix kernel_basis(const RationalMatrix& rows, int ncols);

/// Unique solution of a square nonsingular system, or nullopt.
std::optional<std::vector<Rational>> solve_square(RationalMatrix a, std::vector<Rational> b);

/// Clear denominators and divide by the content; the first nonzero entry ends
/// up positive. Zero vectors come back empty.
std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v);

/// Row-echelon accumulator with O(1) rollback, for subset searches: add_row
/// reduces against the basis collected so far and either extends it (rank
/// grows) or reports dependence.
class IncrementalRank {
public:
    explicit IncrementalRank(int ncols) : ncols_(ncols) {}

    int rank() const { return static_cast<int>(basis_.size()); }

    /// True if the row was independent of the basis (and is now part of it).
    bool add_row(const std::vector<Rational>& row);

    /// Undo the most recent successful add_row.
    void pop_row();

private:
    int ncols_;
    std::vector<std::vector<Rational>> basis_; // each with a leading pivot column
    std::vector<int> pivot_cols_;
};

} // namespace polytrope
