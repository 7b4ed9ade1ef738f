#pragma once

#include "polytrope/rational.hpp"

#include <array>
#include <utility>
#include <vector>

namespace polytrope {

constexpr int kMinNodes = 2;
constexpr int kMaxNodes = 8;

/// Off-diagonal entries of an n x n matrix are the N = n^2 - n coordinates,
/// indexed lexicographically by (i, j), i != j, 0-based.
inline int edge_count(int n) { return n * (n - 1); }

inline int edge_index(int n, int i, int j) {
    return i * (n - 1) + (j > i ? j - 1 : j);
}

std::pair<int, int> edge_at(int n, int index);

/// A point of R^N viewed over the edge coordinates.
using EdgeVector = std::vector<Rational>;

/// Square rational matrix with an exactly-zero diagonal: the cost vector c of
/// a complete weighted digraph on n nodes, 2 <= n <= 8.
class WeightMatrix {
public:
    explicit WeightMatrix(int n);
    WeightMatrix(int n, std::vector<Rational> row_major);

    int n() const { return n_; }

    const Rational& at(int i, int j) const { return a_[i * n_ + j]; }
    void set(int i, int j, Rational v);

    EdgeVector to_edge_vector() const;
    static WeightMatrix from_edge_vector(int n, const EdgeVector& v);

    /// c - t applied to every off-diagonal entry; the diagonal stays zero.
    WeightMatrix shifted(const Rational& t) const;

    bool operator==(const WeightMatrix& other) const = default;

    /// {"n": int, "entries": [["p/q",...],...]}; the diagonal must parse to
    /// exactly zero, anything else is rejected.
    static WeightMatrix from_json_text(const std::string& text);
    std::string to_json_text() const;

private:
    int n_ = 0;
    std::vector<Rational> a_;
};

/// All-ones off-diagonal matrix, the canonical interior point of the
/// polytrope region.
WeightMatrix all_ones_matrix(int n);

} // namespace polytrope
