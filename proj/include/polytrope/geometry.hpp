#pragma once

#include "polytrope/fans.hpp"
#include "polytrope/kleene.hpp"
#include "polytrope/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace polytrope {

struct UnboundedError : std::runtime_error {
    UnboundedError() : std::runtime_error("polytope has a recession direction") {}
};

struct NotOpenCone : std::runtime_error {
    NotOpenCone() : std::runtime_error("record is not a full-dimensional cone") {}
};

/// Inequalities a . y <= b in the chart that pins the last coordinate to zero.
struct HPolytope {
    int dim = 0;
    RationalMatrix normals;
    std::vector<Rational> offsets;
};

/// Cycle-mean normalization followed by the Kleene-star halfspace description:
/// the polytope of c - lambda(c) in the chart y_n = 0.
std::pair<Rational, HPolytope> polytrope_of(const WeightMatrix& c);

/// The n tropical vertices (columns of the normalized Kleene star) in the chart.
std::vector<std::vector<Rational>> tropical_vertices(const WeightMatrix& c);

/// Exact vertex enumeration: incremental double description over a bounding
/// box, constraints inserted tightest-first around `interior_hint` when given.
/// Throws UnboundedError when the recession cone is nontrivial.
std::vector<std::vector<Rational>> vertices(const HPolytope& p,
                                            const std::vector<Rational>& interior_hint = {});

/// Independent oracle: solve every dim-subset of constraints and keep the
/// feasible solutions. Exponential; for n <= 5 charts.
std::vector<std::vector<Rational>> brute_force_vertices(const HPolytope& p);

struct PolytropeShape {
    Rational lambda;
    std::vector<std::vector<Rational>> tropical;
    std::vector<std::vector<Rational>> ordinary; // all vertices, sorted
    int vertex_count = 0;
    bool is_maximal = false;
};

PolytropeShape polytrope_shape(const WeightMatrix& c);

/// Vertex histogram of the witnesses: vertex count -> number of classes.
std::map<int, long long> classify(const std::vector<ConeRecord>& records);
std::map<int, long long> classify_serial(const std::vector<ConeRecord>& records);

/// Per-record vertex counts, aligned with the input order.
std::vector<int> classify_counts(const std::vector<ConeRecord>& records, bool parallel = true);

/// Vertex-facet incidence canonicalized under the node action; equal hashes
/// for witnesses of the same cone class.
std::string combinatorial_type_hash(const InducedAction& action, const WeightMatrix& c);

/// Standard-monomial data of an open cone: the shortest-path tree routes and
/// the winning bipartite monomials rerouted along them, as edge multigraphs.
struct StandardMonomials {
    std::vector<std::vector<int>> tree_paths;         // one per ordered pair (i, j)
    std::vector<std::vector<int>> modified_monomials; // one per block (and parity class)
};

StandardMonomials standard_monomials(const FanContext& ctx, const ConeRecord& record);

} // namespace polytrope
