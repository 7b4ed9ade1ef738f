#pragma once

#include "polytrope/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace polytrope {

enum class Relation { Eq, Ge, Gt, Le, Lt };

struct Constraint {
    std::vector<Rational> normal;
    Relation rel = Relation::Ge;
};

/// Homogeneous system of linear relations describing a cone in R^dim.
struct ConeSystem {
    int dim = 0;
    std::vector<Constraint> constraints;

    void add(std::vector<Rational> normal, Relation rel) {
        constraints.push_back({std::move(normal), rel});
    }
};

struct Witness {
    std::vector<Rational> point;
    std::vector<Rational> slacks; // normal . point per constraint, original orientation
};

struct InfeasibleSystem : std::runtime_error {
    InfeasibleSystem() : std::runtime_error("infeasible cone system") {}
};

/// Exact witness or infeasibility verdict. Strict rows are handled by the
/// homogeneous reduction a.x >= 1; pivoting is Bland's rule throughout, so
/// identical systems produce identical witnesses.
std::optional<Witness> feasible(const ConeSystem& sys);

/// Dimension of the affine hull of the solution cone.
int cone_dimension(const ConeSystem& sys);

/// A point in the relative interior: every inequality not forced to equality
/// by the face holds strictly (with margin >= 1 after the internal scaling).
Witness interior_witness(const ConeSystem& sys);

/// Relative interior of a closed cone {Eq, Ge rows only}: witness plus the
/// set of rows that vanish identically on the cone.
struct RelativeInterior {
    Witness witness;
    std::vector<char> forced_zero; // per constraint
    int dimension = 0;
};

RelativeInterior relative_interior(const ConeSystem& sys);

/// Exact re-evaluation of every relation at a candidate point.
bool witness_satisfies(const ConeSystem& sys, const std::vector<Rational>& point);

} // namespace polytrope
