#pragma once

#include "polytrope/rational.hpp"
#include "polytrope/symmetry.hpp"

#include <cstdint>
#include <vector>

namespace polytrope {

/// A minimal integral relation among catalog binomial normals:
/// sum_i coefficients[i] * normal[support[i]] = 0, coefficients primitive
/// with a positive leading entry.
struct RelationCircuit {
    std::vector<int> support;          // catalog indices, ascending
    std::vector<Integer> coefficients; // aligned with support
};

struct CircuitReport {
    int n = 0;
    int num_binomials = 0;
    int rank = 0;
    int kernel_dimension = 0;
    /// Circuits grouped under the S_n action; classes[k][0] is the
    /// lexicographically minimal representative. Empty when only the kernel
    /// dimension was requested.
    std::vector<std::vector<RelationCircuit>> classes;

    std::size_t total_circuits() const {
        std::size_t t = 0;
        for (const auto& cls : classes) t += cls.size();
        return t;
    }
};

/// Exact circuit enumeration of the binomial normal configuration, grouped by
/// symmetry. Full enumeration is supported for n <= 5; for n = 6 the default
/// reports only rank and kernel dimension (the configuration has 150 normals).
CircuitReport relation_circuits(const InducedAction& action, bool with_circuits);

CircuitReport relation_circuits(int n);

/// Farkas filter for chamber sign vectors over the m = 2 binomials: a sign
/// vector admitting a conformal circuit is infeasible, with the circuit as an
/// exact certificate; with the full circuit list the converse holds too.
class CircuitFilter {
public:
    CircuitFilter(int num_binomials, const CircuitReport& report);

    /// True when no circuit certifies infeasibility of the chamber signs
    /// (entries must be +-1).
    bool admits(const std::vector<std::int8_t>& signs) const;

private:
    int num_binomials_;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> masks_; // (positive, negative)
};

} // namespace polytrope
