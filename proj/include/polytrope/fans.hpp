#pragma once

#include "polytrope/circuits.hpp"
#include "polytrope/kleene.hpp"
#include "polytrope/lp.hpp"
#include "polytrope/symmetry.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polytrope {

enum class WinnerRule { Min, Max };
enum class EnumMode { Maximal, All };

struct SeedFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Immutable per-n tables shared by the enumeration passes.
class FanContext {
public:
    explicit FanContext(int n);

    int n() const { return n_; }
    int num_edges() const { return edge_count(n_); }
    const InducedAction& action() const { return action_; }
    const std::vector<TriangleFunctional>& triangles() const { return triangles_; }
    const std::vector<std::vector<int>>& triangle_normals() const { return tri_normals_; }
    const std::vector<BipartiteBinomial>& m2() const { return m2_; }
    const std::vector<MatchingBlock>& blocks() const { return action_.blocks(); }
    /// Quick infeasibility certificates from small circuits (n <= 5).
    const CircuitFilter* filter() const { return filter_.get(); }

private:
    int n_;
    InducedAction action_;
    std::vector<TriangleFunctional> triangles_;
    std::vector<std::vector<int>> tri_normals_;
    std::vector<BipartiteBinomial> m2_;
    std::unique_ptr<CircuitFilter> filter_;
};

/// One cone class of the stratification.
struct ConeRecord {
    int n = 0;
    EnumMode mode = EnumMode::Maximal;
    WinnerRule winner = WinnerRule::Min;
    SignVector sign; // canonical form
    WeightMatrix witness{2};
    int dim = 0;
    long long orbit_size = 0;
    bool boundary_Rn = false;
    std::string id;
};

struct EnumerationStats {
    long long classes = 0;
    long long raw_cones = 0; // sum of orbit sizes
    long long lp_calls = 0;
    long long filter_rejects = 0;
    long long expanded = 0;
    int waves = 0;
    bool completed = true; // false when interrupted by max_waves
};

struct EnumerationResult {
    std::vector<ConeRecord> records; // sorted by canonical key
    EnumerationStats stats;
};

/// Serializable breadth-first search state (for checkpoint/resume).
struct BfsState {
    std::vector<std::string> visited;  // encoded canonical sign vectors
    std::vector<std::string> frontier; // subset of visited awaiting expansion
    long long expanded = 0;
    int wave = 0;
};

struct EnumerateOptions {
    std::uint64_t seed = 1;
    WinnerRule winner = WinnerRule::Min;
    int max_seed_attempts = 64;
    int max_waves = -1; // stop (checkpointable) after this many waves; -1 = run to completion
    bool parallel = true;
    /// Called after each wave once at least `checkpoint_cadence` expansions
    /// accumulated since the previous call; used by the CLI to write
    /// checkpoints.  Never called concurrently.
    std::function<void(const BfsState&)> on_checkpoint;
    long long checkpoint_cadence = 10000;
};

/// Open chambers of the bipartite binomial fan up to S_n; 3 <= n <= 6.
/// `state` may carry a resumed search; it is updated in place.
EnumerationResult enumerate_maximal(const FanContext& ctx, const EnumerateOptions& opt,
                                    BfsState* state = nullptr);

/// Single-threaded reference of the same search, for differential testing.
EnumerationResult enumerate_maximal_serial(const FanContext& ctx, const EnumerateOptions& opt);

/// All 2^6 candidate chamber sign vectors for n = 4, decided by exact LP
/// with triangle strictness; the independent oracle for enumerate_maximal(4).
std::vector<SignVector> brute_force_chambers(const FanContext& ctx);
std::vector<SignVector> brute_force_chambers_serial(const FanContext& ctx);

/// Every cone class of the refined stratification for n = 4 (all dimensions),
/// by closure descent from the open chambers.
EnumerationResult enumerate_all_cones(const FanContext& ctx, const EnumerateOptions& opt);

struct BoundaryPartition {
    std::vector<ConeRecord> kept;
    std::vector<ConeRecord> removed;
};

/// Splits records by the zero-cycle test at the witness: a vanishing minimum
/// cycle mean marks the cone as boundary. `undirected` evaluates the literal
/// undirected reading (minimum over undirected simple cycles, best
/// orientation); on the triangle-nonnegative region both agree.
BoundaryPartition filter_boundary(const std::vector<ConeRecord>& records, bool undirected = false);

struct LinearityGroups {
    // canonical triangle-zero pattern -> record ids
    std::map<std::string, std::vector<std::string>> groups;
    std::map<int, int> size_histogram; // group size -> number of groups
};

LinearityGroups group_by_linearity(const FanContext& ctx, const std::vector<ConeRecord>& kept);

/// Sign-vector and record serialization ("tri|bin|winners" and JSON lines).
std::string encode_sign_vector(const SignVector& sv);
SignVector decode_sign_vector(const std::string& text);
std::string record_to_json(const ConeRecord& r);
ConeRecord record_from_json(const std::string& line);

/// Strict system of a chamber (no triangle rows; every binomial normal is
/// orthogonal to the all-ones direction, so witnesses can be shifted into the
/// strict triangle region afterwards).
ConeSystem chamber_system(const FanContext& ctx, const SignVector& sv, WinnerRule rule);

/// Exact witness of a chamber class, shifted into the interior of the
/// triangle-positive region; throws InfeasibleSystem on an infeasible vector.
WeightMatrix chamber_witness(const FanContext& ctx, const SignVector& sv, WinnerRule rule);

/// Exact sign evaluation of a matrix in maximal- or all-cones shape.
SignVector evaluate_signs(const FanContext& ctx, const WeightMatrix& c, EnumMode mode,
                          WinnerRule rule);

} // namespace polytrope
