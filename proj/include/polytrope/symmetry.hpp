#pragma once

#include "polytrope/binomials.hpp"
#include "polytrope/kleene.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace polytrope {

struct NodePermutation {
    std::vector<int> image; // image[i] = sigma(i)

    static std::vector<NodePermutation> all(int n);
    NodePermutation inverse() const;
};

/// Sign data of a cone of the stratification. `tri` is empty in maximal mode
/// (implicitly all '+'); `bin` covers the m = 2 catalog in canonical order;
/// `winners` (n >= 6) holds one winning matching index per block and parity
/// class, the rotation-class entry first.
struct SignVector {
    std::vector<std::int8_t> tri;                    // {-1,0,+1}
    std::vector<std::int8_t> bin;                    // {-1,0,+1}
    std::vector<std::array<std::int8_t, 2>> winners; // per block {even idx, odd idx}

    bool operator==(const SignVector&) const = default;

    /// Byte encoding; its lexicographic order is the fixed total order used
    /// for canonical forms.
    std::string key() const;
};

/// Precomputed S_n action on edges, triangle functionals, the m = 2 binomial
/// catalog (with orientation signs), and the m = 3 matching blocks.
class InducedAction {
public:
    explicit InducedAction(int n);

    int n() const { return n_; }
    int perm_count() const { return static_cast<int>(perms_.size()); }
    const std::vector<NodePermutation>& perms() const { return perms_; }

    int edge_image(int s, int e) const { return edge_map_[s][e]; }
    int triangle_image(int s, int t) const { return tri_map_[s][t]; }
    int binomial_image(int s, int b) const { return bin_map_[s][b]; }
    int binomial_sign(int s, int b) const { return bin_sign_[s][b]; }
    int block_image(int s, int blk) const { return block_map_[s][blk]; }
    /// (parity, index) of the image matching inside the image block.
    std::pair<int, int> matching_image(int s, int blk, int parity, int idx) const {
        const auto& v = match_map_[s][blk][parity * per_parity_ + idx];
        return {v[0], v[1]};
    }

    int num_m2() const { return num_m2_; }
    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    const std::vector<MatchingBlock>& blocks() const { return blocks_; }

    /// Permute a point of R^N by relabeling nodes (row/column permutation).
    EdgeVector permute_point(int s, const EdgeVector& c) const;

    SignVector act(int s, const SignVector& sv) const;

    /// Lexicographic minimum of the orbit under the key() order. The fast
    /// variant walks candidates lazily through inverse tables with early
    /// abort; the plain one materializes every image (kept as the reference).
    SignVector canonicalize(const SignVector& sv) const;
    SignVector canonicalize_fast(const SignVector& sv) const;

    /// Canonical form plus orbit size (n! / stabilizer).
    std::pair<SignVector, long long> canonical_with_orbit(const SignVector& sv) const;

    /// Canonical form, orbit size, and the smallest permutation index
    /// realizing the canonical form (for transporting witness points).
    struct CanonicalForm {
        SignVector canon;
        long long orbit_size = 0;
        int perm = 0;
    };
    CanonicalForm canonical_full(const SignVector& sv) const;

private:
    int n_;
    int num_m2_ = 0;
    int per_parity_ = 0;
    std::vector<NodePermutation> perms_;
    std::vector<MatchingBlock> blocks_;
    std::vector<std::vector<int>> edge_map_;
    std::vector<std::vector<int>> tri_map_;
    std::vector<std::vector<int>> bin_map_;
    std::vector<std::vector<int>> bin_sign_;
    std::vector<std::vector<int>> block_map_;
    std::vector<std::vector<std::vector<std::array<std::int8_t, 2>>>> match_map_;
    // inverse tables for the lazy canonical scan
    std::vector<std::vector<int>> tri_pre_;
    std::vector<std::vector<int>> bin_pre_;
    std::vector<std::vector<int>> bin_pre_sign_;
    std::vector<std::vector<int>> block_pre_;
    std::vector<std::vector<char>> parity_swap_; // per perm, per source block
};

/// Exact signs of a weight matrix against the full functional family, in the
/// shape enumerate_* uses. `strict_only` leaves tri empty (maximal mode).
SignVector sign_vector_of(const InducedAction& action, const WeightMatrix& c, bool maximal_mode,
                          bool winner_is_min);

} // namespace polytrope
