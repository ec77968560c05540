#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dng/solver.hpp"

namespace dng {

// Moved-point sets m(sigma) for every element, aligned with G's element
// order, plus the group motion: the minimum |m(sigma)| over non-identity
// elements. The identity's empty set is excluded from the minimum.
struct MotionData {
    std::vector<std::vector<int>> moved; // moved[i] = points moved by element i
    int group_motion = 0;
};

// Requires |G| >= 2, otherwise the group motion is undefined.
MotionData motion_data(const PermGroup& g);

// Non-identity elements of G preserving the labeling, in G's element order.
std::vector<Permutation> preservers_of(const PermGroup& g, const Labeling& c);

// A partition of the preserver indices {0..k-1} where each block's moved-point
// sets share a common point; `witnesses[j]` is such a point for block j.
struct GoodPartition {
    std::vector<std::vector<int>> blocks;
    std::vector<int> witnesses;

    int size() const { return static_cast<int>(blocks.size()); }
};

// A good partition of minimum block count for a nonempty list of non-identity
// permutations. Computed as a minimum cover of {0..k-1} by point stars
// S_x = {i : x moved by sigma_i}; a star cover of size t refines to a good
// partition of size t and conversely. Exhaustive over witness combinations in
// lexicographic order, so the witness sequence is the least one of minimum
// length. A singleton block always works, so a good partition always exists.
GoodPartition min_good_partition(const std::vector<Permutation>& sigmas);

// Independent route for the same minimum: direct enumeration of all set
// partitions of {0..k-1}, keeping the good ones. Returns nullopt when k
// exceeds max_k. Kept free of the star-cover machinery so the two routes
// check each other.
std::optional<int> min_good_partition_exhaustive(const std::vector<Permutation>& sigmas,
                                                 int max_k = 8);

// Bound from a subgroup's distinguishing labeling plus one fresh label per
// good-partition block.
struct MotionBound {
    int base_value = 0;  // distinguishing number of X under H
    int t = 0;           // minimum good-partition size; 0 when no preservers
    int bound = 0;       // base_value + t
    Labeling labeling;   // the constructed labeling
    GoodPartition partition;
    std::uint64_t preserver_count = 0;
    bool common_point = false; // all preserver motions share a point (then t = 1)
    bool verified = false;     // labeling re-checked distinguishing under G
};

// Takes an H-distinguishing labeling C with D_H(X) labels (from the exact
// solver), lists the elements of G preserving C, relabels one witness point
// per block of a minimum good partition with fresh labels D_H(X)+1 ... +t,
// and re-verifies the result under G. With no preservers the bound is
// D_H(X) with t = 0 and C unchanged. Requires is_subgroup(h, g).
MotionBound motion_bound(const PermGroup& g, const PermGroup& h,
                         const SolveOptions& opts = {});

// Minimum good-partition size over every d-distinguishing labeling of X
// under H (one representative per label-permutation class), d = D_H(X).
// Returns nullopt when more than `max_labelings` candidates exist.
std::optional<int> best_motion_partition_size(const PermGroup& g, const PermGroup& h,
                                              const SolveOptions& opts = {},
                                              std::uint64_t max_labelings = 20000);

// Bound of the form c + 1 built from orbit representatives: U gets the fresh
// label c+1 and the pointwise stabilizer L of U distinguishes the rest.
struct ConstructedBound {
    int c = 0;
    int bound = 0;            // c + 1
    int restricted_value = 0; // exact distinguishing number of L on X \ U
    Labeling labeling;
    bool verified = false;
};

// c = max distinguishing number over the maximal nonidentity subgroups
// (enumerated up to subgroup_cap unless an explicit list is supplied; an
// empty family degenerates to c = 1). Requires a nontrivial group, since the
// construction needs X \ U nonempty.
ConstructedBound theorem22_bound(const PermGroup& g,
                                 const std::optional<std::vector<PermGroup>>& maximal_list =
                                     std::nullopt,
                                 const SolveOptions& opts = {},
                                 std::uint64_t subgroup_cap = kDefaultSubgroupCap);

// Same construction with c = the distinguishing number of X under L itself.
ConstructedBound corollary23_bound(const PermGroup& g, const SolveOptions& opts = {});

// Smallest k with |G| <= k!.
int tymoczko_bound(std::uint64_t order);
int tymoczko_bound(const PermGroup& g);

// Expected distinguishing number 2 for nontrivial groups of odd order,
// absent otherwise.
std::optional<int> gluck_expectation(const PermGroup& g);

} // namespace dng
