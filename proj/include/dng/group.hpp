#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dng/perm.hpp"

namespace dng {

inline constexpr std::uint64_t kDefaultOrderCap = 1'000'000;
inline constexpr std::uint64_t kDefaultSubgroupCap = 200;

// A finite permutation group with its elements fully enumerated. The action
// is faithful by construction: distinct elements are distinct permutations.
//
// Element order is deterministic. Groups built by close() list elements in
// breadth-first order from the identity (generators applied in list order,
// ties within a level broken by lexicographic image array); groups built from
// an explicit element set list them in ascending lexicographic order. Either
// way elements()[0] is the identity and repeated runs produce the same order.
//
// Instances are immutable and cheap to copy (shared internal state).
class PermGroup {
public:
    // Closure of a nonempty generator list of common degree. Throws
    // CapabilityError if the order would exceed `order_cap`.
    static PermGroup close(const std::vector<Permutation>& generators,
                           std::uint64_t order_cap = kDefaultOrderCap);

    // Builds a group from a complete element set (must already be closed;
    // verified). Elements are stored in ascending lexicographic order and a
    // small generating subset is derived greedily for reporting.
    static PermGroup from_elements(std::vector<Permutation> elements);

    static PermGroup trivial(int degree);

    int degree() const;
    std::uint64_t order() const;
    const std::vector<Permutation>& elements() const;
    const std::vector<Permutation>& generators() const;
    const Permutation& element(std::size_t i) const { return elements()[i]; }

    bool contains(const Permutation& p) const;
    // Position of p in elements(), if present.
    std::optional<std::size_t> element_index(const Permutation& p) const;

    bool is_trivial() const { return order() == 1; }
    bool is_abelian() const;

    // Set equality as groups (element order is irrelevant).
    bool same_group_as(const PermGroup& other) const;

private:
    struct Data;
    explicit PermGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    std::shared_ptr<const Data> data_;
};

// Every element of H is an element of G. Degrees must match.
bool is_subgroup(const PermGroup& h, const PermGroup& g);

// sigma H sigma^-1 = H for every generator sigma of G (sufficient, since
// conjugation by products and inverses follows). Requires is_subgroup(h, g).
bool is_normal(const PermGroup& h, const PermGroup& g);

// |G| / |H|. Requires is_subgroup(h, g).
std::uint64_t subgroup_index(const PermGroup& g, const PermGroup& h);

// Left coset representatives giving the disjoint decomposition
// G = union of rep_i H; rep_0 is the identity and each subsequent rep is the
// least element (in G's canonical order) not yet covered.
std::vector<Permutation> left_coset_reps(const PermGroup& g, const PermGroup& h);

// Subgroup generated by all commutators a b a^-1 b^-1 of elements of G.
PermGroup derived_subgroup(const PermGroup& g);

// Smallest normal subgroup of G containing H: closure of all G-conjugates of
// H's generators. Requires is_subgroup(h, g).
PermGroup normal_closure(const PermGroup& h, const PermGroup& g);

// Elements of G fixing every point of `points`.
PermGroup pointwise_stabilizer(const PermGroup& g, const std::vector<int>& points);

// Orbits of G on {0..degree-1}, each ascending, ordered by least point;
// they partition the point set.
std::vector<std::vector<int>> orbits(const PermGroup& g);

// Least point of each orbit, ascending.
std::vector<int> orbit_representatives(const PermGroup& g);

// Every subgroup of G, in a deterministic order (ascending order, then
// lexicographic element list). Throws CapabilityError when |G| exceeds
// `subgroup_cap`; callers may pass an explicit subgroup list to the
// operations that accept one instead.
std::vector<PermGroup> all_subgroups(const PermGroup& g,
                                     std::uint64_t subgroup_cap = kDefaultSubgroupCap);

// Proper subgroups maximal under inclusion, excluding the identity subgroup.
std::vector<PermGroup> maximal_subgroups(const PermGroup& g,
                                         std::uint64_t subgroup_cap = kDefaultSubgroupCap);

// The action of G restricted to an invariant point set `points` (ascending),
// with points renumbered to 0..|points|-1 in that order. Throws if some
// element leaves the set or if the restriction is not faithful.
PermGroup restrict_to(const PermGroup& g, const std::vector<int>& points);

// Left-multiplication action of G on its own element list: element g maps
// position i to the position of g * elements()[i]. Faithful and transitive,
// of degree |G|.
PermGroup regular_representation(const PermGroup& g);

// Product set HK = {h k}. Returns a PermGroup when HK is closed under the
// group operation (equivalently HK = KH), nullopt otherwise. H and K must be
// subgroups of a common parent of equal degree.
std::optional<PermGroup> product_subgroup(const PermGroup& h, const PermGroup& k);

// Intersection of two subgroups of a common parent.
PermGroup intersection(const PermGroup& h, const PermGroup& k);

// Group file format: first line "degree: n", then one generator per line in
// cycle notation. Blank lines and lines starting with '#' are ignored.
PermGroup parse_group_file(const std::string& contents,
                           std::uint64_t order_cap = kDefaultOrderCap);

} // namespace dng
