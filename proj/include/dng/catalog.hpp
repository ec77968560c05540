#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dng/group.hpp"

namespace dng {

struct SubgroupSpec {
    std::string label;
    std::vector<Permutation> generators;
};

// One claimed value for an entry, kept next to where the claim comes from.
// Claimed values are never echoed as computed; the audit always recomputes.
struct ExpectedValue {
    std::string quantity;     // "D"
    std::vector<int> claimed; // a single value or an admissible set
    std::string provenance;   // claim id such as "Thm1.2", or "derived"
};

struct CatalogEntry {
    std::string name;
    std::string description;
    int degree = 0;
    std::vector<Permutation> generators;
    std::uint64_t declared_order = 0;
    std::vector<std::string> tags; // abelian, cyclic, dihedral, symmetric, ...
    std::optional<int> family_n;   // n for C_n, D_n, S_n, A_n families
    std::vector<SubgroupSpec> subgroups;
    std::vector<ExpectedValue> expected;
    bool slow = false;

    PermGroup build(std::uint64_t order_cap = kDefaultOrderCap) const;
    std::optional<PermGroup> build_subgroup(const std::string& label,
                                            std::uint64_t order_cap = kDefaultOrderCap) const;
    bool has_tag(const std::string& tag) const;
};

// The built-in desk-scale inventory: cyclic rotations C_3..C_12, dihedral
// D_3..D_12, natural S_3..S_5 and A_4..A_5, regular actions of the Klein
// four-group, C_6, the quaternion group and D_4, a nonabelian group of order
// 21 on 7 points, an intransitive C_2 on 4 points, and (behind the slow flag)
// the Mathieu groups on 11 and 12 points.
std::vector<CatalogEntry> build_catalog();

std::optional<CatalogEntry> find_entry(const std::vector<CatalogEntry>& entries,
                                       const std::string& name);

} // namespace dng
