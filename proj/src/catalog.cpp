#include "dng/catalog.hpp"

#include <algorithm>

namespace dng {

namespace {

Permutation rotation(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        im[static_cast<std::size_t>(i)] = (i + 1) % n;
    return Permutation(std::move(im));
}

// j -> -j mod n, the reflection fixing point 0
Permutation reflection(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        im[static_cast<std::size_t>(i)] = (n - i) % n;
    return Permutation(std::move(im));
}

Permutation power(const Permutation& p, int e) {
    Permutation out = Permutation::identity(p.degree());
    for (int i = 0; i < e; ++i)
        out = compose(out, p);
    return out;
}

std::vector<Permutation> symmetric_gens(int n) {
    return {rotation(n), parse_cycles("(1 2)", n)};
}

std::vector<Permutation> alternating_gens(int n) {
    // (1 2 3) together with an n-cycle (n odd) or (n-1)-cycle on 2..n (n even)
    Permutation three = parse_cycles("(1 2 3)", n);
    if (n % 2 == 1)
        return {three, rotation(n)};
    std::vector<int> im(static_cast<std::size_t>(n));
    im[0] = 0;
    for (int i = 1; i < n; ++i)
        im[static_cast<std::size_t>(i)] = i % (n - 1) + 1;
    return {three, Permutation(std::move(im))};
}

// Quaternion group by left multiplication on its 8 elements. Element index
// = axis * 2 + sign with axes 1, i, j, k and sign 0 for +, 1 for -.
std::vector<Permutation> quaternion_regular_gens() {
    auto mul = [](int x, int y) {
        int sx = x & 1, ax = x >> 1;
        int sy = y & 1, ay = y >> 1;
        static constexpr int axis[4][4] = {
            {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static constexpr int flip[4][4] = {
            {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
        return axis[ax][ay] * 2 + ((sx ^ sy ^ flip[ax][ay]) & 1);
    };
    auto left_mul_perm = [&](int g) {
        std::vector<int> im(8);
        for (int x = 0; x < 8; ++x)
            im[static_cast<std::size_t>(x)] = mul(g, x);
        return Permutation(std::move(im));
    };
    return {left_mul_perm(2), left_mul_perm(4)}; // +i and +j
}

// x -> 2x mod 7 normalizes the 7-cycle; together they give the nonabelian
// group of order 21.
std::vector<Permutation> frobenius21_gens() {
    std::vector<int> im(7);
    for (int i = 0; i < 7; ++i)
        im[static_cast<std::size_t>(i)] = (2 * i) % 7;
    return {rotation(7), Permutation(std::move(im))};
}

CatalogEntry cyclic_entry(int n) {
    CatalogEntry e;
    e.name = "C" + std::to_string(n) + "-rotation";
    e.description = "cyclic rotations on " + std::to_string(n) + " points";
    e.degree = n;
    e.generators = {rotation(n)};
    e.declared_order = static_cast<std::uint64_t>(n);
    e.tags = {"abelian", "cyclic", "metacyclic"};
    if (n % 2 == 1)
        e.tags.push_back("odd-order");
    e.family_n = n;
    e.expected.push_back({"D", {2}, "Thm1.2"});
    // proper nontrivial rotation subgroups C_d for d | n
    for (int d = 2; d < n; ++d)
        if (n % d == 0)
            e.subgroups.push_back(
                {"C" + std::to_string(d), {power(rotation(n), n / d)}});
    return e;
}

CatalogEntry dihedral_entry(int n) {
    CatalogEntry e;
    e.name = "D" + std::to_string(n);
    e.description = "dihedral group of order " + std::to_string(2 * n) + " on " +
                    std::to_string(n) + " points";
    e.degree = n;
    e.generators = {rotation(n), reflection(n)};
    e.declared_order = static_cast<std::uint64_t>(2 * n);
    e.tags = {"dihedral", "metacyclic"};
    e.family_n = n;
    bool exceptional = n == 3 || n == 4 || n == 5 || n == 6 || n == 10;
    e.expected.push_back({"D", exceptional ? std::vector<int>{2, 3} : std::vector<int>{2},
                          "Thm1.2"});
    e.subgroups.push_back({"Cn", {rotation(n)}});
    e.subgroups.push_back({"C2-reflection", {reflection(n)}});
    for (int d = 2; d < n; ++d)
        if (n % d == 0) {
            e.subgroups.push_back(
                {"C" + std::to_string(d), {power(rotation(n), n / d)}});
            if (d >= 3)
                e.subgroups.push_back(
                    {"D" + std::to_string(d), {power(rotation(n), n / d), reflection(n)}});
        }
    return e;
}

CatalogEntry symmetric_entry(int n) {
    CatalogEntry e;
    e.name = "S" + std::to_string(n) + "-natural";
    e.description = "symmetric group on " + std::to_string(n) + " points";
    e.degree = n;
    e.generators = symmetric_gens(n);
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= static_cast<std::uint64_t>(i);
    e.declared_order = f;
    e.tags = {"symmetric"};
    e.family_n = n;
    e.expected.push_back({"D", {n}, "Thm1.3"});
    e.subgroups.push_back({"An", alternating_gens(n)});
    e.subgroups.push_back({"C2", {parse_cycles("(1 2)", n)}});
    if (n == 3)
        e.subgroups.push_back({"C2b", {parse_cycles("(2 3)", n)}});
    if (n >= 4) {
        e.subgroups.push_back({"V4", {parse_cycles("(1 2)(3 4)", n),
                                      parse_cycles("(1 3)(2 4)", n)}});
        e.subgroups.push_back({"C4", {parse_cycles("(1 2 3 4)", n)}});
        e.subgroups.push_back({"D4", {parse_cycles("(1 2 3 4)", n),
                                      parse_cycles("(2 4)", n)}});
        e.subgroups.push_back({"S3", {parse_cycles("(1 2)", n), parse_cycles("(1 2 3)", n)}});
        e.subgroups.push_back({"C3", {parse_cycles("(1 2 3)", n)}});
    }
    if (n >= 5)
        e.subgroups.push_back(
            {"S4", {parse_cycles("(1 2)", n), parse_cycles("(1 2 3 4)", n)}});
    return e;
}

std::vector<Permutation> alternating_gens_on_first_four(int n) {
    return {parse_cycles("(1 2 3)", n), parse_cycles("(2 3 4)", n)};
}

CatalogEntry alternating_entry(int n) {
    CatalogEntry e;
    e.name = "A" + std::to_string(n) + "-natural";
    e.description = "alternating group on " + std::to_string(n) + " points";
    e.degree = n;
    e.generators = alternating_gens(n);
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= static_cast<std::uint64_t>(i);
    e.declared_order = f / 2;
    e.tags = {"alternating"};
    e.family_n = n;
    e.expected.push_back({"D", {n - 1}, "Thm1.3"});
    e.subgroups.push_back({"C3", {parse_cycles("(1 2 3)", n)}});
    if (n >= 4) {
        e.subgroups.push_back({"V4", {parse_cycles("(1 2)(3 4)", n),
                                      parse_cycles("(1 3)(2 4)", n)}});
        e.subgroups.push_back({"C2", {parse_cycles("(1 2)(3 4)", n)}});
    }
    if (n >= 5) {
        e.subgroups.push_back({"A4", alternating_gens_on_first_four(n)});
        e.subgroups.push_back({"C5", {parse_cycles("(1 2 3 4 5)", n)}});
    }
    return e;
}

} // namespace

PermGroup CatalogEntry::build(std::uint64_t order_cap) const {
    return PermGroup::close(generators, order_cap);
}

std::optional<PermGroup> CatalogEntry::build_subgroup(const std::string& label,
                                                      std::uint64_t order_cap) const {
    if (label == "trivial")
        return PermGroup::trivial(degree);
    if (label == "self")
        return build(order_cap);
    if (label == "derived")
        return derived_subgroup(build(order_cap));
    for (const auto& s : subgroups)
        if (s.label == label)
            return PermGroup::close(s.generators, order_cap);
    return std::nullopt;
}

bool CatalogEntry::has_tag(const std::string& tag) const {
    return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;

    for (int n = 3; n <= 12; ++n)
        entries.push_back(cyclic_entry(n));
    for (int n = 3; n <= 12; ++n)
        entries.push_back(dihedral_entry(n));
    for (int n = 3; n <= 5; ++n)
        entries.push_back(symmetric_entry(n));
    for (int n = 4; n <= 5; ++n)
        entries.push_back(alternating_entry(n));
    {
        CatalogEntry e = symmetric_entry(6);
        e.slow = true;
        entries.push_back(std::move(e));
        CatalogEntry a = alternating_entry(6);
        a.slow = true;
        entries.push_back(std::move(a));
    }

    {
        CatalogEntry e;
        e.name = "V4-regular";
        e.description = "Klein four-group acting on itself";
        e.degree = 4;
        e.generators = {parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)};
        e.declared_order = 4;
        e.tags = {"abelian", "regular"};
        e.expected.push_back({"D", {2}, "Thm1.2"});
        e.subgroups.push_back({"C2a", {parse_cycles("(1 2)(3 4)", 4)}});
        e.subgroups.push_back({"C2b", {parse_cycles("(1 3)(2 4)", 4)}});
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "C6-regular";
        e.description = "cyclic group of order 6 acting on itself";
        e.degree = 6;
        e.generators = {rotation(6)};
        e.declared_order = 6;
        e.tags = {"abelian", "cyclic", "regular", "metacyclic"};
        e.expected.push_back({"D", {2}, "Thm1.2"});
        e.subgroups.push_back({"C2", {power(rotation(6), 3)}});
        e.subgroups.push_back({"C3", {power(rotation(6), 2)}});
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "Q8-regular";
        e.description = "quaternion group acting on itself";
        e.degree = 8;
        e.generators = quaternion_regular_gens();
        e.declared_order = 8;
        e.tags = {"regular", "metacyclic"};
        e.expected.push_back({"D", {2, 3}, "derived"});
        e.subgroups.push_back({"C4i", {e.generators[0]}});
        e.subgroups.push_back({"C4j", {e.generators[1]}});
        e.subgroups.push_back({"center", {power(e.generators[0], 2)}});
        entries.push_back(std::move(e));
    }
    {
        PermGroup d4 = PermGroup::close({rotation(4), reflection(4)});
        PermGroup reg = regular_representation(d4);
        CatalogEntry e;
        e.name = "D4-regular";
        e.description = "dihedral group of order 8 acting on itself";
        e.degree = 8;
        e.generators = reg.generators();
        e.declared_order = 8;
        e.tags = {"dihedral", "regular", "metacyclic"};
        e.family_n = 4;
        e.expected.push_back({"D", {2, 3}, "Thm1.2"});
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "F21-on-7";
        e.description = "nonabelian group of order 21 on 7 points";
        e.degree = 7;
        e.generators = frobenius21_gens();
        e.declared_order = 21;
        e.tags = {"odd-order", "metacyclic"};
        e.expected.push_back({"D", {2}, "Gluck"});
        e.subgroups.push_back({"C7", {e.generators[0]}});
        e.subgroups.push_back({"C3", {e.generators[1]}});
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "C2-on-4";
        e.description = "one transposition on 4 points (three orbits)";
        e.degree = 4;
        e.generators = {parse_cycles("(1 2)", 4)};
        e.declared_order = 2;
        e.tags = {"abelian", "cyclic", "intransitive", "metacyclic"};
        e.expected.push_back({"D", {2}, "Thm1.2"});
        e.subgroups.push_back({"self-pair", {parse_cycles("(1 2)", 4)}});
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "M11-natural";
        e.description = "Mathieu group on 11 points";
        e.degree = 11;
        e.generators = {parse_cycles("(1 2 3 4 5 6 7 8 9 10 11)", 11),
                        parse_cycles("(3 7 11 8)(4 10 5 6)", 11)};
        e.declared_order = 7920;
        e.tags = {"almost-simple"};
        e.expected.push_back({"D", {2, 3, 4}, "Thm1.4"});
        e.slow = true;
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "M12-natural";
        e.description = "Mathieu group on 12 points";
        e.degree = 12;
        e.generators = {parse_cycles("(1 2 3 4 5 6 7 8 9 10 11)", 12),
                        parse_cycles("(3 7 11 8)(4 10 5 6)", 12),
                        parse_cycles("(1 12)(2 11)(3 6)(4 8)(5 9)(7 10)", 12)};
        e.declared_order = 95040;
        e.tags = {"almost-simple"};
        e.expected.push_back({"D", {2, 4}, "Thm1.4"});
        e.slow = true;
        entries.push_back(std::move(e));
    }

    return entries;
}

std::optional<CatalogEntry> find_entry(const std::vector<CatalogEntry>& entries,
                                       const std::string& name) {
    for (const auto& e : entries)
        if (e.name == name)
            return e;
    return std::nullopt;
}

} // namespace dng
