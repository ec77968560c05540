#include "dng/group.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

namespace dng {

struct PermGroup::Data {
    int degree = 0;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;
    std::unordered_map<Permutation, std::size_t, PermutationHash> index;
};

namespace {

void check_common_degree(const std::vector<Permutation>& perms) {
    for (const auto& p : perms)
        if (p.degree() != perms.front().degree())
            throw InputError("generators must share a common degree");
}

std::unordered_map<Permutation, std::size_t, PermutationHash>
build_index(const std::vector<Permutation>& elements) {
    std::unordered_map<Permutation, std::size_t, PermutationHash> index;
    index.reserve(elements.size() * 2);
    for (std::size_t i = 0; i < elements.size(); ++i)
        index.emplace(elements[i], i);
    return index;
}

// Greedy generating subset: walk the elements in order and keep those not yet
// generated by what was kept so far. Bounded by log2 |G| closures.
std::vector<Permutation> generating_subset(const std::vector<Permutation>& elements) {
    const int degree = elements.front().degree();
    std::vector<Permutation> gens;
    std::unordered_set<Permutation, PermutationHash> closed;
    closed.insert(Permutation::identity(degree));
    for (const auto& e : elements) {
        if (closed.contains(e))
            continue;
        gens.push_back(e);
        // re-close with the enlarged generator list
        std::vector<Permutation> frontier(closed.begin(), closed.end());
        while (!frontier.empty()) {
            std::vector<Permutation> next;
            for (const auto& x : frontier) {
                for (const auto& g : gens) {
                    Permutation y = compose(x, g);
                    if (closed.insert(y).second)
                        next.push_back(std::move(y));
                }
            }
            frontier = std::move(next);
        }
        if (closed.size() == elements.size())
            break;
    }
    if (gens.empty())
        gens.push_back(Permutation::identity(degree));
    return gens;
}

} // namespace

PermGroup PermGroup::close(const std::vector<Permutation>& generators,
                           std::uint64_t order_cap) {
    if (generators.empty())
        throw InputError("generator list must be nonempty");
    check_common_degree(generators);
    const int degree = generators.front().degree();

    auto data = std::make_shared<Data>();
    data->degree = degree;
    data->generators = generators;

    std::unordered_set<Permutation, PermutationHash> seen;
    std::vector<Permutation> level{Permutation::identity(degree)};
    seen.insert(level.front());
    data->elements.push_back(level.front());

    while (!level.empty()) {
        std::vector<Permutation> next;
        for (const auto& x : level) {
            for (const auto& g : generators) {
                Permutation y = compose(x, g);
                if (seen.insert(y).second) {
                    next.push_back(std::move(y));
                    if (seen.size() > order_cap)
                        throw CapabilityError("group order exceeds cap " +
                                              std::to_string(order_cap));
                }
            }
        }
        std::sort(next.begin(), next.end());
        data->elements.insert(data->elements.end(), next.begin(), next.end());
        level = std::move(next);
    }
    data->index = build_index(data->elements);
    return PermGroup(std::move(data));
}

PermGroup PermGroup::from_elements(std::vector<Permutation> elements) {
    if (elements.empty())
        throw InputError("element list must be nonempty");
    check_common_degree(elements);
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (!elements.front().is_identity())
        throw InputError("element set does not contain the identity");

    auto data = std::make_shared<Data>();
    data->degree = elements.front().degree();
    data->index = build_index(elements);
    // closure check: a finite set closed under composition is a group
    for (const auto& a : elements)
        for (const auto& b : elements)
            if (!data->index.contains(compose(a, b)))
                throw InputError("element set is not closed under composition");
    data->generators = generating_subset(elements);
    data->elements = std::move(elements);
    return PermGroup(std::move(data));
}

PermGroup PermGroup::trivial(int degree) {
    return from_elements({Permutation::identity(degree)});
}

int PermGroup::degree() const { return data_->degree; }
std::uint64_t PermGroup::order() const { return data_->elements.size(); }
const std::vector<Permutation>& PermGroup::elements() const { return data_->elements; }
const std::vector<Permutation>& PermGroup::generators() const { return data_->generators; }

bool PermGroup::contains(const Permutation& p) const {
    return p.degree() == degree() && data_->index.contains(p);
}

std::optional<std::size_t> PermGroup::element_index(const Permutation& p) const {
    auto it = data_->index.find(p);
    if (it == data_->index.end())
        return std::nullopt;
    return it->second;
}

bool PermGroup::is_abelian() const {
    const auto& gens = data_->generators;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (compose(gens[i], gens[j]) != compose(gens[j], gens[i]))
                return false;
    return true;
}

bool PermGroup::same_group_as(const PermGroup& other) const {
    if (degree() != other.degree() || order() != other.order())
        return false;
    for (const auto& e : elements())
        if (!other.contains(e))
            return false;
    return true;
}

bool is_subgroup(const PermGroup& h, const PermGroup& g) {
    if (h.degree() != g.degree())
        throw InputError("degree mismatch: " + std::to_string(h.degree()) + " vs " +
                         std::to_string(g.degree()));
    if (h.order() > g.order() || g.order() % h.order() != 0)
        return false;
    for (const auto& e : h.elements())
        if (!g.contains(e))
            return false;
    return true;
}

namespace {

void require_subgroup(const PermGroup& h, const PermGroup& g) {
    if (!is_subgroup(h, g))
        throw InputError("not a subgroup");
}

} // namespace

bool is_normal(const PermGroup& h, const PermGroup& g) {
    require_subgroup(h, g);
    for (const auto& s : g.generators())
        for (const auto& e : h.elements())
            if (!h.contains(conjugate(s, e)))
                return false;
    return true;
}

std::uint64_t subgroup_index(const PermGroup& g, const PermGroup& h) {
    require_subgroup(h, g);
    return g.order() / h.order();
}

std::vector<Permutation> left_coset_reps(const PermGroup& g, const PermGroup& h) {
    require_subgroup(h, g);
    std::vector<char> covered(g.order(), 0);
    std::vector<Permutation> reps;
    for (std::size_t i = 0; i < g.elements().size(); ++i) {
        if (covered[i])
            continue;
        const Permutation& rep = g.elements()[i];
        reps.push_back(rep);
        for (const auto& e : h.elements()) {
            auto idx = g.element_index(compose(rep, e));
            covered[*idx] = 1;
        }
    }
    return reps;
}

PermGroup derived_subgroup(const PermGroup& g) {
    std::vector<Permutation> gens;
    std::unordered_set<Permutation, PermutationHash> distinct;
    for (const auto& a : g.elements())
        for (const auto& b : g.elements()) {
            Permutation c = commutator(a, b);
            if (distinct.insert(c).second)
                gens.push_back(std::move(c));
        }
    return PermGroup::close(gens, g.order());
}

PermGroup normal_closure(const PermGroup& h, const PermGroup& g) {
    require_subgroup(h, g);
    std::vector<Permutation> gens;
    std::unordered_set<Permutation, PermutationHash> distinct;
    for (const auto& s : g.elements())
        for (const auto& t : h.generators()) {
            Permutation c = conjugate(s, t);
            if (distinct.insert(c).second)
                gens.push_back(std::move(c));
        }
    return PermGroup::close(gens, g.order());
}

PermGroup pointwise_stabilizer(const PermGroup& g, const std::vector<int>& points) {
    for (int p : points)
        if (p < 0 || p >= g.degree())
            throw InputError("point " + std::to_string(p + 1) + " out of range for degree " +
                             std::to_string(g.degree()));
    std::vector<Permutation> fixed;
    for (const auto& e : g.elements()) {
        bool ok = true;
        for (int p : points)
            if (e(p) != p) {
                ok = false;
                break;
            }
        if (ok)
            fixed.push_back(e);
    }
    return PermGroup::from_elements(std::move(fixed));
}

std::vector<std::vector<int>> orbits(const PermGroup& g) {
    const int n = g.degree();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> result;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)])
            continue;
        std::vector<int> orbit{start};
        seen[static_cast<std::size_t>(start)] = 1;
        for (std::size_t k = 0; k < orbit.size(); ++k)
            for (const auto& gen : g.generators()) {
                int image = gen(orbit[k]);
                if (!seen[static_cast<std::size_t>(image)]) {
                    seen[static_cast<std::size_t>(image)] = 1;
                    orbit.push_back(image);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        result.push_back(std::move(orbit));
    }
    return result;
}

std::vector<int> orbit_representatives(const PermGroup& g) {
    std::vector<int> reps;
    for (const auto& orbit : orbits(g))
        reps.push_back(orbit.front());
    return reps;
}

namespace {

// Subgroups as sorted index sets into g.elements(), closed via a Cayley table.
using IndexSet = std::vector<std::uint16_t>;

IndexSet close_indices(IndexSet seed, const std::vector<std::vector<std::uint16_t>>& table) {
    std::vector<char> member(table.size(), 0);
    for (auto i : seed)
        member[i] = 1;
    std::vector<std::uint16_t> work(seed.begin(), seed.end());
    for (std::size_t k = 0; k < work.size(); ++k)
        for (std::size_t j = 0; j < work.size(); ++j) {
            std::uint16_t prod = table[work[k]][work[j]];
            if (!member[prod]) {
                member[prod] = 1;
                work.push_back(prod);
            }
        }
    IndexSet out;
    for (std::size_t i = 0; i < member.size(); ++i)
        if (member[i])
            out.push_back(static_cast<std::uint16_t>(i));
    return out;
}

} // namespace

std::vector<PermGroup> all_subgroups(const PermGroup& g, std::uint64_t subgroup_cap) {
    if (g.order() > subgroup_cap)
        throw CapabilityError("subgroup enumeration needs order <= " +
                              std::to_string(subgroup_cap) + ", got " +
                              std::to_string(g.order()) +
                              "; pass subgroups explicitly instead");
    if (g.order() > 65535)
        throw CapabilityError("subgroup enumeration caps at order 65535");
    const std::size_t n = g.order();
    std::vector<std::vector<std::uint16_t>> table(n, std::vector<std::uint16_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            table[a][b] = static_cast<std::uint16_t>(
                *g.element_index(compose(g.elements()[a], g.elements()[b])));

    std::size_t id_index = *g.element_index(Permutation::identity(g.degree()));
    IndexSet trivial_set{static_cast<std::uint16_t>(id_index)};

    std::set<IndexSet> found;
    found.insert(trivial_set);
    std::vector<IndexSet> work{trivial_set};
    for (std::size_t k = 0; k < work.size(); ++k) {
        IndexSet base = work[k]; // copy: work may reallocate
        if (base.size() == n)
            continue;
        std::vector<char> member(n, 0);
        for (auto i : base)
            member[i] = 1;
        for (std::uint16_t e = 0; e < n; ++e) {
            if (member[e])
                continue;
            IndexSet seed = base;
            seed.push_back(e);
            IndexSet closed = close_indices(std::move(seed), table);
            if (found.insert(closed).second)
                work.push_back(std::move(closed));
        }
    }

    std::vector<PermGroup> result;
    std::vector<std::pair<std::uint64_t, IndexSet>> ordered;
    for (const auto& s : found)
        ordered.emplace_back(s.size(), s);
    std::sort(ordered.begin(), ordered.end());
    for (const auto& [sz, s] : ordered) {
        std::vector<Permutation> elems;
        elems.reserve(s.size());
        for (auto i : s)
            elems.push_back(g.elements()[i]);
        result.push_back(PermGroup::from_elements(std::move(elems)));
    }
    return result;
}

std::vector<PermGroup> maximal_subgroups(const PermGroup& g, std::uint64_t subgroup_cap) {
    std::vector<PermGroup> subs = all_subgroups(g, subgroup_cap);
    std::vector<PermGroup> proper;
    for (const auto& h : subs)
        if (h.order() > 1 && h.order() < g.order())
            proper.push_back(h);
    std::vector<PermGroup> maximal;
    for (const auto& h : proper) {
        bool is_max = true;
        for (const auto& k : proper)
            if (k.order() > h.order() && is_subgroup(h, k)) {
                is_max = false;
                break;
            }
        if (is_max)
            maximal.push_back(h);
    }
    return maximal;
}

PermGroup restrict_to(const PermGroup& g, const std::vector<int>& points) {
    if (points.empty())
        throw InputError("cannot restrict to an empty point set");
    std::vector<int> position(static_cast<std::size_t>(g.degree()), -1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        int p = points[i];
        if (p < 0 || p >= g.degree())
            throw InputError("point out of range in restriction");
        position[static_cast<std::size_t>(p)] = static_cast<int>(i);
    }
    std::vector<Permutation> elems;
    elems.reserve(g.order());
    for (const auto& e : g.elements()) {
        std::vector<int> im(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) {
            int image = e(points[i]);
            int mapped = position[static_cast<std::size_t>(image)];
            if (mapped < 0)
                throw InputError("point set is not invariant under the group");
            im[i] = mapped;
        }
        elems.push_back(Permutation(std::move(im)));
    }
    std::size_t before = elems.size();
    PermGroup restricted = PermGroup::from_elements(std::move(elems));
    if (restricted.order() != before)
        throw InputError("restriction is not faithful");
    return restricted;
}

PermGroup regular_representation(const PermGroup& g) {
    const std::size_t n = g.order();
    std::vector<Permutation> elems;
    elems.reserve(n);
    for (const auto& a : g.elements()) {
        std::vector<int> im(n);
        for (std::size_t i = 0; i < n; ++i)
            im[i] = static_cast<int>(*g.element_index(compose(a, g.elements()[i])));
        elems.push_back(Permutation(std::move(im)));
    }
    return PermGroup::from_elements(std::move(elems));
}

std::optional<PermGroup> product_subgroup(const PermGroup& h, const PermGroup& k) {
    if (h.degree() != k.degree())
        throw InputError("degree mismatch in product");
    std::unordered_set<Permutation, PermutationHash> hk;
    std::vector<Permutation> elems;
    for (const auto& a : h.elements())
        for (const auto& b : k.elements()) {
            Permutation p = compose(a, b);
            if (hk.insert(p).second)
                elems.push_back(std::move(p));
        }
    // HK is a subgroup iff it is closed, iff HK = KH
    for (const auto& b : k.elements())
        for (const auto& a : h.elements())
            if (!hk.contains(compose(b, a)))
                return std::nullopt;
    return PermGroup::from_elements(std::move(elems));
}

PermGroup intersection(const PermGroup& h, const PermGroup& k) {
    if (h.degree() != k.degree())
        throw InputError("degree mismatch in intersection");
    std::vector<Permutation> elems;
    for (const auto& e : h.elements())
        if (k.contains(e))
            elems.push_back(e);
    return PermGroup::from_elements(std::move(elems));
}

PermGroup parse_group_file(const std::string& contents, std::uint64_t order_cap) {
    std::istringstream in(contents);
    std::string line;
    int degree = -1;
    std::vector<Permutation> gens;
    while (std::getline(in, line)) {
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos)
            continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        std::string trimmed = line.substr(a, b - a + 1);
        if (trimmed.empty() || trimmed[0] == '#')
            continue;
        if (degree < 0) {
            if (trimmed.rfind("degree:", 0) != 0)
                throw InputError("group file must start with \"degree: n\"");
            degree = std::stoi(trimmed.substr(7));
            if (degree < 1)
                throw InputError("invalid degree in group file");
            continue;
        }
        gens.push_back(parse_cycles(trimmed, degree));
    }
    if (degree < 0)
        throw InputError("group file must start with \"degree: n\"");
    if (gens.empty())
        gens.push_back(Permutation::identity(degree));
    return PermGroup::close(gens, order_cap);
}

} // namespace dng
