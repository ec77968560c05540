#include "dng/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace dng {

MotionData motion_data(const PermGroup& g) {
    if (g.order() < 2)
        throw InputError("group motion is undefined for the trivial group");
    MotionData data;
    data.moved.reserve(g.order());
    int best = g.degree() + 1;
    for (const auto& e : g.elements()) {
        std::vector<int> m = e.moved_points();
        if (!m.empty())
            best = std::min(best, static_cast<int>(m.size()));
        data.moved.push_back(std::move(m));
    }
    data.group_motion = best;
    return data;
}

std::vector<Permutation> preservers_of(const PermGroup& g, const Labeling& c) {
    if (g.degree() != c.degree())
        throw InputError("degree mismatch between group and labeling");
    std::vector<Permutation> kept;
    for (const auto& e : g.elements())
        if (!e.is_identity() && preserves(e, c))
            kept.push_back(e);
    return kept;
}

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::size_t k) { return Bits((k + 63) / 64, 0); }

void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t(1) << (i % 64); }

bool covers_all(const Bits& b, std::size_t k) {
    for (std::size_t w = 0; w < b.size(); ++w) {
        std::uint64_t want = ~std::uint64_t(0);
        if (w + 1 == b.size() && k % 64 != 0)
            want = (std::uint64_t(1) << (k % 64)) - 1;
        if ((b[w] & want) != want)
            return false;
    }
    return true;
}

// Point stars over the sigma indices: star(x) = set of i with x in m(sigma_i).
std::vector<Bits> point_stars(const std::vector<Permutation>& sigmas) {
    const int degree = sigmas.front().degree();
    const std::size_t k = sigmas.size();
    std::vector<Bits> stars(static_cast<std::size_t>(degree), make_bits(k));
    for (std::size_t i = 0; i < k; ++i)
        for (int x = 0; x < degree; ++x)
            if (sigmas[i](x) != x)
                set_bit(stars[static_cast<std::size_t>(x)], i);
    return stars;
}

void check_sigmas(const std::vector<Permutation>& sigmas) {
    if (sigmas.empty())
        throw InputError("good partition needs at least one permutation");
    for (const auto& s : sigmas) {
        if (s.degree() != sigmas.front().degree())
            throw InputError("permutations must share a common degree");
        if (s.is_identity())
            throw InputError("the identity has empty motion and cannot be partitioned");
    }
}

} // namespace

GoodPartition min_good_partition(const std::vector<Permutation>& sigmas) {
    check_sigmas(sigmas);
    const int degree = sigmas.front().degree();
    const std::size_t k = sigmas.size();
    std::vector<Bits> stars = point_stars(sigmas);

    // candidate witness points: nonempty stars; duplicates keep the least point
    std::vector<int> candidates;
    for (int x = 0; x < degree; ++x) {
        bool empty = std::all_of(stars[static_cast<std::size_t>(x)].begin(),
                                 stars[static_cast<std::size_t>(x)].end(),
                                 [](std::uint64_t w) { return w == 0; });
        if (empty)
            continue;
        bool dup = false;
        for (int y : candidates)
            if (stars[static_cast<std::size_t>(y)] == stars[static_cast<std::size_t>(x)]) {
                dup = true;
                break;
            }
        if (!dup)
            candidates.push_back(x);
    }

    const std::size_t m = candidates.size();
    std::vector<int> chosen;
    // combinations of candidate points in lexicographic order, by size
    for (std::size_t t = 1; t <= m && chosen.empty(); ++t) {
        std::vector<std::size_t> combo(t);
        for (std::size_t i = 0; i < t; ++i)
            combo[i] = i;
        for (;;) {
            Bits unioned = make_bits(k);
            for (std::size_t i : combo)
                for (std::size_t w = 0; w < unioned.size(); ++w)
                    unioned[w] |= stars[static_cast<std::size_t>(candidates[i])][w];
            if (covers_all(unioned, k)) {
                for (std::size_t i : combo)
                    chosen.push_back(candidates[i]);
                break;
            }
            // next combination in lexicographic order
            std::size_t pos = t;
            while (pos > 0 && combo[pos - 1] == m - t + pos - 1)
                --pos;
            if (pos == 0)
                break; // exhausted
            ++combo[pos - 1];
            for (std::size_t j = pos; j < t; ++j)
                combo[j] = combo[j - 1] + 1;
        }
    }
    if (chosen.empty())
        throw std::logic_error("star cover search failed despite nonempty motions");

    // first-fit refinement of the cover into a partition; minimum covers are
    // irredundant, so every block receives at least one index
    GoodPartition part;
    part.blocks.assign(chosen.size(), {});
    part.witnesses = chosen;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < chosen.size(); ++j) {
            const Bits& star = stars[static_cast<std::size_t>(chosen[j])];
            if (star[i / 64] >> (i % 64) & 1) {
                part.blocks[j].push_back(static_cast<int>(i));
                break;
            }
        }
    for (const auto& block : part.blocks)
        if (block.empty())
            throw std::logic_error("redundant witness in a minimum star cover");
    return part;
}

std::optional<int> min_good_partition_exhaustive(const std::vector<Permutation>& sigmas,
                                                 int max_k) {
    check_sigmas(sigmas);
    const std::size_t k = sigmas.size();
    if (k > static_cast<std::size_t>(max_k))
        return std::nullopt;
    const int degree = sigmas.front().degree();
    if (degree > 64)
        return std::nullopt;

    std::vector<std::uint64_t> motion_mask(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (int x = 0; x < degree; ++x)
            if (sigmas[i](x) != x)
                motion_mask[i] |= std::uint64_t(1) << x;

    // all set partitions of {0..k-1} via restricted growth strings
    std::vector<int> rgs(k, 0);
    int best = static_cast<int>(k);
    for (;;) {
        int nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        if (nblocks < best) {
            std::vector<std::uint64_t> inter(static_cast<std::size_t>(nblocks),
                                             ~std::uint64_t(0));
            for (std::size_t i = 0; i < k; ++i)
                inter[static_cast<std::size_t>(rgs[i])] &= motion_mask[i];
            bool good = std::all_of(inter.begin(), inter.end(),
                                    [](std::uint64_t w) { return w != 0; });
            if (good)
                best = nblocks;
        }
        // next restricted growth string
        int pos = static_cast<int>(k) - 1;
        while (pos > 0) {
            int prefix_max = *std::max_element(rgs.begin(), rgs.begin() + pos);
            if (rgs[static_cast<std::size_t>(pos)] <= prefix_max) {
                ++rgs[static_cast<std::size_t>(pos)];
                std::fill(rgs.begin() + pos + 1, rgs.end(), 0);
                break;
            }
            --pos;
        }
        if (pos == 0)
            break;
    }
    return best;
}

MotionBound motion_bound(const PermGroup& g, const PermGroup& h, const SolveOptions& opts) {
    if (!is_subgroup(h, g))
        throw InputError("not a subgroup");
    MotionBound result;
    SolveResult base = distinguishing_number(h, opts);
    result.base_value = base.value;
    result.labeling = base.witness;

    std::vector<Permutation> sigmas = preservers_of(g, base.witness);
    result.preserver_count = sigmas.size();
    if (sigmas.empty()) {
        result.t = 0;
        result.bound = base.value;
        result.verified = is_distinguishing(g, result.labeling, PermGroup::trivial(g.degree()));
        return result;
    }

    result.partition = min_good_partition(sigmas);
    result.t = result.partition.size();
    result.bound = base.value + result.t;

    // a common moved point across all preservers forces t = 1
    std::vector<char> common(static_cast<std::size_t>(g.degree()), 1);
    for (const auto& s : sigmas)
        for (int x = 0; x < g.degree(); ++x)
            if (s(x) == x)
                common[static_cast<std::size_t>(x)] = 0;
    result.common_point =
        std::any_of(common.begin(), common.end(), [](char c) { return c != 0; });

    Labeling constructed(base.witness.labels, base.value + result.t);
    for (int j = 0; j < result.t; ++j)
        constructed.labels[static_cast<std::size_t>(result.partition.witnesses[j])] =
            base.value + 1 + j;
    result.labeling = constructed;
    result.verified = is_distinguishing(g, constructed, PermGroup::trivial(g.degree()));
    return result;
}

std::optional<int> best_motion_partition_size(const PermGroup& g, const PermGroup& h,
                                              const SolveOptions& opts,
                                              std::uint64_t max_labelings) {
    if (!is_subgroup(h, g))
        throw InputError("not a subgroup");
    const int d = distinguishing_number(h, opts).value;
    LabelingStream stream(g.degree(), d, LabelMode::kSurjective, true);
    std::optional<int> best;
    std::uint64_t seen = 0;
    while (auto phi = stream.next()) {
        if (++seen > max_labelings)
            return std::nullopt;
        if (!is_distinguishing(h, *phi, PermGroup::trivial(g.degree())))
            continue;
        std::vector<Permutation> sigmas = preservers_of(g, *phi);
        int t = sigmas.empty() ? 0 : min_good_partition(sigmas).size();
        if (!best || t < *best)
            best = t;
    }
    return best;
}

namespace {

ConstructedBound orbit_representative_bound(const PermGroup& g, int c,
                                            const SolveOptions& opts) {
    if (g.is_trivial())
        throw InputError("the construction needs a nontrivial group, so that the "
                         "non-representative point set is nonempty");
    std::vector<int> reps = orbit_representatives(g);
    std::vector<char> in_reps(static_cast<std::size_t>(g.degree()), 0);
    for (int u : reps)
        in_reps[static_cast<std::size_t>(u)] = 1;
    std::vector<int> rest;
    for (int x = 0; x < g.degree(); ++x)
        if (!in_reps[static_cast<std::size_t>(x)])
            rest.push_back(x);

    PermGroup stab = pointwise_stabilizer(g, reps);
    PermGroup restricted = restrict_to(stab, rest);
    SolveResult base = distinguishing_number(restricted, opts);

    ConstructedBound result;
    result.c = c;
    result.bound = c + 1;
    result.restricted_value = base.value;

    std::vector<int> labels(static_cast<std::size_t>(g.degree()), c + 1);
    for (std::size_t i = 0; i < rest.size(); ++i)
        labels[static_cast<std::size_t>(rest[i])] = base.witness.labels[i];
    result.labeling = Labeling(std::move(labels), c + 1);
    result.verified = is_distinguishing(g, result.labeling, PermGroup::trivial(g.degree()));
    return result;
}

} // namespace

ConstructedBound theorem22_bound(const PermGroup& g,
                                 const std::optional<std::vector<PermGroup>>& maximal_list,
                                 const SolveOptions& opts, std::uint64_t subgroup_cap) {
    if (g.is_trivial())
        throw InputError("the construction needs a nontrivial group");
    std::vector<PermGroup> family =
        maximal_list ? *maximal_list : maximal_subgroups(g, subgroup_cap);
    // groups whose only proper subgroup is the identity have an empty family;
    // the trivial subgroup distinguishes with one label
    int c = 1;
    for (const auto& h : family)
        c = std::max(c, distinguishing_number(h, opts).value);
    return orbit_representative_bound(g, c, opts);
}

ConstructedBound corollary23_bound(const PermGroup& g, const SolveOptions& opts) {
    if (g.is_trivial())
        throw InputError("the construction needs a nontrivial group");
    PermGroup stab = pointwise_stabilizer(g, orbit_representatives(g));
    int c = distinguishing_number(stab, opts).value;
    return orbit_representative_bound(g, c, opts);
}

int tymoczko_bound(std::uint64_t order) {
    int k = 1;
    unsigned __int128 factorial = 1;
    while (factorial < order) {
        ++k;
        factorial *= static_cast<unsigned>(k);
    }
    return k;
}

int tymoczko_bound(const PermGroup& g) { return tymoczko_bound(g.order()); }

std::optional<int> gluck_expectation(const PermGroup& g) {
    if (g.order() % 2 == 1 && g.order() > 1)
        return 2;
    return std::nullopt;
}

} // namespace dng
