#include <doctest.h>

#include <random>
#include <set>

#include "dng/bounds.hpp"

using dng::Labeling;
using dng::parse_cycles;
using dng::PermGroup;
using dng::Permutation;

namespace {

PermGroup s3() {
    return PermGroup::close({parse_cycles("(1 2 3)", 3), parse_cycles("(1 2)", 3)});
}

PermGroup a3() { return PermGroup::close({parse_cycles("(1 2 3)", 3)}); }

PermGroup d4() {
    return PermGroup::close({parse_cycles("(1 2 3 4)", 4), parse_cycles("(2 4)", 4)});
}

} // namespace

TEST_CASE("motion data") {
    dng::MotionData m3 = dng::motion_data(s3());
    CHECK(m3.group_motion == 2);
    auto idx = s3().element_index(parse_cycles("(1 2)", 3));
    REQUIRE(idx.has_value());
    CHECK(m3.moved[*idx] == std::vector<int>{0, 1});

    CHECK(dng::motion_data(a3()).group_motion == 3); // fixed-point-free rotations
    CHECK_THROWS_AS(dng::motion_data(PermGroup::trivial(3)), dng::InputError);
}

TEST_CASE("preserver lists") {
    PermGroup g = s3();
    auto p1 = dng::preservers_of(g, Labeling({1, 2, 2}, 2));
    REQUIRE(p1.size() == 1);
    CHECK(p1[0] == parse_cycles("(2 3)", 3));
    CHECK(dng::preservers_of(g, Labeling({1, 2, 3}, 3)).empty());
    CHECK(dng::preservers_of(g, Labeling({1, 1, 1}, 1)).size() == 5);
}

TEST_CASE("minimum good partitions") {
    {
        std::vector<Permutation> sigmas{parse_cycles("(2 3)", 3)};
        dng::GoodPartition p = dng::min_good_partition(sigmas);
        CHECK(p.size() == 1);
        CHECK(p.witnesses == std::vector<int>{1}); // least moved point
        CHECK(p.blocks == std::vector<std::vector<int>>{{0}});
    }
    {
        // motions {0,1} and {0,2} meet at point 0
        std::vector<Permutation> sigmas{parse_cycles("(1 2)", 3), parse_cycles("(1 3)", 3)};
        dng::GoodPartition p = dng::min_good_partition(sigmas);
        CHECK(p.size() == 1);
        CHECK(p.witnesses == std::vector<int>{0});
    }
    {
        // disjoint motions force two blocks
        std::vector<Permutation> sigmas{parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)};
        dng::GoodPartition p = dng::min_good_partition(sigmas);
        CHECK(p.size() == 2);
    }
    CHECK_THROWS_AS(dng::min_good_partition({}), dng::InputError);
    CHECK_THROWS_AS(dng::min_good_partition({Permutation::identity(3)}), dng::InputError);
}

TEST_CASE("star cover equals direct partition enumeration") {
    std::mt19937 rng(31);
    PermGroup pool = PermGroup::close({parse_cycles("(1 2 3 4 5)", 5),
                                       parse_cycles("(1 2)", 5)});
    for (int trial = 0; trial < 60; ++trial) {
        int k = 1 + static_cast<int>(rng() % 6);
        std::vector<Permutation> sigmas;
        while (static_cast<int>(sigmas.size()) < k) {
            const Permutation& e =
                pool.elements()[rng() % static_cast<unsigned>(pool.order())];
            if (!e.is_identity())
                sigmas.push_back(e);
        }
        auto direct = dng::min_good_partition_exhaustive(sigmas);
        REQUIRE(direct.has_value());
        CHECK(dng::min_good_partition(sigmas).size() == *direct);
    }
}

TEST_CASE("minimal partitions have disjoint block intersections") {
    std::mt19937 rng(37);
    PermGroup pool = PermGroup::close({parse_cycles("(1 2 3 4 5 6)", 6),
                                       parse_cycles("(1 2)", 6)});
    for (int trial = 0; trial < 40; ++trial) {
        int k = 2 + static_cast<int>(rng() % 7);
        std::vector<Permutation> sigmas;
        while (static_cast<int>(sigmas.size()) < k) {
            const Permutation& e =
                pool.elements()[rng() % static_cast<unsigned>(pool.order())];
            if (!e.is_identity())
                sigmas.push_back(e);
        }
        dng::GoodPartition p = dng::min_good_partition(sigmas);

        std::vector<std::set<int>> inters;
        for (const auto& block : p.blocks) {
            std::set<int> common;
            for (int x = 0; x < 6; ++x)
                common.insert(x);
            for (int i : block) {
                std::set<int> moved;
                for (int x : sigmas[static_cast<std::size_t>(i)].moved_points())
                    moved.insert(x);
                std::set<int> kept;
                for (int x : common)
                    if (moved.contains(x))
                        kept.insert(x);
                common = std::move(kept);
            }
            CHECK_FALSE(common.empty());
            inters.push_back(std::move(common));
        }
        for (std::size_t i = 0; i < inters.size(); ++i)
            for (std::size_t j = i + 1; j < inters.size(); ++j)
                for (int x : inters[i])
                    CHECK_FALSE(inters[j].contains(x));

        std::set<int> witnesses(p.witnesses.begin(), p.witnesses.end());
        CHECK(witnesses.size() == p.witnesses.size());
    }
}

TEST_CASE("fresh-label bound over a subgroup") {
    {
        dng::MotionBound b = dng::motion_bound(s3(), a3());
        CHECK(b.base_value == 2);
        CHECK(b.t == 1);
        CHECK(b.bound == 3);
        CHECK(b.verified);
        CHECK(b.common_point); // one preserver, so its motion is the common set
        CHECK(dng::distinguishing_number(s3()).value <= b.bound);
    }
    {
        // G = H leaves no outside preservers
        PermGroup g = s3();
        dng::MotionBound b = dng::motion_bound(g, g);
        CHECK(b.t == 0);
        CHECK(b.bound == b.base_value);
        CHECK(b.verified);
    }
    {
        // trivial subgroup: constant base labeling, one fresh label per block
        PermGroup g = s3();
        dng::MotionBound b = dng::motion_bound(g, PermGroup::trivial(3));
        CHECK(b.base_value == 1);
        CHECK(b.preserver_count == 5);
        CHECK(b.bound == 1 + b.t);
        CHECK(b.verified);
        CHECK(b.bound >= dng::distinguishing_number(g).value);
    }
}

TEST_CASE("two-point intersection forces a single fresh label") {
    // preservers with a common moved point must yield t = 1
    std::mt19937 rng(41);
    PermGroup g = d4();
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<int> labels(4);
        for (auto& v : labels)
            v = 1 + static_cast<int>(rng() % 2);
        auto sigmas = dng::preservers_of(g, Labeling(labels, 2));
        if (sigmas.empty())
            continue;
        std::vector<int> first_moved = sigmas[0].moved_points();
        std::set<int> common(first_moved.begin(), first_moved.end());
        for (const auto& s : sigmas) {
            std::vector<int> m = s.moved_points();
            std::set<int> moved(m.begin(), m.end());
            std::set<int> kept;
            for (int x : common)
                if (moved.contains(x))
                    kept.insert(x);
            common = std::move(kept);
        }
        if (!common.empty())
            CHECK(dng::min_good_partition(sigmas).size() == 1);
    }
}

TEST_CASE("maximal-subgroup construction") {
    {
        dng::ConstructedBound b = dng::theorem22_bound(s3());
        CHECK(b.c == 2);
        CHECK(b.bound == 3);
        CHECK(b.verified);
        CHECK(b.bound == dng::distinguishing_number(s3()).value); // sharp here
        CHECK(b.restricted_value <= b.c);
    }
    {
        // no proper nonidentity subgroup: the family is empty and c degenerates to 1
        PermGroup c2 = PermGroup::close({parse_cycles("(1 2)", 2)});
        dng::ConstructedBound b = dng::theorem22_bound(c2);
        CHECK(b.c == 1);
        CHECK(b.bound == 2);
        CHECK(b.verified);
        CHECK(b.bound == dng::distinguishing_number(c2).value);
    }
    {
        dng::ConstructedBound b = dng::theorem22_bound(d4());
        CHECK(b.verified);
        CHECK(b.bound >= dng::distinguishing_number(d4()).value);
        CHECK(dng::is_distinguishing(d4(), b.labeling, PermGroup::trivial(4)));
    }
    CHECK_THROWS_AS(dng::theorem22_bound(PermGroup::trivial(3)), dng::InputError);
}

TEST_CASE("orbit-stabilizer construction") {
    {
        dng::ConstructedBound b = dng::corollary23_bound(s3());
        CHECK(b.c == 2); // pointwise stabilizer of the single representative
        CHECK(b.bound == 3);
        CHECK(b.verified);
    }
    {
        // transitive action: one representative, L is a point stabilizer
        PermGroup g = d4();
        CHECK(dng::orbit_representatives(g) == std::vector<int>{0});
        dng::ConstructedBound b = dng::corollary23_bound(g);
        CHECK(b.verified);
        CHECK(b.bound >= dng::distinguishing_number(g).value);
    }
    CHECK_THROWS_AS(dng::corollary23_bound(PermGroup::trivial(4)), dng::InputError);
}

TEST_CASE("factorial bound") {
    CHECK(dng::tymoczko_bound(std::uint64_t{6}) == 3);
    CHECK(dng::tymoczko_bound(std::uint64_t{1}) == 1);
    CHECK(dng::tymoczko_bound(std::uint64_t{7920}) == 8);
    CHECK(dng::tymoczko_bound(std::uint64_t{5040}) == 7);
    CHECK(dng::tymoczko_bound(s3()) == 3);
}

TEST_CASE("odd-order expectation") {
    PermGroup c7 = PermGroup::close({parse_cycles("(1 2 3 4 5 6 7)", 7)});
    CHECK(dng::gluck_expectation(c7) == 2);
    CHECK_FALSE(dng::gluck_expectation(s3()).has_value());
    CHECK_FALSE(dng::gluck_expectation(PermGroup::trivial(3)).has_value());
}

TEST_CASE("best partition size over labeling classes") {
    auto best = dng::best_motion_partition_size(s3(), a3());
    REQUIRE(best.has_value());
    CHECK(*best == 1);
    CHECK(2 + *best >= dng::distinguishing_number(s3()).value);
}
