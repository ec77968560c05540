#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "dng/labeling.hpp"

using dng::Labeling;
using dng::LabelingStream;
using dng::LabelMode;
using dng::parse_cycles;
using dng::PermGroup;

namespace {

PermGroup s3() {
    return PermGroup::close({parse_cycles("(1 2 3)", 3), parse_cycles("(1 2)", 3)});
}

// independent odometer over all d^n maps, for the surjection-count oracle
std::uint64_t count_onto_by_enumeration(int n, int d) {
    std::vector<int> a(static_cast<std::size_t>(n), 1);
    std::uint64_t onto = 0;
    for (;;) {
        std::set<int> values(a.begin(), a.end());
        if (static_cast<int>(values.size()) == d)
            ++onto;
        int i = n - 1;
        while (i >= 0 && a[static_cast<std::size_t>(i)] == d)
            a[static_cast<std::size_t>(i--)] = 1;
        if (i < 0)
            break;
        ++a[static_cast<std::size_t>(i)];
    }
    return onto;
}

std::uint64_t factorial(int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i)
        f *= static_cast<std::uint64_t>(i);
    return f;
}

std::vector<std::vector<int>> drain(LabelingStream stream) {
    std::vector<std::vector<int>> out;
    while (auto phi = stream.next())
        out.push_back(phi->labels);
    return out;
}

} // namespace

TEST_CASE("preserving subgroup") {
    PermGroup g = s3();
    PermGroup p = dng::preserving_subgroup(g, Labeling({1, 2, 2}, 2));
    CHECK(p.order() == 2);
    CHECK(p.contains(parse_cycles("(2 3)", 3)));

    CHECK(dng::preserving_subgroup(g, Labeling({1, 1, 1}, 1)).same_group_as(g));
    CHECK(dng::preserving_subgroup(g, Labeling({1, 2, 3}, 3)).order() == 1);
    CHECK_THROWS_AS(dng::preserving_subgroup(g, Labeling({1, 2}, 2)), dng::InputError);
}

TEST_CASE("distinguishing test") {
    PermGroup g = s3();
    PermGroup trivial = PermGroup::trivial(3);
    CHECK(dng::is_distinguishing(g, Labeling({1, 2, 3}, 3), trivial));
    CHECK_FALSE(dng::is_distinguishing(g, Labeling({1, 2, 2}, 2), trivial));
    PermGroup c2 = PermGroup::close({parse_cycles("(2 3)", 3)});
    CHECK(dng::is_distinguishing(g, Labeling({1, 2, 2}, 2), c2));
}

TEST_CASE("surjection counts match direct enumeration") {
    CHECK(dng::count_surjective_labelings(3, 3) == 6);
    CHECK(dng::count_surjective_labelings(3, 2) == 6);
    CHECK(dng::count_surjective_labelings(3, 4) == 0);

    for (int n = 1; n <= 6; ++n)
        for (int d = 1; d <= n; ++d)
            CHECK(dng::count_surjective_labelings(n, d) == count_onto_by_enumeration(n, d));
}

TEST_CASE("labeling streams") {
    auto reduced_33 = drain(LabelingStream(3, 3, LabelMode::kSurjective, true));
    REQUIRE(reduced_33.size() == 1);
    CHECK(reduced_33[0] == std::vector<int>{1, 2, 3});

    CHECK(drain(LabelingStream(3, 2, LabelMode::kSurjective, true)).size() == 3);

    auto all_21 = drain(LabelingStream(2, 1, LabelMode::kAll, false));
    REQUIRE(all_21.size() == 1);
    CHECK(all_21[0] == std::vector<int>{1, 1});
}

TEST_CASE("streams are lexicographic and complete") {
    for (int n = 1; n <= 5; ++n)
        for (int d = 1; d <= n + 1; ++d) {
            auto all = drain(LabelingStream(n, d, LabelMode::kAll, false));
            std::uint64_t expect = 1;
            for (int i = 0; i < n; ++i)
                expect *= static_cast<std::uint64_t>(d);
            CHECK(all.size() == expect);
            CHECK(std::is_sorted(all.begin(), all.end()));
            std::set<std::vector<int>> distinct(all.begin(), all.end());
            CHECK(distinct.size() == all.size());

            if (d <= n) {
                auto onto = drain(LabelingStream(n, d, LabelMode::kSurjective, false));
                CHECK(onto.size() == dng::count_surjective_labelings(n, d));
                CHECK(std::is_sorted(onto.begin(), onto.end()));

                auto reduced = drain(LabelingStream(n, d, LabelMode::kSurjective, true));
                CHECK(reduced.size() * factorial(d) == dng::count_surjective_labelings(n, d));
            }
        }
}

TEST_CASE("label-permutation equivariance") {
    PermGroup g = s3();
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        int d = 2 + static_cast<int>(rng() % 2);
        std::vector<int> labels(3);
        for (auto& v : labels)
            v = 1 + static_cast<int>(rng() % static_cast<unsigned>(d));
        std::vector<int> relabel(static_cast<std::size_t>(d));
        std::iota(relabel.begin(), relabel.end(), 1);
        std::shuffle(relabel.begin(), relabel.end(), rng);
        std::vector<int> mapped(3);
        for (int i = 0; i < 3; ++i)
            mapped[static_cast<std::size_t>(i)] =
                relabel[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)] - 1)];
        PermGroup a = dng::preserving_subgroup(g, Labeling(labels, d));
        PermGroup b = dng::preserving_subgroup(g, Labeling(mapped, d));
        CHECK(a.same_group_as(b));
    }
}

TEST_CASE("refinement shrinks the preserving subgroup") {
    PermGroup g = PermGroup::close({parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 2)", 4)});
    std::mt19937 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<int> coarse(4), fine(4);
        for (auto& v : coarse)
            v = 1 + static_cast<int>(rng() % 2);
        // split each class of `coarse` further: fine = pair (coarse, extra)
        for (int i = 0; i < 4; ++i)
            fine[static_cast<std::size_t>(i)] =
                (coarse[static_cast<std::size_t>(i)] - 1) * 2 + 1 +
                static_cast<int>(rng() % 2);
        PermGroup pc = dng::preserving_subgroup(g, Labeling(coarse, 2));
        PermGroup pf = dng::preserving_subgroup(g, Labeling(fine, 4));
        CHECK(dng::is_subgroup(pf, pc));
    }
}

TEST_CASE("labeling text form") {
    CHECK(dng::to_label_string(Labeling({1, 2, 2}, 2)) == "1,2,2");
    Labeling parsed = dng::parse_labeling("1,2,2");
    CHECK(parsed.labels == std::vector<int>{1, 2, 2});
    CHECK(parsed.label_count == 2);
    CHECK_THROWS_AS(dng::parse_labeling("1,x,2"), dng::InputError);
    CHECK_THROWS_AS(dng::parse_labeling(""), dng::InputError);
}

TEST_CASE("surjectivity flag") {
    CHECK(Labeling({1, 2, 2}, 2).is_surjective());
    CHECK_FALSE(Labeling({1, 1, 1}, 2).is_surjective());
    CHECK_THROWS_AS(Labeling({0, 1}, 2), dng::InputError);
    CHECK_THROWS_AS(Labeling({1, 3}, 2), dng::InputError);
}
