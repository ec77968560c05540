#include <doctest.h>

#include <random>

#include "dng/graph.hpp"

using dng::Graph;
using dng::PermGroup;

namespace {

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.vertex_count; ++u)
        for (int v = u + 1; v < g.vertex_count; ++v)
            if (!g.adjacent(u, v))
                edges.emplace_back(u, v);
    return dng::make_graph(g.vertex_count, std::move(edges));
}

} // namespace

TEST_CASE("automorphism groups of small graphs") {
    CHECK(dng::automorphism_group(dng::cycle_graph(3)).order() == 6);
    CHECK(dng::automorphism_group(dng::path_graph(3)).order() == 2);
    CHECK(dng::automorphism_group(dng::make_graph(3, {})).order() == 6); // no edges

    for (int n = 3; n <= 8; ++n)
        CHECK(dng::automorphism_group(dng::cycle_graph(n)).order() ==
              static_cast<std::uint64_t>(2 * n));
}

TEST_CASE("graph distinguishing numbers") {
    CHECK(dng::graph_distinguishing_number(dng::cycle_graph(3)).value == 3);
    CHECK(dng::graph_distinguishing_number(dng::cycle_graph(6)).value == 2);
    CHECK(dng::graph_distinguishing_number(dng::complete_graph(1)).value == 1);
    CHECK(dng::graph_distinguishing_number(dng::path_graph(4)).value == 2);
}

TEST_CASE("complement invariance") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + static_cast<int>(rng() % 3);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2)
                    edges.emplace_back(u, v);
        Graph g = dng::make_graph(n, std::move(edges));
        PermGroup aut = dng::automorphism_group(g);
        PermGroup aut_c = dng::automorphism_group(complement(g));
        CHECK(aut.same_group_as(aut_c));
        CHECK(dng::distinguishing_number(aut).value ==
              dng::distinguishing_number(aut_c).value);
    }
}

TEST_CASE("graph validation and caps") {
    CHECK_THROWS_AS(dng::make_graph(3, {{0, 0}}), dng::InputError);
    CHECK_THROWS_AS(dng::make_graph(3, {{0, 1}, {1, 0}}), dng::InputError);
    CHECK_THROWS_AS(dng::make_graph(3, {{0, 5}}), dng::InputError);
    CHECK_THROWS_AS(dng::automorphism_group(dng::path_graph(21)), dng::CapabilityError);
}

TEST_CASE("graph files and families") {
    Graph g = dng::parse_graph_file("vertices: 3\n1 2\n2 3\n3 1\n");
    CHECK(g.vertex_count == 3);
    CHECK(g.edges.size() == 3);
    CHECK_THROWS_AS(dng::parse_graph_file("1 2\n"), dng::InputError);

    CHECK(dng::parse_graph_family("cycle:5").edges.size() == 5);
    CHECK(dng::parse_graph_family("path:5").edges.size() == 4);
    CHECK(dng::parse_graph_family("complete:4").edges.size() == 6);
    CHECK_THROWS_AS(dng::parse_graph_family("torus:4"), dng::InputError);
    CHECK_THROWS_AS(dng::parse_graph_family("cycle"), dng::InputError);
}
