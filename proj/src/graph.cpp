#include "dng/graph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace dng {

bool Graph::adjacent(int u, int v) const {
    if (u > v)
        std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

Graph make_graph(int vertex_count, std::vector<std::pair<int, int>> edges) {
    if (vertex_count < 1)
        throw InputError("graph needs at least one vertex");
    for (auto& [u, v] : edges) {
        if (u == v)
            throw InputError("loop at vertex " + std::to_string(u + 1));
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw InputError("edge endpoint out of range");
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw InputError("duplicate edge " + std::to_string(dup->first + 1) + " " +
                         std::to_string(dup->second + 1));
    return Graph{vertex_count, std::move(edges)};
}

Graph parse_graph_file(const std::string& contents) {
    std::istringstream in(contents);
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos)
            continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        std::string trimmed = line.substr(a, b - a + 1);
        if (trimmed.empty() || trimmed[0] == '#')
            continue;
        if (n < 0) {
            if (trimmed.rfind("vertices:", 0) != 0)
                throw InputError("graph file must start with \"vertices: n\"");
            n = std::stoi(trimmed.substr(9));
            continue;
        }
        std::istringstream edge(trimmed);
        int u = 0, v = 0;
        if (!(edge >> u >> v))
            throw InputError("bad edge line \"" + trimmed + "\"");
        edges.emplace_back(u - 1, v - 1);
    }
    if (n < 0)
        throw InputError("graph file must start with \"vertices: n\"");
    return make_graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3)
        throw InputError("cycle graphs need at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return make_graph(n, std::move(edges));
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return make_graph(n, std::move(edges));
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return make_graph(n, std::move(edges));
}

Graph parse_graph_family(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw InputError("family syntax is name:size, e.g. cycle:7");
    std::string name = spec.substr(0, colon);
    int size = 0;
    try {
        size = std::stoi(spec.substr(colon + 1));
    } catch (const std::exception&) {
        throw InputError("bad family size in \"" + spec + "\"");
    }
    if (name == "cycle")
        return cycle_graph(size);
    if (name == "path")
        return path_graph(size);
    if (name == "complete")
        return complete_graph(size);
    throw InputError("unknown graph family \"" + name + "\"");
}

namespace {

class AutomorphismSearch {
public:
    AutomorphismSearch(const Graph& g, std::uint64_t order_cap)
        : n_(g.vertex_count), cap_(order_cap) {
        adj_.assign(static_cast<std::size_t>(n_), 0);
        for (auto [u, v] : g.edges) {
            adj_[static_cast<std::size_t>(u)] |= 1u << v;
            adj_[static_cast<std::size_t>(v)] |= 1u << u;
        }
        degree_.resize(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i)
            degree_[static_cast<std::size_t>(i)] =
                __builtin_popcount(adj_[static_cast<std::size_t>(i)]);
        image_.assign(static_cast<std::size_t>(n_), -1);
        closure_.insert(Permutation::identity(n_));
    }

    PermGroup run() {
        extend(0, 0u);
        std::vector<Permutation> gens = generators_;
        if (gens.empty())
            gens.push_back(Permutation::identity(n_));
        return PermGroup::close(gens, cap_);
    }

private:
    void extend(int v, unsigned used) {
        if (v == n_) {
            record(Permutation(image_));
            return;
        }
        for (int u = 0; u < n_; ++u) {
            if (used & (1u << u))
                continue;
            if (degree_[static_cast<std::size_t>(u)] != degree_[static_cast<std::size_t>(v)])
                continue;
            bool ok = true;
            for (int w = 0; w < v; ++w)
                if (((adj_[static_cast<std::size_t>(v)] >> w) & 1u) !=
                    ((adj_[static_cast<std::size_t>(u)] >> image_[static_cast<std::size_t>(w)]) &
                     1u)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            image_[static_cast<std::size_t>(v)] = u;
            extend(v + 1, used | (1u << u));
        }
        image_[static_cast<std::size_t>(v)] = -1;
    }

    void record(Permutation p) {
        if (closure_.contains(p))
            return;
        generators_.push_back(p);
        // re-close with the new generator
        std::vector<Permutation> frontier(closure_.begin(), closure_.end());
        while (!frontier.empty()) {
            std::vector<Permutation> next;
            for (const auto& x : frontier)
                for (const auto& g : generators_) {
                    Permutation y = compose(x, g);
                    if (closure_.insert(y).second) {
                        if (closure_.size() > cap_)
                            throw CapabilityError("automorphism group order exceeds cap " +
                                                  std::to_string(cap_));
                        next.push_back(std::move(y));
                    }
                }
            frontier = std::move(next);
        }
    }

    int n_;
    std::uint64_t cap_;
    std::vector<unsigned> adj_;
    std::vector<int> degree_;
    std::vector<int> image_;
    std::vector<Permutation> generators_;
    std::unordered_set<Permutation, PermutationHash> closure_;
};

} // namespace

PermGroup automorphism_group(const Graph& g, std::uint64_t order_cap) {
    if (g.vertex_count > kMaxGraphVertices)
        throw CapabilityError("automorphism search supports at most " +
                              std::to_string(kMaxGraphVertices) + " vertices, got " +
                              std::to_string(g.vertex_count));
    PermGroup aut = AutomorphismSearch(g, order_cap).run();
    for (const auto& e : aut.elements())
        for (auto [u, v] : g.edges)
            if (!g.adjacent(e(u), e(v)))
                throw std::logic_error("automorphism search returned a non-automorphism");
    return aut;
}

SolveResult graph_distinguishing_number(const Graph& g, const SolveOptions& opts) {
    return distinguishing_number(automorphism_group(g), opts);
}

} // namespace dng
