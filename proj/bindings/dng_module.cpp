#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dng/audit.hpp"
#include "dng/bounds.hpp"
#include "dng/graph.hpp"

namespace py = pybind11;

namespace {

dng::PermGroup group_from_cycles(const std::vector<std::string>& cycles, int degree,
                                 std::uint64_t cap) {
    std::vector<dng::Permutation> gens;
    gens.reserve(cycles.size());
    for (const auto& c : cycles)
        gens.push_back(dng::parse_cycles(c, degree));
    return dng::PermGroup::close(gens, cap);
}

dng::SolveOptions make_options(bool reduce, int threads) {
    dng::SolveOptions opts;
    opts.reduce_label_symmetry = reduce;
    opts.threads = threads;
    return opts;
}

py::dict solve_dict(const dng::SolveResult& r) {
    py::dict out;
    out["value"] = r.value;
    out["witness"] = r.witness.labels;
    out["examined"] = r.examined;
    out["elapsed_ms"] = r.elapsed_ms;
    return out;
}

} // namespace

PYBIND11_MODULE(_dng, m) {
    m.doc() = "exact distinguishing numbers of finite permutation group actions";

    py::register_exception<dng::InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<dng::CapabilityError>(m, "CapabilityError", PyExc_RuntimeError);

    py::class_<dng::Permutation>(m, "Permutation")
        .def(py::init<std::vector<int>>(), py::arg("images"))
        .def_static("identity", &dng::Permutation::identity, py::arg("degree"))
        .def_static(
            "from_cycles",
            [](const std::string& text, int degree) { return dng::parse_cycles(text, degree); },
            py::arg("text"), py::arg("degree"))
        .def_property_readonly("degree", &dng::Permutation::degree)
        .def_property_readonly("images",
                               [](const dng::Permutation& p) { return p.images(); })
        .def("__call__", [](const dng::Permutation& p, int x) { return p(x); })
        .def("inverse", &dng::Permutation::inverse)
        .def("is_identity", &dng::Permutation::is_identity)
        .def("moved_points", &dng::Permutation::moved_points)
        .def("__mul__",
             [](const dng::Permutation& p, const dng::Permutation& q) {
                 return dng::compose(p, q);
             })
        .def("__eq__", [](const dng::Permutation& p, const dng::Permutation& q) { return p == q; })
        .def("__hash__", [](const dng::Permutation& p) { return dng::PermutationHash{}(p); })
        .def("__repr__", [](const dng::Permutation& p) {
            return "Permutation(\"" + dng::to_cycle_string(p) + "\", degree=" +
                   std::to_string(p.degree()) + ")";
        });

    m.def("compose", &dng::compose, py::arg("p"), py::arg("q"));
    m.def("cycle_string", &dng::to_cycle_string, py::arg("p"));

    py::class_<dng::PermGroup>(m, "PermGroup")
        .def_static("close", &dng::PermGroup::close, py::arg("generators"),
                    py::arg("order_cap") = dng::kDefaultOrderCap)
        .def_static("from_cycles", &group_from_cycles, py::arg("cycles"), py::arg("degree"),
                    py::arg("order_cap") = dng::kDefaultOrderCap)
        .def_static("trivial", &dng::PermGroup::trivial, py::arg("degree"))
        .def_property_readonly("degree", &dng::PermGroup::degree)
        .def_property_readonly("order", &dng::PermGroup::order)
        .def_property_readonly("elements",
                               [](const dng::PermGroup& g) { return g.elements(); })
        .def_property_readonly("generators",
                               [](const dng::PermGroup& g) { return g.generators(); })
        .def("contains", &dng::PermGroup::contains, py::arg("p"))
        .def("is_abelian", &dng::PermGroup::is_abelian)
        .def("same_group_as", &dng::PermGroup::same_group_as, py::arg("other"))
        .def("__len__", [](const dng::PermGroup& g) { return g.order(); })
        .def("__repr__", [](const dng::PermGroup& g) {
            return "PermGroup(order=" + std::to_string(g.order()) + ", degree=" +
                   std::to_string(g.degree()) + ")";
        });

    m.def("is_subgroup", &dng::is_subgroup, py::arg("h"), py::arg("g"));
    m.def("is_normal", &dng::is_normal, py::arg("h"), py::arg("g"));
    m.def("subgroup_index", &dng::subgroup_index, py::arg("g"), py::arg("h"));
    m.def("left_coset_reps", &dng::left_coset_reps, py::arg("g"), py::arg("h"));
    m.def("derived_subgroup", &dng::derived_subgroup, py::arg("g"));
    m.def("normal_closure", &dng::normal_closure, py::arg("h"), py::arg("g"));
    m.def("pointwise_stabilizer", &dng::pointwise_stabilizer, py::arg("g"), py::arg("points"));
    m.def("orbits", &dng::orbits, py::arg("g"));
    m.def("orbit_representatives", &dng::orbit_representatives, py::arg("g"));
    m.def("all_subgroups", &dng::all_subgroups, py::arg("g"),
          py::arg("subgroup_cap") = dng::kDefaultSubgroupCap);
    m.def("maximal_subgroups", &dng::maximal_subgroups, py::arg("g"),
          py::arg("subgroup_cap") = dng::kDefaultSubgroupCap);
    m.def("regular_representation", &dng::regular_representation, py::arg("g"));

    py::class_<dng::Labeling>(m, "Labeling")
        .def(py::init<std::vector<int>, int>(), py::arg("labels"), py::arg("label_count"))
        .def_readonly("labels", &dng::Labeling::labels)
        .def_readonly("label_count", &dng::Labeling::label_count)
        .def("is_surjective", &dng::Labeling::is_surjective)
        .def("__repr__",
             [](const dng::Labeling& l) { return "Labeling(" + dng::to_label_string(l) + ")"; });

    m.def("preserving_subgroup", &dng::preserving_subgroup, py::arg("g"), py::arg("phi"));
    m.def("is_distinguishing", &dng::is_distinguishing, py::arg("g"), py::arg("phi"),
          py::arg("h"));
    m.def("count_surjective_labelings", &dng::count_surjective_labelings, py::arg("n"),
          py::arg("d"));
    m.def(
        "surjective_labelings",
        [](int n, int d, bool reduce) {
            std::vector<std::vector<int>> out;
            dng::LabelingStream stream(n, d, dng::LabelMode::kSurjective, reduce);
            while (auto phi = stream.next())
                out.push_back(phi->labels);
            return out;
        },
        py::arg("n"), py::arg("d"), py::arg("reduce_label_symmetry") = true,
        "materialized list; desk-scale inputs only");

    m.def(
        "distinguishing_number",
        [](const dng::PermGroup& g, bool reduce, int threads) {
            return solve_dict(dng::distinguishing_number(g, make_options(reduce, threads)));
        },
        py::arg("g"), py::arg("reduce_label_symmetry") = true, py::arg("threads") = 1);
    m.def(
        "relative_distinguishing_number",
        [](const dng::PermGroup& g, const dng::PermGroup& h, bool reduce, int threads) {
            return solve_dict(
                dng::relative_distinguishing_number(g, h, make_options(reduce, threads)));
        },
        py::arg("g"), py::arg("h"), py::arg("reduce_label_symmetry") = true,
        py::arg("threads") = 1);
    m.def(
        "paper_upper_algorithm",
        [](const dng::PermGroup& g, const dng::PermGroup& h, bool reduce) {
            return solve_dict(dng::paper_upper_algorithm(g, h, make_options(reduce, 1)));
        },
        py::arg("g"), py::arg("h"), py::arg("reduce_label_symmetry") = true);
    m.def(
        "paper_lower_algorithm",
        [](const dng::PermGroup& g, const dng::PermGroup& h, bool reduce) {
            return solve_dict(dng::paper_lower_algorithm(g, h, make_options(reduce, 1)));
        },
        py::arg("g"), py::arg("h"), py::arg("reduce_label_symmetry") = true);

    m.def("tymoczko_bound",
          static_cast<int (*)(const dng::PermGroup&)>(&dng::tymoczko_bound), py::arg("g"));
    m.def(
        "gluck_expectation",
        [](const dng::PermGroup& g) -> py::object {
            auto v = dng::gluck_expectation(g);
            return v ? py::cast(*v) : py::none();
        },
        py::arg("g"));
    m.def(
        "motion_bound",
        [](const dng::PermGroup& g, const dng::PermGroup& h) {
            dng::MotionBound b = dng::motion_bound(g, h);
            py::dict out;
            out["base"] = b.base_value;
            out["t"] = b.t;
            out["bound"] = b.bound;
            out["labeling"] = b.labeling.labels;
            out["verified"] = b.verified;
            return out;
        },
        py::arg("g"), py::arg("h"));
    m.def(
        "theorem_bound_maximal",
        [](const dng::PermGroup& g) {
            dng::ConstructedBound b = dng::theorem22_bound(g);
            py::dict out;
            out["c"] = b.c;
            out["bound"] = b.bound;
            out["labeling"] = b.labeling.labels;
            out["verified"] = b.verified;
            return out;
        },
        py::arg("g"), "fresh label on orbit representatives over the maximal subgroups");
    m.def(
        "theorem_bound_stabilizer",
        [](const dng::PermGroup& g) {
            dng::ConstructedBound b = dng::corollary23_bound(g);
            py::dict out;
            out["c"] = b.c;
            out["bound"] = b.bound;
            out["labeling"] = b.labeling.labels;
            out["verified"] = b.verified;
            return out;
        },
        py::arg("g"), "fresh label on orbit representatives over their pointwise stabilizer");

    py::class_<dng::Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return dng::make_graph(n, edges);
             }),
             py::arg("vertex_count"), py::arg("edges"))
        .def_readonly("vertex_count", &dng::Graph::vertex_count)
        .def_readonly("edges", &dng::Graph::edges);
    m.def("cycle_graph", &dng::cycle_graph, py::arg("n"));
    m.def("path_graph", &dng::path_graph, py::arg("n"));
    m.def("complete_graph", &dng::complete_graph, py::arg("n"));
    m.def("automorphism_group", &dng::automorphism_group, py::arg("g"),
          py::arg("order_cap") = dng::kDefaultOrderCap);
    m.def(
        "graph_distinguishing_number",
        [](const dng::Graph& g) { return solve_dict(dng::graph_distinguishing_number(g)); },
        py::arg("g"));

    m.def("catalog_names", [] {
        std::vector<std::string> names;
        for (const auto& e : dng::build_catalog())
            names.push_back(e.name);
        return names;
    });
    m.def(
        "catalog_group",
        [](const std::string& name) {
            auto entries = dng::build_catalog();
            auto entry = dng::find_entry(entries, name);
            if (!entry)
                throw dng::InputError("unknown catalog entry \"" + name + "\"");
            return entry->build();
        },
        py::arg("name"));
    m.def(
        "catalog_subgroup",
        [](const std::string& name, const std::string& label) {
            auto entries = dng::build_catalog();
            auto entry = dng::find_entry(entries, name);
            if (!entry)
                throw dng::InputError("unknown catalog entry \"" + name + "\"");
            auto sub = entry->build_subgroup(label);
            if (!sub)
                throw dng::InputError("unknown subgroup label \"" + label + "\"");
            return *sub;
        },
        py::arg("name"), py::arg("label"));
    m.def(
        "run_audit",
        [](bool slow, const std::vector<std::string>& entry_filter) {
            dng::AuditOptions opts;
            opts.slow = slow;
            opts.entry_filter = entry_filter;
            auto records = dng::run_audit(dng::build_catalog(), opts);
            return dng::audit_report_json(records, false).dump(2);
        },
        py::arg("slow") = false, py::arg("entries") = std::vector<std::string>{},
        "JSON report string of audited claims");
}
