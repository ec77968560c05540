// dng: exact distinguishing numbers of finite permutation group actions,
// constructive upper bounds, a small-graph front end, and a claim audit over
// the built-in catalog. Machine-readable JSON mirrors every command.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dng/audit.hpp"
#include "dng/bounds.hpp"
#include "dng/graph.hpp"

namespace {

using dng::PermGroup;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCapability = 3;
constexpr int kExitRefuted = 4;

int env_threads() {
    const char* raw = std::getenv("DNG_THREADS");
    if (!raw)
        return 1;
    int value = std::atoi(raw);
    return value > 0 ? value : 1;
}

struct GroupSource {
    std::string gens;    // inline cycles or a file path
    int degree = 0;      // required for inline gens
    std::string catalog; // catalog entry name
};

// Splits "(1 2 3),(1 2)" at commas outside parentheses.
std::vector<std::string> split_cycle_list(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    int depth = 0;
    for (char c : text) {
        if (c == '(')
            ++depth;
        if (c == ')')
            --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty())
        parts.push_back(current);
    return parts;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw dng::InputError("cannot read file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

PermGroup group_from_spec(const std::string& gens, int degree, std::uint64_t cap) {
    if (std::filesystem::exists(gens))
        return dng::parse_group_file(read_file(gens), cap);
    if (degree < 1)
        throw dng::InputError("--degree is required with inline generators; the degree "
                              "is never inferred");
    std::vector<dng::Permutation> parsed;
    for (const auto& part : split_cycle_list(gens))
        parsed.push_back(dng::parse_cycles(part, degree));
    if (parsed.empty())
        throw dng::InputError("no generators given");
    return PermGroup::close(parsed, cap);
}

ordered_json solve_json(const dng::SolveResult& r, bool timing) {
    ordered_json out;
    out["value"] = r.value;
    out["witness"] = dng::to_label_string(r.witness);
    out["examined"] = r.examined;
    out["elapsed_ms"] = timing ? ordered_json(r.elapsed_ms) : ordered_json(nullptr);
    return out;
}

void deliver(const ordered_json& payload, const std::string& out_path,
             const std::string& summary) {
    std::cout << summary << "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out)
            throw dng::InputError("cannot write " + out_path);
        out << payload.dump(2) << "\n";
    } else {
        std::cout << payload.dump(2) << "\n";
    }
}

std::vector<int> one_based(const std::vector<int>& points) {
    std::vector<int> out;
    out.reserve(points.size());
    for (int p : points)
        out.push_back(p + 1);
    return out;
}

struct CommonFlags {
    std::string out_path;
    bool oracle = false;
    bool timing = false;
    std::uint64_t order_cap = dng::kDefaultOrderCap;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write JSON to this file");
        cmd->add_flag("--oracle", oracle,
                      "disable label-symmetry reduction and scan levels fully");
        cmd->add_flag("--timing", timing, "include elapsed_ms in JSON output");
        cmd->add_option("--closure-cap", order_cap, "group order cap");
    }

    dng::SolveOptions solve_options() const {
        dng::SolveOptions opts;
        opts.reduce_label_symmetry = !oracle;
        opts.full_level_scan = oracle;
        opts.threads = env_threads();
        return opts;
    }
};

PermGroup resolve_group(const GroupSource& src, const CommonFlags& flags) {
    if (!src.catalog.empty() && !src.gens.empty())
        throw dng::InputError("give exactly one group source (--gens or --catalog)");
    if (!src.catalog.empty()) {
        auto entries = dng::build_catalog();
        auto entry = dng::find_entry(entries, src.catalog);
        if (!entry)
            throw dng::InputError("unknown catalog entry \"" + src.catalog + "\"");
        return entry->build(flags.order_cap);
    }
    if (src.gens.empty())
        throw dng::InputError("a group source is required (--gens or --catalog)");
    return group_from_spec(src.gens, src.degree, flags.order_cap);
}

PermGroup resolve_subgroup(const PermGroup& g, const std::string& sub_gens,
                           const std::string& catalog_entry, const std::string& sub_label,
                           const CommonFlags& flags) {
    if (!sub_label.empty()) {
        if (catalog_entry.empty())
            throw dng::InputError("--sub needs --catalog");
        auto entries = dng::build_catalog();
        auto entry = dng::find_entry(entries, catalog_entry);
        auto sub = entry->build_subgroup(sub_label, flags.order_cap);
        if (!sub)
            throw dng::InputError("unknown subgroup label \"" + sub_label + "\" in entry " +
                                  catalog_entry);
        return *sub;
    }
    if (sub_gens.empty())
        throw dng::InputError("a subgroup source is required (--sub-gens or --sub)");
    return group_from_spec(sub_gens, g.degree(), flags.order_cap);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"distinguishing numbers of permutation group actions"};
    app.require_subcommand(1);

    // dist
    auto* dist = app.add_subcommand("dist", "exact distinguishing number");
    GroupSource dist_src;
    CommonFlags dist_flags;
    dist->add_option("--gens", dist_src.gens, "group generators (file or inline)");
    dist->add_option("--degree", dist_src.degree, "point count for inline generators");
    dist->add_option("--catalog", dist_src.catalog, "catalog entry name");
    dist_flags.add_options(dist);

    // dist-rel
    auto* rel = app.add_subcommand("dist-rel", "relative distinguishing number");
    GroupSource rel_src;
    CommonFlags rel_flags;
    std::string rel_sub_gens, rel_sub_label, rel_algo = "exact";
    rel->add_option("--gens", rel_src.gens, "group generators (file or inline)");
    rel->add_option("--degree", rel_src.degree, "point count for inline generators");
    rel->add_option("--catalog", rel_src.catalog, "catalog entry name");
    rel->add_option("--sub-gens", rel_sub_gens, "subgroup generators (file or inline)");
    rel->add_option("--sub", rel_sub_label, "catalog subgroup label");
    rel->add_option("--algo", rel_algo, "exact | paper-upper | paper-lower")
        ->check(CLI::IsMember({"exact", "paper-upper", "paper-lower"}));
    rel_flags.add_options(rel);

    // bounds
    auto* bounds = app.add_subcommand("bounds", "bound constructions");
    GroupSource bounds_src;
    CommonFlags bounds_flags;
    std::string bounds_method, bounds_sub_gens, bounds_sub_label;
    std::uint64_t bounds_subgroup_cap = dng::kDefaultSubgroupCap;
    bounds->add_option("--method", bounds_method, "tymoczko | motion | maximal | stabilizer | gluck")
        ->required()
        ->check(CLI::IsMember({"tymoczko", "motion", "maximal", "stabilizer", "gluck"}));
    bounds->add_option("--gens", bounds_src.gens, "group generators (file or inline)");
    bounds->add_option("--degree", bounds_src.degree, "point count for inline generators");
    bounds->add_option("--catalog", bounds_src.catalog, "catalog entry name");
    bounds->add_option("--sub-gens", bounds_sub_gens, "subgroup for the motion method");
    bounds->add_option("--sub", bounds_sub_label, "catalog subgroup label");
    bounds->add_option("--subgroup-cap", bounds_subgroup_cap, "subgroup enumeration cap");
    bounds_flags.add_options(bounds);

    // motion
    auto* motion = app.add_subcommand("motion", "moved-point sets and group motion");
    GroupSource motion_src;
    CommonFlags motion_flags;
    motion->add_option("--gens", motion_src.gens, "group generators (file or inline)");
    motion->add_option("--degree", motion_src.degree, "point count for inline generators");
    motion->add_option("--catalog", motion_src.catalog, "catalog entry name");
    motion_flags.add_options(motion);

    // good-partition
    auto* partition = app.add_subcommand("good-partition",
                                         "minimum good partition of labeling preservers");
    GroupSource part_src;
    CommonFlags part_flags;
    std::string part_labeling;
    partition->add_option("--gens", part_src.gens, "group generators (file or inline)");
    partition->add_option("--degree", part_src.degree, "point count for inline generators");
    partition->add_option("--catalog", part_src.catalog, "catalog entry name");
    partition->add_option("--labeling", part_labeling, "labeling such as \"1,2,2\"")
        ->required();
    part_flags.add_options(partition);

    // graph dist
    auto* graph = app.add_subcommand("graph", "graph front end");
    auto* graph_dist = graph->add_subcommand("dist", "distinguishing number of a graph");
    CommonFlags graph_flags;
    std::string graph_edges, graph_family;
    graph_dist->add_option("--edges", graph_edges, "edge list file");
    graph_dist->add_option("--family", graph_family, "cycle:N | path:N | complete:N");
    graph_flags.add_options(graph_dist);

    // group info
    auto* group = app.add_subcommand("group", "group utilities");
    auto* group_info = group->add_subcommand("info", "order, orbits, generators");
    GroupSource info_src;
    CommonFlags info_flags;
    group_info->add_option("--gens", info_src.gens, "group generators (file or inline)");
    group_info->add_option("--degree", info_src.degree, "point count for inline generators");
    group_info->add_option("--catalog", info_src.catalog, "catalog entry name");
    info_flags.add_options(group_info);

    // audit
    auto* audit = app.add_subcommand("audit", "audit the published claims on the catalog");
    CommonFlags audit_flags;
    std::string audit_entries;
    bool audit_slow = false, audit_refuted_ok = false;
    audit->add_option("--entries", audit_entries, "comma-separated entry names");
    audit->add_flag("--slow", audit_slow, "include the slow Mathieu entries");
    audit->add_flag("--refuted-ok", audit_refuted_ok,
                    "exit 0 even when refuted records are present");
    audit_flags.add_options(audit);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*dist) {
            PermGroup g = resolve_group(dist_src, dist_flags);
            dng::SolveResult r = dng::distinguishing_number(g, dist_flags.solve_options());
            deliver(solve_json(r, dist_flags.timing), dist_flags.out_path,
                    "D = " + std::to_string(r.value) + " with witness " +
                        dng::to_label_string(r.witness));
            return kExitOk;
        }
        if (*rel) {
            PermGroup g = resolve_group(rel_src, rel_flags);
            PermGroup h =
                resolve_subgroup(g, rel_sub_gens, rel_src.catalog, rel_sub_label, rel_flags);
            dng::SolveOptions opts = rel_flags.solve_options();
            dng::SolveResult r;
            if (rel_algo == "paper-upper")
                r = dng::paper_upper_algorithm(g, h, opts);
            else if (rel_algo == "paper-lower")
                r = dng::paper_lower_algorithm(g, h, opts);
            else
                r = dng::relative_distinguishing_number(g, h, opts);
            deliver(solve_json(r, rel_flags.timing), rel_flags.out_path,
                    rel_algo + " value = " + std::to_string(r.value) + " with witness " +
                        dng::to_label_string(r.witness));
            return kExitOk;
        }
        if (*bounds) {
            PermGroup g = resolve_group(bounds_src, bounds_flags);
            dng::SolveOptions opts = bounds_flags.solve_options();
            int exact = dng::distinguishing_number(g, opts).value;
            ordered_json out;
            out["method"] = bounds_method;
            std::string summary;
            if (bounds_method == "tymoczko") {
                int b = dng::tymoczko_bound(g);
                out["bound"] = b;
                out["exact"] = exact;
                out["labeling"] = nullptr;
                out["verified"] = (exact <= b);
                summary = "bound " + std::to_string(b) + ", exact " + std::to_string(exact);
            } else if (bounds_method == "gluck") {
                auto expect = dng::gluck_expectation(g);
                out["bound"] = expect ? ordered_json(*expect) : ordered_json(nullptr);
                out["exact"] = exact;
                out["labeling"] = nullptr;
                out["verified"] = expect ? (exact == *expect) : true;
                summary = expect ? "odd order, expected 2, exact " + std::to_string(exact)
                                 : "not applicable: even order";
            } else if (bounds_method == "motion") {
                PermGroup h = bounds_sub_gens.empty() && bounds_sub_label.empty()
                                  ? PermGroup::trivial(g.degree())
                                  : resolve_subgroup(g, bounds_sub_gens, bounds_src.catalog,
                                                     bounds_sub_label, bounds_flags);
                dng::MotionBound b = dng::motion_bound(g, h, opts);
                out["bound"] = b.bound;
                out["exact"] = exact;
                out["labeling"] = dng::to_label_string(b.labeling);
                out["verified"] = b.verified;
                out["t"] = b.t;
                out["base"] = b.base_value;
                summary = "bound " + std::to_string(b.bound) + " = " +
                          std::to_string(b.base_value) + "+" + std::to_string(b.t) +
                          ", exact " + std::to_string(exact);
            } else {
                dng::ConstructedBound b =
                    bounds_method == "maximal"
                        ? dng::theorem22_bound(g, std::nullopt, opts, bounds_subgroup_cap)
                        : dng::corollary23_bound(g, opts);
                out["bound"] = b.bound;
                out["exact"] = exact;
                out["labeling"] = dng::to_label_string(b.labeling);
                out["verified"] = b.verified;
                out["c"] = b.c;
                summary = "bound " + std::to_string(b.bound) + ", exact " +
                          std::to_string(exact);
            }
            deliver(out, bounds_flags.out_path, summary);
            return kExitOk;
        }
        if (*motion) {
            PermGroup g = resolve_group(motion_src, motion_flags);
            dng::MotionData data = dng::motion_data(g);
            ordered_json out;
            out["group_motion"] = data.group_motion;
            ordered_json moved = ordered_json::array();
            for (std::size_t i = 0; i < g.elements().size(); ++i) {
                if (g.elements()[i].is_identity())
                    continue;
                ordered_json item;
                item["element"] = dng::to_cycle_string(g.elements()[i]);
                item["points"] = one_based(data.moved[i]);
                moved.push_back(std::move(item));
            }
            out["moved"] = std::move(moved);
            deliver(out, motion_flags.out_path,
                    "group motion = " + std::to_string(data.group_motion));
            return kExitOk;
        }
        if (*partition) {
            PermGroup g = resolve_group(part_src, part_flags);
            dng::Labeling phi = dng::parse_labeling(part_labeling);
            std::vector<dng::Permutation> sigmas = dng::preservers_of(g, phi);
            ordered_json out;
            ordered_json names = ordered_json::array();
            for (const auto& s : sigmas)
                names.push_back(dng::to_cycle_string(s));
            out["preservers"] = std::move(names);
            if (sigmas.empty()) {
                out["t"] = 0;
                out["witnesses"] = ordered_json::array();
                out["blocks"] = ordered_json::array();
                deliver(out, part_flags.out_path, "no non-identity preservers; t = 0");
                return kExitOk;
            }
            dng::GoodPartition part = dng::min_good_partition(sigmas);
            out["t"] = part.size();
            out["witnesses"] = one_based(part.witnesses);
            ordered_json blocks = ordered_json::array();
            for (const auto& block : part.blocks)
                blocks.push_back(one_based(block));
            out["blocks"] = std::move(blocks);
            deliver(out, part_flags.out_path, "t = " + std::to_string(part.size()));
            return kExitOk;
        }
        if (*graph_dist) {
            if (graph_edges.empty() == graph_family.empty())
                throw dng::InputError("give exactly one of --edges or --family");
            dng::Graph gr = graph_edges.empty()
                                ? dng::parse_graph_family(graph_family)
                                : dng::parse_graph_file(read_file(graph_edges));
            PermGroup aut = dng::automorphism_group(gr, graph_flags.order_cap);
            dng::SolveResult r = dng::distinguishing_number(aut, graph_flags.solve_options());
            ordered_json out;
            out["vertices"] = gr.vertex_count;
            out["edges"] = gr.edges.size();
            out["aut_order"] = aut.order();
            ordered_json solved = solve_json(r, graph_flags.timing);
            for (auto& [key, value] : solved.items())
                out[key] = value;
            deliver(out, graph_flags.out_path,
                    "D = " + std::to_string(r.value) + " (automorphism group of order " +
                        std::to_string(aut.order()) + ")");
            return kExitOk;
        }
        if (*group_info) {
            PermGroup g = resolve_group(info_src, info_flags);
            ordered_json out;
            out["degree"] = g.degree();
            out["order"] = g.order();
            ordered_json gens = ordered_json::array();
            for (const auto& p : g.generators())
                gens.push_back(dng::to_cycle_string(p));
            out["generators"] = std::move(gens);
            ordered_json orbs = ordered_json::array();
            for (const auto& orbit : dng::orbits(g))
                orbs.push_back(one_based(orbit));
            out["orbits"] = std::move(orbs);
            out["abelian"] = g.is_abelian();
            deliver(out, info_flags.out_path,
                    "order " + std::to_string(g.order()) + " on " +
                        std::to_string(g.degree()) + " points");
            return kExitOk;
        }
        if (*audit) {
            dng::AuditOptions opts;
            opts.slow = audit_slow;
            opts.solve = audit_flags.solve_options();
            if (!audit_entries.empty()) {
                std::istringstream in(audit_entries);
                std::string name;
                while (std::getline(in, name, ','))
                    if (!name.empty())
                        opts.entry_filter.push_back(name);
            }
            auto records = dng::run_audit(dng::build_catalog(), opts);
            ordered_json report = dng::audit_report_json(records, audit_flags.timing);
            std::size_t confirmed = 0, refuted = 0, na = 0;
            for (const auto& r : records) {
                if (r.verdict == "confirmed")
                    ++confirmed;
                else if (r.verdict == "refuted")
                    ++refuted;
                else
                    ++na;
            }
            deliver(report, audit_flags.out_path,
                    std::to_string(records.size()) + " records: " +
                        std::to_string(confirmed) + " confirmed, " + std::to_string(refuted) +
                        " refuted, " + std::to_string(na) + " not applicable");
            if (refuted > 0 && !audit_refuted_ok)
                return kExitRefuted;
            return kExitOk;
        }
    } catch (const dng::CapabilityError& e) {
        std::cerr << "capability: " << e.what() << "\n";
        return kExitCapability;
    } catch (const dng::InputError& e) {
        std::cerr << "input: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
