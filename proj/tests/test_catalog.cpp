#include <doctest.h>

#include <algorithm>
#include <set>

#include "dng/audit.hpp"
#include "dng/bounds.hpp"

using dng::CatalogEntry;

namespace {

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = dng::build_catalog();
    return entries;
}

const CatalogEntry& entry(const std::string& name) {
    auto found = dng::find_entry(catalog(), name);
    REQUIRE(found.has_value());
    static CatalogEntry keep;
    keep = *found;
    return keep;
}

} // namespace

TEST_CASE("builders produce the declared orders") {
    for (const auto& e : catalog()) {
        CAPTURE(e.name);
        dng::PermGroup g = e.build();
        CHECK(g.order() == e.declared_order);
        CHECK(g.degree() == e.degree);
        for (const auto& ev : e.expected)
            CHECK_FALSE(ev.claimed.empty());
    }
}

TEST_CASE("required members are present") {
    std::set<std::string> names;
    for (const auto& e : catalog())
        names.insert(e.name);
    for (int n = 3; n <= 12; ++n) {
        CHECK(names.contains("C" + std::to_string(n) + "-rotation"));
        CHECK(names.contains("D" + std::to_string(n)));
    }
    for (const char* name : {"S3-natural", "S4-natural", "S5-natural", "A4-natural",
                             "A5-natural", "V4-regular", "C6-regular", "Q8-regular",
                             "D4-regular", "F21-on-7", "C2-on-4"})
        CHECK(names.contains(name));
}

TEST_CASE("family structure checks") {
    CHECK(entry("F21-on-7").build().order() == 21);
    CHECK_FALSE(entry("F21-on-7").build().is_abelian());

    dng::PermGroup q8 = entry("Q8-regular").build();
    CHECK(q8.order() == 8);
    CHECK_FALSE(q8.is_abelian());
    int involutions = 0;
    for (const auto& e : q8.elements())
        if (!e.is_identity() && dng::compose(e, e).is_identity())
            ++involutions;
    CHECK(involutions == 1); // the quaternion signature

    dng::PermGroup v4 = entry("V4-regular").build();
    CHECK(v4.order() == 4);
    CHECK(dng::orbits(v4).size() == 1); // regular, hence transitive
    for (const auto& e : v4.elements())
        if (!e.is_identity())
            CHECK(e.moved_points().size() == 4);

    dng::PermGroup d4reg = entry("D4-regular").build();
    CHECK(d4reg.degree() == 8);
    CHECK(d4reg.order() == 8);
    CHECK_FALSE(d4reg.is_abelian());
}

TEST_CASE("declared subgroups really are subgroups") {
    for (const auto& e : catalog()) {
        if (e.slow)
            continue;
        dng::PermGroup g = e.build();
        for (const auto& spec : e.subgroups) {
            CAPTURE(e.name);
            CAPTURE(spec.label);
            auto h = e.build_subgroup(spec.label);
            REQUIRE(h.has_value());
            CHECK(dng::is_subgroup(*h, g));
        }
        CHECK_FALSE(e.build_subgroup("no-such-label").has_value());
        CHECK(e.build_subgroup("trivial")->order() == 1);
        CHECK(e.build_subgroup("self")->same_group_as(g));
    }
}

TEST_CASE("named pairs from the inventory exist") {
    CHECK(entry("S3-natural").build_subgroup("An")->order() == 3);
    CHECK(entry("S3-natural").build_subgroup("C2")->order() == 2);
    CHECK(entry("S4-natural").build_subgroup("An")->order() == 12);
    CHECK(entry("S4-natural").build_subgroup("V4")->order() == 4);
    CHECK(entry("S4-natural").build_subgroup("D4")->order() == 8);
    CHECK(entry("D6").build_subgroup("D3")->order() == 6);
    CHECK(entry("D12").build_subgroup("D4")->order() == 8);
}

TEST_CASE("slow entries close to the right orders") {
    CHECK(entry("M11-natural").build().order() == 7920);
    CHECK(entry("M12-natural").build().order() == 95040);
}

TEST_CASE("audit covers every claim and stays deterministic") {
    dng::AuditOptions opts;
    auto records = dng::run_audit(catalog(), opts);

    std::set<std::string> seen;
    for (const auto& r : records)
        seen.insert(r.claim_id);
    for (const auto& id : dng::default_claim_ids()) {
        CAPTURE(id);
        CHECK(seen.contains(id));
    }

    auto again = dng::run_audit(catalog(), opts);
    CHECK(dng::audit_report_json(records).dump(2) == dng::audit_report_json(again).dump(2));

    // sorted canonically
    for (std::size_t i = 1; i < records.size(); ++i) {
        auto key = [](const dng::AuditRecord& r) {
            return std::make_pair(r.instance, r.claim_id);
        };
        CHECK(key(records[i - 1]) <= key(records[i]));
    }
}

TEST_CASE("audit verdicts land where expected") {
    dng::AuditOptions opts;
    auto records = dng::run_audit(catalog(), opts);

    auto find = [&](const std::string& claim, const std::string& instance)
        -> const dng::AuditRecord* {
        for (const auto& r : records)
            if (r.claim_id == claim && r.instance == instance)
                return &r;
        return nullptr;
    };

    // the descending loop overshoots when H = G has several orbits
    const auto* lower = find("Algo3-lower", "C2-on-4:self-pair");
    REQUIRE(lower != nullptr);
    CHECK(lower->verdict == "refuted");
    CHECK(lower->computed["algorithm"] == 3);
    CHECK(lower->computed["exact"] == 1);

    // the derived-subgroup value claim fails on the natural symmetric action
    const auto* derived = find("Cor3.6", "S3-natural:An");
    REQUIRE(derived != nullptr);
    CHECK(derived->verdict == "refuted");
    CHECK(derived->computed["relative"] == 3);
    CHECK(derived->claimed == 2);
    CHECK_FALSE(derived->witness.empty());

    // claims backed by sound proofs never refute
    for (const auto& r : records) {
        CAPTURE(r.claim_id);
        CAPTURE(r.instance);
        for (const char* sound :
             {"Thm1.1", "Thm1.2", "Thm1.3", "Gluck", "Thm2.2", "Cor2.3", "Thm2.4",
              "Cor2.5", "Cor2.6", "Lemma3.1", "Cor3.2", "Lemma3.3", "Algo3-upper",
              "Prop3.9", "Cor3.8"})
            if (r.claim_id == sound)
                CHECK(r.verdict != "refuted");
    }

    // no instance-table mistakes: chains nest, products close
    for (const auto& r : records)
        if (r.verdict == "not-applicable") {
            CAPTURE(r.claim_id);
            CAPTURE(r.instance);
            CHECK(r.notes.find("do not nest") == std::string::npos);
            CHECK(r.notes.find("does not lie") == std::string::npos);
        }
}

TEST_CASE("audit honors the entry filter") {
    dng::AuditOptions opts;
    opts.entry_filter = {"S3-natural"};
    auto records = dng::run_audit(catalog(), opts);
    CHECK_FALSE(records.empty());
    for (const auto& r : records)
        CHECK(r.instance.rfind("S3-natural", 0) == 0);
}
