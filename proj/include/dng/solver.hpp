#pragma once

#include <cstdint>
#include <optional>

#include "dng/labeling.hpp"

namespace dng {

struct SolveOptions {
    // Enumerate one representative per label-permutation orbit. Exact by the
    // equivariance of the preserving subgroup; turn off for oracle runs.
    bool reduce_label_symmetry = true;
    // Scan every labeling of a level even after a success (oracle mode);
    // the reported witness is still the first qualifying labeling.
    bool full_level_scan = false;
    // Worker count for level scans; results are identical for any value.
    int threads = 1;
};

struct SolveResult {
    int value = 0;
    Labeling witness;
    // Labelings up to and including the witness in canonical enumeration
    // order (the whole enumeration when full_level_scan is set). Independent
    // of the thread count.
    std::uint64_t examined = 0;
    double elapsed_ms = 0.0;
};

// Minimal d such that some surjective d-labeling is preserved only by the
// identity. The witness satisfies is_distinguishing(G, witness, trivial).
SolveResult distinguishing_number(const PermGroup& g, const SolveOptions& opts = {});

// Minimal d such that some surjective d-labeling has all its preservers in H.
// Requires is_subgroup(h, g).
SolveResult relative_distinguishing_number(const PermGroup& g, const PermGroup& h,
                                           const SolveOptions& opts = {});

// The first published search loop, as written: d ascending from 1 to |X|,
// all surjective d-labelings, collect d whenever the preserving subgroup lies
// in H, report the minimum (early exit at the first qualifying level, which
// is equivalent). Coincides with relative_distinguishing_number by
// definition; the audit asserts the coincidence instance by instance.
SolveResult paper_upper_algorithm(const PermGroup& g, const PermGroup& h,
                                  const SolveOptions& opts = {});

// The second published search loop, as written: d descending from |X| to 1,
// collect d whenever some surjective d-labeling is preserved by all of H,
// report the maximum. Advertised as a lower bound for the relative
// distinguishing number; the audit records a per-instance verdict instead of
// assuming the claim. Structurally the result equals the number of H-orbits.
SolveResult paper_lower_algorithm(const PermGroup& g, const PermGroup& h,
                                  const SolveOptions& opts = {});

struct LevelScanResult {
    std::uint64_t tested = 0;
    std::uint64_t qualifying = 0;
    std::optional<Labeling> first;
};

// Scans every surjective d-labeling (reduced or not, per opts) and counts
// those whose preservers under G lie in H. Used by minimality oracles.
LevelScanResult scan_relative_level(const PermGroup& g, const PermGroup& h, int d,
                                    const SolveOptions& opts = {});

} // namespace dng
