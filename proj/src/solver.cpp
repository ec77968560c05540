#include "dng/solver.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace dng {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// A level predicate tests one labeling. `cursor` is per-worker scratch that
// remembers which element rejected the previous labeling; trying it first
// makes consecutive rejections near-constant time.
class PreserversInside {
public:
    PreserversInside(const PermGroup& g, const PermGroup& h) : elems_(&g.elements()) {
        for (std::size_t i = 0; i < elems_->size(); ++i) {
            const Permutation& e = (*elems_)[i];
            if (!e.is_identity() && !h.contains(e))
                outside_.push_back(static_cast<std::uint32_t>(i));
        }
    }

    bool operator()(const Labeling& phi, std::size_t& cursor) const {
        const std::size_t k = outside_.size();
        for (std::size_t step = 0; step < k; ++step) {
            std::size_t at = cursor + step;
            if (at >= k)
                at -= k;
            if (preserves((*elems_)[outside_[at]], phi)) {
                cursor = at;
                return false;
            }
        }
        return true;
    }

private:
    const std::vector<Permutation>* elems_;
    std::vector<std::uint32_t> outside_;
};

class SubgroupPreserves {
public:
    explicit SubgroupPreserves(const PermGroup& h) : elems_(&h.elements()) {}

    bool operator()(const Labeling& phi, std::size_t& cursor) const {
        const std::size_t k = elems_->size();
        for (std::size_t step = 0; step < k; ++step) {
            std::size_t at = cursor + step;
            if (at >= k)
                at -= k;
            if (!preserves((*elems_)[at], phi)) {
                cursor = at;
                return false;
            }
        }
        return true;
    }

private:
    const std::vector<Permutation>* elems_;
};

struct LevelOutcome {
    std::uint64_t total = 0;       // labelings in the level (scanned portion)
    std::uint64_t qualifying = 0;  // only meaningful with full scans
    std::optional<Labeling> first; // first qualifying labeling
    std::uint64_t first_index = 0; // 0-based position of `first` in the level
};

template <typename Pred>
LevelOutcome scan_level_sequential(int n, int d, bool reduced, bool stop_at_first,
                                   const Pred& pred) {
    LevelOutcome out;
    LabelingStream stream(n, d, LabelMode::kSurjective, reduced);
    std::size_t cursor = 0;
    while (auto phi = stream.next()) {
        std::uint64_t index = out.total++;
        if (pred(*phi, cursor)) {
            ++out.qualifying;
            if (!out.first) {
                out.first = std::move(*phi);
                out.first_index = index;
                if (stop_at_first)
                    return out;
            }
        }
    }
    return out;
}

template <typename Pred>
LevelOutcome scan_level_parallel(int n, int d, bool reduced, bool stop_at_first,
                                 const Pred& pred, int threads) {
    constexpr std::size_t kChunk = 512;
    LevelOutcome out;
    LabelingStream stream(n, d, LabelMode::kSurjective, reduced);
    std::vector<Labeling> buffer;
    buffer.reserve(kChunk * static_cast<std::size_t>(threads));
    std::vector<std::size_t> cursors(static_cast<std::size_t>(threads), 0);
    std::uint64_t base_index = 0;

    for (;;) {
        buffer.clear();
        while (buffer.size() < kChunk * static_cast<std::size_t>(threads)) {
            auto phi = stream.next();
            if (!phi)
                break;
            buffer.push_back(std::move(*phi));
        }
        if (buffer.empty())
            break;
        out.total += buffer.size();

        std::vector<std::vector<std::size_t>> hits(static_cast<std::size_t>(threads));
        auto worker = [&](int w) {
            std::size_t& cursor = cursors[static_cast<std::size_t>(w)];
            for (std::size_t i = static_cast<std::size_t>(w); i < buffer.size();
                 i += static_cast<std::size_t>(threads))
                if (pred(buffer[i], cursor))
                    hits[static_cast<std::size_t>(w)].push_back(i);
        };
        std::vector<std::thread> pool;
        for (int w = 1; w < threads; ++w)
            pool.emplace_back(worker, w);
        worker(0);
        for (auto& t : pool)
            t.join();

        std::vector<std::size_t> merged;
        for (const auto& h : hits)
            merged.insert(merged.end(), h.begin(), h.end());
        std::sort(merged.begin(), merged.end());
        out.qualifying += merged.size();
        if (!merged.empty() && !out.first) {
            out.first = buffer[merged.front()];
            out.first_index = base_index + merged.front();
            if (stop_at_first)
                return out;
        }
        base_index += buffer.size();
    }
    return out;
}

template <typename Pred>
LevelOutcome scan_level(int n, int d, const SolveOptions& opts, const Pred& pred) {
    bool stop = !opts.full_level_scan;
    if (opts.threads > 1)
        return scan_level_parallel(n, d, opts.reduce_label_symmetry, stop, pred,
                                   opts.threads);
    return scan_level_sequential(n, d, opts.reduce_label_symmetry, stop, pred);
}

// Canonical "examined" count for one level: everything scanned when the level
// missed or a full scan was requested, otherwise labelings up to and
// including the first hit regardless of how workers raced past it.
std::uint64_t level_examined(const LevelOutcome& out, const SolveOptions& opts) {
    if (out.first && !opts.full_level_scan)
        return out.first_index + 1;
    return out.total;
}

template <typename Pred>
SolveResult solve_ascending(const PermGroup& g, const Pred& pred, const SolveOptions& opts) {
    auto start = Clock::now();
    SolveResult result;
    for (int d = 1; d <= g.degree(); ++d) {
        LevelOutcome out = scan_level(g.degree(), d, opts, pred);
        result.examined += level_examined(out, opts);
        if (out.first) {
            result.value = d;
            result.witness = std::move(*out.first);
            result.elapsed_ms = ms_since(start);
            return result;
        }
    }
    throw std::logic_error("no distinguishing labeling up to the degree; "
                           "faithful actions always admit one");
}

void require_pair(const PermGroup& g, const PermGroup& h) {
    if (!is_subgroup(h, g))
        throw InputError("not a subgroup");
}

} // namespace

SolveResult distinguishing_number(const PermGroup& g, const SolveOptions& opts) {
    return solve_ascending(g, PreserversInside(g, PermGroup::trivial(g.degree())), opts);
}

SolveResult relative_distinguishing_number(const PermGroup& g, const PermGroup& h,
                                           const SolveOptions& opts) {
    require_pair(g, h);
    return solve_ascending(g, PreserversInside(g, h), opts);
}

SolveResult paper_upper_algorithm(const PermGroup& g, const PermGroup& h,
                                  const SolveOptions& opts) {
    require_pair(g, h);
    return solve_ascending(g, PreserversInside(g, h), opts);
}

SolveResult paper_lower_algorithm(const PermGroup& g, const PermGroup& h,
                                  const SolveOptions& opts) {
    require_pair(g, h);
    auto start = Clock::now();
    SubgroupPreserves pred(h);
    SolveResult result;
    for (int d = g.degree(); d >= 1; --d) {
        LevelOutcome out = scan_level(g.degree(), d, opts, pred);
        result.examined += level_examined(out, opts);
        if (out.first) {
            result.value = d;
            result.witness = std::move(*out.first);
            result.elapsed_ms = ms_since(start);
            return result;
        }
    }
    throw std::logic_error("descending scan found no level; the constant "
                           "labeling is preserved by every element");
}

LevelScanResult scan_relative_level(const PermGroup& g, const PermGroup& h, int d,
                                    const SolveOptions& opts) {
    require_pair(g, h);
    SolveOptions full = opts;
    full.full_level_scan = true;
    LevelOutcome out = scan_level(g.degree(), d, full, PreserversInside(g, h));
    return LevelScanResult{out.total, out.qualifying, std::move(out.first)};
}

} // namespace dng
