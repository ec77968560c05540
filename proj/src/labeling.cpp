#include "dng/labeling.hpp"

#include <algorithm>
#include <sstream>

namespace dng {

Labeling::Labeling(std::vector<int> labels_, int label_count_)
    : labels(std::move(labels_)), label_count(label_count_) {
    if (labels.empty())
        throw InputError("labeling must cover at least one point");
    if (label_count < 1)
        throw InputError("label count must be positive");
    for (int v : labels)
        if (v < 1 || v > label_count)
            throw InputError("label " + std::to_string(v) + " outside 1.." +
                             std::to_string(label_count));
}

bool Labeling::is_surjective() const {
    std::vector<char> seen(static_cast<std::size_t>(label_count) + 1, 0);
    int distinct = 0;
    for (int v : labels)
        if (!seen[static_cast<std::size_t>(v)]) {
            seen[static_cast<std::size_t>(v)] = 1;
            ++distinct;
        }
    return distinct == label_count;
}

std::string to_label_string(const Labeling& l) {
    std::ostringstream out;
    for (std::size_t i = 0; i < l.labels.size(); ++i) {
        if (i)
            out << ',';
        out << l.labels[i];
    }
    return out.str();
}

Labeling parse_labeling(const std::string& text) {
    std::vector<int> labels;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(token, &used);
            while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used])))
                ++used;
            if (used != token.size())
                throw std::invalid_argument("trailing");
            labels.push_back(v);
        } catch (const std::exception&) {
            throw InputError("bad label \"" + token + "\" in labeling \"" + text + "\"");
        }
    }
    if (labels.empty())
        throw InputError("empty labeling string");
    int max_label = *std::max_element(labels.begin(), labels.end());
    return Labeling(std::move(labels), max_label);
}

bool preserves(const Permutation& sigma, const Labeling& phi) {
    for (int i = 0; i < sigma.degree(); ++i)
        if (phi.labels[static_cast<std::size_t>(sigma(i))] !=
            phi.labels[static_cast<std::size_t>(i)])
            return false;
    return true;
}

PermGroup preserving_subgroup(const PermGroup& g, const Labeling& phi) {
    if (g.degree() != phi.degree())
        throw InputError("degree mismatch between group and labeling");
    std::vector<Permutation> kept;
    for (const auto& e : g.elements())
        if (preserves(e, phi))
            kept.push_back(e);
    // from_elements re-verifies closure, backing the subgroup claim
    return PermGroup::from_elements(std::move(kept));
}

bool is_distinguishing(const PermGroup& g, const Labeling& phi, const PermGroup& h) {
    if (g.degree() != phi.degree())
        throw InputError("degree mismatch between group and labeling");
    if (!is_subgroup(h, g))
        throw InputError("not a subgroup");
    for (const auto& e : g.elements()) {
        if (h.contains(e))
            continue;
        if (preserves(e, phi))
            return false;
    }
    return true;
}

std::uint64_t count_surjective_labelings(int n, int d) {
    if (n < 1 || d < 1)
        throw InputError("surjection count needs n >= 1 and d >= 1");
    if (d > n)
        return 0;
    // C(d, j) for j = 0..d
    std::vector<unsigned __int128> binom(static_cast<std::size_t>(d) + 1, 0);
    binom[0] = 1;
    for (int row = 1; row <= d; ++row)
        for (int j = row; j >= 1; --j)
            binom[static_cast<std::size_t>(j)] += binom[static_cast<std::size_t>(j - 1)];

    __int128 total = 0;
    for (int j = 0; j <= d; ++j) {
        unsigned __int128 power = 1;
        for (int e = 0; e < n; ++e)
            power *= static_cast<unsigned>(d - j);
        __int128 term = static_cast<__int128>(binom[static_cast<std::size_t>(j)] * power);
        total += (j % 2 == 0) ? term : -term;
    }
    if (total < 0 || total > static_cast<__int128>(UINT64_MAX))
        throw CapabilityError("surjection count overflows 64 bits for n=" +
                              std::to_string(n) + ", d=" + std::to_string(d));
    return static_cast<std::uint64_t>(total);
}

LabelingStream::LabelingStream(int n, int d, LabelMode mode, bool reduce_label_symmetry)
    : n_(n), d_(d), mode_(mode), reduced_(reduce_label_symmetry) {
    if (n < 1 || d < 1)
        throw InputError("labeling stream needs n >= 1 and d >= 1");
    a_.assign(static_cast<std::size_t>(n), 0);
    max_pfx_.assign(static_cast<std::size_t>(n) + 1, 0);
    use_count_.assign(static_cast<std::size_t>(d) + 1, 0);
}

bool LabelingStream::feasible(int pos, int value) const {
    if (mode_ != LabelMode::kSurjective)
        return true;
    int new_used = used_ + (use_count_[static_cast<std::size_t>(value)] == 0 ? 1 : 0);
    return d_ - new_used <= n_ - pos - 1;
}

bool LabelingStream::fill_from(int pos) {
    for (int i = pos; i < n_; ++i) {
        int limit = reduced_ ? std::min(d_, max_pfx_[static_cast<std::size_t>(i)] + 1) : d_;
        int chosen = 0;
        for (int v = 1; v <= limit; ++v)
            if (feasible(i, v)) {
                chosen = v;
                break;
            }
        if (chosen == 0)
            return false;
        a_[static_cast<std::size_t>(i)] = chosen;
        if (++use_count_[static_cast<std::size_t>(chosen)] == 1)
            ++used_;
        max_pfx_[static_cast<std::size_t>(i) + 1] =
            std::max(max_pfx_[static_cast<std::size_t>(i)], chosen);
    }
    return true;
}

bool LabelingStream::advance() {
    for (int i = n_ - 1; i >= 0; --i) {
        int old = a_[static_cast<std::size_t>(i)];
        if (--use_count_[static_cast<std::size_t>(old)] == 0)
            --used_;
        int limit = reduced_ ? std::min(d_, max_pfx_[static_cast<std::size_t>(i)] + 1) : d_;
        for (int v = old + 1; v <= limit; ++v) {
            if (!feasible(i, v))
                continue;
            a_[static_cast<std::size_t>(i)] = v;
            if (++use_count_[static_cast<std::size_t>(v)] == 1)
                ++used_;
            max_pfx_[static_cast<std::size_t>(i) + 1] =
                std::max(max_pfx_[static_cast<std::size_t>(i)], v);
            if (fill_from(i + 1))
                return true;
            // completion cannot fail once the prefix is feasible
            throw std::logic_error("labeling stream lost feasibility");
        }
    }
    return false;
}

std::optional<Labeling> LabelingStream::next() {
    if (done_)
        return std::nullopt;
    if (!started_) {
        started_ = true;
        if (!fill_from(0)) {
            done_ = true;
            return std::nullopt;
        }
    } else if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    return Labeling(a_, d_);
}

} // namespace dng
