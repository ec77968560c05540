#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dng/group.hpp"

namespace dng {

// An assignment of labels {1..d} to the points {0..n-1}.
struct Labeling {
    std::vector<int> labels; // labels[i] in {1..label_count}, point order
    int label_count = 1;

    Labeling() = default;
    Labeling(std::vector<int> labels_, int label_count_);

    int degree() const { return static_cast<int>(labels.size()); }
    // Every value in {1..label_count} occurs at least once.
    bool is_surjective() const;
};

// Comma-separated labels in point order, e.g. "1,2,2".
std::string to_label_string(const Labeling& l);
Labeling parse_labeling(const std::string& text);

// True iff sigma maps every point to an equally labeled point.
bool preserves(const Permutation& sigma, const Labeling& phi);

// The subgroup of all elements of G preserving phi. The returned element set
// is verified to be closed under the group operation.
PermGroup preserving_subgroup(const PermGroup& g, const Labeling& phi);

// True iff every labeling-preserving element of G lies in H, i.e.
// preserving_subgroup(G, phi) is contained in H. For the absolute notion pass
// H = the trivial group. Implemented as a direct scan of G \ H.
bool is_distinguishing(const PermGroup& g, const Labeling& phi, const PermGroup& h);

// Number of onto functions from an n-point set to {1..d}, by inclusion-
// exclusion: sum_j (-1)^j C(d,j) (d-j)^n. Zero when d > n. Throws on
// overflow past 64 bits.
std::uint64_t count_surjective_labelings(int n, int d);

enum class LabelMode { kSurjective, kAll };

// Streams labelings of n points with labels in {1..d}, each exactly once, in
// lexicographic order of the label array. With reduce_label_symmetry, yields
// exactly one representative per orbit of the label-permuting action: the
// canonical form in which labels appear in first-occurrence order 1,2,3,...
// Labelings are generated on demand, never materialized as a list.
class LabelingStream {
public:
    LabelingStream(int n, int d, LabelMode mode, bool reduce_label_symmetry);

    // Next labeling, or nullopt when exhausted.
    std::optional<Labeling> next();

private:
    bool fill_from(int pos);
    bool advance();
    bool feasible(int pos, int value) const;

    int n_;
    int d_;
    LabelMode mode_;
    bool reduced_;
    bool started_ = false;
    bool done_ = false;
    std::vector<int> a_;        // current labels
    std::vector<int> max_pfx_;  // max_pfx_[i] = max of a_[0..i-1] (0 for i=0)
    std::vector<int> use_count_; // occurrences of each label in a_[0..pos)
    int used_ = 0;               // distinct labels among a_[0..pos)
};

} // namespace dng
