#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "treebij/error.hpp"

namespace treebij {

using Label = int;

// Strictly increasing sequence of positive integer labels. May be empty (the
// empty doubly rooted tree needs an empty vertex set). Iteration is ascending.
class LabelSet {
public:
    LabelSet() = default;

    // Accepts labels in any order; rejects duplicates and non-positive values.
    explicit LabelSet(std::vector<Label> labels) : labels_(std::move(labels))
    {
        std::sort(labels_.begin(), labels_.end());
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (labels_[i] < 1)
                throw Error(Kind::InvalidLabelSet, "labels must be positive integers");
            if (i > 0 && labels_[i] == labels_[i - 1])
                throw Error(Kind::InvalidLabelSet,
                            "duplicate label " + std::to_string(labels_[i]));
        }
    }

    // {1, 2, ..., n}
    static LabelSet range(int n)
    {
        std::vector<Label> v;
        v.reserve(static_cast<std::size_t>(n > 0 ? n : 0));
        for (Label i = 1; i <= n; ++i) v.push_back(i);
        return LabelSet(std::move(v));
    }

    bool contains(Label v) const
    {
        return std::binary_search(labels_.begin(), labels_.end(), v);
    }

    // Position of v in ascending order; v must be present.
    std::size_t index_of(Label v) const
    {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
        if (it == labels_.end() || *it != v)
            throw Error(Kind::UnknownLabel, "label " + std::to_string(v) + " not in set");
        return static_cast<std::size_t>(it - labels_.begin());
    }

    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    Label operator[](std::size_t i) const { return labels_[i]; }

    auto begin() const { return labels_.begin(); }
    auto end() const { return labels_.end(); }
    const std::vector<Label>& values() const { return labels_; }

    bool disjoint_from(const LabelSet& other) const
    {
        std::size_t i = 0, j = 0;
        while (i < labels_.size() && j < other.labels_.size()) {
            if (labels_[i] == other.labels_[j]) return false;
            if (labels_[i] < other.labels_[j]) ++i;
            else ++j;
        }
        return true;
    }

    LabelSet union_with(const LabelSet& other) const
    {
        std::vector<Label> out;
        out.reserve(labels_.size() + other.labels_.size());
        std::merge(labels_.begin(), labels_.end(), other.labels_.begin(), other.labels_.end(),
                   std::back_inserter(out));
        return LabelSet(std::move(out));
    }

    friend bool operator==(const LabelSet&, const LabelSet&) = default;

private:
    std::vector<Label> labels_;
};

} // namespace treebij
