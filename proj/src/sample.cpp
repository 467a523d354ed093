#include "treebij/sample.hpp"

#include "treebij/prufer.hpp"

namespace treebij {

TriplyRootedTree sample_triply_rooted(int n, std::uint64_t seed)
{
    if (n < 1) throw Error(Kind::EmptyLabelSet, "T_n needs n >= 1");
    SplitMix64 rng(seed);
    LabelSet labels = LabelSet::range(n);
    LabeledTree tree = [&] {
        if (n == 1) return LabeledTree(labels, {});
        std::vector<Label> code;
        code.reserve(static_cast<std::size_t>(n - 2));
        for (int i = 0; i < n - 2; ++i)
            code.push_back(labels[rng.below(static_cast<std::uint64_t>(n))]);
        return prufer_decode(PruferCode(labels, std::move(code)));
    }();
    Label r1 = labels[rng.below(static_cast<std::uint64_t>(n))];
    Label r2 = labels[rng.below(static_cast<std::uint64_t>(n))];
    Label r3 = labels[rng.below(static_cast<std::uint64_t>(n))];
    return TriplyRootedTree(std::move(tree), r1, r2, r3);
}

FiniteFunction sample_function(int n, std::uint64_t seed)
{
    if (n < 1) throw Error(Kind::EmptyCodomain, "functions [n+1] -> [n] need n >= 1");
    SplitMix64 rng(seed);
    std::vector<Label> values;
    values.reserve(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i)
        values.push_back(static_cast<Label>(rng.below(static_cast<std::uint64_t>(n))) + 1);
    return FiniteFunction(LabelSet::range(n + 1), LabelSet::range(n), std::move(values));
}

} // namespace treebij
