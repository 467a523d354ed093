#include "treebij/enumerate.hpp"

namespace treebij {

bool odometer_step(std::vector<std::size_t>& digits, std::size_t base)
{
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < base) return true;
        digits[i] = 0;
    }
    return false;
}

TreeEnumerator::TreeEnumerator(LabelSet labels) : labels_(std::move(labels))
{
    if (labels_.empty()) throw Error(Kind::EmptyLabelSet, "cannot enumerate trees on {}");
    if (labels_.size() >= 2) digits_.assign(labels_.size() - 2, 0);
}

std::optional<LabeledTree> TreeEnumerator::next()
{
    if (done_) return std::nullopt;
    if (labels_.size() == 1) {
        done_ = true;
        return LabeledTree(labels_, {});
    }
    if (!first_ && !odometer_step(digits_, labels_.size())) {
        done_ = true;
        return std::nullopt;
    }
    first_ = false;
    std::vector<Label> code;
    code.reserve(digits_.size());
    for (std::size_t d : digits_) code.push_back(labels_[d]);
    return prufer_decode(PruferCode(labels_, std::move(code)));
}

DoublyRootedEnumerator::DoublyRootedEnumerator(LabelSet labels) : labels_(std::move(labels))
{
    if (labels_.empty()) {
        empty_case_pending_ = true;
    } else {
        trees_.emplace(labels_);
        current_ = trees_->next();
    }
}

std::optional<DoublyRootedTree> DoublyRootedEnumerator::next()
{
    if (done_) return std::nullopt;
    if (empty_case_pending_) {
        empty_case_pending_ = false;
        done_ = true;
        return DoublyRootedTree::make_empty();
    }
    if (!current_) {
        done_ = true;
        return std::nullopt;
    }
    DoublyRootedTree out(*current_, labels_[r1_], labels_[r2_]);
    if (++r2_ == labels_.size()) {
        r2_ = 0;
        if (++r1_ == labels_.size()) {
            r1_ = 0;
            current_ = trees_->next();
        }
    }
    return out;
}

TriplyRootedEnumerator::TriplyRootedEnumerator(int n)
    : labels_(LabelSet::range(n)), trees_(labels_) // throws EmptyLabelSet for n < 1
{
    current_ = trees_.next();
}

std::optional<TriplyRootedTree> TriplyRootedEnumerator::next()
{
    if (done_ || !current_) {
        done_ = true;
        return std::nullopt;
    }
    TriplyRootedTree out(*current_, labels_[r1_], labels_[r2_], labels_[r3_]);
    if (++r3_ == labels_.size()) {
        r3_ = 0;
        if (++r2_ == labels_.size()) {
            r2_ = 0;
            if (++r1_ == labels_.size()) {
                r1_ = 0;
                current_ = trees_.next();
            }
        }
    }
    return out;
}

FunctionEnumerator::FunctionEnumerator(LabelSet domain, LabelSet codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain))
{
    if (codomain_.empty())
        throw Error(Kind::EmptyCodomain, "no functions into the empty set");
    digits_.assign(domain_.size(), 0);
}

std::optional<FiniteFunction> FunctionEnumerator::next()
{
    if (done_) return std::nullopt;
    if (!first_ && !odometer_step(digits_, codomain_.size())) {
        done_ = true;
        return std::nullopt;
    }
    first_ = false;
    std::vector<Label> values;
    values.reserve(digits_.size());
    for (std::size_t d : digits_) values.push_back(codomain_[d]);
    if (domain_.empty()) done_ = true;
    return FiniteFunction(domain_, codomain_, std::move(values));
}

Composition3Enumerator::Composition3Enumerator(LabelSet ground) : ground_(std::move(ground))
{
    if (ground_.empty()) throw Error(Kind::EmptyGroundSet, "composition of the empty set");
    assign_.assign(ground_.size(), 0);
}

std::optional<Composition3> Composition3Enumerator::next()
{
    if (done_) return std::nullopt;
    while (true) {
        if (!first_) {
            // base-3 odometer, last element fastest
            std::size_t i = assign_.size();
            bool carried = true;
            while (i-- > 0) {
                if (++assign_[i] < 3) {
                    carried = false;
                    break;
                }
                assign_[i] = 0;
            }
            if (carried) {
                done_ = true;
                return std::nullopt;
            }
        }
        first_ = false;
        bool has_a = false;
        for (int a : assign_)
            if (a == 0) { has_a = true; break; }
        if (!has_a) continue; // first block must be nonempty
        std::vector<Label> a, b, c;
        for (std::size_t i = 0; i < ground_.size(); ++i) {
            switch (assign_[i]) {
                case 0: a.push_back(ground_[i]); break;
                case 1: b.push_back(ground_[i]); break;
                default: c.push_back(ground_[i]); break;
            }
        }
        return Composition3{LabelSet(std::move(a)), LabelSet(std::move(b)),
                            LabelSet(std::move(c))};
    }
}

} // namespace treebij
