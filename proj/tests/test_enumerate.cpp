#include <doctest.h>

#include <functional>
#include <unordered_set>

#include "treebij/enumerate.hpp"

using namespace treebij;

namespace {

Kind kind_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return Kind::BadInput;
}

template <typename Enumerator>
long count_stream(Enumerator cursor)
{
    long count = 0;
    while (cursor.next()) ++count;
    return count;
}

} // namespace

TEST_CASE("tree stream counts")
{
    CHECK(count_stream(TreeEnumerator(LabelSet::range(1))) == 1);
    CHECK(count_stream(TreeEnumerator(LabelSet::range(3))) == 3);
    CHECK(count_stream(TreeEnumerator(LabelSet::range(4))) == 16);
    CHECK(count_stream(TreeEnumerator(LabelSet({2, 9, 14, 30, 31}))) == 125);
    CHECK(kind_of([] { TreeEnumerator tmp{LabelSet{}}; }) == Kind::EmptyLabelSet);
}

TEST_CASE("triply rooted stream counts")
{
    CHECK(count_stream(TriplyRootedEnumerator(1)) == 1);
    CHECK(count_stream(TriplyRootedEnumerator(2)) == 8);
    CHECK(count_stream(TriplyRootedEnumerator(3)) == 81);
}

TEST_CASE("function stream counts")
{
    CHECK(count_stream(FunctionEnumerator(LabelSet::range(2), LabelSet::range(1))) == 1);
    CHECK(count_stream(FunctionEnumerator(LabelSet::range(3), LabelSet::range(2))) == 8);
    CHECK(count_stream(FunctionEnumerator(LabelSet::range(4), LabelSet::range(3))) == 81);
    CHECK(kind_of([] { FunctionEnumerator tmp{LabelSet::range(2), LabelSet{}}; }) ==
          Kind::EmptyCodomain);
}

TEST_CASE("composition stream counts and the n = 1 composition")
{
    Composition3Enumerator singles(LabelSet::range(1));
    auto only = singles.next();
    REQUIRE(only.has_value());
    CHECK(only->block_a == LabelSet::range(1));
    CHECK(only->block_b.empty());
    CHECK(only->block_c.empty());
    CHECK(!singles.next().has_value());

    CHECK(count_stream(Composition3Enumerator(LabelSet::range(2))) == 5);
    CHECK(count_stream(Composition3Enumerator(LabelSet::range(3))) == 19);
    CHECK(kind_of([] { Composition3Enumerator tmp{LabelSet{}}; }) == Kind::EmptyGroundSet);

    // blocks partition the ground set and A is never empty
    Composition3Enumerator comps(LabelSet::range(4));
    long seen = 0;
    while (auto c = comps.next()) {
        ++seen;
        REQUIRE(!c->block_a.empty());
        REQUIRE(c->block_a.disjoint_from(c->block_b));
        REQUIRE(c->block_a.disjoint_from(c->block_c));
        REQUIRE(c->block_b.disjoint_from(c->block_c));
        REQUIRE(c->block_a.union_with(c->block_b).union_with(c->block_c) ==
                LabelSet::range(4));
    }
    CHECK(seen == 81 - 16);
}

TEST_CASE("doubly rooted stream covers the empty set with one element")
{
    DoublyRootedEnumerator empties{LabelSet()};
    auto only = empties.next();
    REQUIRE(only.has_value());
    CHECK(only->is_empty());
    CHECK(!empties.next().has_value());

    CHECK(count_stream(DoublyRootedEnumerator(LabelSet::range(3))) == 27);
}

TEST_CASE("streams yield no duplicates (n <= 4, hashed canonical keys)")
{
    for (int n = 1; n <= 4; ++n) {
        std::unordered_set<std::string> keys;
        long count = 0;
        TriplyRootedEnumerator cursor(n);
        while (auto t = cursor.next()) {
            keys.insert(t->canonical_key());
            ++count;
        }
        CHECK(static_cast<long>(keys.size()) == count);

        std::unordered_set<std::string> fn_keys;
        long fn_count = 0;
        FunctionEnumerator fns(LabelSet::range(n + 1), LabelSet::range(n));
        while (auto f = fns.next()) {
            fn_keys.insert(f->canonical_key());
            ++fn_count;
        }
        CHECK(static_cast<long>(fn_keys.size()) == fn_count);
    }
}
