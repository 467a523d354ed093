#include "treebij/json_io.hpp"

#include <cstdint>

namespace treebij {

namespace {

Json labels_to_json(const LabelSet& labels)
{
    Json arr = Json::array();
    for (Label v : labels) arr.push_back(v);
    return arr;
}

Json edges_to_json(const std::vector<Edge>& edges)
{
    Json arr = Json::array();
    for (const Edge& e : edges) arr.push_back(Json::array({e.a, e.b}));
    return arr;
}

Json tree_fields(const LabeledTree& t)
{
    return Json{{"labels", labels_to_json(t.labels())}, {"edges", edges_to_json(t.edges())}};
}

void require_keys(const Json& j, std::initializer_list<const char*> keys)
{
    if (!j.is_object()) throw Error(Kind::BadInput, "expected a JSON object");
    for (const char* key : keys)
        if (!j.contains(key))
            throw Error(Kind::BadInput, std::string("missing key \"") + key + "\"");
}

Label label_from_json(const Json& j)
{
    if (!j.is_number_integer())
        throw Error(Kind::BadInput, "labels must be JSON integers");
    long long v = j.get<long long>();
    if (v < 1 || v > INT32_MAX) throw Error(Kind::BadInput, "labels must be >= 1");
    return static_cast<Label>(v);
}

std::pair<LabelSet, std::vector<Edge>> tree_parts_from_json(const Json& j)
{
    require_keys(j, {"labels", "edges"});
    std::vector<Label> labels;
    for (const Json& v : j.at("labels")) labels.push_back(label_from_json(v));
    std::vector<Edge> edges;
    for (const Json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw Error(Kind::BadInput, "each edge must be a pair");
        edges.emplace_back(label_from_json(e[0]), label_from_json(e[1]));
    }
    return {LabelSet(std::move(labels)), std::move(edges)};
}

} // namespace

Json to_json(const LabeledTree& t) { return tree_fields(t); }

Json to_json(const RootedTree& t)
{
    Json j = tree_fields(t.tree());
    j["root"] = t.root();
    return j;
}

Json to_json(const DoublyRootedTree& t)
{
    if (t.is_empty())
        return Json{{"labels", Json::array()},
                    {"edges", Json::array()},
                    {"roots", Json::array()}};
    Json j = tree_fields(t.tree());
    j["roots"] = Json::array({t.r1(), t.r2()});
    return j;
}

Json to_json(const TriplyRootedTree& t)
{
    Json j = tree_fields(t.tree());
    j["roots"] = Json::array({t.r1(), t.r2(), t.r3()});
    return j;
}

Json to_json(const FiniteFunction& f)
{
    const int n = static_cast<int>(f.domain().size());
    const int m = static_cast<int>(f.codomain().size());
    if (f.domain() != LabelSet::range(n) || f.codomain() != LabelSet::range(m))
        throw Error(Kind::BadInput, "only functions on [1..N] -> [1..M] serialize");
    Json values = Json::array();
    for (Label v : f.values()) values.push_back(v);
    return Json{{"domain_max", n}, {"codomain_max", m}, {"values", values}};
}

Json to_json(const RootedTriple& q)
{
    return Json{{"d", to_json(q.d())}, {"dp", to_json(q.dp())}, {"dpp", to_json(q.dpp())}};
}

LabeledTree tree_from_json(const Json& j)
{
    auto [labels, edges] = tree_parts_from_json(j);
    return LabeledTree(std::move(labels), std::move(edges));
}

RootedTree rooted_from_json(const Json& j)
{
    require_keys(j, {"root"});
    auto [labels, edges] = tree_parts_from_json(j);
    return RootedTree(LabeledTree(std::move(labels), std::move(edges)),
                      label_from_json(j.at("root")));
}

DoublyRootedTree doubly_from_json(const Json& j)
{
    require_keys(j, {"roots"});
    const Json& roots = j.at("roots");
    auto [labels, edges] = tree_parts_from_json(j);
    if (roots.empty()) {
        if (!labels.empty())
            throw Error(Kind::BadInput, "nonempty tree needs two roots");
        return DoublyRootedTree::make_empty();
    }
    if (roots.size() != 2) throw Error(Kind::BadInput, "expected \"roots\": [r1, r2]");
    return DoublyRootedTree(LabeledTree(std::move(labels), std::move(edges)),
                            label_from_json(roots[0]), label_from_json(roots[1]));
}

TriplyRootedTree triply_from_json(const Json& j)
{
    require_keys(j, {"roots"});
    const Json& roots = j.at("roots");
    if (roots.size() != 3) throw Error(Kind::BadInput, "expected \"roots\": [r1, r2, r3]");
    auto [labels, edges] = tree_parts_from_json(j);
    return TriplyRootedTree(LabeledTree(std::move(labels), std::move(edges)),
                            label_from_json(roots[0]), label_from_json(roots[1]),
                            label_from_json(roots[2]));
}

FiniteFunction function_from_json(const Json& j)
{
    require_keys(j, {"domain_max", "codomain_max", "values"});
    if (!j.at("domain_max").is_number_integer() || !j.at("codomain_max").is_number_integer())
        throw Error(Kind::BadInput, "domain_max and codomain_max must be integers");
    const int n = j.at("domain_max").get<int>();
    const int m = j.at("codomain_max").get<int>();
    if (n < 0 || m < 1) throw Error(Kind::BadInput, "need domain_max >= 0, codomain_max >= 1");
    std::vector<Label> values;
    for (const Json& v : j.at("values")) values.push_back(label_from_json(v));
    if (static_cast<int>(values.size()) != n)
        throw Error(Kind::BadInput, "values must have domain_max entries");
    return FiniteFunction(LabelSet::range(n), LabelSet::range(m), std::move(values));
}

RootedTriple triple_from_json(const Json& j)
{
    require_keys(j, {"d", "dp", "dpp"});
    return RootedTriple(doubly_from_json(j.at("d")), doubly_from_json(j.at("dp")),
                        doubly_from_json(j.at("dpp")));
}

std::string canonical_dump(const Json& j) { return j.dump() + "\n"; }

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(Kind::BadInput, e.what());
    }
}

} // namespace treebij
