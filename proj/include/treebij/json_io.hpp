#pragma once

#include <string>

#include <json.hpp>

#include "treebij/merge_split.hpp"
#include "treebij/trees.hpp"

namespace treebij {

using Json = nlohmann::json;

// Wire formats. Canonical output sorts object keys (nlohmann default), each
// edge pair ascending and the edge list lexicographically (LabeledTree already
// stores edges that way), and label lists ascending.
//
//   tree            {"labels":[...], "edges":[[u,v],...]}
//   rooted          + "root": k
//   doubly rooted   + "roots": [r1, r2]      (empty: labels/edges/roots all [])
//   triply rooted   + "roots": [r1, r2, r3]
//   function        {"domain_max": N, "codomain_max": M, "values": [...]}
//                   with values[i-1] = f(i); label sets are [1..N] -> [1..M]
//   triple          {"d": ..., "dp": ..., "dpp": ...}

Json to_json(const LabeledTree& t);
Json to_json(const RootedTree& t);
Json to_json(const DoublyRootedTree& t);
Json to_json(const TriplyRootedTree& t);
Json to_json(const FiniteFunction& f);
Json to_json(const RootedTriple& q);

LabeledTree tree_from_json(const Json& j);
RootedTree rooted_from_json(const Json& j);
DoublyRootedTree doubly_from_json(const Json& j);
TriplyRootedTree triply_from_json(const Json& j);
FiniteFunction function_from_json(const Json& j);
RootedTriple triple_from_json(const Json& j);

// Compact single-line dump plus trailing newline: the byte format every CLI
// subcommand emits and golden files are stored in.
std::string canonical_dump(const Json& j);

// Parses text, mapping malformed JSON to Error(BadInput).
Json parse_json(const std::string& text);

} // namespace treebij
