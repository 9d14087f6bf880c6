#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lyntree/infinite_order.hpp"
#include "lyntree/lyndon.hpp"
#include "lyntree/lyndon_trees.hpp"
#include "lyntree/prefix_standardization.hpp"

namespace lyntree {

// Leaf -> its symbol; node -> "(" left "," right ")".
std::string to_canonical(const MagmaTree& t);

// Inverse of to_canonical. Throws ParseError, UnknownSymbol.
MagmaTree parse_tree(std::string_view text, const AlphabetPtr& alphabet);

// Concatenated digits when every entry is <= 9, comma-separated otherwise.
std::string format_permutation(std::span<const std::uint32_t> perm);

// "(ab)(ab)(aab)".
std::string format_factors(const LyndonFactorization& f);

nlohmann::json to_json(const OmegaComparison& c);
nlohmann::json to_json(const LyndonFactorization& f);
nlohmann::json to_json(const PrefixStandard& ps);
nlohmann::json to_json(const MagmaTree& t);

// Digraph with pre-order node ids; internal nodes are labelled with their
// left foliage, leaves with their letter; left edge before right.
std::string to_dot(const MagmaTree& t, std::string_view graph_name = "tree");

}  // namespace lyntree
