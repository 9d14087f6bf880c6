#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lyntree/word.hpp"

namespace lyntree {

// An element of the free magma: a complete binary tree with letter leaves.
// Immutable; subtrees are shared.
class MagmaTree {
 public:
  static MagmaTree leaf(AlphabetPtr alphabet, Symbol symbol);
  // Throws AlphabetMismatch when the children use different alphabets.
  static MagmaTree node(const MagmaTree& left, const MagmaTree& right);

  bool is_leaf() const noexcept;
  Symbol symbol() const;  // leaves only
  MagmaTree left() const;   // internal nodes only
  MagmaTree right() const;  // internal nodes only

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  std::size_t leaf_count() const noexcept;

  friend bool operator==(const MagmaTree& a, const MagmaTree& b);

 private:
  struct Node;
  MagmaTree(AlphabetPtr alphabet, std::shared_ptr<const Node> root);

  AlphabetPtr alphabet_;
  std::shared_ptr<const Node> root_;
};

enum class Direction : char { Left = 'L', Right = 'R' };

// Path from the root; empty means the root itself.
struct NodeAddress {
  std::vector<Direction> path;

  static NodeAddress root() { return {}; }
  // Parses "", "L", "LRR", ...; throws BadAddress on other characters.
  static NodeAddress parse(std::string_view text);

  NodeAddress child(Direction d) const;
  std::string str() const;

  friend bool operator==(const NodeAddress&, const NodeAddress&) = default;
};

// Subtree at `x`; throws BadAddress when the path leaves the tree.
MagmaTree subtree_at(const MagmaTree& t, const NodeAddress& x);

// Addresses of all internal nodes, pre-order, left before right.
std::vector<NodeAddress> internal_nodes(const MagmaTree& t);

Word foliage(const MagmaTree& t);

// (u, v) with u the longest proper Lyndon prefix. Throws NotLyndon, TooShort.
std::pair<Word, Word> left_standard_factorization(const Word& w);

// (u, v) with v the longest proper Lyndon suffix. Throws NotLyndon, TooShort.
std::pair<Word, Word> right_standard_factorization(const Word& w);

// Throws NotLyndon.
MagmaTree left_lyndon_tree(const Word& w);
MagmaTree right_lyndon_tree(const Word& w);

// Subtrees hanging left of the root-to-x path. `x` must be internal.
std::vector<MagmaTree> left_subtrees_sequence(const MagmaTree& t, const NodeAddress& x);

// Concatenated foliage of everything left of the internal node `x`.
Word left_foliage(const MagmaTree& t, const NodeAddress& x);

}  // namespace lyntree
