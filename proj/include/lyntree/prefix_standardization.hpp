#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lyntree/lyndon_trees.hpp"
#include "lyntree/word.hpp"

namespace lyntree {

// u ≺ v iff u^ω < v^ω, or u^ω == v^ω and u is longer. Throws EmptyWord.
std::strong_ordering prec_cmp(const Word& u, const Word& v);

// pstd(w) and its inverse, both 1-based.
//   sigma[i - 1]   = ≺-rank of the prefix of length i
//   inverse[r - 1] = length of the prefix of rank r (the prefix array)
struct PrefixStandard {
  std::vector<std::uint32_t> sigma;
  std::vector<std::uint32_t> inverse;
};

PrefixStandard prefix_standard_permutation(const Word& w);

// Binary decreasing tree over an injective sequence: the maximum at the
// root, the parts left and right of it recursively below. Stored as an
// arena; node i holds the entry at sequence position i, so the in-order
// traversal is the identity on positions.
class DecreasingTree {
 public:
  static constexpr std::int32_t kNone = -1;

  struct Node {
    std::uint32_t label = 0;
    std::int32_t left = kNone;
    std::int32_t right = kNone;
  };

  DecreasingTree() = default;
  DecreasingTree(std::vector<Node> nodes, std::int32_t root);

  std::size_t size() const noexcept { return nodes_.size(); }
  std::int32_t root() const noexcept { return root_; }
  const Node& node(std::int32_t position) const { return nodes_.at(static_cast<std::size_t>(position)); }

  // Labels read by in-order traversal; reproduces the source sequence.
  std::vector<std::uint32_t> in_order_labels() const;

  friend bool operator==(const DecreasingTree&, const DecreasingTree&) = default;

 private:
  std::vector<Node> nodes_;
  std::int32_t root_ = kNone;
};

// Linear stack construction. Throws EmptySequence, DuplicateEntry.
DecreasingTree decreasing_tree(std::span<const std::uint32_t> alpha);

// Shape built straight from the recursive definition over positions
// 0..n-1 ordered by `less`; labels are the 1-based positions. Quadratic.
DecreasingTree decreasing_tree_by(std::size_t n,
                                  const std::function<bool(std::size_t, std::size_t)>& less);

// Complete tree with `skeleton` as internal nodes and the letters of `w` as
// leaves, left to right. Throws SizeMismatch unless |skeleton| == |w| - 1.
MagmaTree completion(const DecreasingTree& skeleton, const Word& w);

// Completion of the decreasing tree of pstd(w) minus its last entry.
// Throws NotLyndon; InternalError if that last entry is not |w|.
MagmaTree left_cartesian_tree(const Word& w);

// Same tree, built by comparing the proper prefixes under ≺ directly.
MagmaTree left_cartesian_tree_via_prefixes(const Word& w);

}  // namespace lyntree
