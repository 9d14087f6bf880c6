#include "lyntree/prefix_standardization.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "lyntree/infinite_order.hpp"
#include "lyntree/lyndon.hpp"

namespace lyntree {

std::strong_ordering prec_cmp(const Word& u, const Word& v) {
  switch (omega_outcome(u, v)) {
    case Outcome::Less: return std::strong_ordering::less;
    case Outcome::Greater: return std::strong_ordering::greater;
    case Outcome::Equal: break;
  }
  // Equal infinite powers: the longer word is the smaller one.
  return v.size() <=> u.size();
}

PrefixStandard prefix_standard_permutation(const Word& w) {
  require_nonempty(w);
  const std::size_t n = w.size();
  std::vector<Word> prefixes;
  prefixes.reserve(n);
  for (std::size_t len = 1; len <= n; ++len) prefixes.push_back(w.prefix(len));

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return prec_cmp(prefixes[a], prefixes[b]) < 0;
  });

  PrefixStandard ps;
  ps.sigma.resize(n);
  ps.inverse.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    ps.inverse[r] = order[r] + 1;
    ps.sigma[order[r]] = static_cast<std::uint32_t>(r + 1);
  }
  return ps;
}

DecreasingTree::DecreasingTree(std::vector<Node> nodes, std::int32_t root)
    : nodes_(std::move(nodes)), root_(root) {
  const auto n = static_cast<std::int32_t>(nodes_.size());
  auto valid = [n](std::int32_t i) { return i == kNone || (i >= 0 && i < n); };
  if (!valid(root_) || (n > 0 && root_ == kNone)) {
    throw Error(ErrorKind::BadAddress, "decreasing tree root out of range");
  }
  for (const auto& node : nodes_) {
    if (!valid(node.left) || !valid(node.right)) {
      throw Error(ErrorKind::BadAddress, "decreasing tree child out of range");
    }
  }
}

std::vector<std::uint32_t> DecreasingTree::in_order_labels() const {
  std::vector<std::uint32_t> out;
  out.reserve(nodes_.size());
  std::vector<std::int32_t> stack;
  std::int32_t cur = root_;
  while (cur != kNone || !stack.empty()) {
    while (cur != kNone) {
      stack.push_back(cur);
      cur = node(cur).left;
    }
    cur = stack.back();
    stack.pop_back();
    out.push_back(node(cur).label);
    cur = node(cur).right;
  }
  return out;
}

DecreasingTree decreasing_tree(std::span<const std::uint32_t> alpha) {
  if (alpha.empty()) throw Error(ErrorKind::EmptySequence, "decreasing tree of an empty sequence");
  std::unordered_set<std::uint32_t> seen;
  for (auto a : alpha) {
    if (!seen.insert(a).second) {
      throw Error(ErrorKind::DuplicateEntry, "entry " + std::to_string(a) + " repeats");
    }
  }

  using Node = DecreasingTree::Node;
  std::vector<Node> nodes(alpha.size());
  // Right spine of the tree built so far, labels decreasing from bottom to top.
  std::vector<std::int32_t> spine;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const auto idx = static_cast<std::int32_t>(i);
    nodes[i].label = alpha[i];
    std::int32_t last = DecreasingTree::kNone;
    while (!spine.empty() && alpha[static_cast<std::size_t>(spine.back())] < alpha[i]) {
      last = spine.back();
      spine.pop_back();
    }
    nodes[i].left = last;
    if (!spine.empty()) nodes[static_cast<std::size_t>(spine.back())].right = idx;
    spine.push_back(idx);
  }
  return DecreasingTree(std::move(nodes), spine.front());
}

namespace {

std::int32_t build_by_max(std::vector<DecreasingTree::Node>& nodes, std::size_t lo, std::size_t hi,
                          const std::function<bool(std::size_t, std::size_t)>& less) {
  if (lo >= hi) return DecreasingTree::kNone;
  std::size_t top = lo;
  for (std::size_t i = lo + 1; i < hi; ++i) {
    if (less(top, i)) top = i;
  }
  nodes[top].label = static_cast<std::uint32_t>(top + 1);
  nodes[top].left = build_by_max(nodes, lo, top, less);
  nodes[top].right = build_by_max(nodes, top + 1, hi, less);
  return static_cast<std::int32_t>(top);
}

}  // namespace

DecreasingTree decreasing_tree_by(std::size_t n,
                                  const std::function<bool(std::size_t, std::size_t)>& less) {
  if (n == 0) throw Error(ErrorKind::EmptySequence, "decreasing tree of an empty sequence");
  std::vector<DecreasingTree::Node> nodes(n);
  auto root = build_by_max(nodes, 0, n, less);
  return DecreasingTree(std::move(nodes), root);
}

namespace {

class Completer {
 public:
  Completer(const DecreasingTree& skeleton, const Word& w) : skeleton_(skeleton), w_(w) {}

  MagmaTree run() {
    MagmaTree t = build(skeleton_.root());
    if (next_leaf_ != w_.size()) {
      throw Error(ErrorKind::SizeMismatch, "skeleton does not cover every letter");
    }
    return t;
  }

 private:
  MagmaTree build(std::int32_t pos) {
    if (++visited_ > skeleton_.size()) {
      throw Error(ErrorKind::BadAddress, "decreasing tree is not a tree");
    }
    const auto& node = skeleton_.node(pos);
    MagmaTree left = node.left == DecreasingTree::kNone ? take_leaf() : build(node.left);
    MagmaTree right = node.right == DecreasingTree::kNone ? take_leaf() : build(node.right);
    return MagmaTree::node(left, right);
  }

  MagmaTree take_leaf() {
    if (next_leaf_ >= w_.size()) throw Error(ErrorKind::SizeMismatch, "more leaf slots than letters");
    return MagmaTree::leaf(w_.alphabet(), w_[next_leaf_++]);
  }

  const DecreasingTree& skeleton_;
  const Word& w_;
  std::size_t next_leaf_ = 0;
  std::size_t visited_ = 0;
};

void require_lyndon(const Word& w) {
  require_nonempty(w);
  if (!is_lyndon(w)) throw Error(ErrorKind::NotLyndon, "'" + w.str() + "' is not a Lyndon word");
}

}  // namespace

MagmaTree completion(const DecreasingTree& skeleton, const Word& w) {
  if (w.empty() || skeleton.size() + 1 != w.size()) {
    throw Error(ErrorKind::SizeMismatch, "skeleton has " + std::to_string(skeleton.size()) +
                                             " nodes but the word has " + std::to_string(w.size()) +
                                             " letters");
  }
  if (skeleton.size() == 0) return MagmaTree::leaf(w.alphabet(), w[0]);
  return Completer(skeleton, w).run();
}

MagmaTree left_cartesian_tree(const Word& w) {
  require_lyndon(w);
  if (w.size() == 1) return MagmaTree::leaf(w.alphabet(), w[0]);
  auto ps = prefix_standard_permutation(w);
  if (ps.sigma.back() != w.size()) {
    throw Error(ErrorKind::InternalError,
                "the whole Lyndon word '" + w.str() + "' is not the ≺-largest prefix");
  }
  std::span<const std::uint32_t> alpha(ps.sigma.data(), ps.sigma.size() - 1);
  return completion(decreasing_tree(alpha), w);
}

MagmaTree left_cartesian_tree_via_prefixes(const Word& w) {
  require_lyndon(w);
  if (w.size() == 1) return MagmaTree::leaf(w.alphabet(), w[0]);
  std::vector<Word> proper;
  for (std::size_t len = 1; len < w.size(); ++len) proper.push_back(w.prefix(len));
  auto skeleton = decreasing_tree_by(proper.size(), [&](std::size_t a, std::size_t b) {
    return prec_cmp(proper[a], proper[b]) < 0;
  });
  return completion(skeleton, w);
}

}  // namespace lyntree
