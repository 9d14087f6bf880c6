#include "lyntree/lyndon_trees.hpp"

#include "lyntree/lyndon.hpp"

namespace lyntree {

struct MagmaTree::Node {
  Symbol symbol = 0;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
  std::size_t leaves = 1;

  bool is_leaf() const noexcept { return !left; }
};

MagmaTree::MagmaTree(AlphabetPtr alphabet, std::shared_ptr<const Node> root)
    : alphabet_(std::move(alphabet)), root_(std::move(root)) {}

MagmaTree MagmaTree::leaf(AlphabetPtr alphabet, Symbol symbol) {
  if (!alphabet || symbol >= alphabet->size()) {
    throw Error(ErrorKind::UnknownSymbol, "leaf symbol outside its alphabet");
  }
  auto n = std::make_shared<Node>();
  n->symbol = symbol;
  return MagmaTree(std::move(alphabet), std::move(n));
}

MagmaTree MagmaTree::node(const MagmaTree& left, const MagmaTree& right) {
  if (!(*left.alphabet_ == *right.alphabet_)) {
    throw Error(ErrorKind::AlphabetMismatch, "subtrees use different alphabets");
  }
  auto n = std::make_shared<Node>();
  n->left = left.root_;
  n->right = right.root_;
  n->leaves = left.root_->leaves + right.root_->leaves;
  return MagmaTree(left.alphabet_, std::move(n));
}

bool MagmaTree::is_leaf() const noexcept { return root_->is_leaf(); }

Symbol MagmaTree::symbol() const {
  if (!is_leaf()) throw Error(ErrorKind::BadAddress, "symbol() on an internal node");
  return root_->symbol;
}

MagmaTree MagmaTree::left() const {
  if (is_leaf()) throw Error(ErrorKind::BadAddress, "left() on a leaf");
  return MagmaTree(alphabet_, root_->left);
}

MagmaTree MagmaTree::right() const {
  if (is_leaf()) throw Error(ErrorKind::BadAddress, "right() on a leaf");
  return MagmaTree(alphabet_, root_->right);
}

std::size_t MagmaTree::leaf_count() const noexcept { return root_->leaves; }

bool operator==(const MagmaTree& a, const MagmaTree& b) {
  if (!(*a.alphabet_ == *b.alphabet_)) return false;
  // Iterative walk; trees built from long words can be deep.
  std::vector<std::pair<const MagmaTree::Node*, const MagmaTree::Node*>> stack{
      {a.root_.get(), b.root_.get()}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (x == y) continue;
    if (x->is_leaf() != y->is_leaf() || x->leaves != y->leaves) return false;
    if (x->is_leaf()) {
      if (x->symbol != y->symbol) return false;
      continue;
    }
    stack.emplace_back(x->right.get(), y->right.get());
    stack.emplace_back(x->left.get(), y->left.get());
  }
  return true;
}

NodeAddress NodeAddress::parse(std::string_view text) {
  NodeAddress a;
  for (char c : text) {
    if (c == 'L' || c == 'l') {
      a.path.push_back(Direction::Left);
    } else if (c == 'R' || c == 'r') {
      a.path.push_back(Direction::Right);
    } else {
      throw Error(ErrorKind::BadAddress, "node address may contain only L and R: '" +
                                             std::string(text) + "'");
    }
  }
  return a;
}

NodeAddress NodeAddress::child(Direction d) const {
  NodeAddress a = *this;
  a.path.push_back(d);
  return a;
}

std::string NodeAddress::str() const {
  std::string s;
  for (Direction d : path) s.push_back(static_cast<char>(d));
  return s;
}

MagmaTree subtree_at(const MagmaTree& t, const NodeAddress& x) {
  MagmaTree cur = t;
  for (Direction d : x.path) {
    if (cur.is_leaf()) {
      throw Error(ErrorKind::BadAddress, "address '" + x.str() + "' runs past a leaf");
    }
    cur = d == Direction::Left ? cur.left() : cur.right();
  }
  return cur;
}

std::vector<NodeAddress> internal_nodes(const MagmaTree& t) {
  std::vector<NodeAddress> out;
  std::vector<std::pair<MagmaTree, NodeAddress>> stack{{t, NodeAddress::root()}};
  while (!stack.empty()) {
    auto [tree, addr] = std::move(stack.back());
    stack.pop_back();
    if (tree.is_leaf()) continue;
    out.push_back(addr);
    stack.emplace_back(tree.right(), addr.child(Direction::Right));
    stack.emplace_back(tree.left(), addr.child(Direction::Left));
  }
  return out;
}

Word foliage(const MagmaTree& t) {
  std::vector<Symbol> letters;
  letters.reserve(t.leaf_count());
  std::vector<MagmaTree> stack{t};
  while (!stack.empty()) {
    MagmaTree cur = std::move(stack.back());
    stack.pop_back();
    if (cur.is_leaf()) {
      letters.push_back(cur.symbol());
    } else {
      stack.push_back(cur.right());
      stack.push_back(cur.left());
    }
  }
  return Word(t.alphabet(), std::move(letters));
}

namespace {

void require_factorizable(const Word& w) {
  require_nonempty(w);
  if (!is_lyndon(w)) throw Error(ErrorKind::NotLyndon, "'" + w.str() + "' is not a Lyndon word");
  if (w.size() < 2) {
    throw Error(ErrorKind::TooShort, "a single letter has no standard factorization");
  }
}

void require_lyndon(const Word& w) {
  require_nonempty(w);
  if (!is_lyndon(w)) throw Error(ErrorKind::NotLyndon, "'" + w.str() + "' is not a Lyndon word");
}

template <typename Split>
MagmaTree build_tree(const Word& w, Split split) {
  if (w.size() == 1) return MagmaTree::leaf(w.alphabet(), w[0]);
  auto [u, v] = split(w);
  return MagmaTree::node(build_tree(u, split), build_tree(v, split));
}

}  // namespace

std::pair<Word, Word> left_standard_factorization(const Word& w) {
  require_factorizable(w);
  for (std::size_t len = w.size() - 1; len >= 1; --len) {
    Word u = w.prefix(len);
    if (is_lyndon(u)) return {std::move(u), w.suffix_from(len)};
  }
  throw Error(ErrorKind::InternalError, "no Lyndon prefix found for '" + w.str() + "'");
}

std::pair<Word, Word> right_standard_factorization(const Word& w) {
  require_factorizable(w);
  for (std::size_t start = 1; start < w.size(); ++start) {
    Word v = w.suffix_from(start);
    if (is_lyndon(v)) return {w.prefix(start), std::move(v)};
  }
  throw Error(ErrorKind::InternalError, "no Lyndon suffix found for '" + w.str() + "'");
}

MagmaTree left_lyndon_tree(const Word& w) {
  require_lyndon(w);
  // Both halves of a left standard factorization are Lyndon, so the
  // recursion skips re-validating them.
  auto split = [](const Word& x) {
    for (std::size_t len = x.size() - 1; len >= 1; --len) {
      if (is_lyndon(x.prefix(len))) return std::pair{x.prefix(len), x.suffix_from(len)};
    }
    throw Error(ErrorKind::InternalError, "no Lyndon prefix found for '" + x.str() + "'");
  };
  return build_tree(w, split);
}

MagmaTree right_lyndon_tree(const Word& w) {
  require_lyndon(w);
  return build_tree(w, [](const Word& x) { return right_standard_factorization(x); });
}

std::vector<MagmaTree> left_subtrees_sequence(const MagmaTree& t, const NodeAddress& x) {
  std::vector<MagmaTree> seq;
  MagmaTree cur = t;
  for (Direction d : x.path) {
    if (cur.is_leaf()) {
      throw Error(ErrorKind::BadAddress, "address '" + x.str() + "' runs past a leaf");
    }
    if (d == Direction::Right) seq.push_back(cur.left());
    cur = d == Direction::Left ? cur.left() : cur.right();
  }
  if (cur.is_leaf()) {
    throw Error(ErrorKind::BadAddress, "address '" + x.str() + "' names a leaf");
  }
  seq.push_back(cur.left());
  return seq;
}

Word left_foliage(const MagmaTree& t, const NodeAddress& x) {
  // g(root) = φ(t1); g in t1 is g within t1; g in t2 is φ(t1) followed by g within t2.
  std::vector<Symbol> g;
  MagmaTree cur = t;
  for (Direction d : x.path) {
    if (cur.is_leaf()) {
      throw Error(ErrorKind::BadAddress, "address '" + x.str() + "' runs past a leaf");
    }
    if (d == Direction::Right) {
      const Word head = foliage(cur.left());
      g.insert(g.end(), head.letters().begin(), head.letters().end());
      cur = cur.right();
    } else {
      cur = cur.left();
    }
  }
  if (cur.is_leaf()) {
    throw Error(ErrorKind::BadAddress, "address '" + x.str() + "' names a leaf");
  }
  const Word head = foliage(cur.left());
  g.insert(g.end(), head.letters().begin(), head.letters().end());
  return Word(t.alphabet(), std::move(g));
}

}  // namespace lyntree
