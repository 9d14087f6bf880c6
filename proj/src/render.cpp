#include "lyntree/render.hpp"

#include <sstream>

namespace lyntree {

namespace {

void canonical(const MagmaTree& t, std::string& out) {
  if (t.is_leaf()) {
    out.push_back(t.alphabet()->symbol(t.symbol()));
    return;
  }
  out.push_back('(');
  canonical(t.left(), out);
  out.push_back(',');
  canonical(t.right(), out);
  out.push_back(')');
}

class TreeParser {
 public:
  TreeParser(std::string_view text, const AlphabetPtr& alphabet) : text_(text), alphabet_(alphabet) {}

  MagmaTree parse() {
    MagmaTree t = parse_node();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  MagmaTree parse_node() {
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '(') {
      ++pos_;
      MagmaTree left = parse_node();
      expect(',');
      MagmaTree right = parse_node();
      expect(')');
      return MagmaTree::node(left, right);
    }
    char c = text_[pos_];
    auto r = alphabet_->rank(c);
    if (!r) throw UnknownSymbolError(pos_ + 1, c);
    ++pos_;
    return MagmaTree::leaf(alphabet_, *r);
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, what + " at offset " + std::to_string(pos_) + " in '" +
                                           std::string(text_) + "'");
  }

  std::string_view text_;
  const AlphabetPtr& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_canonical(const MagmaTree& t) {
  std::string out;
  canonical(t, out);
  return out;
}

MagmaTree parse_tree(std::string_view text, const AlphabetPtr& alphabet) {
  return TreeParser(text, alphabet).parse();
}

std::string format_permutation(std::span<const std::uint32_t> perm) {
  bool digits = true;
  for (auto p : perm) digits = digits && p <= 9;
  std::string out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (!digits && i > 0) out.push_back(',');
    out += std::to_string(perm[i]);
  }
  return out;
}

std::string format_factors(const LyndonFactorization& f) {
  std::string out;
  for (const auto& w : f.factors) out += "(" + w.str() + ")";
  return out;
}

nlohmann::json to_json(const OmegaComparison& c) {
  nlohmann::json j;
  j["outcome"] = to_string(c.outcome);
  j["mismatch_position"] = c.mismatch_position ? nlohmann::json(*c.mismatch_position) : nullptr;
  j["common_root"] = c.common_root ? nlohmann::json(c.common_root->str()) : nullptr;
  return j;
}

nlohmann::json to_json(const LyndonFactorization& f) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& w : f.factors) factors.push_back(w.str());
  return {{"factors", factors}, {"first", f.factors.front().str()}, {"last", f.factors.back().str()}};
}

nlohmann::json to_json(const PrefixStandard& ps) {
  return {{"sigma", ps.sigma}, {"inverse", ps.inverse}};
}

nlohmann::json to_json(const MagmaTree& t) {
  if (t.is_leaf()) return {{"leaf", std::string(1, t.alphabet()->symbol(t.symbol()))}};
  return {{"l", to_json(t.left())}, {"r", to_json(t.right())}};
}

namespace {

struct DotWriter {
  const MagmaTree& root;
  std::ostringstream nodes;
  std::ostringstream edges;
  std::size_t next_id = 0;

  std::size_t emit(const MagmaTree& t, const NodeAddress& at) {
    const std::size_t id = next_id++;
    if (t.is_leaf()) {
      nodes << "  n" << id << " [label=\"" << t.alphabet()->symbol(t.symbol())
            << "\", shape=plaintext];\n";
      return id;
    }
    nodes << "  n" << id << " [label=\"" << left_foliage(root, at).str() << "\"];\n";
    edges << "  n" << id << " -> n" << next_id << ";\n";
    emit(t.left(), at.child(Direction::Left));
    edges << "  n" << id << " -> n" << next_id << ";\n";
    emit(t.right(), at.child(Direction::Right));
    return id;
  }
};

}  // namespace

std::string to_dot(const MagmaTree& t, std::string_view graph_name) {
  DotWriter w{t, {}, {}, 0};
  w.emit(t, NodeAddress::root());
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n" << w.nodes.str() << w.edges.str() << "}\n";
  return out.str();
}

}  // namespace lyntree
