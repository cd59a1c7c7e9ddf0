#include "hookforest/forest.hpp"

#include <algorithm>

#include "hookforest/algebra.hpp"

namespace hookforest {

const PlaneTree& resolve_vertex(const PlaneForest& forest, const VertexRef& ref) {
  if (ref.tree < 1 || ref.tree > static_cast<int>(forest.trees.size()))
    throw error("vertex ref: tree index " + std::to_string(ref.tree) + " out of range");
  const PlaneTree* node = &forest.trees[static_cast<std::size_t>(ref.tree - 1)];
  for (int step : ref.path) {
    if (step < 1 || step > node->degree())
      throw error("vertex ref: child index " + std::to_string(step) + " out of range");
    node = &node->children[static_cast<std::size_t>(step - 1)];
  }
  return *node;
}

namespace {

void tally_degrees(const PlaneTree& tree, std::vector<long long>& counts) {
  std::size_t d = tree.children.size();
  if (counts.size() <= d) counts.resize(d + 1, 0);
  ++counts[d];
  for (const PlaneTree& child : tree.children) tally_degrees(child, counts);
}

long long internal_size(const PlaneTree& tree) {
  if (tree.is_leaf()) return 0;
  long long total = 1;
  for (const PlaneTree& child : tree.children) total += internal_size(child);
  return total;
}

void serialize_tree(const PlaneTree& tree, std::string& out) {
  out += '[';
  for (std::size_t i = 0; i < tree.children.size(); ++i) {
    if (i) out += ',';
    serialize_tree(tree.children[i], out);
  }
  out += ']';
}

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw error("forest parse error at position " + std::to_string(pos) + ": " + what);
  }

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                                 text[pos] == '\r'))
      ++pos;
  }

  char peek() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    return text[pos];
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  PlaneTree parse_tree() {
    expect('[');
    PlaneTree tree;
    if (peek() == ']') {
      ++pos;
      return tree;
    }
    while (true) {
      tree.children.push_back(parse_tree());
      char c = peek();
      if (c == ',') {
        ++pos;
        continue;
      }
      if (c == ']') {
        ++pos;
        return tree;
      }
      fail("expected ',' or ']'");
    }
  }

  PlaneForest parse_forest() {
    expect('[');
    PlaneForest forest;
    if (peek() == ']') fail("forest must contain at least one tree");
    while (true) {
      forest.trees.push_back(parse_tree());
      char c = peek();
      if (c == ',') {
        ++pos;
        continue;
      }
      if (c == ']') {
        ++pos;
        break;
      }
      fail("expected ',' or ']'");
    }
    skip_ws();
    if (pos != text.size()) fail("trailing characters after forest");
    return forest;
  }
};

// A preorder degree word is a forest of ell trees iff the running sum of
// (degree - 1) stays above -ell on every proper prefix and ends at -ell.
bool word_is_forest(const std::vector<int>& word, long long ell) {
  long long sum = 0;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    sum += word[i] - 1;
    if (sum <= -ell) return false;
  }
  return true;
}

PlaneTree tree_from_word(const std::vector<int>& word, std::size_t& pos) {
  PlaneTree tree;
  int d = word[pos++];
  tree.children.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) tree.children.push_back(tree_from_word(word, pos));
  return tree;
}

}  // namespace

DegreeSequence degree_sequence_of(const PlaneForest& forest) {
  std::vector<long long> counts;
  for (const PlaneTree& tree : forest.trees) tally_degrees(tree, counts);
  return DegreeSequence::from_counts(std::move(counts));
}

long long hook_length(const PlaneForest& forest, const VertexRef& ref) {
  const PlaneTree& node = resolve_vertex(forest, ref);
  if (node.is_leaf()) throw error("hook length is undefined for a leaf vertex");
  return internal_size(node);
}

std::string serialize_forest(const PlaneForest& forest) {
  std::string out = "[";
  for (std::size_t i = 0; i < forest.trees.size(); ++i) {
    if (i) out += ',';
    serialize_tree(forest.trees[i], out);
  }
  out += ']';
  return out;
}

PlaneForest parse_forest(std::string_view text) {
  Parser parser{text};
  return parser.parse_forest();
}

std::vector<PlaneForest> enumerate_forests(const DegreeSequence& r) {
  const long long ell = r.num_trees();
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(r.total_vertices()));
  for (long long d = 0; d <= r.max_degree(); ++d)
    for (long long i = 0; i < r.count(d); ++i) word.push_back(static_cast<int>(d));

  std::vector<std::pair<std::string, PlaneForest>> found;
  do {
    if (!word_is_forest(word, ell)) continue;
    PlaneForest forest;
    std::size_t pos = 0;
    while (pos < word.size()) forest.trees.push_back(tree_from_word(word, pos));
    found.emplace_back(serialize_forest(forest), std::move(forest));
  } while (std::next_permutation(word.begin(), word.end()));

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<PlaneForest> out;
  out.reserve(found.size());
  for (auto& entry : found) out.push_back(std::move(entry.second));
  return out;
}

Int count_forests(const DegreeSequence& r) {
  const long long total = r.total_vertices();
  Int raw = make_int(r.num_trees()) * multinomial(total, r.counts());
  Int quot, rem;
  Int den(make_int(total));
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), raw.get_mpz_t(), den.get_mpz_t());
  if (rem != 0) throw error("forest count was not an integer (internal error)");
  return quot;
}

ShapeInfo ShapeInfo::analyze(const PlaneForest& forest) {
  ShapeInfo info;
  std::vector<int> ancestors;
  std::vector<int> path;

  auto visit = [&](auto&& self, const PlaneTree& node, int tree_idx) -> void {
    if (node.is_leaf()) return;
    int idx = static_cast<int>(info.internal.size());
    ShapeVertex v;
    v.ref = VertexRef{tree_idx + 1, path};
    v.degree = node.degree();
    v.parent = ancestors.empty() ? -1 : ancestors.back();
    v.tree = tree_idx;
    for (int a : ancestors) info.internal[static_cast<std::size_t>(a)].descendants.push_back(idx);
    info.internal.push_back(std::move(v));
    ancestors.push_back(idx);
    for (int i = 0; i < node.degree(); ++i) {
      path.push_back(i + 1);
      self(self, node.children[static_cast<std::size_t>(i)], tree_idx);
      path.pop_back();
    }
    ancestors.pop_back();
  };

  for (std::size_t t = 0; t < forest.trees.size(); ++t)
    visit(visit, forest.trees[t], static_cast<int>(t));
  for (ShapeVertex& v : info.internal) v.hook = 1 + static_cast<long long>(v.descendants.size());
  return info;
}

}  // namespace hookforest
