#include "hookforest/bijection.hpp"

#include <algorithm>
#include <numeric>

namespace hookforest {

std::string psi_case_name(PsiCase c) {
  switch (c) {
    case PsiCase::i: return "i";
    case PsiCase::ii: return "ii";
    case PsiCase::iii: return "iii";
    case PsiCase::iv: return "iv";
    case PsiCase::v: return "v";
    case PsiCase::vi: return "vi";
  }
  throw error("unknown psi case");
}

namespace {

// Working representation for tree surgery: labels and colors live on the
// nodes themselves. label == 0 marks a leaf.
struct CNode {
  std::vector<CNode> children;
  int label = 0;
  Color color{};

  bool is_leaf() const { return children.empty(); }
  int degree() const { return static_cast<int>(children.size()); }
};

void fill_cnode(const PlaneTree& tree, const std::vector<int>& labels,
                const std::vector<Color>& colors, std::size_t& cursor, CNode& out) {
  if (!tree.is_leaf()) {
    out.label = labels[cursor];
    out.color = colors[cursor];
    ++cursor;
  }
  out.children.resize(tree.children.size());
  for (std::size_t i = 0; i < tree.children.size(); ++i)
    fill_cnode(tree.children[i], labels, colors, cursor, out.children[i]);
}

std::vector<CNode> to_cnodes(const ColoredLabelledForest& forest) {
  std::vector<CNode> out(forest.base.shape.trees.size());
  std::size_t cursor = 0;
  for (std::size_t t = 0; t < out.size(); ++t)
    fill_cnode(forest.base.shape.trees[t], forest.base.labels, forest.colors, cursor, out[t]);
  return out;
}

void strip_cnode(const CNode& node, PlaneTree& tree, std::vector<int>& labels,
                 std::vector<Color>& colors) {
  if (!node.is_leaf()) {
    labels.push_back(node.label);
    colors.push_back(node.color);
  }
  tree.children.resize(node.children.size());
  for (std::size_t i = 0; i < node.children.size(); ++i)
    strip_cnode(node.children[i], tree.children[i], labels, colors);
}

ColoredLabelledForest from_cnodes(const std::vector<CNode>& nodes, long long k) {
  ColoredLabelledForest out;
  out.k = k;
  out.base.shape.trees.resize(nodes.size());
  for (std::size_t t = 0; t < nodes.size(); ++t)
    strip_cnode(nodes[t], out.base.shape.trees[t], out.base.labels, out.colors);
  return out;
}

// tree index + 0-based child steps
struct NodePath {
  int tree = -1;
  std::vector<int> steps;
};

bool find_label(const CNode& node, int label, std::vector<int>& steps) {
  if (node.is_leaf()) return false;
  if (node.label == label) return true;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    steps.push_back(static_cast<int>(i));
    if (find_label(node.children[i], label, steps)) return true;
    steps.pop_back();
  }
  return false;
}

NodePath locate(const std::vector<CNode>& forest, int label) {
  for (std::size_t t = 0; t < forest.size(); ++t) {
    std::vector<int> steps;
    if (find_label(forest[t], label, steps))
      return NodePath{static_cast<int>(t), std::move(steps)};
  }
  throw error("label " + std::to_string(label) + " not found in forest");
}

CNode* walk(std::vector<CNode>& forest, const NodePath& path) {
  CNode* node = &forest[static_cast<std::size_t>(path.tree)];
  for (int step : path.steps) node = &node->children[static_cast<std::size_t>(step)];
  return node;
}

bool strict_prefix(const NodePath& shorter, const NodePath& longer) {
  if (shorter.tree != longer.tree || shorter.steps.size() >= longer.steps.size()) return false;
  return std::equal(shorter.steps.begin(), shorter.steps.end(), longer.steps.begin());
}

int min_label_in_subtree(const CNode& node, bool include_root) {
  int best = 0;  // 0 = none
  if (!node.is_leaf() && include_root) best = node.label;
  for (const CNode& child : node.children) {
    int sub = min_label_in_subtree(child, true);
    if (sub != 0 && (best == 0 || sub < best)) best = sub;
  }
  return best;
}

// Returns the swap position: the label i such that `to` is `from` with i and
// i+1 exchanged. Errors unless the partitions are adjacent.
int swap_label_of(const PartitionS& from, const PartitionS& to) {
  if (!adjacent(from, to)) throw error("partitions are not adjacent");
  for (int label = 1; label < from.n(); ++label)
    if (from.degree_of_label(label) != to.degree_of_label(label)) return label;
  throw error("adjacent partitions with no swap position (internal error)");
}

}  // namespace

PsiResult psi(const ColoredLabelledForest& forest, const PartitionS& from, const PartitionS& to) {
  const int i = swap_label_of(from, to);
  validate_colored(forest, &from);

  std::vector<CNode> work = to_cnodes(forest);
  NodePath p1 = locate(work, i);
  NodePath p2 = locate(work, i + 1);
  CNode* v1 = walk(work, p1);
  CNode* v2 = walk(work, p2);

  const bool v1_below_v2 = strict_prefix(p2, p1);
  const bool v2_below_v1 = strict_prefix(p1, p2);

  PsiCase applied;
  if (!v1_below_v2 && !v2_below_v1) {
    applied = PsiCase::i;
  } else if (v2_below_v1) {
    int min_below_v1 = min_label_in_subtree(*v1, false);
    bool v1_proper = (min_below_v1 == 0 || min_below_v1 > v1->label);
    applied = v1_proper ? PsiCase::iii : PsiCase::ii;
  } else {
    // v1 is below v2; is some label smaller than i strictly below v2?
    int min_below_v2 = min_label_in_subtree(*v2, false);
    if (min_below_v2 != 0 && min_below_v2 < i) {
      applied = PsiCase::iv;
    } else if (!v2->color.special) {
      applied = PsiCase::v;
    } else {
      applied = PsiCase::vi;
    }
  }

  if (applied != PsiCase::vi) {
    std::swap(v1->label, v2->label);
  } else {
    // Five-tree surgery. beta: child position of v2 leading to v1;
    // alpha: v1's edge color; w: alpha-th child of v1.
    const int beta = p1.steps[p2.steps.size()] + 1;
    if (v1->color.special) throw error("psi: proper vertex with special color (invalid input)");
    const int alpha = v1->color.index;
    const Color v2_color = v2->color;

    CNode sub_v2 = std::move(*v2);  // root: the vertex labeled i+1
    std::vector<int> rel_v1(p1.steps.begin() + static_cast<std::ptrdiff_t>(p2.steps.size()),
                            p1.steps.end());
    CNode branch_u = std::move(sub_v2.children[static_cast<std::size_t>(beta - 1)]);
    const bool u_is_v1 = rel_v1.size() == 1;

    CNode node_v1;
    CNode* v1_slot = nullptr;
    if (u_is_v1) {
      node_v1 = std::move(branch_u);
    } else {
      v1_slot = &branch_u;
      for (std::size_t s = 1; s < rel_v1.size(); ++s)
        v1_slot = &v1_slot->children[static_cast<std::size_t>(rel_v1[s])];
      node_v1 = std::move(*v1_slot);
    }
    CNode t5 = std::move(node_v1.children[static_cast<std::size_t>(alpha - 1)]);

    // reassemble: v2 gets the w-subtree at beta, the v2 block fills v1's old
    // slot, and the whole thing hangs below v1 at alpha
    sub_v2.children[static_cast<std::size_t>(beta - 1)] = std::move(t5);
    sub_v2.color = Color{false, beta};
    sub_v2.label = i;
    node_v1.color = v2_color;
    node_v1.label = i + 1;
    if (u_is_v1) {
      node_v1.children[static_cast<std::size_t>(alpha - 1)] = std::move(sub_v2);
    } else {
      *v1_slot = std::move(sub_v2);
      node_v1.children[static_cast<std::size_t>(alpha - 1)] = std::move(branch_u);
    }
    *v2 = std::move(node_v1);  // v2 still points at position p2
  }

  PsiResult result{from_cnodes(work, forest.k), applied};
  if (!is_valid_colored(result.forest, &to))
    throw error("psi produced a forest outside the target partition set (internal error)");
  return result;
}

ColoredLabelledForest psi_transport(const ColoredLabelledForest& forest,
                                    const std::vector<PartitionS>& path) {
  if (path.empty()) throw error("psi transport needs a nonempty path");
  validate_colored(forest, &path.front());
  ColoredLabelledForest current = forest;
  for (std::size_t step = 0; step + 1 < path.size(); ++step)
    current = psi(current, path[step], path[step + 1]).forest;
  return current;
}

namespace {

struct RemainingLabel {
  int label;
  int degree;
};

long long leaf_count_from(const PartitionS& s, long long num_trees) {
  long long r0 = num_trees;
  for (long long d = 1; d <= s.max_degree(); ++d)
    r0 += (d - 1) * static_cast<long long>(s.class_of_degree(d).size());
  return r0;
}

// Shared window arithmetic: total width with n' labels remaining must be
// r0 + (n'-1)(1+k) regardless of the current tree count.
long long window_total(long long ell_cur, const std::vector<RemainingLabel>& remaining,
                       long long k) {
  long long total = ell_cur + remaining.front().degree - 1;
  for (std::size_t idx = 1; idx < remaining.size(); ++idx)
    total += remaining[idx].degree + k;
  return total;
}

std::vector<CNode> decode_rec(const std::vector<RemainingLabel>& remaining, long long ell_cur,
                              long long r0, long long k, const CodeSequence& codes) {
  const std::size_t n_rem = remaining.size();
  const RemainingLabel m = remaining.front();
  const int g_m = codes.g.at(m.label);

  if (n_rem == 1) {
    CNode root;
    root.label = m.label;
    root.color = Color{false, g_m};
    root.children.resize(static_cast<std::size_t>(m.degree));
    std::vector<CNode> forest;
    forest.reserve(static_cast<std::size_t>(ell_cur));
    forest.push_back(std::move(root));
    for (long long t = 1; t < ell_cur; ++t) forest.emplace_back();
    return forest;
  }

  const long long f_val = codes.f.at(static_cast<int>(n_rem) - 1);
  const long long first_window = ell_cur + m.degree - 1;
  if (window_total(ell_cur, remaining, k) != r0 + static_cast<long long>(n_rem - 1) * (1 + k))
    throw error("decode window widths drifted from the f bound (internal error)");

  if (f_val <= first_window) {
    // root is the minimum remaining label, colored by its edge color
    std::vector<RemainingLabel> rest(remaining.begin() + 1, remaining.end());
    std::vector<CNode> inner = decode_rec(rest, first_window, r0, k, codes);
    std::vector<CNode> rotated(inner.size());
    for (std::size_t t = 0; t < inner.size(); ++t)
      rotated[(static_cast<std::size_t>(f_val - 1) + t) % inner.size()] = std::move(inner[t]);
    CNode root;
    root.label = m.label;
    root.color = Color{false, g_m};
    root.children.assign(std::make_move_iterator(rotated.begin()),
                         std::make_move_iterator(rotated.begin() + m.degree));
    std::vector<CNode> forest;
    forest.push_back(std::move(root));
    for (std::size_t t = static_cast<std::size_t>(m.degree); t < rotated.size(); ++t)
      forest.push_back(std::move(rotated[t]));
    return forest;
  }

  // root is a larger label; walk the windows (in increasing label order) to
  // find which one, and which of its d+k colors
  long long pos = f_val - first_window;
  std::size_t chosen = 0;
  for (std::size_t idx = 1; idx < n_rem; ++idx) {
    long long width = remaining[idx].degree + k;
    if (pos <= width) {
      chosen = idx;
      break;
    }
    pos -= width;
  }
  if (chosen == 0) throw error("f[" + std::to_string(n_rem - 1) + "] beyond the window total (internal error)");
  const RemainingLabel root_info = remaining[chosen];
  Color root_color = pos <= root_info.degree
                         ? Color{false, static_cast<int>(pos)}
                         : Color{true, static_cast<int>(pos - root_info.degree)};
  const int g_i = codes.g.at(root_info.label);

  std::vector<RemainingLabel> rest;
  rest.reserve(n_rem - 1);
  for (std::size_t idx = 0; idx < n_rem; ++idx)
    if (idx != chosen) rest.push_back(remaining[idx]);

  std::vector<CNode> inner = decode_rec(rest, ell_cur + root_info.degree - 1, r0, k, codes);
  CNode root;
  root.label = root_info.label;
  root.color = root_color;
  root.children.resize(static_cast<std::size_t>(root_info.degree));
  // the first d_i inner trees rotate back so the one holding the minimum
  // label lands at child position g_i
  for (int t = 0; t < root_info.degree; ++t)
    root.children[static_cast<std::size_t>((g_i - 1 + t) % root_info.degree)] =
        std::move(inner[static_cast<std::size_t>(t)]);
  std::vector<CNode> forest;
  forest.push_back(std::move(root));
  for (std::size_t t = static_cast<std::size_t>(root_info.degree); t < inner.size(); ++t)
    forest.push_back(std::move(inner[t]));
  return forest;
}

}  // namespace

ColoredLabelledForest decode(const PartitionS& s, long long k, long long num_trees,
                             const CodeSequence& codes) {
  if (s.n() < 1) throw error("decode requires at least one labelled vertex");
  if (k < 0) throw error("negative color count");
  if (num_trees < 1) throw error("decode requires at least one tree");
  if (codes.k != k) throw error("code sequence k does not match");

  const long long n = s.n();
  const long long r0 = leaf_count_from(s, num_trees);
  if (r0 < 1) throw error("partition and tree count imply a forest without leaves");

  // bounds first, errors name the offending entry
  for (int label = 1; label <= n; ++label) {
    auto it = codes.g.find(label);
    if (it == codes.g.end()) throw error("missing g[" + std::to_string(label) + "]");
    long long d = s.degree_of_label(label);
    if (it->second < 1 || it->second > d)
      throw error("g[" + std::to_string(label) + "] = " + std::to_string(it->second) +
                  " out of range [1," + std::to_string(d) + "]");
  }
  if (static_cast<long long>(codes.g.size()) != n) throw error("unexpected extra g entries");
  for (int j = 1; j <= n - 1; ++j) {
    auto it = codes.f.find(j);
    if (it == codes.f.end()) throw error("missing f[" + std::to_string(j) + "]");
    long long bound = r0 + j * (1 + k);
    if (it->second < 1 || it->second > bound)
      throw error("f[" + std::to_string(j) + "] = " + std::to_string(it->second) +
                  " out of range [1," + std::to_string(bound) + "]");
  }
  if (static_cast<long long>(codes.f.size()) != n - 1) throw error("unexpected extra f entries");

  std::vector<RemainingLabel> remaining;
  remaining.reserve(static_cast<std::size_t>(n));
  for (int label = 1; label <= n; ++label)
    remaining.push_back({label, static_cast<int>(s.degree_of_label(label))});

  std::vector<CNode> nodes = decode_rec(remaining, num_trees, r0, k, codes);
  ColoredLabelledForest out = from_cnodes(nodes, k);
  validate_colored(out, &s, /*first_tree_min=*/true);
  return out;
}

CodeSequence encode(const ColoredLabelledForest& forest, const PartitionS& s) {
  validate_colored(forest, &s, /*first_tree_min=*/true);
  const long long n = s.n();
  if (n < 1) throw error("encode requires at least one labelled vertex");

  CodeSequence codes;
  codes.k = forest.k;
  std::vector<CNode> work = to_cnodes(forest);
  std::vector<int> live(static_cast<std::size_t>(n));
  std::iota(live.begin(), live.end(), 1);  // labels still present, sorted

  while (!live.empty()) {
    const long long remaining = static_cast<long long>(live.size());
    const int min_label = live.front();
    CNode& first = work.front();
    if (first.is_leaf())
      throw error("minimum label left the first tree during encoding (internal error)");
    const int root_label = first.label;
    const int d = first.degree();

    if (remaining == 1) {
      if (root_label != min_label || first.color.special)
        throw error("degenerate final tree during encoding (internal error)");
      codes.g[root_label] = first.color.index;
      break;
    }

    if (root_label == min_label) {
      if (first.color.special)
        throw error("minimum-label root carries a special color (internal error)");
      codes.g[root_label] = first.color.index;
      // pop the root; its subtrees take the leading positions
      std::vector<CNode> next;
      next.reserve(work.size() + static_cast<std::size_t>(d) - 1);
      for (CNode& child : first.children) next.push_back(std::move(child));
      for (std::size_t t = 1; t < work.size(); ++t) next.push_back(std::move(work[t]));
      // the next-smallest label's tree moves to the front
      const int next_min = live[1];
      std::size_t p = 0;
      while (min_label_in_subtree(next[p], true) != next_min) ++p;
      codes.f[static_cast<int>(remaining) - 1] = static_cast<int>(p) + 1;
      std::rotate(next.begin(), next.begin() + static_cast<std::ptrdiff_t>(p), next.end());
      work = std::move(next);
    } else {
      // improper root: position within its window records its color
      long long ell_cur = static_cast<long long>(work.size());
      long long f_val = ell_cur + s.degree_of_label(min_label) - 1;
      for (int label : live)
        if (label > min_label && label < root_label) f_val += s.degree_of_label(label) + forest.k;
      f_val += first.color.special ? d + first.color.index : first.color.index;
      codes.f[static_cast<int>(remaining) - 1] = static_cast<int>(f_val);

      int child_with_min = -1;
      for (int c = 0; c < d; ++c) {
        int sub = min_label_in_subtree(first.children[static_cast<std::size_t>(c)], true);
        if (sub == min_label) {
          child_with_min = c;
          break;
        }
      }
      if (child_with_min < 0)
        throw error("minimum label not below the improper root (internal error)");
      codes.g[root_label] = child_with_min + 1;

      std::vector<CNode> next;
      next.reserve(work.size() + static_cast<std::size_t>(d) - 1);
      for (CNode& child : first.children) next.push_back(std::move(child));
      for (std::size_t t = 1; t < work.size(); ++t) next.push_back(std::move(work[t]));
      std::rotate(next.begin(), next.begin() + child_with_min,
                  next.begin() + static_cast<std::ptrdiff_t>(d));
      work = std::move(next);
    }
    live.erase(std::find(live.begin(), live.end(), root_label));
  }
  return codes;
}

}  // namespace hookforest
