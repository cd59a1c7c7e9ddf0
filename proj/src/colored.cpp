#include "hookforest/colored.hpp"

#include <algorithm>
#include <numeric>

#include "hookforest/algebra.hpp"

namespace hookforest {

PartitionS PartitionS::from_classes(std::vector<std::vector<int>> classes_by_degree) {
  PartitionS s;
  s.classes_ = std::move(classes_by_degree);
  long long n = 0;
  for (const auto& cls : s.classes_) n += static_cast<long long>(cls.size());
  s.n_ = n;
  s.degree_by_label_.assign(static_cast<std::size_t>(n), 0);
  for (std::size_t d = 0; d < s.classes_.size(); ++d) {
    auto& cls = s.classes_[d];
    std::sort(cls.begin(), cls.end());
    for (int label : cls) {
      if (label < 1 || label > n) throw error("partition label " + std::to_string(label) + " outside [n]");
      auto& slot = s.degree_by_label_[static_cast<std::size_t>(label - 1)];
      if (slot != 0) throw error("partition classes are not disjoint at label " + std::to_string(label));
      slot = static_cast<long long>(d + 1);
    }
  }
  for (long long deg : s.degree_by_label_)
    if (deg == 0) throw error("partition classes do not cover [n]");
  return s;
}

const std::vector<int>& PartitionS::class_of_degree(long long d) const {
  static const std::vector<int> kEmpty;
  if (d < 1 || d > static_cast<long long>(classes_.size())) return kEmpty;
  return classes_[static_cast<std::size_t>(d - 1)];
}

long long PartitionS::degree_of_label(int label) const {
  if (label < 1 || label > n_) throw error("label " + std::to_string(label) + " outside [n]");
  return degree_by_label_[static_cast<std::size_t>(label - 1)];
}

std::vector<long long> PartitionS::class_sizes() const {
  std::vector<long long> sizes;
  sizes.reserve(classes_.size());
  for (const auto& cls : classes_) sizes.push_back(static_cast<long long>(cls.size()));
  while (!sizes.empty() && sizes.back() == 0) sizes.pop_back();
  return sizes;
}

std::string PartitionS::to_string() const {
  std::string out = "(";
  for (std::size_t d = 0; d < classes_.size(); ++d) {
    if (d) out += ';';
    out += "S" + std::to_string(d + 1) + "={";
    for (std::size_t i = 0; i < classes_[d].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(classes_[d][i]);
    }
    out += '}';
  }
  out += ')';
  return out;
}

namespace {

// Properness of every internal vertex for one labelling, shape fixed.
std::vector<bool> proper_flags(const ShapeInfo& shape, const std::vector<int>& labels) {
  std::vector<bool> proper(shape.internal.size(), true);
  for (std::size_t i = 0; i < shape.internal.size(); ++i) {
    for (int d : shape.internal[i].descendants) {
      if (labels[static_cast<std::size_t>(d)] < labels[i]) {
        proper[i] = false;
        break;
      }
    }
  }
  return proper;
}

int internal_index_of(const ShapeInfo& shape, const VertexRef& ref) {
  for (std::size_t i = 0; i < shape.internal.size(); ++i)
    if (shape.internal[i].ref == ref) return static_cast<int>(i);
  return -1;
}

// Walk all labellings of the shape (lex order over the preorder label word),
// optionally restricted to a partition; yields the properness flags too.
void for_each_labelling(const ShapeInfo& shape, const PartitionS* filter, bool first_tree_min,
                        const std::function<void(const std::vector<int>&, const std::vector<bool>&)>& fn) {
  const std::size_t n = shape.internal.size();
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  do {
    bool ok = true;
    if (filter) {
      for (std::size_t i = 0; i < n && ok; ++i)
        ok = filter->degree_of_label(labels[i]) == shape.internal[i].degree;
    }
    if (ok && first_tree_min && n > 0) {
      std::size_t min_pos = static_cast<std::size_t>(
          std::find(labels.begin(), labels.end(), 1) - labels.begin());
      ok = shape.internal[min_pos].tree == 0;
    }
    if (ok) fn(labels, proper_flags(shape, labels));
  } while (std::next_permutation(labels.begin(), labels.end()));
}

}  // namespace

bool is_proper(const LabelledForest& forest, const VertexRef& v) {
  ShapeInfo shape = ShapeInfo::analyze(forest.shape);
  if (forest.labels.size() != shape.internal.size())
    throw error("labelled forest has wrong label count");
  int idx = internal_index_of(shape, v);
  if (idx < 0) throw error("vertex ref does not name an internal vertex");
  for (int d : shape.internal[static_cast<std::size_t>(idx)].descendants)
    if (forest.labels[static_cast<std::size_t>(d)] < forest.labels[static_cast<std::size_t>(idx)])
      return false;
  return true;
}

Int count_colorings(const LabelledForest& forest, long long k) {
  if (k < 0) throw error("negative color count");
  ShapeInfo shape = ShapeInfo::analyze(forest.shape);
  if (forest.labels.size() != shape.internal.size())
    throw error("labelled forest has wrong label count");
  std::vector<bool> proper = proper_flags(shape, forest.labels);
  Int out(1);
  for (std::size_t i = 0; i < shape.internal.size(); ++i)
    out *= make_int(shape.internal[i].degree + (proper[i] ? 0 : k));
  return out;
}

namespace {

void require_filter_matches(const DegreeSequence& r, const std::optional<PartitionS>& filter) {
  if (!filter) return;
  if (filter->n() != r.internal_count())
    throw error("partition has wrong number of labels for this type");
  std::vector<long long> sizes = filter->class_sizes();
  for (long long d = 1; d <= std::max<long long>(filter->max_degree(), r.max_degree()); ++d) {
    long long size = d <= static_cast<long long>(sizes.size()) ? sizes[static_cast<std::size_t>(d - 1)] : 0;
    if (size != r.count(d)) throw error("partition class sizes do not match the type");
  }
}

}  // namespace

void for_each_colored(const DegreeSequence& r, long long k,
                      const std::optional<PartitionS>& filter, bool first_tree_min,
                      const std::function<void(const ColoredLabelledForest&)>& fn) {
  if (k < 0) throw error("negative color count");
  require_filter_matches(r, filter);

  for (const PlaneForest& shape_forest : enumerate_forests(r)) {
    ShapeInfo shape = ShapeInfo::analyze(shape_forest);
    const std::size_t n = shape.internal.size();
    for_each_labelling(
        shape, filter ? &*filter : nullptr, first_tree_min,
        [&](const std::vector<int>& labels, const std::vector<bool>& proper) {
          ColoredLabelledForest out;
          out.base.shape = shape_forest;
          out.base.labels = labels;
          out.k = k;
          out.colors.assign(n, Color{});
          // odometer over per-vertex color ordinals, edge colors first
          std::vector<long long> options(n), digit(n, 1);
          for (std::size_t i = 0; i < n; ++i)
            options[i] = shape.internal[i].degree + (proper[i] ? 0 : k);
          while (true) {
            for (std::size_t i = 0; i < n; ++i) {
              long long d = shape.internal[i].degree;
              out.colors[i] = digit[i] <= d ? Color{false, static_cast<int>(digit[i])}
                                            : Color{true, static_cast<int>(digit[i] - d)};
            }
            fn(out);
            std::size_t pos = n;
            while (pos > 0) {
              --pos;
              if (digit[pos] < options[pos]) {
                ++digit[pos];
                std::fill(digit.begin() + static_cast<std::ptrdiff_t>(pos) + 1, digit.end(), 1);
                break;
              }
              if (pos == 0) return;
            }
            if (n == 0) return;
          }
        });
  }
}

std::vector<ColoredLabelledForest> enumerate_colored(const DegreeSequence& r, long long k,
                                                     const std::optional<PartitionS>& filter,
                                                     bool first_tree_min) {
  std::vector<ColoredLabelledForest> out;
  for_each_colored(r, k, filter, first_tree_min,
                   [&](const ColoredLabelledForest& f) { out.push_back(f); });
  return out;
}

Int count_colored(const DegreeSequence& r, long long k, const std::optional<PartitionS>& filter,
                  bool first_tree_min) {
  if (k < 0) throw error("negative color count");
  require_filter_matches(r, filter);
  Int total(0);
  for (const PlaneForest& shape_forest : enumerate_forests(r)) {
    ShapeInfo shape = ShapeInfo::analyze(shape_forest);
    for_each_labelling(shape, filter ? &*filter : nullptr, first_tree_min,
                       [&](const std::vector<int>&, const std::vector<bool>& proper) {
                         Int product(1);
                         for (std::size_t i = 0; i < shape.internal.size(); ++i)
                           product *= make_int(shape.internal[i].degree + (proper[i] ? 0 : k));
                         total += product;
                       });
  }
  return total;
}

Rat lemma_ccf_lhs(const DegreeSequence& r, long long k) {
  if (k < 0) throw error("negative color count");
  const Rat n_fact{factorial(r.internal_count())};
  Rat total(0);
  for (const PlaneForest& forest : enumerate_forests(r)) {
    ShapeInfo shape = ShapeInfo::analyze(forest);
    Rat product(1);
    for (const ShapeVertex& v : shape.internal)
      product *= make_rat(make_int((v.degree + k) * v.hook - k), make_int(v.hook));
    total += n_fact * product;
  }
  return total;
}

namespace {

Int cfs_product(const DegreeSequence& r, long long k) {
  Int out(make_int(r.num_trees()));
  for (long long d = 1; d <= r.max_degree(); ++d)
    out *= int_pow(make_int(d), static_cast<unsigned long>(r.count(d)));
  for (long long i = 1; i <= r.internal_count() - 1; ++i)
    out *= make_int(r.leaf_count() + i * (1 + k));
  return out;
}

}  // namespace

Int prop_cf_count(const DegreeSequence& r, long long k) {
  if (k < 0) throw error("negative color count");
  std::vector<long long> parts;
  for (long long d = 1; d <= r.max_degree(); ++d) parts.push_back(r.count(d));
  return multinomial(r.internal_count(), parts) * cfs_product(r, k);
}

Int thm_cfs_count(const DegreeSequence& r, long long k) {
  if (k < 0) throw error("negative color count");
  return cfs_product(r, k);
}

namespace {

PartitionS partition_from_degree_word(const std::vector<long long>& word, long long max_degree) {
  std::vector<std::vector<int>> classes(static_cast<std::size_t>(max_degree));
  for (std::size_t i = 0; i < word.size(); ++i)
    classes[static_cast<std::size_t>(word[i] - 1)].push_back(static_cast<int>(i + 1));
  return PartitionS::from_classes(std::move(classes));
}

}  // namespace

std::vector<PartitionS> partitions(const DegreeSequence& r) {
  std::vector<long long> word;
  for (long long d = 1; d <= r.max_degree(); ++d)
    for (long long i = 0; i < r.count(d); ++i) word.push_back(d);
  std::sort(word.begin(), word.end());
  std::vector<PartitionS> out;
  if (word.empty()) {
    out.push_back(PartitionS::from_classes({}));
    return out;
  }
  do {
    out.push_back(partition_from_degree_word(word, r.max_degree()));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

namespace {

void require_same_type(const PartitionS& s1, const PartitionS& s2) {
  if (s1.n() != s2.n() || s1.class_sizes() != s2.class_sizes())
    throw error("partitions are of different type");
}

}  // namespace

bool adjacent(const PartitionS& s1, const PartitionS& s2) {
  require_same_type(s1, s2);
  std::vector<int> diff;
  for (int label = 1; label <= s1.n(); ++label)
    if (s1.degree_of_label(label) != s2.degree_of_label(label)) diff.push_back(label);
  if (diff.size() != 2 || diff[1] != diff[0] + 1) return false;
  return s1.degree_of_label(diff[0]) == s2.degree_of_label(diff[1]) &&
         s1.degree_of_label(diff[1]) == s2.degree_of_label(diff[0]);
}

std::vector<PartitionS> partition_path(const PartitionS& s1, const PartitionS& s2) {
  require_same_type(s1, s2);
  const long long n = s1.n();
  std::vector<long long> word(static_cast<std::size_t>(n));
  std::vector<long long> target(static_cast<std::size_t>(n));
  for (int label = 1; label <= n; ++label) {
    word[static_cast<std::size_t>(label - 1)] = s1.degree_of_label(label);
    target[static_cast<std::size_t>(label - 1)] = s2.degree_of_label(label);
  }
  long long max_degree = std::max(s1.max_degree(), s2.max_degree());

  std::vector<PartitionS> path{s1};
  for (long long i = 0; i < n; ++i) {
    if (word[static_cast<std::size_t>(i)] == target[static_cast<std::size_t>(i)]) continue;
    long long j = i + 1;
    while (word[static_cast<std::size_t>(j)] != target[static_cast<std::size_t>(i)]) ++j;
    // bubble the wanted class from position j down to i; every hop swaps
    // distinct classes because j was minimal
    for (long long p = j; p > i; --p) {
      std::swap(word[static_cast<std::size_t>(p)], word[static_cast<std::size_t>(p - 1)]);
      path.push_back(partition_from_degree_word(word, max_degree));
    }
  }
  return path;
}

namespace {

bool colored_check(const ColoredLabelledForest& forest, const PartitionS* filter,
                   bool first_tree_min, std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (forest.k < 0) return fail("negative color count");
  ShapeInfo shape = ShapeInfo::analyze(forest.base.shape);
  const std::size_t n = shape.internal.size();
  if (forest.base.labels.size() != n) return fail("label count does not match internal vertices");
  if (forest.colors.size() != n) return fail("color count does not match internal vertices");

  std::vector<bool> seen(n, false);
  for (int label : forest.base.labels) {
    if (label < 1 || label > static_cast<int>(n)) return fail("label outside [n]");
    if (seen[static_cast<std::size_t>(label - 1)]) return fail("duplicate label");
    seen[static_cast<std::size_t>(label - 1)] = true;
  }

  std::vector<bool> proper = proper_flags(shape, forest.base.labels);
  for (std::size_t i = 0; i < n; ++i) {
    const Color& c = forest.colors[i];
    if (c.index < 1) return fail("color index below 1");
    if (!c.special && c.index > shape.internal[i].degree)
      return fail("edge color index exceeds vertex degree");
    if (c.special && c.index > forest.k) return fail("special color index exceeds k");
    if (c.special && proper[i]) return fail("proper vertex carries a special color");
  }

  if (filter) {
    if (filter->n() != static_cast<long long>(n)) return fail("partition size mismatch");
    for (std::size_t i = 0; i < n; ++i)
      if (filter->degree_of_label(forest.base.labels[i]) != shape.internal[i].degree)
        return fail("label " + std::to_string(forest.base.labels[i]) +
                    " is not in the class of its degree");
  }

  if (first_tree_min && n > 0) {
    std::size_t min_pos = static_cast<std::size_t>(
        std::find(forest.base.labels.begin(), forest.base.labels.end(), 1) -
        forest.base.labels.begin());
    if (shape.internal[min_pos].tree != 0) return fail("minimum label is not in the first tree");
  }
  return true;
}

}  // namespace

void validate_colored(const ColoredLabelledForest& forest, const PartitionS* filter,
                      bool first_tree_min) {
  std::string why;
  if (!colored_check(forest, filter, first_tree_min, &why))
    throw error("invalid colored labelled forest: " + why);
}

bool is_valid_colored(const ColoredLabelledForest& forest, const PartitionS* filter,
                      bool first_tree_min) {
  return colored_check(forest, filter, first_tree_min, nullptr);
}

namespace {

void colored_key_node(const PlaneTree& node, const std::vector<int>& labels,
                      const std::vector<Color>& colors, std::size_t& cursor, std::string& out) {
  if (node.is_leaf()) {
    out += 'L';
    return;
  }
  std::size_t idx = cursor++;
  out += '(';
  out += std::to_string(labels[idx]);
  out += colors[idx].special ? 's' : 'e';
  out += std::to_string(colors[idx].index);
  for (const PlaneTree& child : node.children) colored_key_node(child, labels, colors, cursor, out);
  out += ')';
}

}  // namespace

std::string colored_key(const ColoredLabelledForest& forest) {
  std::string out = "k" + std::to_string(forest.k) + "|";
  std::size_t cursor = 0;
  for (const PlaneTree& tree : forest.base.shape.trees) {
    colored_key_node(tree, forest.base.labels, forest.colors, cursor, out);
    out += '|';
  }
  return out;
}

}  // namespace hookforest
