#ifndef HOOKFOREST_COLORED_HPP
#define HOOKFOREST_COLORED_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hookforest/forest.hpp"

namespace hookforest {

// A vertex color: one of the d_v edge colors of the vertex, or one of the k
// shared special colors. Special colors are only legal on improper vertices.
struct Color {
  bool special = false;
  int index = 1;  // 1..d_v for edge colors, 1..k for special colors

  bool operator==(const Color& other) const = default;
};

// Plane forest whose internal vertices carry a bijective labelling onto
// {1..n}. labels[i] belongs to the i-th internal vertex in preorder.
struct LabelledForest {
  PlaneForest shape;
  std::vector<int> labels;

  bool operator==(const LabelledForest& other) const = default;
};

struct ColoredLabelledForest {
  LabelledForest base;
  long long k = 0;
  std::vector<Color> colors;  // one per internal vertex, preorder

  bool operator==(const ColoredLabelledForest& other) const = default;
};

// Partition of the labels {1..n} into classes S_d indexed by degree d >= 1,
// with |S_d| = r_d. Leaves carry no label, so there is no S_0.
class PartitionS {
 public:
  static PartitionS from_classes(std::vector<std::vector<int>> classes_by_degree);

  long long n() const { return n_; }
  long long max_degree() const { return static_cast<long long>(classes_.size()); }
  const std::vector<int>& class_of_degree(long long d) const;
  // degree whose class contains the label
  long long degree_of_label(int label) const;
  // r_1, r_2, ... (class sizes); no r_0 — that is supplied by context.
  std::vector<long long> class_sizes() const;

  bool operator==(const PartitionS& other) const = default;
  std::string to_string() const;

 private:
  std::vector<std::vector<int>> classes_;  // classes_[d-1], each sorted
  std::vector<long long> degree_by_label_;  // index label-1
  long long n_ = 0;
};

// True iff no internal strict descendant of v carries a smaller label.
bool is_proper(const LabelledForest& forest, const VertexRef& v);

// prod over proper vertices of d_v times prod over improper of (d_v + k).
Int count_colorings(const LabelledForest& forest, long long k);

// Exhaustive enumeration of k-colored labelled forests of type r, optionally
// restricted to a partition (label of v must lie in S_{d_v}) and/or to
// forests whose minimum label sits in the first tree. Canonical order:
// forest order, then labelling lex order, then coloring lex order.
void for_each_colored(const DegreeSequence& r, long long k,
                      const std::optional<PartitionS>& filter, bool first_tree_min,
                      const std::function<void(const ColoredLabelledForest&)>& fn);

std::vector<ColoredLabelledForest> enumerate_colored(const DegreeSequence& r, long long k,
                                                     const std::optional<PartitionS>& filter = {},
                                                     bool first_tree_min = false);

// Exhaustive count; walks labellings and multiplies per-vertex color choices
// instead of materializing every coloring.
Int count_colored(const DegreeSequence& r, long long k,
                  const std::optional<PartitionS>& filter = {}, bool first_tree_min = false);

// sum over forests of type r of n! * prod((d_v + k) - k/h_v); integral and
// equal to the number of k-colored labelled forests of type r.
Rat lemma_ccf_lhs(const DegreeSequence& r, long long k);

// multinomial(n; r_1, r_2, ...) * ell * prod d^{r_d} * prod_{i=1}^{n-1}(r0 + i(1+k)).
Int prop_cf_count(const DegreeSequence& r, long long k);

// ell * prod d^{r_d} * prod_{i=1}^{n-1}(r0 + i(1+k)); the per-partition count
// for n >= 1, independent of the partition.
Int thm_cfs_count(const DegreeSequence& r, long long k);

// All partitions of [n] with |S_d| = r.count(d), ordered lexicographically
// by the degree-of-label word.
std::vector<PartitionS> partitions(const DegreeSequence& r);

// True iff s2 is s1 with some labels i and i+1 swapped across distinct classes.
bool adjacent(const PartitionS& s1, const PartitionS& s2);

// Path s1 = p_0, p_1, ..., p_m = s2 with consecutive entries adjacent.
std::vector<PartitionS> partition_path(const PartitionS& s1, const PartitionS& s2);

// Full membership check for CF_{r,k,S}: shape/label/color invariants, label
// classes per S when given, min label in first tree when required.
void validate_colored(const ColoredLabelledForest& forest, const PartitionS* filter = nullptr,
                      bool first_tree_min = false);
bool is_valid_colored(const ColoredLabelledForest& forest, const PartitionS* filter = nullptr,
                      bool first_tree_min = false);

// Compact canonical encoding, usable as a set/map key.
std::string colored_key(const ColoredLabelledForest& forest);

}  // namespace hookforest

#endif
