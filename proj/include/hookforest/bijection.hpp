#ifndef HOOKFOREST_BIJECTION_HPP
#define HOOKFOREST_BIJECTION_HPP

#include <map>
#include <string>
#include <vector>

#include "hookforest/colored.hpp"

namespace hookforest {

// Which branch of the partition-swap map fired. Cases i..v swap the two
// labels and leave shape and colors alone; case vi performs the five-tree
// split-and-reattach surgery.
enum class PsiCase { i = 1, ii, iii, iv, v, vi };

std::string psi_case_name(PsiCase c);

struct PsiResult {
  ColoredLabelledForest forest;
  PsiCase applied;
};

// Maps a member of CF_{r,k,from} to a member of CF_{r,k,to} for adjacent
// partitions from/to (differing by a swap of labels i and i+1).
PsiResult psi(const ColoredLabelledForest& forest, const PartitionS& from, const PartitionS& to);

// Composition of psi along a path of pairwise-adjacent partitions; the input
// must belong to the first partition's set.
ColoredLabelledForest psi_transport(const ColoredLabelledForest& forest,
                                    const std::vector<PartitionS>& path);

// Integer tuple in bijection with the colored labelled forests whose minimum
// label sits in the first tree: g keyed by label (g_i in [d_i]), f keyed by
// 1..n-1 (f_j in [r0 + j(1+k)]).
struct CodeSequence {
  long long k = 0;
  std::map<int, int> g;
  std::map<int, int> f;

  bool operator==(const CodeSequence& other) const = default;
};

// The unique codes that decode back to this forest. Requires the minimum
// label to be in the first tree.
CodeSequence encode(const ColoredLabelledForest& forest, const PartitionS& s);

// Rebuilds the forest from codes; num_trees fixes r0 via
// r0 = num_trees + sum (d-1)|S_d|. Requires n >= 1.
ColoredLabelledForest decode(const PartitionS& s, long long k, long long num_trees,
                             const CodeSequence& codes);

}  // namespace hookforest

#endif
