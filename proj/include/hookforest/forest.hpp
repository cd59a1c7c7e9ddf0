#ifndef HOOKFOREST_FOREST_HPP
#define HOOKFOREST_FOREST_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hookforest/degree_sequence.hpp"
#include "hookforest/rational.hpp"

namespace hookforest {

// Plane tree: children are ordered, a leaf has none. Vertices are
// indistinguishable; the shape is the whole identity.
struct PlaneTree {
  std::vector<PlaneTree> children;

  bool is_leaf() const { return children.empty(); }
  int degree() const { return static_cast<int>(children.size()); }
  bool operator==(const PlaneTree& other) const = default;
};

// Ordered, nonempty sequence of plane trees.
struct PlaneForest {
  std::vector<PlaneTree> trees;

  bool operator==(const PlaneForest& other) const = default;
};

// Addresses one vertex: 1-based tree index, then 1-based child positions
// walking down from that tree's root. An empty path is the root itself.
struct VertexRef {
  int tree = 1;
  std::vector<int> path;

  bool operator==(const VertexRef& other) const = default;
};

const PlaneTree& resolve_vertex(const PlaneForest& forest, const VertexRef& ref);

DegreeSequence degree_sequence_of(const PlaneForest& forest);

// Number of internal vertices in the subtree rooted at v, v included.
// Only defined for internal vertices.
long long hook_length(const PlaneForest& forest, const VertexRef& ref);

// All plane forests of type r, each exactly once, ordered lexicographically
// by their serialized encoding.
std::vector<PlaneForest> enumerate_forests(const DegreeSequence& r);

// ell/(n+r0) * multinomial(n+r0; r0, r1, ...), always an exact integer.
Int count_forests(const DegreeSequence& r);

// Nested-array encoding: a tree is the array of its children, a leaf is [],
// a forest is the array of its trees. "[[],[[]]]" is a leaf tree followed by
// a one-child tree.
std::string serialize_forest(const PlaneForest& forest);
PlaneForest parse_forest(std::string_view text);

// Flattened view of a forest's internal vertices in preorder (tree by tree,
// root before children). Shared by the hook-polynomial sums and the colored
// enumeration, which both iterate internal vertices constantly.
struct ShapeVertex {
  VertexRef ref;
  int degree = 0;
  long long hook = 1;
  int parent = -1;                 // index of the parent internal vertex, -1 for roots
  int tree = 0;                    // 0-based tree index
  std::vector<int> descendants;    // strict internal descendants, as indices
};

struct ShapeInfo {
  std::vector<ShapeVertex> internal;

  long long n() const { return static_cast<long long>(internal.size()); }
  static ShapeInfo analyze(const PlaneForest& forest);
};

}  // namespace hookforest

#endif
