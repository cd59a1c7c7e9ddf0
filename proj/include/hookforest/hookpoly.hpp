#ifndef HOOKFOREST_HOOKPOLY_HPP
#define HOOKFOREST_HOOKPOLY_HPP

#include "hookforest/algebra.hpp"
#include "hookforest/forest.hpp"
#include "hookforest/polynomial.hpp"

namespace hookforest {

// Per-vertex hook length polynomial ((d-1)h+1)x + (1-h), all over d*h.
Polynomial vertex_hook_poly(long long degree, long long hook);

// Sum over all forests of type r of the product of vertex_hook_poly over
// internal vertices. Degree n, matches closed_hookp coefficientwise.
Polynomial brute_hookp(const DegreeSequence& r);

// Same sum with the factor ((d+x)h - x)/(d*h) per internal vertex; matches
// closed_hookp2 for n >= 1.
Polynomial brute_hookp2(const DegreeSequence& r);

struct HookReport {
  DegreeSequence r;
  Polynomial brute;
  Polynomial closed;
  bool equal = false;
  Int forest_count;
};

HookReport verify_hookp(const DegreeSequence& r);
HookReport verify_hookp2(const DegreeSequence& r);

// Identity over complete binary trees with n internal vertices:
// sum of (n!/2^n) * prod(1 + 1/h_v) against (n+1)^(n-1).
struct PostnikovResult {
  Rat lhs;
  Int rhs;
  bool equal = false;
};
PostnikovResult postnikov_check(long long n);

// Polynomial identity over the same trees: sum of prod(x + 1/h_v) against
// 1/(n+1)! * prod_{i=0}^{n-1}((n+1+i)x + n+1-i).
struct LascouxResult {
  Polynomial lhs;
  Polynomial rhs;
  bool equal = false;
};
LascouxResult lascoux_check(long long n);

// Degree-sequence type of complete binary trees with n internal vertices:
// n+1 leaves, n vertices of degree 2.
DegreeSequence binary_tree_type(long long n);

}  // namespace hookforest

#endif
