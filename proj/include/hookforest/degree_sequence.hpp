#ifndef HOOKFOREST_DEGREE_SEQUENCE_HPP
#define HOOKFOREST_DEGREE_SEQUENCE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hookforest/rational.hpp"

namespace hookforest {

// Degree-sequence type of a plane forest: count(d) is the number of vertices
// with exactly d children. Always kept valid:
//   - every multiplicity >= 0, finite support, not all zero
//   - num_trees() >= 1
//   - a forest with an internal vertex has at least one leaf
class DegreeSequence {
 public:
  static DegreeSequence from_counts(std::vector<long long> counts);
  static DegreeSequence parse(std::string_view text);  // "r0,r1,r2,..."

  // Diagnostic used by sweep generators to skip unrealizable count vectors
  // without the throw/catch dance.
  static bool counts_valid(const std::vector<long long>& counts);

  long long count(long long degree) const;
  long long max_degree() const;
  // number of internal vertices
  long long internal_count() const;
  long long leaf_count() const { return count(0); }
  long long num_trees() const;
  long long total_vertices() const;

  const std::vector<long long>& counts() const { return counts_; }
  std::string to_text() const;

  bool operator==(const DegreeSequence& other) const = default;

 private:
  std::vector<long long> counts_;  // trailing zeros trimmed
};

}  // namespace hookforest

#endif
