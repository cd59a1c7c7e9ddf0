// Independent reference computations for the test suites. Everything here
// deliberately avoids the library's own algorithms: counts come from direct
// structural recursion, not from the ballot-word enumerator or the closed
// formulas under test.
#ifndef HOOKFOREST_TEST_ORACLES_HPP
#define HOOKFOREST_TEST_ORACLES_HPP

#include <map>
#include <vector>

#include "hookforest/rational.hpp"

namespace oracles {

using hookforest::Int;

inline Int catalan(int n) {
  std::vector<Int> c{Int(1)};
  for (int m = 1; m <= n; ++m) {
    Int total(0);
    for (int i = 0; i < m; ++i) total += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
    c.push_back(total);
  }
  return c[static_cast<std::size_t>(n)];
}

inline Int factorial(long long n) {
  Int out(1);
  for (long long i = 2; i <= n; ++i) out *= Int(static_cast<long>(i));
  return out;
}

// Counts plane trees / forests with a prescribed degree multiset by direct
// decomposition: pick the root degree, then distribute the remaining
// multiset over the ordered subtrees.
class ForestCounter {
 public:
  Int count_forest(const std::vector<long long>& counts, long long trees) {
    if (trees == 0) return is_empty(counts) ? Int(1) : Int(0);
    Int total(0);
    for_each_submultiset(counts, [&](const std::vector<long long>& first) {
      Int ways = count_tree(first);
      if (ways == 0) return;
      total += ways * count_forest(subtract(counts, first), trees - 1);
    });
    return total;
  }

  Int count_tree(const std::vector<long long>& counts) {
    auto memo = tree_memo_.find(counts);
    if (memo != tree_memo_.end()) return memo->second;
    Int total(0);
    bool bare_leaf = !counts.empty() && counts[0] == 1;
    for (std::size_t d = 1; d < counts.size() && bare_leaf; ++d) bare_leaf = counts[d] == 0;
    if (bare_leaf) total = 1;
    for (std::size_t d = 1; d < counts.size(); ++d) {
      if (counts[d] == 0) continue;
      std::vector<long long> rest = counts;
      --rest[d];
      total += count_sequence(rest, static_cast<long long>(d));
    }
    tree_memo_[counts] = total;
    return total;
  }

 private:
  // ordered sequences of `slots` trees using exactly this multiset
  Int count_sequence(const std::vector<long long>& counts, long long slots) {
    if (slots == 0) return is_empty(counts) ? Int(1) : Int(0);
    auto key = std::make_pair(counts, slots);
    auto memo = seq_memo_.find(key);
    if (memo != seq_memo_.end()) return memo->second;
    Int total(0);
    for_each_submultiset(counts, [&](const std::vector<long long>& first) {
      Int ways = count_tree(first);
      if (ways == 0) return;
      total += ways * count_sequence(subtract(counts, first), slots - 1);
    });
    seq_memo_[key] = total;
    return total;
  }

  static bool is_empty(const std::vector<long long>& counts) {
    for (long long c : counts)
      if (c != 0) return false;
    return true;
  }

  static std::vector<long long> subtract(std::vector<long long> a,
                                         const std::vector<long long>& b) {
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return a;
  }

  template <typename Fn>
  static void for_each_submultiset(const std::vector<long long>& counts, Fn&& fn) {
    std::vector<long long> pick(counts.size(), 0);
    while (true) {
      fn(pick);
      std::size_t pos = 0;
      while (pos < counts.size()) {
        if (pick[pos] < counts[pos]) {
          ++pick[pos];
          for (std::size_t i = 0; i < pos; ++i) pick[i] = 0;
          break;
        }
        ++pos;
      }
      if (pos == counts.size()) break;
    }
  }

  std::map<std::vector<long long>, Int> tree_memo_;
  std::map<std::pair<std::vector<long long>, long long>, Int> seq_memo_;
};

}  // namespace oracles

#endif
