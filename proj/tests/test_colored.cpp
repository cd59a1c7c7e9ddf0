#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "hookforest/colored.hpp"
#include "hookforest/verify.hpp"
#include "oracles.hpp"

using namespace hookforest;

namespace {

LabelledForest chain2(int root_label, int child_label) {
  LabelledForest f;
  f.shape = parse_forest("[[[[]]]]");  // root -> child -> leaf
  f.labels = {root_label, child_label};
  return f;
}

}  // namespace

TEST_CASE("properness") {
  LabelledForest inc = chain2(1, 2);
  CHECK(is_proper(inc, VertexRef{1, {}}));
  CHECK(is_proper(inc, VertexRef{1, {1}}));

  LabelledForest dec = chain2(2, 1);
  CHECK_FALSE(is_proper(dec, VertexRef{1, {}}));
  CHECK(is_proper(dec, VertexRef{1, {1}}));

  // label 1 is proper wherever it sits
  for (const DegreeSequence& r : degree_sequence_universe(5, 3)) {
    for (const ColoredLabelledForest& f : enumerate_colored(r, 0)) {
      auto it = std::find(f.base.labels.begin(), f.base.labels.end(), 1);
      if (it == f.base.labels.end()) continue;
      std::size_t idx = static_cast<std::size_t>(it - f.base.labels.begin());
      ShapeInfo shape = ShapeInfo::analyze(f.base.shape);
      CHECK(is_proper(f.base, shape.internal[idx].ref));
    }
  }
}

TEST_CASE("coloring counts per labelling") {
  CHECK(count_colorings(chain2(1, 2), 5) == 1);
  CHECK(count_colorings(chain2(2, 1), 1) == 2);
  CHECK_THROWS_AS(count_colorings(chain2(1, 2), -1), error);
  CHECK_THROWS_AS(count_colored(DegreeSequence::parse("1,2"), -1), error);

  LabelledForest star;
  star.shape = parse_forest("[[[],[]]]");
  star.labels = {1};
  CHECK(count_colorings(star, 0) == 2);
  CHECK(count_colorings(star, 7) == 2);
}

TEST_CASE("colored enumeration: worked examples") {
  auto all = enumerate_colored(DegreeSequence::parse("2,0,1"), 0);
  CHECK(all.size() == 2);

  PartitionS s = PartitionS::from_classes({{1, 2}});
  auto filtered = enumerate_colored(DegreeSequence::parse("1,2"), 1, s);
  CHECK(filtered.size() == 3);
  auto first_min = enumerate_colored(DegreeSequence::parse("1,2"), 1, s, true);
  CHECK(first_min.size() == 3);  // single tree, restriction is vacuous

  // canonical order: labelling lex, then coloring lex (edge before special)
  REQUIRE(filtered.size() == 3);
  CHECK(filtered[0].base.labels == std::vector<int>{1, 2});
  CHECK(filtered[0].colors == std::vector<Color>{{false, 1}, {false, 1}});
  CHECK(filtered[1].base.labels == std::vector<int>{2, 1});
  CHECK(filtered[1].colors == std::vector<Color>{{false, 1}, {false, 1}});
  CHECK(filtered[2].base.labels == std::vector<int>{2, 1});
  CHECK(filtered[2].colors == std::vector<Color>{{true, 1}, {false, 1}});
}

TEST_CASE("colored enumeration is deterministic and duplicate-free") {
  DegreeSequence r = DegreeSequence::parse("3,1,1");
  auto a = enumerate_colored(r, 2);
  auto b = enumerate_colored(r, 2);
  CHECK(a == b);
  std::set<std::string> keys;
  for (const ColoredLabelledForest& f : a) {
    validate_colored(f);
    CHECK(keys.insert(colored_key(f)).second);
  }
  CHECK(count_colored(r, 2) == make_int(static_cast<long long>(a.size())));
}

TEST_CASE("counting lemma: worked examples") {
  CHECK(lemma_ccf_lhs(DegreeSequence::parse("1,2"), 1) == Rat(3));
  CHECK(lemma_ccf_lhs(DegreeSequence::parse("2,0,1"), 3) == Rat(2));
  // k = 0: reduces to n! * sum of degree products
  DegreeSequence r = DegreeSequence::parse("3,1,1");
  CHECK(lemma_ccf_lhs(r, 0) == Rat(count_colored(r, 0)));
}

TEST_CASE("product-form counts: worked examples") {
  CHECK(prop_cf_count(DegreeSequence::parse("1,2"), 1) == 3);
  DegreeSequence r = DegreeSequence::parse("3,1,1");
  CHECK(prop_cf_count(r, 0) == 32);
  CHECK(count_colored(r, 0) == 32);
  // n = 1: ell * d
  CHECK(prop_cf_count(DegreeSequence::parse("2,0,1"), 5) == 2);
  CHECK(prop_cf_count(DegreeSequence::parse("2,1"), 9) == 2);

  CHECK(thm_cfs_count(DegreeSequence::parse("2,0,1"), 0) == 2);
  CHECK(thm_cfs_count(DegreeSequence::parse("2,0,1"), 7) == 2);
  CHECK(thm_cfs_count(r, 0) == 16);
  CHECK(thm_cfs_count(DegreeSequence::parse("1,2"), 1) == 3);
}

TEST_CASE("partitions of the label set") {
  DegreeSequence r = DegreeSequence::parse("3,1,1");
  std::vector<PartitionS> parts = partitions(r);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].degree_of_label(1) == 1);
  CHECK(parts[0].degree_of_label(2) == 2);
  CHECK(parts[1].degree_of_label(1) == 2);
  CHECK(parts[1].degree_of_label(2) == 1);
  CHECK(adjacent(parts[0], parts[1]));
  CHECK(adjacent(parts[1], parts[0]));
  CHECK_FALSE(adjacent(parts[0], parts[0]));

  // |V_r| = multinomial(n; r_1, r_2, ...)
  for (const DegreeSequence& u : degree_sequence_universe(6, 3)) {
    std::vector<long long> sizes;
    for (long long d = 1; d <= u.max_degree(); ++d) sizes.push_back(u.count(d));
    CHECK(make_int(static_cast<long long>(partitions(u).size())) ==
          multinomial(u.internal_count(), sizes));
  }
}

TEST_CASE("adjacency requires a consecutive cross-class swap") {
  PartitionS a = PartitionS::from_classes({{1, 3}, {2, 4}});
  PartitionS b = PartitionS::from_classes({{2, 3}, {1, 4}});  // swap 1,2
  PartitionS c = PartitionS::from_classes({{2, 4}, {1, 3}});  // swap both pairs
  CHECK(adjacent(a, b));
  CHECK_FALSE(adjacent(a, c));
  PartitionS d = PartitionS::from_classes({{1, 4}, {2, 3}});  // swap 3,4
  CHECK(adjacent(a, d));
  PartitionS e = PartitionS::from_classes({{3, 4}, {1, 2}});  // swap 1,3 & 2,4
  CHECK_FALSE(adjacent(a, e));
  CHECK_THROWS_AS(adjacent(a, PartitionS::from_classes({{1, 2, 3}, {4}})), error);
}

TEST_CASE("partition paths walk the swap graph") {
  DegreeSequence r = DegreeSequence::parse("4,2,2");
  std::vector<PartitionS> parts = partitions(r);
  // identity path
  CHECK(partition_path(parts[0], parts[0]) == std::vector<PartitionS>{parts[0]});
  for (const PartitionS& from : parts) {
    for (const PartitionS& to : parts) {
      std::vector<PartitionS> path = partition_path(from, to);
      REQUIRE(!path.empty());
      CHECK(path.front() == from);
      CHECK(path.back() == to);
      for (std::size_t i = 0; i + 1 < path.size(); ++i) CHECK(adjacent(path[i], path[i + 1]));
    }
  }
}

TEST_CASE("labelling count with a forced proper set") {
  // (labellings making all of J proper) * prod h_v = n!
  for (const DegreeSequence& r : degree_sequence_universe(6, 4)) {
    const long long n = r.internal_count();
    if (n > 4) continue;  // acceptance suite covers the full range
    Int n_fact = factorial(n);
    for (const PlaneForest& f : enumerate_forests(r)) {
      ShapeInfo shape = ShapeInfo::analyze(f);
      const std::size_t nn = shape.internal.size();
      for (unsigned mask = 0; mask < (1u << nn); ++mask) {
        Int hooks(1);
        for (std::size_t v = 0; v < nn; ++v)
          if (mask & (1u << v)) hooks *= make_int(shape.internal[v].hook);
        long long good = 0;
        std::vector<int> labels(nn);
        std::iota(labels.begin(), labels.end(), 1);
        do {
          bool all_proper = true;
          for (std::size_t v = 0; v < nn && all_proper; ++v) {
            if (!(mask & (1u << v))) continue;
            for (int d : shape.internal[v].descendants)
              if (labels[static_cast<std::size_t>(d)] < labels[v]) {
                all_proper = false;
                break;
              }
          }
          if (all_proper) ++good;
        } while (std::next_permutation(labels.begin(), labels.end()));
        CHECK(make_int(good) * hooks == n_fact);
      }
    }
  }
}

TEST_CASE("validation rejects broken colorings") {
  ColoredLabelledForest f;
  f.base.shape = parse_forest("[[[[]]]]");
  f.base.labels = {1, 2};
  f.k = 1;
  f.colors = {{false, 1}, {false, 1}};
  CHECK(is_valid_colored(f));

  ColoredLabelledForest special_on_proper = f;
  special_on_proper.colors[0] = {true, 1};  // root labeled 1 is proper
  CHECK_FALSE(is_valid_colored(special_on_proper));
  CHECK_THROWS_AS(validate_colored(special_on_proper), error);

  ColoredLabelledForest bad_edge = f;
  bad_edge.colors[1] = {false, 2};  // degree-1 vertex
  CHECK_FALSE(is_valid_colored(bad_edge));

  ColoredLabelledForest bad_special = f;
  bad_special.base.labels = {2, 1};
  bad_special.colors = {{true, 2}, {false, 1}};  // k = 1
  CHECK_FALSE(is_valid_colored(bad_special));

  ColoredLabelledForest bad_labels = f;
  bad_labels.base.labels = {1, 3};
  CHECK_FALSE(is_valid_colored(bad_labels));

  // partition filter
  PartitionS s = PartitionS::from_classes({{1}, {2}});
  ColoredLabelledForest chain = f;  // both vertices have degree 1
  CHECK_FALSE(is_valid_colored(chain, &s));
}

TEST_CASE("partition json-ish constructors validate") {
  CHECK_THROWS_AS(PartitionS::from_classes({{1, 1}}), error);
  CHECK_THROWS_AS(PartitionS::from_classes({{1}, {1}}), error);
  CHECK_THROWS_AS(PartitionS::from_classes({{2}}), error);   // gap: no label 1
  CHECK_THROWS_AS(PartitionS::from_classes({{0}}), error);
}
