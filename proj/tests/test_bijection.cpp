#include <doctest.h>

#include <set>

#include "hookforest/bijection.hpp"
#include "hookforest/verify.hpp"

using namespace hookforest;

namespace {

ColoredLabelledForest make_colored(const std::string& shape, std::vector<int> labels,
                                   std::vector<Color> colors, long long k) {
  ColoredLabelledForest f;
  f.base.shape = parse_forest(shape);
  f.base.labels = std::move(labels);
  f.colors = std::move(colors);
  f.k = k;
  validate_colored(f);
  return f;
}

const Color e1{false, 1};
const Color e2{false, 2};
const Color s1{true, 1};

}  // namespace

TEST_CASE("psi case i: disjoint subtrees swap labels only") {
  PartitionS s1p = PartitionS::from_classes({{1}, {2}});
  PartitionS s2p = PartitionS::from_classes({{2}, {1}});
  ColoredLabelledForest f = make_colored("[[[]],[[],[]]]", {1, 2}, {e1, e2}, 0);
  PsiResult result = psi(f, s1p, s2p);
  CHECK(result.applied == PsiCase::i);
  CHECK(result.forest.base.shape == f.base.shape);
  CHECK(result.forest.base.labels == std::vector<int>{2, 1});
  CHECK(result.forest.colors == f.colors);
}

TEST_CASE("psi case iii: proper ancestor chain swaps labels") {
  PartitionS from = PartitionS::from_classes({{1}, {2}});
  PartitionS to = PartitionS::from_classes({{2}, {1}});
  ColoredLabelledForest f = make_colored("[[[[],[]]],[]]", {1, 2}, {e1, e1}, 0);
  // shape: root (deg 1, label 1) -> child (deg 2, label 2); plus a bare leaf
  PsiResult result = psi(f, from, to);
  CHECK(result.applied == PsiCase::iii);
  CHECK(result.forest.base.shape == f.base.shape);
  CHECK(result.forest.base.labels == std::vector<int>{2, 1});
  CHECK(result.forest.colors == f.colors);
  // the root, now labeled 2, is improper
  CHECK_FALSE(is_proper(result.forest.base, VertexRef{1, {}}));
}

TEST_CASE("psi case vi: five-tree surgery") {
  PartitionS from = PartitionS::from_classes({{1}, {2}});
  PartitionS to = PartitionS::from_classes({{2}, {1}});
  // root (deg 2, label 2, special) with children: (deg 1, label 1, e1) over a
  // leaf, and a leaf; plus a bare-leaf tree
  ColoredLabelledForest f = make_colored("[[[[]],[]],[]]", {2, 1}, {s1, e1}, 1);
  PsiResult result = psi(f, from, to);
  CHECK(result.applied == PsiCase::vi);
  CHECK(serialize_forest(result.forest.base.shape) == "[[[[],[]]],[]]");
  CHECK(result.forest.base.labels == std::vector<int>{2, 1});
  CHECK(result.forest.colors == std::vector<Color>{s1, e1});
  CHECK(is_valid_colored(result.forest, &to));
}

TEST_CASE("psi case vi: surgery with all five trees nontrivial") {
  // single tree: 3 -> v2=2 (deg 2, special) -> [ u=4 -> v1=1 -> w=5 -> leaf, leaf ]
  PartitionS from = PartitionS::from_classes({{1, 3, 4, 5}, {2}});
  PartitionS to = PartitionS::from_classes({{2, 3, 4, 5}, {1}});
  ColoredLabelledForest f = make_colored("[[[[[[[]]]],[]]]]", {3, 2, 4, 1, 5},
                                         {e1, s1, e1, e1, e1}, 1);
  PsiResult result = psi(f, from, to);
  CHECK(result.applied == PsiCase::vi);
  // chain reorders to 3 -> 2 (old v1) -> 4 -> 1 (old v2, now deg 2) -> [5 -> leaf, leaf]
  CHECK(serialize_forest(result.forest.base.shape) == "[[[[[[[]],[]]]]]]");
  CHECK(result.forest.base.labels == std::vector<int>{3, 2, 4, 1, 5});
  CHECK(result.forest.colors == std::vector<Color>{e1, s1, e1, e1, e1});
  CHECK(is_valid_colored(result.forest, &to));

  // applying psi through the swapped pair restores the original
  PsiResult back = psi(result.forest, to, from);
  CHECK(back.applied == PsiCase::vi);
  CHECK(back.forest == f);
}

TEST_CASE("psi input validation") {
  PartitionS s1p = PartitionS::from_classes({{1}, {2}});
  PartitionS s2p = PartitionS::from_classes({{2}, {1}});
  ColoredLabelledForest f = make_colored("[[[]],[[],[]]]", {1, 2}, {e1, e2}, 0);
  CHECK_THROWS_AS(psi(f, s1p, s1p), error);  // not adjacent
  // wrong partition: label 1 sits on a degree-1 vertex, s2p wants degree 2
  CHECK_THROWS_AS(psi(f, s2p, s1p), error);
}

TEST_CASE("psi transport composes along a path") {
  DegreeSequence r = DegreeSequence::parse("3,1,1");
  std::vector<PartitionS> parts = partitions(r);
  ColoredLabelledForest f = make_colored("[[[]],[[],[]]]", {1, 2}, {e1, e2}, 1);

  CHECK(psi_transport(f, {parts[0]}) == f);

  std::vector<PartitionS> loop{parts[0], parts[1], parts[0]};
  ColoredLabelledForest back = psi_transport(f, loop);
  CHECK(is_valid_colored(back, &parts[0]));
  CHECK(degree_sequence_of(back.base.shape) == r);

  CHECK_THROWS_AS(psi_transport(f, {}), error);
}

TEST_CASE("decode: worked examples") {
  PartitionS s = PartitionS::from_classes({{1, 2}});
  CodeSequence codes;
  codes.k = 1;
  codes.g = {{1, 1}, {2, 1}};
  codes.f = {{1, 3}};
  ColoredLabelledForest f = decode(s, 1, 1, codes);
  CHECK(serialize_forest(f.base.shape) == "[[[[]]]]");
  CHECK(f.base.labels == std::vector<int>{2, 1});
  CHECK(f.colors == std::vector<Color>{s1, e1});

  codes.f = {{1, 1}};
  ColoredLabelledForest g = decode(s, 1, 1, codes);
  CHECK(g.base.labels == std::vector<int>{1, 2});
  CHECK(g.colors == std::vector<Color>{e1, e1});

  // base case n = 1: a single degree-2 vertex with its second edge color
  PartitionS s2 = PartitionS::from_classes({{}, {1}});
  CodeSequence base;
  base.k = 0;
  base.g = {{1, 2}};
  ColoredLabelledForest h = decode(s2, 0, 1, base);
  CHECK(serialize_forest(h.base.shape) == "[[[],[]]]");
  CHECK(h.base.labels == std::vector<int>{1});
  CHECK(h.colors == std::vector<Color>{e2});
}

TEST_CASE("decode: bound errors name the offending entry") {
  PartitionS s = PartitionS::from_classes({{1, 2}});
  CodeSequence codes;
  codes.k = 1;
  codes.g = {{1, 1}, {2, 1}};
  codes.f = {{1, 4}};  // window total is 1 + 1*(1+1) = 3
  try {
    decode(s, 1, 1, codes);
    CHECK(false);
  } catch (const error& e) {
    CHECK(std::string(e.what()).find("f[1]") != std::string::npos);
  }

  codes.f = {{1, 1}};
  codes.g = {{1, 2}, {2, 1}};  // label 1 has degree 1
  try {
    decode(s, 1, 1, codes);
    CHECK(false);
  } catch (const error& e) {
    CHECK(std::string(e.what()).find("g[1]") != std::string::npos);
  }

  codes.g = {{1, 1}};  // missing g[2]
  CHECK_THROWS_AS(decode(s, 1, 1, codes), error);
  codes.g = {{1, 1}, {2, 1}};
  codes.f = {};  // missing f[1]
  CHECK_THROWS_AS(decode(s, 1, 1, codes), error);
  codes.f = {{1, 1}};
  CHECK_THROWS_AS(decode(s, 0, 1, codes), error);  // k mismatch
}

TEST_CASE("encode: worked examples and the full (1,2) table") {
  PartitionS s = PartitionS::from_classes({{1, 2}});
  DegreeSequence r = DegreeSequence::parse("1,2");
  std::vector<ColoredLabelledForest> members = enumerate_colored(r, 1, s, true);
  REQUIRE(members.size() == 3);
  std::set<int> f_values;
  for (const ColoredLabelledForest& f : members) {
    CodeSequence codes = encode(f, s);
    CHECK(codes.g.at(1) == 1);
    CHECK(codes.g.at(2) == 1);
    f_values.insert(codes.f.at(1));
    CHECK(decode(s, 1, 1, codes) == f);
  }
  CHECK(f_values == std::set<int>{1, 2, 3});

  // the special-colored member maps to the top of the window
  ColoredLabelledForest top = make_colored("[[[[]]]]", {2, 1}, {s1, e1}, 1);
  CHECK(encode(top, s).f.at(1) == 3);

  // n = 1 base case: no f, g is the color index
  PartitionS s2 = PartitionS::from_classes({{}, {1}});
  ColoredLabelledForest star = make_colored("[[[],[]]]", {1}, {e2}, 0);
  CodeSequence codes = encode(star, s2);
  CHECK(codes.f.empty());
  CHECK(codes.g.at(1) == 2);
}

TEST_CASE("encode rejects a minimum label outside the first tree") {
  PartitionS s = PartitionS::from_classes({{1, 2}});
  // two chains: first tree holds label 2, second holds label 1
  ColoredLabelledForest f = make_colored("[[[]],[[]]]", {2, 1}, {e1, e1}, 0);
  CHECK_THROWS_AS(encode(f, s), error);
}

TEST_CASE("code roundtrip on a larger cell") {
  DegreeSequence r = DegreeSequence::parse("3,1,1");
  const long long ell = r.num_trees();
  for (long long k : {0LL, 1LL, 2LL}) {
    for (const PartitionS& s : partitions(r)) {
      std::vector<ColoredLabelledForest> members = enumerate_colored(r, k, s, true);
      Int expected = thm_cfs_count(r, k) / make_int(ell);
      CHECK(make_int(static_cast<long long>(members.size())) == expected);
      std::set<std::string> seen;
      for (const ColoredLabelledForest& f : members) {
        CodeSequence codes = encode(f, s);
        CHECK(decode(s, k, ell, codes) == f);
        CHECK(seen.insert(codes_to_json(codes).dump()).second);
      }
    }
  }
}
