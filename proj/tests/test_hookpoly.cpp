#include <doctest.h>

#include "hookforest/hookpoly.hpp"
#include "hookforest/verify.hpp"
#include "oracles.hpp"

using namespace hookforest;

TEST_CASE("vertex hook polynomial") {
  CHECK(vertex_hook_poly(2, 1) == Polynomial::x());
  // (d=1, h=2): (x-1)/2
  CHECK(vertex_hook_poly(1, 2).coeff_strings() == std::vector<std::string>{"-1/2", "1/2"});
  CHECK(vertex_hook_poly(1, 1) == Polynomial::x());
  CHECK_THROWS_AS(vertex_hook_poly(0, 1), error);
  CHECK_THROWS_AS(vertex_hook_poly(1, 0), error);
}

TEST_CASE("brute hook polynomial sums") {
  CHECK(brute_hookp(DegreeSequence::parse("1,2")).coeff_strings() ==
        std::vector<std::string>{"0", "-1/2", "1/2"});  // x(x-1)/2
  CHECK(brute_hookp(DegreeSequence::parse("2,0,1")) == Polynomial::x());
  CHECK(brute_hookp(DegreeSequence::parse("5")) == Polynomial(1L));

  CHECK(brute_hookp2(DegreeSequence::parse("1,2")).coeff_strings() ==
        std::vector<std::string>{"1", "1/2"});  // (x+2)/2
  CHECK(brute_hookp2(DegreeSequence::parse("2,0,1")) == Polynomial(1L));
  CHECK(brute_hookp2(DegreeSequence::parse("5")) == Polynomial(1L));
}

TEST_CASE("hook reports") {
  HookReport a = verify_hookp(DegreeSequence::parse("1,2"));
  CHECK(a.equal);
  CHECK(a.brute == a.closed);

  HookReport b = verify_hookp(DegreeSequence::parse("3,1,1"));
  CHECK(b.equal);
  CHECK(b.forest_count == 8);

  HookReport c = verify_hookp(DegreeSequence::parse("4,0,3"));
  CHECK(c.equal);
  CHECK(c.forest_count == 5);

  CHECK(verify_hookp2(DegreeSequence::parse("3,1,1")).equal);
  CHECK(verify_hookp2(DegreeSequence::parse("4,0,3")).equal);
}

TEST_CASE("identity sweeps agree over the small universe") {
  for (const DegreeSequence& r : degree_sequence_universe(7, 4)) {
    CHECK(verify_hookp(r).equal);
    if (r.internal_count() >= 1) CHECK(verify_hookp2(r).equal);
  }
}

TEST_CASE("degrees of the brute sums") {
  for (const DegreeSequence& r : degree_sequence_universe(6, 4)) {
    long long n = r.internal_count();
    CHECK(brute_hookp(r).degree() == n);
    CHECK(brute_hookp2(r).degree() == (n >= 1 ? n - 1 : 0));
  }
}

TEST_CASE("substitution bridge between the two forms") {
  // eval(brute_hookp2, t) = (-(1+t))^n * eval(brute_hookp, -1/(1+t))
  for (const char* text : {"1,2", "2,0,1", "3,1,1", "4,0,3", "2,2", "5,1,2"}) {
    DegreeSequence r = DegreeSequence::parse(text);
    Polynomial p1 = brute_hookp(r);
    Polynomial p2 = brute_hookp2(r);
    const long long n = r.internal_count();
    for (const Rat& t : {Rat(0), Rat(1), Rat(2), make_rat(1, 2)}) {
      Rat factor = rat_pow(Rat(-1) * (Rat(1) + t), n);
      CHECK(p2.eval(t) == factor * p1.eval(Rat(-1) / (Rat(1) + t)));
    }
  }
}

TEST_CASE("binary tree identity, integer form") {
  PostnikovResult n1 = postnikov_check(1);
  CHECK(n1.lhs == Rat(1));
  CHECK(n1.rhs == 1);
  CHECK(n1.equal);

  PostnikovResult n2 = postnikov_check(2);
  CHECK(n2.lhs == Rat(3));
  CHECK(n2.rhs == 3);
  CHECK(n2.equal);

  PostnikovResult n4 = postnikov_check(4);
  CHECK(n4.rhs == 125);
  CHECK(n4.equal);
}

TEST_CASE("binary tree identity, polynomial form") {
  LascouxResult n1 = lascoux_check(1);
  CHECK(n1.lhs.coeff_strings() == std::vector<std::string>{"1", "1"});  // x + 1
  CHECK(n1.equal);

  LascouxResult n2 = lascoux_check(2);
  CHECK(n2.rhs.coeff_strings() == std::vector<std::string>{"1", "3", "2"});  // 2x^2+3x+1
  CHECK(n2.lhs == n2.rhs);

  CHECK(lascoux_check(3).equal);
}

TEST_CASE("binary tree type") {
  DegreeSequence r = binary_tree_type(3);
  CHECK(r.leaf_count() == 4);
  CHECK(r.count(2) == 3);
  CHECK(r.num_trees() == 1);
  CHECK(count_forests(r) == oracles::catalan(3));
  CHECK_THROWS_AS(binary_tree_type(0), error);
}
