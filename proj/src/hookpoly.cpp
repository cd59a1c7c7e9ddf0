#include "hookforest/hookpoly.hpp"

namespace hookforest {

Polynomial vertex_hook_poly(long long degree, long long hook) {
  if (degree < 1 || hook < 1) throw error("vertex hook polynomial needs d >= 1 and h >= 1");
  Rat scale = make_rat(Int(1), make_int(degree) * make_int(hook));
  return Polynomial::linear(Rat(make_int((degree - 1) * hook + 1)), Rat(make_int(1 - hook))).scaled(scale);
}

namespace {

// Factor of the companion form: ((d + x)h - x)/(d h) = ((h-1)x + dh)/(dh).
Polynomial vertex_hook_poly2(long long degree, long long hook) {
  Rat scale = make_rat(Int(1), make_int(degree) * make_int(hook));
  return Polynomial::linear(Rat(make_int(hook - 1)), Rat(make_int(degree * hook))).scaled(scale);
}

template <typename FactorFn>
Polynomial forest_product_sum(const DegreeSequence& r, FactorFn&& factor) {
  Polynomial sum;
  for (const PlaneForest& forest : enumerate_forests(r)) {
    ShapeInfo shape = ShapeInfo::analyze(forest);
    Polynomial product{1L};
    for (const ShapeVertex& v : shape.internal) product *= factor(v.degree, v.hook);
    sum += product;
  }
  return sum;
}

}  // namespace

Polynomial brute_hookp(const DegreeSequence& r) {
  return forest_product_sum(r, [](long long d, long long h) { return vertex_hook_poly(d, h); });
}

Polynomial brute_hookp2(const DegreeSequence& r) {
  return forest_product_sum(r, [](long long d, long long h) { return vertex_hook_poly2(d, h); });
}

HookReport verify_hookp(const DegreeSequence& r) {
  HookReport report{r, brute_hookp(r), closed_hookp(r), false, count_forests(r)};
  report.equal = report.brute == report.closed;
  return report;
}

HookReport verify_hookp2(const DegreeSequence& r) {
  HookReport report{r, brute_hookp2(r), closed_hookp2(r), false, count_forests(r)};
  report.equal = report.brute == report.closed;
  return report;
}

DegreeSequence binary_tree_type(long long n) {
  if (n < 1) throw error("binary tree type needs n >= 1");
  std::vector<long long> counts(3, 0);
  counts[0] = n + 1;
  counts[2] = n;
  return DegreeSequence::from_counts(std::move(counts));
}

PostnikovResult postnikov_check(long long n) {
  const DegreeSequence type = binary_tree_type(n);
  Rat lhs(0);
  const Rat weight = make_rat(factorial(n), int_pow(Int(2), static_cast<unsigned long>(n)));
  for (const PlaneForest& forest : enumerate_forests(type)) {
    ShapeInfo shape = ShapeInfo::analyze(forest);
    Rat product(1);
    for (const ShapeVertex& v : shape.internal)
      product *= make_rat(make_int(v.hook + 1), make_int(v.hook));  // 1 + 1/h
    lhs += weight * product;
  }
  PostnikovResult result{lhs, int_pow(make_int(n + 1), static_cast<unsigned long>(n - 1)), false};
  result.equal = rat_is_integer(result.lhs) && result.lhs.get_num() == result.rhs;
  return result;
}

LascouxResult lascoux_check(long long n) {
  const DegreeSequence type = binary_tree_type(n);
  Polynomial lhs;
  for (const PlaneForest& forest : enumerate_forests(type)) {
    ShapeInfo shape = ShapeInfo::analyze(forest);
    Polynomial product{1L};
    for (const ShapeVertex& v : shape.internal)
      product *= Polynomial::linear(Rat(1), make_rat(Int(1), make_int(v.hook)));  // x + 1/h
    lhs += product;
  }
  Polynomial rhs{1L};
  for (long long i = 0; i < n; ++i)
    rhs *= Polynomial::linear(Rat(make_int(n + 1 + i)), Rat(make_int(n + 1 - i)));
  rhs = rhs.scaled(make_rat(Int(1), factorial(n + 1)));
  LascouxResult result{std::move(lhs), std::move(rhs), false};
  result.equal = result.lhs == result.rhs;
  return result;
}

}  // namespace hookforest
