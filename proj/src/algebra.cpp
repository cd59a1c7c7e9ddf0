#include "hookforest/algebra.hpp"

#include <numeric>

namespace hookforest {

Int factorial(long long n) {
  if (n < 0) throw error("factorial of negative argument");
  Int out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Int multinomial(long long top, const std::vector<long long>& parts) {
  long long sum = 0;
  for (long long p : parts) {
    if (p < 0) throw error("multinomial with negative part");
    sum += p;
  }
  if (sum != top)
    throw error("multinomial parts sum to " + std::to_string(sum) + ", expected " +
                std::to_string(top));
  Int num = factorial(top);
  Int den(1);
  for (long long p : parts) den *= factorial(p);
  Int quot, rem;
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (rem != 0) throw error("multinomial division left a remainder");
  return quot;
}

Int internal_factorial_product(const DegreeSequence& r) {
  Int out(1);
  for (long long d = 1; d <= r.max_degree(); ++d) out *= factorial(r.count(d));
  return out;
}

Polynomial closed_hookp(const DegreeSequence& r) {
  if (r.leaf_count() == 0) throw error("closed hook form needs at least one leaf");
  const long long n = r.internal_count();
  const Rat r0{make_int(r.leaf_count())};
  Polynomial product{1L};
  for (long long i = 0; i < n; ++i)
    product *= Polynomial::linear(r0, Rat(make_int(-i)));
  Rat scale = make_rat(make_int(r.num_trees()), make_int(r.leaf_count()) * internal_factorial_product(r));
  return product.scaled(scale);
}

Polynomial closed_hookp2(const DegreeSequence& r) {
  const long long n = r.internal_count();
  Polynomial product{1L};
  for (long long i = 1; i <= n - 1; ++i) {
    // r0 + i*(1+x) = i*x + (r0 + i)
    product *= Polynomial::linear(Rat(make_int(i)), Rat(make_int(r.leaf_count() + i)));
  }
  Rat scale = make_rat(make_int(r.num_trees()), internal_factorial_product(r));
  return product.scaled(scale);
}

}  // namespace hookforest
