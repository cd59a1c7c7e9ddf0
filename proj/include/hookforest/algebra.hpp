#ifndef HOOKFOREST_ALGEBRA_HPP
#define HOOKFOREST_ALGEBRA_HPP

#include <vector>

#include "hookforest/degree_sequence.hpp"
#include "hookforest/polynomial.hpp"
#include "hookforest/rational.hpp"

namespace hookforest {

Int factorial(long long n);

// top! / prod(parts!); requires sum(parts) == top.
Int multinomial(long long top, const std::vector<long long>& parts);

// Closed form of the hook length polynomial sum over all forests of type r:
//   (ell/r0) * prod_{i=0}^{n-1}(r0*x - i) / prod_{d>=1} r_d!
// The generalized binomial is read as a falling-factorial polynomial.
// Degree is exactly n.
Polynomial closed_hookp(const DegreeSequence& r);

// Closed form of the companion sum (the (d_v+x)h_v - x product version):
//   ell/(prod_{d>=1} r_d!) * prod_{i=1}^{n-1}(r0 + i*(1+x))
// Empty product for n <= 1. Note this formula is the counting identity's
// right side only for n >= 1; at n = 0 it degenerates to the constant ell.
Polynomial closed_hookp2(const DegreeSequence& r);

// prod_{d>=1} r_d!
Int internal_factorial_product(const DegreeSequence& r);

}  // namespace hookforest

#endif
