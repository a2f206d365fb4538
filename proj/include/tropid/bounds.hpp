#pragma once

#include <gmpxx.h>

#include <vector>

namespace tropid {

// F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2}, exact.
mpz_class fib(unsigned n);
std::vector<mpz_class> fib_table(unsigned upto);

// Closed-form evaluation rounded to the nearest integer; restricted to
// n <= 70 where the floating-point window is verified against fib().
long fib_binet(unsigned n);

struct ClassCount {
  long enumerated;  // |W_n[{x,y}, {1,2}]| by direct enumeration
  mpz_class claim;        // 2 F_n, the closed-form count
  mpz_class shifted;  // 2 F_{n+1}, which is what enumeration matches
};

// Counts for 2 <= n <= 15. The claim and the enumeration disagree by one
// index; both are reported side by side rather than silently reconciled.
ClassCount class_count(int n);

struct LengthBounds {
  mpz_class general;     // 8 (n+1) F_n + 2, the identity-length bound
  mpz_class triangular;  // 8 n F_{n-1} + 2, the bound for n x n matrices
};

LengthBounds length_bounds(int n);  // n >= 2

// 8 dim (|W_{dim-1}| / 2) + 2: the triangular bound evaluated at the count
// enumeration actually produces.
mpz_class derived_triangular_bound(int dim);  // 3 <= dim <= 16

}  // namespace tropid
