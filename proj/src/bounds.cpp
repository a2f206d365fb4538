#include "tropid/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "tropid/word_classes.hpp"

namespace tropid {

mpz_class fib(unsigned n) {
  mpz_class a = 0, b = 1;
  for (unsigned i = 0; i < n; ++i) {
    mpz_class next = a + b;
    a = b;
    b = next;
  }
  return a;
}

std::vector<mpz_class> fib_table(unsigned upto) {
  std::vector<mpz_class> t;
  t.reserve(upto + 1);
  mpz_class a = 0, b = 1;
  for (unsigned i = 0; i <= upto; ++i) {
    t.push_back(a);
    mpz_class next = a + b;
    a = b;
    b = next;
  }
  return t;
}

long fib_binet(unsigned n) {
  if (n > 70)
    throw std::invalid_argument("fib_binet: n > 70 exceeds the verified precision window");
  const long double sqrt5 = sqrtl(5.0L);
  const long double value =
      (powl(1.0L + sqrt5, n) - powl(1.0L - sqrt5, n)) / (powl(2.0L, n) * sqrt5);
  return lroundl(value);
}

ClassCount class_count(int n) {
  if (n < 2 || n > 15)
    throw std::invalid_argument("class_count: n must be within [2, 15]");
  const auto members = enumerate_class(WordClassSpec::xy(n));
  return ClassCount{static_cast<long>(members.size()),
                    2 * fib(static_cast<unsigned>(n)),
                    2 * fib(static_cast<unsigned>(n) + 1)};
}

LengthBounds length_bounds(int n) {
  if (n < 2) throw std::invalid_argument("length_bounds: n must be >= 2");
  const unsigned un = static_cast<unsigned>(n);
  return LengthBounds{8 * (n + 1) * fib(un) + 2, 8 * n * fib(un - 1) + 2};
}

mpz_class derived_triangular_bound(int dim) {
  if (dim < 3 || dim > 16)
    throw std::invalid_argument("derived_triangular_bound: dim must be within [3, 16]");
  const ClassCount c = class_count(dim - 1);
  return mpz_class(8 * dim * (c.enumerated / 2) + 2);
}

}  // namespace tropid
