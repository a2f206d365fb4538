#include "tropid/matrix.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tropid {

TropMatrix::TropMatrix(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be positive");
  entries_.assign(static_cast<std::size_t>(n) * n, TropValue::bottom());
}

std::size_t TropMatrix::index(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_)
    throw std::out_of_range("matrix index out of range");
  return static_cast<std::size_t>(i) * n_ + j;
}

TropMatrix TropMatrix::identity(int n) {
  TropMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = trop_one();
  return m;
}

bool TropMatrix::is_upper_triangular() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < i; ++j)
      if (!at(i, j).is_bottom()) return false;
  return true;
}

bool TropMatrix::is_lower_triangular() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (!at(i, j).is_bottom()) return false;
  return true;
}

std::string TropMatrix::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

bool matches_class(const TropMatrix& m, MatrixClass cls) {
  switch (cls) {
    case MatrixClass::Full: return true;
    case MatrixClass::UpperTriangular: return m.is_upper_triangular();
    case MatrixClass::LowerTriangular: return m.is_lower_triangular();
  }
  return false;
}

TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("mat_mul: dimension mismatch");
  const int n = a.dim();
  TropMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      TropValue acc = trop_zero();
      for (int k = 0; k < n; ++k) acc = tadd(acc, tmul(a.at(i, k), b.at(k, j)));
      c.at(i, j) = acc;
    }
  return c;
}

TropMatrix mat_pow(const TropMatrix& a, long k) {
  if (k < 0) throw std::invalid_argument("mat_pow: negative exponent");
  TropMatrix acc = TropMatrix::identity(a.dim());
  for (long i = 0; i < k; ++i) acc = mat_mul(acc, a);
  return acc;
}

bool diag_equivalent(const TropMatrix& x, const TropMatrix& y) {
  if (x.dim() != y.dim())
    throw std::invalid_argument("diag_equivalent: dimension mismatch");
  for (int i = 0; i < x.dim(); ++i)
    if (x.at(i, i) != y.at(i, i)) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const TropMatrix& m) {
  os << "[";
  for (int i = 0; i < m.dim(); ++i) {
    if (i) os << "; ";
    for (int j = 0; j < m.dim(); ++j) {
      if (j) os << " ";
      os << m.at(i, j);
    }
  }
  return os << "]";
}

}  // namespace tropid
