#pragma once

#include <vector>

#include "tropid/tropval.hpp"

namespace tropid {

// Square matrix over the max-plus semiring, entries indexed 0-based.
class TropMatrix {
 public:
  explicit TropMatrix(int n);

  static TropMatrix identity(int n);
  static TropMatrix zero(int n) { return TropMatrix(n); }

  int dim() const { return n_; }

  const TropValue& at(int i, int j) const { return entries_[index(i, j)]; }
  TropValue& at(int i, int j) { return entries_[index(i, j)]; }

  bool operator==(const TropMatrix& o) const {
    return n_ == o.n_ && entries_ == o.entries_;
  }
  bool operator!=(const TropMatrix& o) const { return !(*this == o); }

  bool is_upper_triangular() const;
  bool is_lower_triangular() const;

  std::string str() const;

 private:
  std::size_t index(int i, int j) const;

  int n_;
  std::vector<TropValue> entries_;
};

enum class MatrixClass { Full, UpperTriangular, LowerTriangular };

bool matches_class(const TropMatrix& m, MatrixClass cls);

TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b);
TropMatrix mat_pow(const TropMatrix& a, long k);

// True iff the two matrices share every diagonal entry.
bool diag_equivalent(const TropMatrix& x, const TropMatrix& y);

std::ostream& operator<<(std::ostream& os, const TropMatrix& m);

}  // namespace tropid
