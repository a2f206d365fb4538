#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace tropid {

// Element of the max-plus semiring: either bottom (-inf, the additive zero)
// or a finite exact rational weight. Bottom is a distinct state, never a
// sentinel numeric value.
class TropValue {
 public:
  TropValue() : finite_(false) {}

  static TropValue bottom() { return TropValue(); }
  static TropValue finite(mpq_class q) {
    TropValue v;
    v.finite_ = true;
    q.canonicalize();
    v.value_ = std::move(q);
    return v;
  }
  static TropValue integer(long n) { return finite(mpq_class(n)); }

  bool is_bottom() const { return !finite_; }
  bool is_finite() const { return finite_; }

  // Finite value in canonical reduced form. Only valid when is_finite().
  const mpq_class& value() const;

  bool operator==(const TropValue& o) const {
    return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
  }
  bool operator!=(const TropValue& o) const { return !(*this == o); }

  // Total order with bottom below every finite value.
  bool operator<(const TropValue& o) const {
    if (!finite_) return o.finite_;
    if (!o.finite_) return false;
    return value_ < o.value_;
  }

  // "-inf", an integer literal, or "p/q" with q > 0, reduced.
  std::string str() const;
  static TropValue parse(const std::string& text);

 private:
  bool finite_;
  mpq_class value_;
};

// a + b := max{a, b}
TropValue tadd(const TropValue& a, const TropValue& b);
// a b := a + b over the reals; bottom absorbs.
TropValue tmul(const TropValue& a, const TropValue& b);

inline TropValue trop_zero() { return TropValue::bottom(); }
inline TropValue trop_one() { return TropValue::integer(0); }

std::ostream& operator<<(std::ostream& os, const TropValue& v);

}  // namespace tropid
