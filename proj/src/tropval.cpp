#include "tropid/tropval.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace tropid {

const mpq_class& TropValue::value() const {
  if (!finite_) throw std::logic_error("TropValue: bottom has no finite value");
  return value_;
}

std::string TropValue::str() const {
  if (!finite_) return "-inf";
  return value_.get_str();
}

TropValue TropValue::parse(const std::string& text) {
  if (text == "-inf") return bottom();
  // optional sign, digits, optional "/digits" (denominator unsigned, nonzero)
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t num_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_start) throw std::invalid_argument("bad tropical value: '" + text + "'");
  if (i < text.size()) {
    if (text[i] != '/') throw std::invalid_argument("bad tropical value: '" + text + "'");
    std::size_t den_start = ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start || i != text.size())
      throw std::invalid_argument("bad tropical value: '" + text + "'");
    mpq_class q(text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return finite(q);
  }
  return finite(mpq_class(text));
}

TropValue tadd(const TropValue& a, const TropValue& b) { return a < b ? b : a; }

TropValue tmul(const TropValue& a, const TropValue& b) {
  if (a.is_bottom() || b.is_bottom()) return TropValue::bottom();
  return TropValue::finite(a.value() + b.value());
}

std::ostream& operator<<(std::ostream& os, const TropValue& v) { return os << v.str(); }

}  // namespace tropid
