#include "doctest.h"
#include "tropid/sampler.hpp"
#include "tropid/tropval.hpp"

using namespace tropid;

namespace {

TropValue fin(long n) { return TropValue::integer(n); }
TropValue rat(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return TropValue::finite(q);
}

// small random rationals for the law checks
TropValue random_value(SplitMix64& rng) {
  if (rng.below(5) == 0) return TropValue::bottom();
  return rat(rng.int_in(-30, 30), rng.int_in(1, 7));
}

}  // namespace

TEST_CASE("tadd is max with bottom as identity") {
  CHECK(tadd(TropValue::bottom(), fin(3)) == fin(3));
  CHECK(tadd(fin(3), TropValue::bottom()) == fin(3));
  CHECK(tadd(fin(1), fin(2)) == fin(2));
  CHECK(tadd(rat(5, 2), rat(5, 2)) == rat(5, 2));
  CHECK(tadd(TropValue::bottom(), TropValue::bottom()).is_bottom());
}

TEST_CASE("tmul is addition with bottom absorbing") {
  CHECK(tmul(TropValue::bottom(), fin(7)).is_bottom());
  CHECK(tmul(fin(7), TropValue::bottom()).is_bottom());
  CHECK(tmul(fin(0), fin(-4)) == fin(-4));
  CHECK(tmul(fin(1), fin(2)) == fin(3));
  CHECK(tmul(rat(1, 2), rat(1, 3)) == rat(5, 6));
}

TEST_CASE("order puts bottom below every finite value") {
  CHECK(TropValue::bottom() < fin(-1000000));
  CHECK(fin(-1) < fin(0));
  CHECK(rat(1, 3) < rat(1, 2));
  CHECK_FALSE(fin(2) < fin(2));
  CHECK_FALSE(fin(2) < TropValue::bottom());
}

TEST_CASE("string format round-trips and reduces") {
  CHECK(TropValue::bottom().str() == "-inf");
  CHECK(TropValue::parse("-inf").is_bottom());
  CHECK(TropValue::parse("5") == fin(5));
  CHECK(TropValue::parse("-3") == fin(-3));
  CHECK(TropValue::parse("2/4").str() == "1/2");
  CHECK(TropValue::parse("7/1").str() == "7");
  CHECK(rat(-9, 6).str() == "-3/2");
  CHECK_THROWS_AS(TropValue::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(TropValue::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(TropValue::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(TropValue::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(TropValue::parse("1.5"), std::invalid_argument);
}

TEST_CASE("value() rejects bottom") {
  CHECK_THROWS_AS(TropValue::bottom().value(), std::logic_error);
}

TEST_CASE("semiring laws hold on random rational triples") {
  SplitMix64 rng(2024);
  for (int i = 0; i < 300; ++i) {
    const TropValue a = random_value(rng);
    const TropValue b = random_value(rng);
    const TropValue c = random_value(rng);
    CHECK(tadd(a, b) == tadd(b, a));
    CHECK(tadd(tadd(a, b), c) == tadd(a, tadd(b, c)));
    CHECK(tadd(a, a) == a);
    CHECK(tmul(a, b) == tmul(b, a));
    CHECK(tmul(tmul(a, b), c) == tmul(a, tmul(b, c)));
    CHECK(tmul(a, tadd(b, c)) == tadd(tmul(a, b), tmul(a, c)));
    CHECK(tadd(TropValue::bottom(), a) == a);
    CHECK(tmul(trop_one(), a) == a);
    CHECK(tmul(trop_zero(), a).is_bottom());
  }
}
