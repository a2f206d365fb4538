#include "doctest.h"
#include "helpers.hpp"
#include "tropid/sampler.hpp"

using namespace tropid;
using testutil::mat;

TEST_CASE("multiplying by the unit matrix is the identity map") {
  SamplerConfig cfg;
  cfg.seed = 11;
  for (int n = 1; n <= 4; ++n) {
    const TropMatrix a = sample_matrix(MatrixClass::Full, n, cfg, n);
    const TropMatrix id = TropMatrix::identity(n);
    CHECK(mat_mul(a, id) == a);
    CHECK(mat_mul(id, a) == a);
  }
}

TEST_CASE("products expand entrywise over max-plus") {
  const TropMatrix a = mat({{"0", "1"}, {"-inf", "2"}});
  const TropMatrix b = mat({{"1", "0"}, {"-inf", "0"}});
  CHECK(mat_mul(a, b) == mat({{"1", "1"}, {"-inf", "2"}}));
}

TEST_CASE("upper-triangular products need not commute") {
  const TropMatrix a = mat({{"0", "0"}, {"-inf", "0"}});
  const TropMatrix b = mat({{"0", "-inf"}, {"-inf", "1"}});
  const TropMatrix ab = mat_mul(a, b);
  const TropMatrix ba = mat_mul(b, a);
  CHECK(ab == mat({{"0", "1"}, {"-inf", "1"}}));
  CHECK(ba == mat({{"0", "0"}, {"-inf", "1"}}));
  CHECK(ab != ba);
}

TEST_CASE("mat_pow") {
  const TropMatrix a = mat({{"0", "1"}, {"-inf", "2"}});
  CHECK(mat_pow(a, 0) == TropMatrix::identity(2));
  CHECK(mat_pow(TropMatrix::zero(3), 0) == TropMatrix::identity(3));
  CHECK(mat_pow(a, 1) == a);
  CHECK(mat_pow(a, 2) == mat({{"0", "3"}, {"-inf", "4"}}));
  CHECK_THROWS_AS(mat_pow(a, -1), std::invalid_argument);
}

TEST_CASE("dimension mismatches are rejected") {
  const TropMatrix a(2), b(3);
  CHECK_THROWS_AS(mat_mul(a, b), std::invalid_argument);
  CHECK_THROWS_AS(diag_equivalent(a, b), std::invalid_argument);
}

TEST_CASE("diagonal equivalence compares exactly the diagonal") {
  const TropMatrix a = mat({{"0", "1"}, {"-inf", "2"}});
  CHECK(diag_equivalent(a, a));
  CHECK(diag_equivalent(mat({{"0", "5"}, {"-inf", "1"}}),
                        mat({{"0", "-9"}, {"-inf", "1"}})));
  CHECK_FALSE(diag_equivalent(a, mat({{"0", "1"}, {"-inf", "3"}})));
}

TEST_CASE("triangular predicates") {
  CHECK(mat({{"0", "1"}, {"-inf", "2"}}).is_upper_triangular());
  CHECK_FALSE(mat({{"0", "1"}, {"0", "2"}}).is_upper_triangular());
  CHECK(mat({{"0", "-inf"}, {"3", "2"}}).is_lower_triangular());
  CHECK(TropMatrix::zero(3).is_upper_triangular());
  CHECK(TropMatrix::zero(3).is_lower_triangular());
  CHECK(matches_class(mat({{"0", "1"}, {"0", "2"}}), MatrixClass::Full));
}

TEST_CASE("mat_mul is associative on random triples") {
  SamplerConfig cfg;
  cfg.seed = 5;
  for (std::uint64_t t = 0; t < 60; ++t) {
    const int n = 2 + static_cast<int>(t % 3);
    const TropMatrix a = sample_matrix(MatrixClass::Full, n, cfg, 3 * t);
    const TropMatrix b = sample_matrix(MatrixClass::Full, n, cfg, 3 * t + 1);
    const TropMatrix c = sample_matrix(MatrixClass::Full, n, cfg, 3 * t + 2);
    CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
  }
}

TEST_CASE("upper-triangular matrices are closed under product") {
  SamplerConfig cfg;
  cfg.seed = 6;
  for (std::uint64_t t = 0; t < 60; ++t) {
    const int n = 2 + static_cast<int>(t % 3);
    const TropMatrix a = sample_matrix(MatrixClass::UpperTriangular, n, cfg, 2 * t);
    const TropMatrix b = sample_matrix(MatrixClass::UpperTriangular, n, cfg, 2 * t + 1);
    CHECK(mat_mul(a, b).is_upper_triangular());
  }
}

TEST_CASE("AB and BA share their diagonal for triangular A, B") {
  SamplerConfig cfg;
  cfg.seed = 7;
  for (std::uint64_t t = 0; t < 100; ++t) {
    const int n = 2 + static_cast<int>(t % 4);
    const TropMatrix a = sample_matrix(MatrixClass::UpperTriangular, n, cfg, 2 * t);
    const TropMatrix b = sample_matrix(MatrixClass::UpperTriangular, n, cfg, 2 * t + 1);
    CHECK(diag_equivalent(mat_mul(a, b), mat_mul(b, a)));
  }
}
