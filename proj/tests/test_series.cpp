#include "catlab/series.hpp"

#include <random>
#include <stdexcept>

#include "catlab/identities.hpp"
#include "doctest.h"

using namespace catlab;

namespace {

BivariatePoly random_poly(long max_s, long max_t, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-9, 9);
  BivariatePoly p(max_s, max_t);
  for (long i = 0; i <= max_s; ++i)
    for (long j = 0; j <= max_t; ++j) p.at(i, j) = dist(rng);
  return p;
}

}  // namespace

TEST_CASE("kernel_pow l=0 is the constant 1") {
  BivariatePoly one = kernel_pow(0, 4, 4);
  for (long i = 0; i <= 4; ++i)
    for (long j = 0; j <= 4; ++j)
      CHECK(coeff(one, i, j) == (i == 0 && j == 0 ? 1 : 0));
}

TEST_CASE("kernel_pow l=1 coefficient table") {
  BivariatePoly k = kernel_pow(1, 6, 3);
  CHECK(coeff(k, 1, 0) == 1);
  CHECK(coeff(k, 2, 0) == -1);
  CHECK(coeff(k, 2, 2) == 1);
  CHECK(coeff(k, 3, 0) == 1);
  CHECK(coeff(k, 3, 1) == 2);
  CHECK(coeff(k, 3, 2) == 1);
  int nonzero = 0;
  for (long i = 0; i <= 6; ++i)
    for (long j = 0; j <= 3; ++j)
      if (coeff(k, i, j) != 0) ++nonzero;
  CHECK(nonzero == 6);
}

TEST_CASE("kernel_pow degree bounds: s-degree 3l, t-degree 2l") {
  BivariatePoly k = kernel_pow(2, 12, 6);
  for (long i = 0; i <= 12; ++i)
    for (long j = 0; j <= 6; ++j)
      if (i > 6 || j > 4) CHECK(coeff(k, i, j) == 0);
  // lowest s-degree is l
  for (long j = 0; j <= 6; ++j) {
    CHECK(coeff(k, 0, j) == 0);
    CHECK(coeff(k, 1, j) == 0);
  }
}

TEST_CASE("poly_mul small products") {
  BivariatePoly a(2, 2), b(2, 2);
  a.at(0, 0) = 1;
  a.at(1, 1) = 1;  // 1 + st
  b.at(0, 0) = 1;
  b.at(1, 1) = -1;  // 1 - st
  BivariatePoly c = poly_mul(a, b);
  CHECK(coeff(c, 0, 0) == 1);
  CHECK(coeff(c, 1, 1) == 0);
  CHECK(coeff(c, 2, 2) == -1);
}

TEST_CASE("poly_mul truncates high degrees") {
  BivariatePoly a(3, 0), b(3, 0);
  a.at(2, 0) = 1;
  b.at(2, 0) = 1;
  BivariatePoly c = poly_mul(a, b);  // s^4 truncated away
  for (long i = 0; i <= 3; ++i) CHECK(coeff(c, i, 0) == 0);
}

TEST_CASE("poly_mul is commutative and associative under truncation") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 10; ++trial) {
    BivariatePoly a = random_poly(4, 3, rng);
    BivariatePoly b = random_poly(4, 3, rng);
    BivariatePoly c = random_poly(4, 3, rng);
    BivariatePoly ab = poly_mul(a, b);
    BivariatePoly ba = poly_mul(b, a);
    CHECK(ab.coeffs == ba.coeffs);
    BivariatePoly ab_c = poly_mul(ab, c);
    BivariatePoly a_bc = poly_mul(a, poly_mul(b, c));
    CHECK(ab_c.coeffs == a_bc.coeffs);
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(BivariatePoly(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(BivariatePoly(2, -1), std::invalid_argument);
  BivariatePoly a(2, 2), b(3, 2);
  CHECK_THROWS_AS(poly_mul(a, b), std::invalid_argument);
  CHECK_THROWS_AS(kernel_pow(-1, 4, 4), std::invalid_argument);
  CHECK_THROWS_AS(kernel_pow(2, 5, 4), std::invalid_argument);
  BivariatePoly k = kernel_pow(1, 3, 2);
  CHECK_THROWS_AS(coeff(k, 4, 0), std::out_of_range);
  CHECK_THROWS_AS(coeff(k, 0, 3), std::out_of_range);
  CHECK_THROWS_AS(coeff(k, -1, 0), std::out_of_range);
}

TEST_CASE("kernel coefficients equal both identity sides on a small grid") {
  for (long l = 0; l <= 2; ++l) {
    long max_s = 3 * l + 6;
    BivariatePoly k = kernel_pow(l, max_s, 6);
    for (long m = 0; m <= max_s; ++m) {
      for (long n = 0; n <= 6; ++n) {
        auto [lhs, rhs] = eval_identity_main(l, m, n);
        CHECK(coeff(k, m, n) == lhs);
        CHECK(coeff(k, m, n) == rhs);
      }
    }
  }
}

TEST_CASE("coefficients vanish beyond the kernel's true degree") {
  for (long l = 0; l <= 3; ++l) {
    BivariatePoly k = kernel_pow(l, 3 * l + 6, 4);
    for (long m = 3 * l + 1; m <= 3 * l + 6; ++m)
      for (long n = 0; n <= 4; ++n) CHECK(coeff(k, m, n) == 0);
  }
}
