#include <cmath>

#include <gtest/gtest.h>

#include "mszego/ddouble.hpp"

using namespace mszego;

TEST(DDouble, CarriesLowOrderBits) {
  const ddouble one(1.0);
  const ddouble tiny(1e-20);
  const ddouble s = one + tiny;
  EXPECT_EQ(s.hi, 1.0);
  EXPECT_NEAR(s.lo, 1e-20, 1e-36);
  EXPECT_NEAR((s - one).to_double(), 1e-20, 1e-36);
}

TEST(DDouble, ThirdTimesThree) {
  const ddouble third = ddouble(1.0) / ddouble(3.0);
  const ddouble back = third * ddouble(3.0) - ddouble(1.0);
  EXPECT_LT(std::abs(back.to_double()), 1e-31);
}

TEST(DDouble, SqrtTwo) {
  const ddouble r = sqrt(ddouble(2.0));
  const ddouble err = r * r - ddouble(2.0);
  EXPECT_LT(std::abs(err.to_double()), 1e-30);
}

TEST(DDouble, Ordering) {
  const ddouble a(1.0, 1e-20), b(1.0, -1e-20);
  EXPECT_TRUE(b < a);
  EXPECT_TRUE(a > b);
  EXPECT_EQ(abs(-a).hi, 1.0);
}

TEST(DComplex, Arithmetic) {
  const dcomplex z(std::complex<double>(1.0, 2.0));
  const dcomplex w(std::complex<double>(-0.5, 0.25));
  const auto p = (z * w).to_complex();
  const auto q = (z / w).to_complex();
  EXPECT_NEAR(std::abs(p - std::complex<double>(1.0, 2.0) * std::complex<double>(-0.5, 0.25)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(q - std::complex<double>(1.0, 2.0) / std::complex<double>(-0.5, 0.25)), 0.0, 1e-15);
  EXPECT_EQ(norm(z).to_double(), 5.0);
  EXPECT_EQ(conj(z).to_complex(), std::complex<double>(1.0, -2.0));
}
